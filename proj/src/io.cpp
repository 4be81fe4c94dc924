#include "indukt/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "indukt/catalog.hpp"

namespace indukt {

namespace {

const std::set<std::string> kKinds = {"groupoid", "subgroupoid",    "haar",
                                      "equivariant", "representation", "scenario"};

[[noreturn]] void fail(const std::string& msg) { throw IoError(msg); }

int get_int(const Json& j, const std::string& what) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    fail("expected an integer for " + what);
  return j.get<int>();
}

double get_number(const Json& j, const std::string& what) {
  if (!j.is_number()) fail("expected a number for " + what);
  return j.get<double>();
}

std::vector<int> get_int_array(const Json& j, const std::string& what) {
  if (!j.is_array()) fail("expected an array for " + what);
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& v : j) out.push_back(get_int(v, what));
  return out;
}

int parse_id_key(const std::string& key, const std::string& what) {
  try {
    std::size_t pos = 0;
    const int v = std::stoi(key, &pos);
    if (pos != key.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    fail("expected an integer key in " + what + ", got \"" + key + "\"");
  }
}

}  // namespace

Json make_document(const std::string& kind, Json body) {
  if (kKinds.find(kind) == kKinds.end()) fail("unknown document kind: " + kind);
  Json doc;
  doc["kind"] = kind;
  doc["version"] = 1;
  doc["body"] = std::move(body);
  return doc;
}

std::string document_kind(const Json& doc) {
  if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string())
    fail("document has no kind");
  const std::string kind = doc["kind"].get<std::string>();
  if (kKinds.find(kind) == kKinds.end()) fail("unknown document kind: " + kind);
  if (!doc.contains("version") || !doc["version"].is_number_integer() ||
      doc["version"].get<int>() != 1)
    fail("unsupported document version (expected 1)");
  if (!doc.contains("body") || !doc["body"].is_object()) fail("document has no body");
  return kind;
}

const Json& document_body(const Json& doc) {
  document_kind(doc);
  return doc.at("body");
}

Json to_document(const FiniteGroupoid& g) {
  Json body;
  body["n_elements"] = g.size();
  body["units"] = g.units();
  Json range = Json::array(), domain = Json::array(), inverse = Json::array();
  for (int x = 0; x < g.size(); ++x) {
    range.push_back(g.range(x));
    domain.push_back(g.domain(x));
    inverse.push_back(g.inverse(x));
  }
  body["range"] = std::move(range);
  body["domain"] = std::move(domain);
  body["inverse"] = std::move(inverse);
  Json product = Json::array();
  for (int x = 0; x < g.size(); ++x)
    for (int y = 0; y < g.size(); ++y)
      if (g.composable(x, y)) product.push_back(Json::array({x, y, g.product(x, y)}));
  body["product"] = std::move(product);
  return make_document("groupoid", std::move(body));
}

GroupoidPtr groupoid_from(const Json& doc) {
  if (document_kind(doc) != "groupoid") fail("expected a groupoid document");
  const Json& body = doc.at("body");
  GroupoidData d;
  d.n = get_int(body.at("n_elements"), "n_elements");
  d.units = get_int_array(body.at("units"), "units");
  d.range = get_int_array(body.at("range"), "range");
  d.domain = get_int_array(body.at("domain"), "domain");
  d.inverse = get_int_array(body.at("inverse"), "inverse");
  if (!body.at("product").is_array()) fail("expected an array for product");
  for (const auto& t : body.at("product")) {
    const auto triple = get_int_array(t, "product triple");
    if (triple.size() != 3) fail("product triples must have three entries");
    d.product.push_back({triple[0], triple[1], triple[2]});
  }
  try {
    return FiniteGroupoid::create(std::move(d));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json to_document(const WideSubgroupoid& h) {
  Json body;
  body["members"] = h.members();
  return make_document("subgroupoid", std::move(body));
}

std::vector<int> subgroupoid_members_from(const Json& doc) {
  if (document_kind(doc) != "subgroupoid") fail("expected a subgroupoid document");
  return get_int_array(doc.at("body").at("members"), "members");
}

Json to_document(const HaarSystem& h) {
  Json c = Json::object();
  for (int ui = 0; ui < h.groupoid()->num_units(); ++ui)
    c[std::to_string(h.groupoid()->units()[ui])] = h.unit_mass(ui);
  Json body;
  body["c"] = std::move(c);
  return make_document("haar", std::move(body));
}

HaarSystem haar_from(const Json& doc, GroupoidPtr g) {
  if (document_kind(doc) != "haar") fail("expected a haar document");
  const Json& c = doc.at("body").at("c");
  if (!c.is_object()) fail("haar body must map unit ids to masses");
  std::vector<double> masses(g->num_units(), -1.0);
  for (const auto& [key, value] : c.items()) {
    const int u = parse_id_key(key, "haar c");
    if (u < 0 || u >= g->size() || g->unit_index(u) < 0)
      fail("haar c: " + key + " is not a unit of the groupoid");
    masses[g->unit_index(u)] = get_number(value, "haar mass");
  }
  for (double m : masses)
    if (m < 0) fail("haar c: missing a unit");
  try {
    return HaarSystem(std::move(g), std::move(masses));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

Json to_document(const EquivariantSystem& mu) {
  const CosetSpace& cs = *mu.coset_space();
  Json w = Json::object();
  for (int c = 0; c < cs.num_cosets(); ++c)
    w[std::to_string(cs.coset_members(c).front())] = mu.weight(c);
  Json body;
  body["coset_weights"] = std::move(w);
  return make_document("equivariant", std::move(body));
}

EquivariantSystem equivariant_from(const Json& doc, CosetSpacePtr cs) {
  if (document_kind(doc) != "equivariant") fail("expected an equivariant document");
  const Json& body = doc.at("body");
  if (body.contains("coset_weights")) {
    std::vector<double> w(cs->num_cosets(), -1.0);
    for (const auto& [key, value] : body.at("coset_weights").items()) {
      const int x = parse_id_key(key, "coset_weights");
      if (x < 0 || x >= cs->parent()->size())
        fail("coset_weights: element id out of range");
      w[cs->coset_of(x)] = get_number(value, "coset weight");
    }
    for (double v : w)
      if (v < 0) fail("coset_weights: missing a coset");
    try {
      EquivariantSystem mu(std::move(cs), std::move(w));
      const ValidationReport rep = validate_equivariant(mu);
      if (!rep.pass) fail("equivariant document: " + rep.issues.front());
      return mu;
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  if (body.contains("orbit_weights")) {
    std::map<int, double> ow;
    for (const auto& [key, value] : body.at("orbit_weights").items())
      ow[parse_id_key(key, "orbit_weights")] = get_number(value, "orbit weight");
    try {
      return solve_equivariant(std::move(cs), ow);
    } catch (const std::invalid_argument& e) {
      fail(e.what());
    }
  }
  fail("equivariant body needs coset_weights or orbit_weights");
}

Json to_document(const Representation& rep) {
  const auto& g = *rep.groupoid();
  Json dims = Json::object();
  for (int ui = 0; ui < g.num_units(); ++ui)
    dims[std::to_string(g.units()[ui])] = rep.dim_at(ui);
  Json mats = Json::object();
  for (int x = 0; x < g.size(); ++x) {
    const Matrix& m = rep.matrix(x);
    Json entries = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      for (Eigen::Index j = 0; j < m.cols(); ++j)
        entries.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    mats[std::to_string(x)] = std::move(entries);
  }
  Json body;
  body["dims"] = std::move(dims);
  body["matrices"] = std::move(mats);
  return make_document("representation", std::move(body));
}

Representation representation_from(const Json& doc, GroupoidPtr g) {
  if (document_kind(doc) != "representation") fail("expected a representation document");
  const Json& body = doc.at("body");
  std::vector<int> dims(g->num_units(), -1);
  for (const auto& [key, value] : body.at("dims").items()) {
    const int u = parse_id_key(key, "dims");
    if (u < 0 || u >= g->size() || g->unit_index(u) < 0)
      fail("dims: " + key + " is not a unit of the groupoid");
    dims[g->unit_index(u)] = get_int(value, "fiber dimension");
  }
  for (int d : dims)
    if (d < 0) fail("dims: missing a unit");

  std::vector<Matrix> mats(g->size());
  std::vector<bool> seen(g->size(), false);
  for (const auto& [key, value] : body.at("matrices").items()) {
    const int x = parse_id_key(key, "matrices");
    if (x < 0 || x >= g->size()) fail("matrices: element id out of range");
    const int rows = dims[g->unit_index(g->range(x))];
    const int cols = dims[g->unit_index(g->domain(x))];
    if (!value.is_array() || static_cast<int>(value.size()) != rows * cols)
      fail("matrices: element " + key + " must hold " + std::to_string(rows * cols) +
           " entries");
    Matrix m(rows, cols);
    int idx = 0;
    for (const auto& entry : value) {
      if (!entry.is_array() || entry.size() != 2)
        fail("matrices: entries must be [re, im] pairs");
      m(idx / cols, idx % cols) =
          Cplx(get_number(entry[0], "re"), get_number(entry[1], "im"));
      ++idx;
    }
    mats[x] = std::move(m);
    seen[x] = true;
  }
  for (bool s : seen)
    if (!s) fail("matrices: missing an element");
  try {
    return Representation(std::move(g), std::move(dims), std::move(mats));
  } catch (const std::invalid_argument& e) {
    fail(e.what());
  }
}

namespace {

void dump_string(const std::string& s, std::string& out) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\b': out += "\\b"; break;
      case '\f': out += "\\f"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

void dump_value(const Json& j, std::string& out) {
  switch (j.type()) {
    case Json::value_t::null: out += "null"; break;
    case Json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
    case Json::value_t::number_integer:
      out += std::to_string(j.get<long long>());
      break;
    case Json::value_t::number_unsigned:
      out += std::to_string(j.get<unsigned long long>());
      break;
    case Json::value_t::number_float: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.17g", j.get<double>());
      out += buf;
      break;
    }
    case Json::value_t::string: dump_string(j.get<std::string>(), out); break;
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& v : j) {
        if (!first) out += ',';
        first = false;
        dump_value(v, out);
      }
      out += ']';
      break;
    }
    case Json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {  // std::map order: sorted
        if (!first) out += ',';
        first = false;
        dump_string(key, out);
        out += ':';
        dump_value(value, out);
      }
      out += '}';
      break;
    }
    default: fail("canonical_dump: unsupported value type");
  }
}

}  // namespace

std::string canonical_dump(const Json& doc) {
  std::string out;
  dump_value(doc, out);
  out += '\n';
  return out;
}

Json parse_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(e.what());  // message carries line/column
  }
}

Json load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  Json doc = parse_document(ss.str());
  document_kind(doc);
  return doc;
}

void save_document(const Json& doc, const std::string& path) {
  document_kind(doc);
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("cannot write " + path);
  out << canonical_dump(doc);
  if (!out) fail("write failed for " + path);
}

namespace {

Json scenario(Json body) { return make_document("scenario", std::move(body)); }

}  // namespace

std::vector<std::string> catalog_names() {
  return {
      "pair-1",           "pair-2",          "pair-3",
      "pair-4",           "c2",              "c3",
      "s3",               "s3-action",       "p2xs3",
      "c2-bundle",        "a3-in-s3",        "e-in-s3",
      "units-in-p2",      "units-in-p2xs3",  "p2xa3-in-p2xs3",
      "units-in-c2-bundle", "s3-triv",       "s3-sign",
      "s3-std2",          "a3-one",          "a3-omega",
      "a3-omega-bar",     "p2-triv",         "p2xs3-triv",
      "p2xs3-sign",       "p2xs3-std2",      "p2xa3-one",
      "p2xa3-omega",      "p2xa3-omega-bar", "e-in-s3-triv",
      "units-in-p2-triv", "units-in-p2xs3-triv", "s3-a3-full",
      "p2xs3-full",       "s3-stages",       "p2xs3-stages",
      "s3xp2-mackey",
  };
}

bool catalog_has(const std::string& name) {
  const auto names = catalog_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

Json catalog_document(const std::string& name) {
  using namespace fixtures;
  if (name == "pair-1") return to_document(*pair_groupoid(1));
  if (name == "pair-2") return to_document(*pair_groupoid(2));
  if (name == "pair-3") return to_document(*pair_groupoid(3));
  if (name == "pair-4") return to_document(*pair_groupoid(4));
  if (name == "c2") return to_document(*c2());
  if (name == "c3") return to_document(*c3());
  if (name == "s3") return to_document(*s3());
  if (name == "s3-action") return to_document(*s3_action());
  if (name == "p2xs3") return to_document(*p2xs3());
  if (name == "c2-bundle") return to_document(*c2_bundle());
  if (name == "a3-in-s3") return to_document(a3_in_s3());
  if (name == "e-in-s3") return to_document(e_in_s3());
  if (name == "units-in-p2") return to_document(units_in_p2());
  if (name == "units-in-p2xs3") return to_document(units_in_p2xs3());
  if (name == "p2xa3-in-p2xs3") return to_document(p2xa3_in_p2xs3());
  if (name == "units-in-c2-bundle") return to_document(units_in_c2_bundle());
  if (name == "s3-triv") return to_document(s3_trivial());
  if (name == "s3-sign") return to_document(s3_sign());
  if (name == "s3-std2") return to_document(s3_std2());
  if (name == "a3-one") return to_document(a3_one());
  if (name == "a3-omega") return to_document(a3_omega());
  if (name == "a3-omega-bar") return to_document(a3_omega_bar());
  if (name == "p2-triv") return to_document(p2_trivial());
  if (name == "p2xs3-triv") return to_document(p2xs3_trivial());
  if (name == "p2xs3-sign") return to_document(p2xs3_sign());
  if (name == "p2xs3-std2") return to_document(p2xs3_std2());
  if (name == "p2xa3-one") return to_document(p2xa3_character(0));
  if (name == "p2xa3-omega") return to_document(p2xa3_character(1));
  if (name == "p2xa3-omega-bar") return to_document(p2xa3_character(2));
  if (name == "e-in-s3-triv") return to_document(e_in_s3_trivial());
  if (name == "units-in-p2-triv") return to_document(units_in_p2_trivial());
  if (name == "units-in-p2xs3-triv") return to_document(units_in_p2xs3_trivial());

  if (name == "s3-a3-full")
    return scenario({{"check", "frobenius"},
                     {"groupoid", "catalog:s3"},
                     {"subgroupoid", "catalog:a3-in-s3"},
                     {"pis", Json::array({"catalog:s3-triv", "catalog:s3-sign",
                                          "catalog:s3-std2"})},
                     {"sigmas", Json::array({"catalog:a3-one", "catalog:a3-omega",
                                             "catalog:a3-omega-bar"})}});
  if (name == "p2xs3-full")
    return scenario({{"check", "frobenius"},
                     {"groupoid", "catalog:p2xs3"},
                     {"subgroupoid", "catalog:p2xa3-in-p2xs3"},
                     {"pis", Json::array({"catalog:p2xs3-triv", "catalog:p2xs3-sign",
                                          "catalog:p2xs3-std2"})},
                     {"sigmas", Json::array({"catalog:p2xa3-one", "catalog:p2xa3-omega",
                                             "catalog:p2xa3-omega-bar"})}});
  if (name == "s3-stages")
    return scenario({{"check", "stages"},
                     {"groupoid", "catalog:s3"},
                     {"h", "catalog:a3-in-s3"},
                     {"k", "catalog:e-in-s3"},
                     {"sigma", "catalog:e-in-s3-triv"}});
  if (name == "p2xs3-stages")
    return scenario({{"check", "stages"},
                     {"groupoid", "catalog:p2xs3"},
                     {"h", "catalog:p2xa3-in-p2xs3"},
                     {"k", "catalog:units-in-p2xs3"},
                     {"sigma", "catalog:units-in-p2xs3-triv"}});
  if (name == "s3xp2-mackey")
    return scenario({{"check", "mackey"},
                     {"g1", "catalog:s3"},
                     {"h1", "catalog:a3-in-s3"},
                     {"sigma1", "catalog:a3-omega"},
                     {"g2", "catalog:pair-2"},
                     {"h2", "catalog:units-in-p2"},
                     {"sigma2", "catalog:units-in-p2-triv"}});

  fail("unknown catalog entry: " + name);
}

Json resolve_ref(const std::string& ref, const std::string& base_dir) {
  constexpr const char* kPrefix = "catalog:";
  if (ref.rfind(kPrefix, 0) == 0) return catalog_document(ref.substr(8));
  std::filesystem::path p(ref);
  if (p.is_relative() && !base_dir.empty()) p = std::filesystem::path(base_dir) / p;
  return load_document(p.string());
}

}  // namespace indukt

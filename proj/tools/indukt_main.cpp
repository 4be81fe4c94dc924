// indukt: build and verify induced representations of finite groupoids.
//
// Exit codes: 0 = pass, 1 = a validation or theorem check failed,
// 2 = input error (bad flags, missing or malformed files, precondition
// violations). INDUKT_TOL overrides the default operator tolerance.

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "indukt/catalog.hpp"
#include "indukt/induction.hpp"
#include "indukt/intertwiner.hpp"
#include "indukt/io.hpp"
#include "indukt/measures.hpp"

namespace {

using namespace indukt;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string base_dir_of(const std::string& ref) {
  if (ref.rfind("catalog:", 0) == 0) return "";
  return std::filesystem::path(ref).parent_path().string();
}

Json resolve_or_die(const std::string& ref, const std::string& base_dir = "") {
  try {
    return resolve_ref(ref, base_dir);
  } catch (const IoError& e) {
    throw InputError(std::string("cannot resolve ") + ref + ": " + e.what());
  }
}

Json report_json(const CheckReport& rep) {
  Json residuals = Json::object(), stats = Json::object();
  for (const auto& [k, v] : rep.residuals) residuals[k] = v;
  for (const auto& [k, v] : rep.stats) stats[k] = v;
  Json out;
  out["check"] = rep.name;
  out["pass"] = rep.pass;
  out["residuals"] = std::move(residuals);
  out["stats"] = std::move(stats);
  out["failures"] = rep.failures;
  return out;
}

Json report_json(const ValidationReport& rep) {
  Json out;
  out["pass"] = rep.pass;
  out["max_residual"] = rep.max_residual;
  out["issues"] = rep.issues;
  return out;
}

void emit(const Json& machine, const std::string& human, bool as_json) {
  if (as_json)
    std::cout << canonical_dump(machine);
  else
    std::cout << human << "\n";
}

// ---------------------------------------------------------------------------
// validate

int run_validate(const std::string& ref, const std::string& groupoid_ref,
                 const std::string& subgroupoid_ref, bool as_json) {
  const Json doc = resolve_or_die(ref);
  const std::string kind = document_kind(doc);

  auto need_groupoid = [&]() -> GroupoidPtr {
    if (groupoid_ref.empty())
      throw InputError("validating a " + kind + " document needs --groupoid");
    return groupoid_from(resolve_or_die(groupoid_ref));
  };
  auto context_groupoid = [&]() -> GroupoidPtr {
    GroupoidPtr g = need_groupoid();
    if (subgroupoid_ref.empty()) return g;
    const auto members = subgroupoid_members_from(resolve_or_die(subgroupoid_ref));
    return subgroupoid(std::move(g), members).groupoid();
  };

  if (kind == "groupoid") {
    const GroupoidPtr g = groupoid_from(doc);
    const ValidationReport rep = validate_groupoid(*g);
    emit(report_json(rep), "groupoid: " + rep.summary(), as_json);
    return rep.pass ? kExitPass : kExitCheckFailed;
  }
  if (kind == "subgroupoid") {
    GroupoidPtr g = need_groupoid();
    try {
      subgroupoid(std::move(g), subgroupoid_members_from(doc));
    } catch (const std::invalid_argument& e) {
      Json out;
      out["pass"] = false;
      out["issues"] = Json::array({e.what()});
      emit(out, std::string("subgroupoid: FAIL\n  - ") + e.what(), as_json);
      return kExitCheckFailed;
    }
    Json out;
    out["pass"] = true;
    out["issues"] = Json::array();
    emit(out, "subgroupoid: pass", as_json);
    return kExitPass;
  }
  if (kind == "haar") {
    GroupoidPtr g = context_groupoid();
    try {
      const HaarSystem h = haar_from(doc, std::move(g));
      const ValidationReport rep = validate_haar(h);
      emit(report_json(rep), "haar: " + rep.summary(), as_json);
      return rep.pass ? kExitPass : kExitCheckFailed;
    } catch (const IoError& e) {
      Json out;
      out["pass"] = false;
      out["issues"] = Json::array({e.what()});
      emit(out, std::string("haar: FAIL\n  - ") + e.what(), as_json);
      return kExitCheckFailed;
    }
  }
  if (kind == "equivariant") {
    GroupoidPtr g = need_groupoid();
    if (subgroupoid_ref.empty())
      throw InputError("validating an equivariant document needs --subgroupoid");
    const auto members = subgroupoid_members_from(resolve_or_die(subgroupoid_ref));
    WideSubgroupoid h = subgroupoid(g, members);
    try {
      const EquivariantSystem mu = equivariant_from(doc, cosets(g, std::move(h)));
      const ValidationReport rep = validate_equivariant(mu);
      emit(report_json(rep), "equivariant: " + rep.summary(), as_json);
      return rep.pass ? kExitPass : kExitCheckFailed;
    } catch (const IoError& e) {
      Json out;
      out["pass"] = false;
      out["issues"] = Json::array({e.what()});
      emit(out, std::string("equivariant: FAIL\n  - ") + e.what(), as_json);
      return kExitCheckFailed;
    }
  }
  if (kind == "representation") {
    GroupoidPtr g = context_groupoid();
    try {
      const Representation rep = representation_from(doc, std::move(g));
      const ValidationReport r = validate_representation(rep);
      emit(report_json(r), "representation: " + r.summary(), as_json);
      return r.pass ? kExitPass : kExitCheckFailed;
    } catch (const IoError& e) {
      Json out;
      out["pass"] = false;
      out["issues"] = Json::array({e.what()});
      emit(out, std::string("representation: FAIL\n  - ") + e.what(), as_json);
      return kExitCheckFailed;
    }
  }
  if (kind == "scenario") {
    const Json& body = document_body(doc);
    Json out;
    std::vector<std::string> issues;
    if (!body.contains("check") || !body["check"].is_string())
      issues.push_back("scenario body needs a check field");
    else {
      const std::string check = body["check"].get<std::string>();
      if (check != "stages" && check != "mackey" && check != "frobenius")
        issues.push_back("unknown check: " + check);
    }
    const std::string base = base_dir_of(ref);
    for (const auto& [key, value] : body.items()) {
      if (key == "check") continue;
      if (value.is_string()) {
        try {
          resolve_ref(value.get<std::string>(), base);
        } catch (const IoError& e) {
          issues.push_back(key + ": " + e.what());
        }
      }
    }
    out["pass"] = issues.empty();
    out["issues"] = issues;
    std::string human = issues.empty() ? "scenario: pass" : "scenario: FAIL";
    for (const auto& s : issues) human += "\n  - " + s;
    emit(out, human, as_json);
    return issues.empty() ? kExitPass : kExitCheckFailed;
  }
  throw InputError("unsupported document kind: " + kind);
}

// ---------------------------------------------------------------------------
// induce

int run_induce(const std::string& groupoid_ref, const std::string& subgroupoid_ref,
               const std::string& rep_ref, const std::string& mu_ref,
               const std::string& haar_ref, bool normalized_haar,
               const std::string& out_path, bool as_json) {
  GroupoidPtr g = groupoid_from(resolve_or_die(groupoid_ref));
  const auto members = subgroupoid_members_from(resolve_or_die(subgroupoid_ref));
  const WideSubgroupoid h = subgroupoid(g, members);
  const Representation sigma = representation_from(resolve_or_die(rep_ref), h.groupoid());
  {
    const ValidationReport rep = validate_representation(sigma);
    if (!rep.pass) throw InputError("sigma is not a representation: " + rep.issues.front());
  }
  const CosetSpacePtr cs = cosets(g, h);
  const EquivariantSystem mu = mu_ref.empty()
                                   ? solve_equivariant(cs)
                                   : equivariant_from(resolve_or_die(mu_ref), cs);
  const HaarSystem haar =
      haar_ref.empty() ? counting_haar(h.groupoid(), normalized_haar)
                       : haar_from(resolve_or_die(haar_ref), h.groupoid());

  const InducedRep ind = induce(g, h, sigma, mu, haar);
  const ValidationReport check = validate_representation(ind.base());

  const Json doc = to_document(ind.base());
  save_document(doc, out_path);

  Json out;
  out["pass"] = check.pass;
  out["output"] = out_path;
  Json dims = Json::object();
  for (int ui = 0; ui < g->num_units(); ++ui)
    dims[std::to_string(g->units()[ui])] = ind.base().dim_at(ui);
  out["dims"] = std::move(dims);
  out["validation"] = report_json(check);

  std::string human = "induced representation written to " + out_path +
                      "\nvalidation: " + check.summary();
  emit(out, human, as_json);
  return check.pass ? kExitPass : kExitCheckFailed;
}

// ---------------------------------------------------------------------------
// intertwiners

int run_intertwiners(const std::string& groupoid_ref, const std::string& subgroupoid_ref,
                     const std::string& rep_a, const std::string& rep_b, bool as_json) {
  GroupoidPtr g = groupoid_from(resolve_or_die(groupoid_ref));
  if (!subgroupoid_ref.empty()) {
    const auto members = subgroupoid_members_from(resolve_or_die(subgroupoid_ref));
    g = subgroupoid(std::move(g), members).groupoid();
  }
  const Representation a = representation_from(resolve_or_die(rep_a), g);
  const Representation b = representation_from(resolve_or_die(rep_b), g);
  const auto basis = intertwiners(a, b);
  double worst = 0.0;
  for (const auto& t : basis)
    worst = std::max(worst, intertwining_residual(a, b, t));

  Json out;
  out["dimension"] = static_cast<int>(basis.size());
  out["basis_residual"] = worst;
  std::string human = "dim Mor = " + std::to_string(basis.size()) +
                      " (basis residual " + std::to_string(worst) + ")";
  emit(out, human, as_json);
  return kExitPass;
}

// ---------------------------------------------------------------------------
// check

std::string scenario_ref(const Json& body, const std::string& key) {
  if (!body.contains(key) || !body[key].is_string())
    throw InputError("scenario is missing the " + key + " reference");
  return body[key].get<std::string>();
}

int run_check(const std::string& kind, const std::string& ref, bool as_json) {
  const Json doc = resolve_or_die(ref);
  if (document_kind(doc) != "scenario") throw InputError("check expects a scenario document");
  const Json& body = document_body(doc);
  if (scenario_ref(body, "check") != kind)
    throw InputError("scenario check kind is " + body["check"].get<std::string>() +
                     ", not " + kind);
  const std::string base = base_dir_of(ref);
  auto resolve = [&](const std::string& key) {
    return resolve_or_die(scenario_ref(body, key), base);
  };

  if (kind == "stages") {
    GroupoidPtr g = groupoid_from(resolve("groupoid"));
    const WideSubgroupoid h = subgroupoid(g, subgroupoid_members_from(resolve("h")));
    const WideSubgroupoid k = subgroupoid(g, subgroupoid_members_from(resolve("k")));
    const Representation sigma = representation_from(resolve("sigma"), k.groupoid());
    const CheckReport rep = verify_stages(g, h, k, sigma);
    emit(report_json(rep), rep.summary(), as_json);
    return rep.pass ? kExitPass : kExitCheckFailed;
  }
  if (kind == "mackey") {
    GroupoidPtr g1 = groupoid_from(resolve("g1"));
    const WideSubgroupoid h1 = subgroupoid(g1, subgroupoid_members_from(resolve("h1")));
    const Representation sigma1 = representation_from(resolve("sigma1"), h1.groupoid());
    GroupoidPtr g2 = groupoid_from(resolve("g2"));
    const WideSubgroupoid h2 = subgroupoid(g2, subgroupoid_members_from(resolve("h2")));
    const Representation sigma2 = representation_from(resolve("sigma2"), h2.groupoid());
    const CheckReport rep = verify_mackey(g1, h1, sigma1, g2, h2, sigma2);
    emit(report_json(rep), rep.summary(), as_json);
    return rep.pass ? kExitPass : kExitCheckFailed;
  }
  if (kind == "frobenius") {
    GroupoidPtr g = groupoid_from(resolve("groupoid"));
    const WideSubgroupoid h =
        subgroupoid(g, subgroupoid_members_from(resolve("subgroupoid")));
    if (!body.contains("pis") || !body["pis"].is_array() || !body.contains("sigmas") ||
        !body["sigmas"].is_array())
      throw InputError("frobenius scenario needs pis and sigmas arrays");
    std::vector<Representation> pis, sigmas;
    for (const auto& r : body["pis"])
      pis.push_back(representation_from(resolve_or_die(r.get<std::string>(), base), g));
    for (const auto& r : body["sigmas"])
      sigmas.push_back(
          representation_from(resolve_or_die(r.get<std::string>(), base), h.groupoid()));
    const CosetSpacePtr cs = cosets(g, h);
    const EquivariantSystem mu =
        body.contains("mu") ? equivariant_from(resolve("mu"), cs) : solve_equivariant(cs);
    const HaarSystem haar = counting_haar(h.groupoid(), /*normalize=*/true);

    const FrobeniusMatrixResult res = frobenius_matrix(g, h, pis, sigmas, mu, haar);
    for (const auto& f : res.report.failures)
      if (f.find("precondition:") != std::string::npos)
        throw InputError("scenario violates a theorem precondition: " + f);
    Json out = report_json(res.report);
    out["dims_induced"] = res.dims_induced;
    out["dims_restricted"] = res.dims_restricted;

    std::ostringstream human;
    human << res.report.summary() << "\ndim Mor(pi_i, ind sigma_j) (rows = pi):";
    for (const auto& row : res.dims_induced) {
      human << "\n  [";
      for (std::size_t j = 0; j < row.size(); ++j) human << (j ? ", " : "") << row[j];
      human << "]";
    }
    emit(out, human.str(), as_json);
    return res.report.pass ? kExitPass : kExitCheckFailed;
  }
  throw InputError("unknown check kind: " + kind);
}

// ---------------------------------------------------------------------------
// catalog

int run_catalog(const std::string& name) {
  if (name.empty()) {
    for (const auto& n : catalog_names())
      std::cout << n << " (" << document_kind(catalog_document(n)) << ")\n";
    return kExitPass;
  }
  if (!catalog_has(name)) throw InputError("unknown catalog entry: " + name);
  std::cout << canonical_dump(catalog_document(name));
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"indukt: induced representations of finite groupoids"};
  app.require_subcommand(1);

  if (const char* tol = std::getenv("INDUKT_TOL")) {
    try {
      set_default_tolerance(std::stod(tol));
    } catch (const std::exception&) {
      std::cerr << "INDUKT_TOL is not a positive number\n";
      return kExitInputError;
    }
  }

  std::string ref, groupoid_ref, subgroupoid_ref, rep_ref, mu_ref, haar_ref, out_path;
  std::string rep_a, rep_b, check_kind, catalog_name;
  bool as_json = false, normalized_haar = false;

  auto* validate = app.add_subcommand("validate", "validate a document");
  validate->add_option("file", ref, "document (path or catalog:NAME)")->required();
  validate->add_option("--groupoid", groupoid_ref, "groupoid context");
  validate->add_option("--subgroupoid", subgroupoid_ref, "subgroupoid context");
  validate->add_flag("--json", as_json, "machine-readable report");

  auto* induce_cmd = app.add_subcommand("induce", "construct an induced representation");
  induce_cmd->add_option("--groupoid", groupoid_ref)->required();
  induce_cmd->add_option("--subgroupoid", subgroupoid_ref)->required();
  induce_cmd->add_option("--rep", rep_ref, "representation of the subgroupoid")->required();
  induce_cmd->add_option("--mu", mu_ref, "equivariant system (default: all ones)");
  induce_cmd->add_option("--haar", haar_ref, "Haar system of H (default: counting)");
  induce_cmd->add_flag("--normalized-haar", normalized_haar,
                       "use the normalized counting Haar system");
  induce_cmd->add_option("-o,--output", out_path, "output path")->required();
  induce_cmd->add_flag("--json", as_json);

  auto* inter = app.add_subcommand("intertwiners", "compute dim Mor(repA, repB)");
  inter->add_option("--groupoid", groupoid_ref)->required();
  inter->add_option("--subgroupoid", subgroupoid_ref,
                    "interpret the representations over this subgroupoid");
  inter->add_option("repA", rep_a)->required();
  inter->add_option("repB", rep_b)->required();
  inter->add_flag("--json", as_json);

  auto* check = app.add_subcommand("check", "run a theorem verifier on a scenario");
  check->add_option("kind", check_kind, "stages | mackey | frobenius")->required();
  check->add_option("scenario", ref, "scenario document (path or catalog:NAME)")
      ->required();
  check->add_flag("--json", as_json);

  auto* catalog = app.add_subcommand("catalog", "list or print built-in fixtures");
  catalog->add_option("name", catalog_name, "fixture name");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*validate) return run_validate(ref, groupoid_ref, subgroupoid_ref, as_json);
    if (*induce_cmd)
      return run_induce(groupoid_ref, subgroupoid_ref, rep_ref, mu_ref, haar_ref,
                        normalized_haar, out_path, as_json);
    if (*inter) return run_intertwiners(groupoid_ref, subgroupoid_ref, rep_a, rep_b, as_json);
    if (*check) return run_check(check_kind, ref, as_json);
    if (*catalog) return run_catalog(catalog_name);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NonTransitiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const NormalizationInfeasible& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}

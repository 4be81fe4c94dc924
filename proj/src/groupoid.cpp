#include "indukt/groupoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace indukt {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

std::string triple_str(int x, int y, int xy) {
  std::ostringstream os;
  os << "[" << x << ", " << y << ", " << xy << "]";
  return os.str();
}

}  // namespace

GroupoidPtr FiniteGroupoid::create(GroupoidData data) {
  const int n = data.n;
  if (n < 0) bad("groupoid: negative element count");
  auto in_range = [n](int x) { return 0 <= x && x < n; };

  if (static_cast<int>(data.range.size()) != n ||
      static_cast<int>(data.domain.size()) != n ||
      static_cast<int>(data.inverse.size()) != n)
    bad("groupoid: range/domain/inverse tables must have one entry per element");

  std::sort(data.units.begin(), data.units.end());
  data.units.erase(std::unique(data.units.begin(), data.units.end()), data.units.end());

  auto g = std::shared_ptr<FiniteGroupoid>(new FiniteGroupoid());
  g->n_ = n;
  g->units_ = std::move(data.units);
  g->unit_index_.assign(n, -1);
  for (std::size_t i = 0; i < g->units_.size(); ++i) {
    const int u = g->units_[i];
    if (!in_range(u)) bad("groupoid: unit id out of range");
    g->unit_index_[u] = static_cast<int>(i);
  }

  for (int x = 0; x < n; ++x) {
    if (!in_range(data.range[x]) || !in_range(data.domain[x]) || !in_range(data.inverse[x]))
      bad("groupoid: table entry out of range at element " + std::to_string(x));
    if (g->unit_index_[data.range[x]] < 0)
      bad("groupoid: range of element " + std::to_string(x) + " is not a unit");
    if (g->unit_index_[data.domain[x]] < 0)
      bad("groupoid: domain of element " + std::to_string(x) + " is not a unit");
  }
  g->range_ = std::move(data.range);
  g->domain_ = std::move(data.domain);
  g->inverse_ = std::move(data.inverse);

  g->product_.assign(static_cast<std::size_t>(n) * n, -1);
  for (const auto& [x, y, xy] : data.product) {
    if (!in_range(x) || !in_range(y) || !in_range(xy))
      bad("groupoid: product triple " + triple_str(x, y, xy) + " out of range");
    if (g->domain_[x] != g->range_[y])
      bad("groupoid: dangling product triple " + triple_str(x, y, xy) +
          " (pair is not composable)");
    int& slot = g->product_[x * n + y];
    if (slot >= 0) bad("groupoid: duplicate product triple " + triple_str(x, y, xy));
    slot = xy;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (g->domain_[x] == g->range_[y] && g->product_[x * n + y] < 0)
        bad("groupoid: product missing for composable pair (" + std::to_string(x) +
            ", " + std::to_string(y) + ")");

  g->r_fiber_.resize(g->units_.size());
  g->d_fiber_.resize(g->units_.size());
  for (int x = 0; x < n; ++x) {
    g->r_fiber_[g->unit_index_[g->range_[x]]].push_back(x);
    g->d_fiber_[g->unit_index_[g->domain_[x]]].push_back(x);
  }
  return g;
}

std::vector<int> FiniteGroupoid::hom_set(int u, int v) const {
  std::vector<int> out;
  for (int x : r_fiber(u))
    if (domain_[x] == v) out.push_back(x);
  return out;
}

ValidationReport validate_groupoid(const FiniteGroupoid& g) {
  ValidationReport rep;
  const int n = g.size();

  for (int x = 0; x < n; ++x) {
    const int xi = g.inverse(x);
    if (g.inverse(xi) != x)
      rep.fail("element " + std::to_string(x) + ": (x^-1)^-1 = " +
               std::to_string(g.inverse(xi)) + " != x");
  }

  for (int u : g.units()) {
    if (g.range(u) != u || g.domain(u) != u)
      rep.fail("unit " + std::to_string(u) + " is not fixed by r and d");
    if (g.inverse(u) != u)
      rep.fail("unit " + std::to_string(u) + " is not its own inverse");
  }

  for (int x = 0; x < n; ++x) {
    const int xi = g.inverse(x);
    // (x, x^-1) and (x^-1, x) composable; products recover r(x) and d(x).
    if (!g.composable(x, xi))
      rep.fail("element " + std::to_string(x) + ": (x, x^-1) not composable");
    else if (g.product(x, xi) != g.range(x))
      rep.fail("element " + std::to_string(x) + ": x x^-1 = " +
               std::to_string(g.product(x, xi)) + " != r(x)");
    if (!g.composable(xi, x))
      rep.fail("element " + std::to_string(x) + ": (x^-1, x) not composable");
    else if (g.product(xi, x) != g.domain(x))
      rep.fail("element " + std::to_string(x) + ": x^-1 x = " +
               std::to_string(g.product(xi, x)) + " != d(x)");
  }

  for (int x = 0; x < n; ++x) {
    for (int y : g.r_fiber(g.domain(x))) {
      const int xy = g.product(x, y);
      if (g.range(xy) != g.range(x) || g.domain(xy) != g.domain(y)) {
        rep.fail("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                 "): r/d of the product disagree with r(x), d(y)");
        continue;
      }
      // Cancellation: x^-1 (x y) = y and (x y) y^-1 = x.
      if (g.product(g.inverse(x), xy) != y)
        rep.fail("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                 "): x^-1 (x y) != y");
      if (g.product(xy, g.inverse(y)) != x)
        rep.fail("pair (" + std::to_string(x) + ", " + std::to_string(y) +
                 "): (x y) y^-1 != x");
    }
  }

  // Unit laws.
  for (int u : g.units()) {
    for (int y : g.r_fiber(u))
      if (g.product(u, y) != y)
        rep.fail("unit " + std::to_string(u) + ": u y != y at y = " + std::to_string(y));
    for (int x : g.d_fiber(u))
      if (g.product(x, u) != x)
        rep.fail("unit " + std::to_string(u) + ": x u != x at x = " + std::to_string(x));
  }

  // Associativity over all composable triples.
  for (int x = 0; x < n; ++x) {
    for (int y : g.r_fiber(g.domain(x))) {
      const int xy = g.product(x, y);
      for (int z : g.r_fiber(g.domain(y))) {
        const int yz = g.product(y, z);
        const int a = g.product(xy, z);
        const int b = g.product(x, yz);
        if (a < 0 || b < 0 || a != b)
          rep.fail("triple (" + std::to_string(x) + ", " + std::to_string(y) + ", " +
                   std::to_string(z) + "): associativity fails");
      }
    }
  }

  // Left translation y -> x y is a bijection G^{d(x)} -> G^{r(x)}.
  for (int x = 0; x < n; ++x) {
    std::vector<int> image;
    for (int y : g.r_fiber(g.domain(x))) image.push_back(g.product(x, y));
    std::sort(image.begin(), image.end());
    if (image != g.r_fiber(g.range(x)))
      rep.fail("element " + std::to_string(x) +
               ": left translation is not a bijection G^{d(x)} -> G^{r(x)}");
  }

  return rep;
}

GroupoidPtr make_pair_groupoid(int n) {
  if (n < 1) bad("pair groupoid: need at least one unit");
  GroupoidData d;
  d.n = n * n;
  auto id = [n](int i, int j) { return i * n + j; };
  d.range.resize(d.n);
  d.domain.resize(d.n);
  d.inverse.resize(d.n);
  for (int i = 0; i < n; ++i) {
    d.units.push_back(id(i, i));
    for (int j = 0; j < n; ++j) {
      d.range[id(i, j)] = id(i, i);
      d.domain[id(i, j)] = id(j, j);
      d.inverse[id(i, j)] = id(j, i);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        d.product.push_back({id(i, j), id(j, k), id(i, k)});
  return FiniteGroupoid::create(std::move(d));
}

namespace {

/// Identity index of a group table, after verifying the group axioms.
int check_group_table(const std::vector<std::vector<int>>& table) {
  const int k = static_cast<int>(table.size());
  if (k == 0) bad("group table: empty");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != k) bad("group table: not square");
    for (int v : row)
      if (v < 0 || v >= k) bad("group table: entry out of range");
  }
  int e = -1;
  for (int c = 0; c < k && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < k; ++x)
      if (table[c][x] != x || table[x][c] != x) { ok = false; break; }
    if (ok) e = c;
  }
  if (e < 0) bad("group table: no identity element");
  for (int x = 0; x < k; ++x) {
    bool has_inverse = false;
    for (int y = 0; y < k; ++y)
      if (table[x][y] == e && table[y][x] == e) { has_inverse = true; break; }
    if (!has_inverse) bad("group table: element " + std::to_string(x) + " has no inverse");
  }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          bad("group table: not associative at (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")");
  return e;
}

}  // namespace

GroupoidPtr make_group_groupoid(const std::vector<std::vector<int>>& table) {
  const int e = check_group_table(table);
  const int k = static_cast<int>(table.size());
  GroupoidData d;
  d.n = k;
  d.units = {e};
  d.range.assign(k, e);
  d.domain.assign(k, e);
  d.inverse.resize(k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (table[x][y] == e) d.inverse[x] = y;
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y) d.product.push_back({x, y, table[x][y]});
  return FiniteGroupoid::create(std::move(d));
}

GroupoidPtr make_action_groupoid(const std::vector<std::vector<int>>& table,
                                 const std::vector<std::vector<int>>& action) {
  const int e = check_group_table(table);
  const int k = static_cast<int>(table.size());
  if (static_cast<int>(action.size()) != k) bad("action: one permutation per group element");
  const int m = static_cast<int>(action[0].size());
  if (m == 0) bad("action: empty set");
  for (const auto& perm : action) {
    if (static_cast<int>(perm.size()) != m) bad("action: ragged action table");
    std::vector<bool> seen(m, false);
    for (int v : perm) {
      if (v < 0 || v >= m || seen[v]) bad("action: not a permutation of the set");
      seen[v] = true;
    }
  }
  for (int x = 0; x < m; ++x)
    if (action[e][x] != x) bad("action: identity does not act trivially");
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int x = 0; x < m; ++x)
        if (action[table[a][b]][x] != action[a][action[b][x]])
          bad("action: (ab).x != a.(b.x) at (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(x) + ")");

  std::vector<int> inv(k);
  for (int x = 0; x < k; ++x)
    for (int y = 0; y < k; ++y)
      if (table[x][y] == e) inv[x] = y;

  GroupoidData d;
  d.n = k * m;
  auto id = [m](int gamma, int x) { return gamma * m + x; };
  d.range.resize(d.n);
  d.domain.resize(d.n);
  d.inverse.resize(d.n);
  for (int x = 0; x < m; ++x) d.units.push_back(id(e, x));
  for (int gamma = 0; gamma < k; ++gamma)
    for (int x = 0; x < m; ++x) {
      d.range[id(gamma, x)] = id(e, action[gamma][x]);
      d.domain[id(gamma, x)] = id(e, x);
      d.inverse[id(gamma, x)] = id(inv[gamma], action[gamma][x]);
    }
  // (γ1, γ2·x)(γ2, x) = (γ1 γ2, x)
  for (int g1 = 0; g1 < k; ++g1)
    for (int g2 = 0; g2 < k; ++g2)
      for (int x = 0; x < m; ++x)
        d.product.push_back({id(g1, action[g2][x]), id(g2, x), id(table[g1][g2], x)});
  return FiniteGroupoid::create(std::move(d));
}

GroupoidPtr make_product_groupoid(const GroupoidPtr& g1, const GroupoidPtr& g2) {
  if (!g1 || !g2) bad("product groupoid: null input");
  const int n1 = g1->size(), n2 = g2->size();
  GroupoidData d;
  d.n = n1 * n2;
  auto id = [n2](int x1, int x2) { return x1 * n2 + x2; };
  d.range.resize(d.n);
  d.domain.resize(d.n);
  d.inverse.resize(d.n);
  for (int u1 : g1->units())
    for (int u2 : g2->units()) d.units.push_back(id(u1, u2));
  std::sort(d.units.begin(), d.units.end());
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2) {
      d.range[id(x1, x2)] = id(g1->range(x1), g2->range(x2));
      d.domain[id(x1, x2)] = id(g1->domain(x1), g2->domain(x2));
      d.inverse[id(x1, x2)] = id(g1->inverse(x1), g2->inverse(x2));
    }
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2)
      for (int y1 : g1->r_fiber(g1->domain(x1)))
        for (int y2 : g2->r_fiber(g2->domain(x2)))
          d.product.push_back(
              {id(x1, x2), id(y1, y2), id(g1->product(x1, y1), g2->product(x2, y2))});
  return FiniteGroupoid::create(std::move(d));
}

std::vector<std::vector<int>> unit_orbits(const FiniteGroupoid& g) {
  const int k = g.num_units();
  std::vector<int> cls(k, -1);
  std::vector<std::vector<int>> out;
  for (int i = 0; i < k; ++i) {
    if (cls[i] >= 0) continue;
    const int c = static_cast<int>(out.size());
    out.push_back({});
    std::vector<int> stack{i};
    cls[i] = c;
    while (!stack.empty()) {
      const int ui = stack.back();
      stack.pop_back();
      out[c].push_back(g.units()[ui]);
      for (int x : g.r_fiber(g.units()[ui])) {
        const int vi = g.unit_index(g.domain(x));
        if (cls[vi] < 0) {
          cls[vi] = c;
          stack.push_back(vi);
        }
      }
    }
    std::sort(out[c].begin(), out[c].end());
  }
  return out;
}

bool is_transitive(const FiniteGroupoid& g) {
  return g.num_units() > 0 && unit_orbits(g).size() == 1;
}

Isotropy isotropy(const FiniteGroupoid& g, int u) {
  if (g.unit_index(u) < 0) bad("isotropy: not a unit");
  Isotropy iso;
  iso.elements = g.hom_set(u, u);
  std::vector<int> local(g.size(), -1);
  for (std::size_t i = 0; i < iso.elements.size(); ++i)
    local[iso.elements[i]] = static_cast<int>(i);
  const int k = static_cast<int>(iso.elements.size());
  GroupoidData d;
  d.n = k;
  d.units = {local[u]};
  d.range.assign(k, local[u]);
  d.domain.assign(k, local[u]);
  d.inverse.resize(k);
  for (int i = 0; i < k; ++i) {
    d.inverse[i] = local[g.inverse(iso.elements[i])];
    for (int j = 0; j < k; ++j)
      d.product.push_back({i, j, local[g.product(iso.elements[i], iso.elements[j])]});
  }
  iso.group = FiniteGroupoid::create(std::move(d));
  return iso;
}

WideSubgroupoid subgroupoid(GroupoidPtr g, std::vector<int> members) {
  if (!g) bad("subgroupoid: null groupoid");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  for (int x : members)
    if (x < 0 || x >= g->size()) bad("subgroupoid: member id out of range");

  std::vector<int> from_parent(g->size(), -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    from_parent[members[i]] = static_cast<int>(i);

  for (int u : g->units())
    if (from_parent[u] < 0)
      bad("subgroupoid: not wide, missing unit " + std::to_string(u));
  for (int x : members) {
    if (from_parent[g->inverse(x)] < 0)
      bad("subgroupoid: not closed under inverse at element " + std::to_string(x));
    for (int y : members)
      if (g->composable(x, y) && from_parent[g->product(x, y)] < 0)
        bad("subgroupoid: not closed under product at pair (" + std::to_string(x) +
            ", " + std::to_string(y) + ")");
  }

  GroupoidData d;
  d.n = static_cast<int>(members.size());
  for (int u : g->units()) d.units.push_back(from_parent[u]);
  d.range.resize(d.n);
  d.domain.resize(d.n);
  d.inverse.resize(d.n);
  for (int i = 0; i < d.n; ++i) {
    const int p = members[i];
    d.range[i] = from_parent[g->range(p)];
    d.domain[i] = from_parent[g->domain(p)];
    d.inverse[i] = from_parent[g->inverse(p)];
    for (int j = 0; j < d.n; ++j)
      if (g->composable(p, members[j]))
        d.product.push_back({i, j, from_parent[g->product(p, members[j])]});
  }

  WideSubgroupoid h;
  h.parent_ = std::move(g);
  h.sub_ = FiniteGroupoid::create(std::move(d));
  h.members_ = std::move(members);
  h.from_parent_ = std::move(from_parent);

  // Unit indices line up between parent and materialized subgroupoid: both
  // unit lists ascend and from_parent is monotone.
  for (int i = 0; i < h.parent_->num_units(); ++i)
    if (h.sub_->units()[i] != h.from_parent_[h.parent_->units()[i]])
      throw std::logic_error("subgroupoid: unit index misalignment");
  return h;
}

CosetSpacePtr cosets(GroupoidPtr g, WideSubgroupoid h) {
  if (!g || h.parent().get() != g.get())
    bad("cosets: subgroupoid does not belong to the groupoid");
  auto cs = std::make_shared<CosetSpace>(CosetSpace{});
  auto& c = const_cast<CosetSpace&>(*cs);
  c.parent_ = g;
  c.sub_ = std::move(h);
  const int n = g->size();
  c.coset_of_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (c.coset_of_[x] >= 0) continue;
    const int idx = static_cast<int>(c.reps_.size());
    std::vector<int> mem;
    for (int xi_sub : c.sub_.groupoid()->r_fiber(c.sub_.from_parent(g->domain(x)))) {
      const int y = g->product(x, c.sub_.to_parent(xi_sub));
      if (c.coset_of_[y] >= 0 && c.coset_of_[y] != idx)
        throw std::logic_error("cosets: partition violated");
      c.coset_of_[y] = idx;
      mem.push_back(y);
    }
    std::sort(mem.begin(), mem.end());
    for (int y : mem)
      if (g->range(y) != g->range(x)) throw std::logic_error("cosets: moment not constant");
    c.members_.push_back(std::move(mem));
    c.reps_.push_back(x);  // ascending scan: x is the smallest id in its coset
    c.moment_.push_back(g->range(x));
  }

  const int k = c.num_cosets();
  c.action_.assign(static_cast<std::size_t>(n) * k, -1);
  for (int x = 0; x < n; ++x)
    for (int cc = 0; cc < k; ++cc)
      if (g->domain(x) == c.moment_[cc])
        c.action_[x * k + cc] = c.coset_of_[g->product(x, c.reps_[cc])];

  c.at_unit_.resize(g->num_units());
  for (int cc = 0; cc < k; ++cc)
    c.at_unit_[g->unit_index(c.moment_[cc])].push_back(cc);
  return cs;
}

CosetSpacePtr CosetSpace::with_representatives(std::vector<int> reps) const {
  if (static_cast<int>(reps.size()) != num_cosets())
    bad("with_representatives: one representative per coset");
  for (int cc = 0; cc < num_cosets(); ++cc)
    if (coset_of_[reps[cc]] != cc)
      bad("with_representatives: element " + std::to_string(reps[cc]) +
          " does not lie in coset " + std::to_string(cc));
  auto out = std::make_shared<CosetSpace>(*this);
  const_cast<CosetSpace&>(*out).reps_ = std::move(reps);
  return out;
}

std::vector<std::vector<int>> orbits(const CosetSpace& cs) {
  const int k = cs.num_cosets();
  std::vector<int> cls(k, -1);
  std::vector<std::vector<int>> out;
  for (int c0 = 0; c0 < k; ++c0) {
    if (cls[c0] >= 0) continue;
    const int o = static_cast<int>(out.size());
    out.push_back({});
    std::vector<int> stack{c0};
    cls[c0] = o;
    while (!stack.empty()) {
      const int c = stack.back();
      stack.pop_back();
      out[o].push_back(c);
      for (int x : cs.parent()->d_fiber(cs.moment(c))) {
        const int c2 = cs.act(x, c);
        if (c2 >= 0 && cls[c2] < 0) {
          cls[c2] = o;
          stack.push_back(c2);
        }
      }
    }
    std::sort(out[o].begin(), out[o].end());
  }
  return out;
}

}  // namespace indukt

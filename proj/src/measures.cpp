#include "indukt/measures.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/Dense>

namespace indukt {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

}  // namespace

HaarSystem::HaarSystem(GroupoidPtr g, std::vector<double> unit_mass)
    : g_(std::move(g)), c_(std::move(unit_mass)) {
  if (!g_) bad("haar: null groupoid");
  if (static_cast<int>(c_.size()) != g_->num_units())
    bad("haar: one mass per unit required");
  for (double v : c_)
    if (!positive_finite(v)) bad("haar: unit masses must be positive");
  normalized_ = true;
  for (int u : g_->units())
    if (std::abs(fiber_mass(u) - 1.0) > kMeasureTol) {
      normalized_ = false;
      break;
    }
}

double HaarSystem::fiber_mass(int u) const {
  double m = 0.0;
  for (int x : g_->r_fiber(u)) m += weight(x);
  return m;
}

std::vector<double> HaarSystem::weights() const {
  std::vector<double> w(g_->size());
  for (int x = 0; x < g_->size(); ++x) w[x] = weight(x);
  return w;
}

HaarSystem counting_haar(GroupoidPtr g, bool normalize) {
  if (!g) bad("counting_haar: null groupoid");
  const int k = g->num_units();
  if (!normalize) return HaarSystem(std::move(g), std::vector<double>(k, 1.0));

  // Fiber-mass equations: sum_v |G^u_v| c(v) = 1 for every u.
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(k, k);
  for (int ui = 0; ui < k; ++ui)
    for (int x : g->r_fiber(g->units()[ui]))
      a(ui, g->unit_index(g->domain(x))) += 1.0;
  Eigen::VectorXd rhs = Eigen::VectorXd::Ones(k);
  Eigen::VectorXd c = a.completeOrthogonalDecomposition().solve(rhs);

  const double residual = (a * c - rhs).lpNorm<Eigen::Infinity>();
  if (residual > kMeasureTol)
    throw NormalizationInfeasible("normalized haar: residual " + std::to_string(residual));
  for (int i = 0; i < k; ++i)
    if (!positive_finite(c(i)))
      throw NormalizationInfeasible("normalized haar: no positive solution");
  return HaarSystem(std::move(g), std::vector<double>(c.data(), c.data() + k));
}

ValidationReport validate_haar(const FiniteGroupoid& g, const std::vector<double>& weight) {
  ValidationReport rep;
  if (static_cast<int>(weight.size()) != g.size()) {
    rep.fail("haar: one weight per element required");
    return rep;
  }
  for (int x = 0; x < g.size(); ++x)
    if (!positive_finite(weight[x]))
      rep.fail("haar: weight not positive at element " + std::to_string(x));
  for (int x = 0; x < g.size(); ++x)
    for (int y : g.r_fiber(g.domain(x))) {
      const double r = std::abs(weight[g.product(x, y)] - weight[y]);
      rep.observe(r);
      if (r > kMeasureTol) {
        std::ostringstream os;
        os << "haar: invariance fails at pair (" << x << ", " << y
           << "): |w(xy) - w(y)| = " << r;
        rep.fail(os.str());
      }
    }
  return rep;
}

ValidationReport validate_haar(const HaarSystem& h) {
  ValidationReport rep = validate_haar(*h.groupoid(), h.weights());
  if (h.normalized())
    for (int u : h.groupoid()->units()) {
      const double r = std::abs(h.fiber_mass(u) - 1.0);
      rep.observe(r);
      if (r > kMeasureTol)
        rep.fail("haar: flagged normalized but fiber mass at unit " + std::to_string(u) +
                 " deviates by " + std::to_string(r));
    }
  return rep;
}

EquivariantSystem::EquivariantSystem(CosetSpacePtr cs, std::vector<double> coset_weights)
    : cs_(std::move(cs)), w_(std::move(coset_weights)) {
  if (!cs_) bad("equivariant: null coset space");
  if (static_cast<int>(w_.size()) != cs_->num_cosets())
    bad("equivariant: one weight per coset required");
  for (double v : w_)
    if (!positive_finite(v)) bad("equivariant: weights must be positive");
}

EquivariantSystem solve_equivariant(CosetSpacePtr cs,
                                    const std::map<int, double>& orbit_weights) {
  if (!cs) bad("solve_equivariant: null coset space");
  const auto orbs = orbits(*cs);
  for (const auto& [o, w] : orbit_weights) {
    if (o < 0 || o >= static_cast<int>(orbs.size()))
      bad("solve_equivariant: orbit index " + std::to_string(o) + " out of range");
    if (!positive_finite(w))
      bad("solve_equivariant: weight for orbit " + std::to_string(o) +
          " must be positive");
  }
  std::vector<double> w(cs->num_cosets(), 1.0);
  for (std::size_t o = 0; o < orbs.size(); ++o) {
    auto it = orbit_weights.find(static_cast<int>(o));
    if (it == orbit_weights.end()) continue;
    for (int c : orbs[o]) w[c] = it->second;
  }
  return EquivariantSystem(std::move(cs), std::move(w));
}

ValidationReport validate_equivariant(const EquivariantSystem& mu) {
  ValidationReport rep;
  const CosetSpace& cs = *mu.coset_space();
  for (int c = 0; c < cs.num_cosets(); ++c)
    if (!positive_finite(mu.weight(c)))
      rep.fail("equivariant: weight not positive at coset " + std::to_string(c));
  for (int x = 0; x < cs.parent()->size(); ++x)
    for (int c = 0; c < cs.num_cosets(); ++c) {
      const int c2 = cs.act(x, c);
      if (c2 < 0) continue;
      const double r = std::abs(mu.weight(c2) - mu.weight(c));
      rep.observe(r);
      if (r > kMeasureTol) {
        std::ostringstream os;
        os << "equivariant: weight(g.C) != weight(C) at (g, C) = (" << x << ", " << c
           << "): deviation " << r;
        rep.fail(os.str());
      }
    }
  return rep;
}

namespace {

void check_subgroupoid_haar(const CosetSpace& cs, const HaarSystem& h_haar,
                            const char* who) {
  if (h_haar.groupoid().get() != cs.sub().groupoid().get())
    bad(std::string(who) + ": Haar system is not over the coset space's subgroupoid");
}

}  // namespace

std::vector<Cplx> p_map(const std::vector<Cplx>& f, const CosetSpace& cs,
                        const HaarSystem& h_haar) {
  check_subgroupoid_haar(cs, h_haar, "p_map");
  const auto& g = *cs.parent();
  if (static_cast<int>(f.size()) != g.size()) bad("p_map: f must be total on G");
  const auto& h = cs.sub();
  std::vector<Cplx> out(cs.num_cosets(), Cplx(0, 0));
  for (int c = 0; c < cs.num_cosets(); ++c) {
    const int x = cs.representative(c);
    const int du = h.from_parent(g.domain(x));
    Cplx acc(0, 0);
    for (int xi : h.groupoid()->r_fiber(du))
      acc += f[g.product(x, h.to_parent(xi))] * h_haar.weight(xi);
    out[c] = acc;
  }
  return out;
}

std::vector<double> section_of_unity(const std::vector<int>& J, const CosetSpace& cs,
                                     const HaarSystem& h_haar) {
  check_subgroupoid_haar(cs, h_haar, "section_of_unity");
  if (J.empty()) bad("section_of_unity: J must be nonempty");
  std::vector<bool> in_j(cs.num_cosets(), false);
  for (int c : J) {
    if (c < 0 || c >= cs.num_cosets()) bad("section_of_unity: coset index out of range");
    in_j[c] = true;
  }
  const std::vector<Cplx> ones(cs.parent()->size(), Cplx(1, 0));
  const std::vector<Cplx> p1 = p_map(ones, cs, h_haar);

  std::vector<double> f(cs.parent()->size(), 0.0);
  for (int x = 0; x < cs.parent()->size(); ++x) {
    const int c = cs.coset_of(x);
    if (in_j[c]) f[x] = 1.0 / p1[c].real();
  }

  std::vector<Cplx> fc(f.begin(), f.end());
  const std::vector<Cplx> pf = p_map(fc, cs, h_haar);
  for (int c = 0; c < cs.num_cosets(); ++c)
    if (in_j[c] && std::abs(pf[c] - Cplx(1, 0)) > kMeasureTol)
      throw std::logic_error("section_of_unity: Pf != 1 on J");
  return f;
}

HaarSystem induced_haar(const EquivariantSystem& mu, const HaarSystem& h_haar) {
  const CosetSpace& cs = *mu.coset_space();
  check_subgroupoid_haar(cs, h_haar, "induced_haar");
  const auto& g = *cs.parent();
  std::vector<double> c(g.num_units());
  for (int ui = 0; ui < g.num_units(); ++ui) {
    const int u = g.units()[ui];
    c[ui] = mu.weight(cs.coset_of(u)) * h_haar.unit_mass(ui);
  }
  HaarSystem out(cs.parent(), std::move(c));
  // Eq-(1) consistency: weight(x) = μ(xH) · λ_H(x_C^{-1} x) elementwise.
  for (int x = 0; x < g.size(); ++x) {
    const int cc = cs.coset_of(x);
    const int hx = g.product(g.inverse(cs.representative(cc)), x);
    const double direct = mu.weight(cc) * h_haar.weight(cs.sub().from_parent(hx));
    if (std::abs(direct - out.weight(x)) > kMeasureTol)
      throw std::logic_error("induced_haar: elementwise formula disagrees");
  }
  return out;
}

}  // namespace indukt

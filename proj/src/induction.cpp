#include "indukt/induction.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "indukt/linalg.hpp"

namespace indukt {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

double vec_max_abs(const Vector& v) {
  return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff();
}

/// σ-fiber dimension at a parent unit id (unit indices align between a wide
/// subgroupoid's materialization and its parent).
int sigma_dim(const Representation& sigma, const FiniteGroupoid& g, int parent_unit) {
  return sigma.dim_at(g.unit_index(parent_unit));
}

void check_induction_data(const GroupoidPtr& g, const WideSubgroupoid& h,
                          const Representation& sigma, const EquivariantSystem& mu,
                          const HaarSystem& h_haar) {
  if (!g) bad("induce: null groupoid");
  if (h.parent().get() != g.get()) bad("induce: subgroupoid not over G");
  if (sigma.groupoid().get() != h.groupoid().get())
    bad("induce: sigma is not a representation of H");
  if (mu.coset_space()->parent().get() != g.get() ||
      mu.coset_space()->sub().groupoid().get() != h.groupoid().get())
    bad("induce: mu is not a system on G/H");
  if (h_haar.groupoid().get() != h.groupoid().get())
    bad("induce: Haar system is not over H");
}

}  // namespace

InducedRep::InducedRep(Representation base, Representation sigma, CosetSpacePtr cs,
                       EquivariantSystem mu, HaarSystem h_haar,
                       std::vector<std::vector<CosetBlock>> layout)
    : base_(std::move(base)),
      sigma_(std::move(sigma)),
      cs_(std::move(cs)),
      mu_(std::move(mu)),
      h_haar_(std::move(h_haar)),
      layout_(std::move(layout)) {
  block_of_.assign(cs_->num_cosets(), nullptr);
  for (const auto& blocks : layout_)
    for (const auto& b : blocks) block_of_[b.coset] = &b;
}

InducedRep induce(GroupoidPtr g, const WideSubgroupoid& h, const Representation& sigma,
                  const EquivariantSystem& mu, const HaarSystem& h_haar) {
  check_induction_data(g, h, sigma, mu, h_haar);
  const CosetSpacePtr& cs = mu.coset_space();

  std::vector<std::vector<CosetBlock>> layout(g->num_units());
  std::vector<int> dims(g->num_units(), 0);
  for (int ui = 0; ui < g->num_units(); ++ui) {
    int offset = 0;
    for (int c : cs->cosets_at(g->units()[ui])) {
      const int d = sigma_dim(sigma, *g, g->domain(cs->representative(c)));
      layout[ui].push_back({c, offset, d});
      offset += d;
    }
    dims[ui] = offset;
    if (offset == 0) throw std::logic_error("induce: empty fiber");
  }

  std::vector<CosetBlock> by_coset(cs->num_cosets());
  for (const auto& blocks : layout)
    for (const auto& b : blocks) by_coset[b.coset] = b;

  std::vector<Matrix> mats(g->size());
  for (int x = 0; x < g->size(); ++x) {
    const int ri = g->unit_index(g->range(x)), di = g->unit_index(g->domain(x));
    Matrix m = Matrix::Zero(dims[ri], dims[di]);
    const int xinv = g->inverse(x);
    for (const auto& bp : layout[ri]) {
      // C = x^-1 · C'; the only nonzero block in row C' is (C', C) = σ(h)^*.
      const int y = g->product(xinv, cs->representative(bp.coset));
      const int c = cs->coset_of(y);
      const int hp = g->product(g->inverse(cs->representative(c)), y);
      if (!h.contains(hp))
        throw std::logic_error("induce: block element escaped H (representative bookkeeping)");
      const CosetBlock& bc = by_coset[c];
      const double scale = std::sqrt(mu.weight(bp.coset) / mu.weight(c));
      m.block(bp.offset, bc.offset, bp.dim, bc.dim) =
          scale * sigma.matrix(h.from_parent(hp)).adjoint();
    }
    mats[x] = std::move(m);
  }

  Representation base(g, std::move(dims), std::move(mats));
  return InducedRep(std::move(base), sigma, cs, mu, h_haar, std::move(layout));
}

double equivariance_residual(const EquivariantFunction& f, const WideSubgroupoid& h,
                             const Representation& sigma) {
  const auto& g = *f.g;
  double r = 0.0;
  for (int x = 0; x < g.size(); ++x) {
    const int du = h.from_parent(g.domain(x));
    for (int xi : h.groupoid()->r_fiber(du)) {
      const Vector lhs = f.values[g.product(x, h.to_parent(xi))];
      const Vector rhs = sigma.matrix(h.groupoid()->inverse(xi)) * f.values[x];
      r = std::max(r, vec_max_abs(lhs - rhs));
    }
  }
  return r;
}

EquivariantFunction coset_delta(const InducedRep& ind, int coset, const Vector& v) {
  const CosetSpace& cs = *ind.coset_space();
  const auto& g = *cs.parent();
  const auto& h = cs.sub();
  const int rep = cs.representative(coset);
  if (v.size() != ind.sigma().dim_at(g.unit_index(g.domain(rep))))
    bad("coset_delta: value has the wrong fiber dimension");

  EquivariantFunction f;
  f.g = cs.parent();
  f.values.resize(g.size());
  for (int x = 0; x < g.size(); ++x)
    f.values[x] = Vector::Zero(sigma_dim(ind.sigma(), g, g.domain(x)));
  for (int y : cs.coset_members(coset)) {
    const int k = h.from_parent(g.product(g.inverse(rep), y));
    f.values[y] = ind.sigma().matrix(h.groupoid()->inverse(k)) * v;
  }
  return f;
}

EquivariantFunction smooth(const std::vector<Vector>& alpha, const WideSubgroupoid& h,
                           const Representation& sigma, const HaarSystem& h_haar) {
  const auto& g = *h.parent();
  if (static_cast<int>(alpha.size()) != g.size()) bad("smooth: alpha must be total on G");
  if (sigma.groupoid().get() != h.groupoid().get() ||
      h_haar.groupoid().get() != h.groupoid().get())
    bad("smooth: sigma and Haar system must live on H");

  EquivariantFunction f;
  f.g = h.parent();
  f.values.resize(g.size());
  for (int x = 0; x < g.size(); ++x) {
    Vector acc = Vector::Zero(sigma_dim(sigma, g, g.domain(x)));
    for (int eta : h.groupoid()->r_fiber(h.from_parent(g.domain(x)))) {
      const Vector& a = alpha[g.product(x, h.to_parent(eta))];
      acc += h_haar.weight(eta) * (sigma.matrix(eta) * a);
    }
    f.values[x] = std::move(acc);
  }
  return f;
}

EquivariantFunction generator(const std::vector<Cplx>& f, const std::vector<Vector>& t,
                              const WideSubgroupoid& h, const Representation& sigma,
                              const HaarSystem& h_haar) {
  const auto& g = *h.parent();
  if (static_cast<int>(f.size()) != g.size()) bad("generator: f must be total on G");
  if (static_cast<int>(t.size()) != g.num_units())
    bad("generator: one vector per unit required");
  EquivariantFunction out;
  out.g = h.parent();
  out.values.resize(g.size());
  for (int x = 0; x < g.size(); ++x) {
    Vector acc = Vector::Zero(sigma_dim(sigma, g, g.domain(x)));
    for (int hs : h.groupoid()->r_fiber(h.from_parent(g.domain(x)))) {
      const int xh = g.product(x, h.to_parent(hs));
      const int dh = g.unit_index(g.domain(h.to_parent(hs)));
      acc += f[xh] * h_haar.weight(hs) * (sigma.matrix(hs) * t[dh]);
    }
    out.values[x] = std::move(acc);
  }
  return out;
}

Vector vector_of(const EquivariantFunction& f, int u, const InducedRep& ind) {
  const auto& g = *ind.coset_space()->parent();
  if (f.g.get() != &g) bad("vector_of: function lives on a different groupoid");
  const int ui = g.unit_index(u);
  if (ui < 0) bad("vector_of: not a unit");
  Vector out = Vector::Zero(ind.base().dim_at(ui));
  for (const auto& b : ind.layout(ui)) {
    const Vector& v = f.values[ind.coset_space()->representative(b.coset)];
    if (v.size() != b.dim) bad("vector_of: fiber dimension mismatch");
    out.segment(b.offset, b.dim) = std::sqrt(ind.mu().weight(b.coset)) * v;
  }
  return out;
}

std::vector<Cplx> module_inner(const EquivariantFunction& f, const EquivariantFunction& g2,
                               const EquivariantSystem& mu) {
  const CosetSpace& cs = *mu.coset_space();
  const auto& g = *cs.parent();
  std::vector<Cplx> out(g.num_units(), Cplx(0, 0));
  for (int ui = 0; ui < g.num_units(); ++ui)
    for (int c : cs.cosets_at(g.units()[ui])) {
      const int rep = cs.representative(c);
      out[ui] += mu.weight(c) * f.values[rep].dot(g2.values[rep]);
    }
  return out;
}

namespace {

/// γ accumulated with explicit representative choices for G/H and H/K.
std::vector<double> compose_weights(const EquivariantSystem& mu_g,
                                    const EquivariantSystem& mu_h,
                                    const CosetSpace& cs_gk, const CosetSpace& cs_gh,
                                    const CosetSpace& cs_hk) {
  const auto& g = *cs_gh.parent();
  const auto& h = cs_gh.sub();
  std::vector<double> w(cs_gk.num_cosets(), 0.0);
  for (int ch = 0; ch < cs_gh.num_cosets(); ++ch) {
    const int xc = cs_gh.representative(ch);
    const int hu = h.from_parent(g.domain(xc));
    for (int d : cs_hk.cosets_at(hu)) {
      const int xd = h.to_parent(cs_hk.representative(d));
      const int e = cs_gk.coset_of(g.product(xc, xd));
      w[e] += mu_g.weight(ch) * mu_h.weight(d);
    }
  }
  return w;
}

}  // namespace

EquivariantSystem compose_measures(const EquivariantSystem& mu_g,
                                   const EquivariantSystem& mu_h, CosetSpacePtr cs_gk) {
  if (!cs_gk) bad("compose_measures: null target coset space");
  const CosetSpace& cs_gh = *mu_g.coset_space();
  const CosetSpace& cs_hk = *mu_h.coset_space();
  const auto& g = *cs_gh.parent();
  if (cs_gk->parent().get() != &g) bad("compose_measures: G mismatch");
  const auto& h = cs_gh.sub();
  if (cs_hk.parent().get() != h.groupoid().get())
    bad("compose_measures: mu_H is not a system on H/K");
  // K ⊆ H: the members of G/K's subgroupoid, seen in G, must all lie in H,
  // and must be exactly the K underlying H/K.
  const auto& k_in_g = cs_gk->sub();
  const auto& k_in_h = cs_hk.sub();
  if (k_in_g.size() != k_in_h.size()) bad("compose_measures: K is not a subgroupoid of H");
  for (int i = 0; i < k_in_g.size(); ++i) {
    const int p = k_in_g.to_parent(i);
    if (!h.contains(p) || h.from_parent(p) != k_in_h.to_parent(i))
      bad("compose_measures: K is not a subgroupoid of H");
  }

  std::vector<double> w = compose_weights(mu_g, mu_h, *cs_gk, cs_gh, cs_hk);

  // Well-definedness: recompute with the largest member as representative on
  // both quotients.
  auto alt_reps = [](const CosetSpace& cs) {
    std::vector<int> reps(cs.num_cosets());
    for (int c = 0; c < cs.num_cosets(); ++c) reps[c] = cs.coset_members(c).back();
    return reps;
  };
  const CosetSpacePtr gh2 = cs_gh.with_representatives(alt_reps(cs_gh));
  const CosetSpacePtr hk2 = cs_hk.with_representatives(alt_reps(cs_hk));
  const EquivariantSystem mu_g2(gh2, mu_g.weights());
  const EquivariantSystem mu_h2(hk2, mu_h.weights());
  const std::vector<double> w2 = compose_weights(mu_g2, mu_h2, *cs_gk, *gh2, *hk2);
  for (int e = 0; e < cs_gk->num_cosets(); ++e)
    if (std::abs(w[e] - w2[e]) > kMeasureTol)
      throw std::logic_error("compose_measures: representative dependence detected");

  EquivariantSystem gamma(std::move(cs_gk), std::move(w));
  const ValidationReport rep = validate_equivariant(gamma);
  if (!rep.pass) throw std::logic_error("compose_measures: result not equivariant");
  return gamma;
}

EquivariantFunction stages_phi(const EquivariantFunction& xi, const WideSubgroupoid& h,
                               const InducedRep& rho) {
  const auto& g = *h.parent();
  if (xi.g.get() != &g) bad("stages_phi: xi lives on a different groupoid");
  if (rho.coset_space()->parent().get() != h.groupoid().get())
    bad("stages_phi: rho must be induced over H");

  EquivariantFunction out;
  out.g = xi.g;
  out.values.resize(g.size());
  for (int x = 0; x < g.size(); ++x) {
    const int hui = g.unit_index(g.domain(x));  // aligned with H's unit index
    Vector v = Vector::Zero(rho.base().dim_at(hui));
    for (const auto& b : rho.layout(hui)) {
      const int xd = h.to_parent(rho.coset_space()->representative(b.coset));
      v.segment(b.offset, b.dim) =
          std::sqrt(rho.mu().weight(b.coset)) * xi.values[g.product(x, xd)];
    }
    out.values[x] = std::move(v);
  }
  return out;
}

CheckReport verify_stages(GroupoidPtr g, const WideSubgroupoid& h,
                          const WideSubgroupoid& k, const Representation& sigma_k,
                          const StagesOptions& opt) {
  CheckReport report;
  report.name = "stages";
  const double tol = default_tolerance();
  if (h.parent().get() != g.get() || k.parent().get() != g.get())
    bad("verify_stages: subgroupoids not over G");
  for (int p : k.members())
    if (!h.contains(p)) bad("verify_stages: K is not contained in H");
  if (sigma_k.groupoid().get() != k.groupoid().get())
    bad("verify_stages: sigma is not a representation of K");

  // K as a wide subgroupoid of the materialized H; element order matches K's.
  std::vector<int> members_in_h(k.size());
  for (int i = 0; i < k.size(); ++i) members_in_h[i] = h.from_parent(k.to_parent(i));
  const WideSubgroupoid k_in_h = subgroupoid(h.groupoid(), members_in_h);
  for (int i = 0; i < k.size(); ++i)
    if (h.to_parent(k_in_h.to_parent(i)) != k.to_parent(i))
      throw std::logic_error("verify_stages: K element order mismatch");
  std::vector<int> identity(k.size());
  for (int i = 0; i < k.size(); ++i) identity[i] = i;
  const Representation sigma_in_h = transport_rep(sigma_k, k_in_h.groupoid(), identity);

  const CosetSpacePtr cs_gh = cosets(g, h);
  const CosetSpacePtr cs_hk = cosets(h.groupoid(), k_in_h);
  const CosetSpacePtr cs_gk = cosets(g, k);
  const EquivariantSystem mu_g = solve_equivariant(cs_gh, opt.mu_g_orbit_weights);
  const EquivariantSystem mu_h = solve_equivariant(cs_hk, opt.mu_h_orbit_weights);
  const EquivariantSystem gamma = compose_measures(mu_g, mu_h, cs_gk);

  const InducedRep side_a = induce(g, k, sigma_k, gamma, counting_haar(k.groupoid()));
  const InducedRep rho = induce(h.groupoid(), k_in_h, sigma_in_h, mu_h,
                                counting_haar(k_in_h.groupoid()));
  const InducedRep side_b =
      induce(g, h, rho.base(), mu_g, counting_haar(h.groupoid()));

  long dim_total_a = 0, dim_total_b = 0;
  for (int ui = 0; ui < g->num_units(); ++ui) {
    dim_total_a += side_a.base().dim_at(ui);
    dim_total_b += side_b.base().dim_at(ui);
  }
  report.stat("dim_side_a", dim_total_a);
  report.stat("dim_side_b", dim_total_b);
  if (side_a.base().dims() != side_b.base().dims()) {
    report.fail("fiber dimensions disagree between the two constructions");
    return report;
  }

  // Assemble Φ in representative coordinates, one basis function at a time.
  double equiv_r = 0.0, isometry_r = 0.0, unitary_r = 0.0;
  std::vector<Matrix> w(g->num_units());
  for (int ui = 0; ui < g->num_units(); ++ui) {
    const int dim = side_a.base().dim_at(ui);
    Matrix wu(dim, dim);
    for (const auto& b : side_a.layout(ui)) {
      for (int i = 0; i < b.dim; ++i) {
        Vector e = Vector::Zero(b.dim);
        e(i) = 1.0 / std::sqrt(gamma.weight(b.coset));
        const EquivariantFunction xi = coset_delta(side_a, b.coset, e);
        const EquivariantFunction phi = stages_phi(xi, h, rho);
        equiv_r = std::max(equiv_r, equivariance_residual(phi, h, rho.base()));
        const std::vector<Cplx> ip_a = module_inner(xi, xi, gamma);
        const std::vector<Cplx> ip_b = module_inner(phi, phi, mu_g);
        for (int j = 0; j < g->num_units(); ++j)
          isometry_r = std::max(isometry_r, std::abs(ip_a[j] - ip_b[j]));
        wu.col(b.offset + i) = vector_of(phi, g->units()[ui], side_b);
      }
    }
    unitary_r = std::max(
        unitary_r, max_abs(wu.adjoint() * wu - Matrix::Identity(dim, dim)));
    w[ui] = std::move(wu);
  }
  report.residual("phi_equivariance", equiv_r, tol);
  report.residual("phi_isometry", isometry_r, tol);
  report.residual("phi_unitarity", unitary_r, tol);
  bool full_rank = true;
  for (int ui = 0; ui < g->num_units(); ++ui)
    if (numerical_rank(w[ui], 1e-9) != side_b.base().dim_at(ui)) full_rank = false;
  if (!full_rank) report.fail("phi image does not span the staged fiber");
  report.stat("phi_full_rank", full_rank ? 1 : 0);

  double intertwine_r = 0.0;
  for (int x = 0; x < g->size(); ++x) {
    const int ri = g->unit_index(g->range(x)), di = g->unit_index(g->domain(x));
    intertwine_r = std::max(intertwine_r, max_abs(w[ri] * side_a.base().matrix(x) -
                                                  side_b.base().matrix(x) * w[di]));
  }
  report.residual("phi_intertwining", intertwine_r, tol);
  return report;
}

EquivariantFunction tensor_phi(const EquivariantFunction& f1, const EquivariantFunction& f2,
                               GroupoidPtr product) {
  const int n1 = f1.g->size(), n2 = f2.g->size();
  if (!product || product->size() != n1 * n2) bad("tensor_phi: product size mismatch");
  EquivariantFunction out;
  out.g = std::move(product);
  out.values.resize(n1 * n2);
  for (int x1 = 0; x1 < n1; ++x1)
    for (int x2 = 0; x2 < n2; ++x2) {
      const Vector& a = f1.values[x1];
      const Vector& b = f2.values[x2];
      Vector v(a.size() * b.size());
      for (Eigen::Index i = 0; i < a.size(); ++i)
        v.segment(i * b.size(), b.size()) = a(i) * b;
      out.values[x1 * n2 + x2] = std::move(v);
    }
  return out;
}

CheckReport verify_mackey(GroupoidPtr g1, const WideSubgroupoid& h1,
                          const Representation& sigma1, GroupoidPtr g2,
                          const WideSubgroupoid& h2, const Representation& sigma2,
                          const MackeyOptions& opt) {
  CheckReport report;
  report.name = "mackey";
  const double tol = default_tolerance();
  const int n2 = g2->size();

  const CosetSpacePtr cs1 = cosets(g1, h1);
  const CosetSpacePtr cs2 = cosets(g2, h2);
  const EquivariantSystem mu1 = solve_equivariant(cs1, opt.mu1_orbit_weights);
  const EquivariantSystem mu2 = solve_equivariant(cs2, opt.mu2_orbit_weights);
  const HaarSystem haar1 = counting_haar(h1.groupoid());
  const HaarSystem haar2 = counting_haar(h2.groupoid());
  const InducedRep ind1 = induce(g1, h1, sigma1, mu1, haar1);
  const InducedRep ind2 = induce(g2, h2, sigma2, mu2, haar2);

  const GroupoidPtr gp = make_product_groupoid(g1, g2);
  std::vector<int> members;
  for (int p1 : h1.members())
    for (int p2 : h2.members()) members.push_back(p1 * n2 + p2);
  const WideSubgroupoid hp = subgroupoid(gp, members);

  // σ1 × σ2 over the materialized H1 × H2.
  std::vector<int> dims_p(hp.groupoid()->num_units());
  for (int ui = 0; ui < gp->num_units(); ++ui) {
    const int u = gp->units()[ui];
    dims_p[ui] = sigma1.dim_at(g1->unit_index(u / n2)) *
                 sigma2.dim_at(g2->unit_index(u % n2));
  }
  std::vector<Matrix> mats_p(hp.size());
  for (int s = 0; s < hp.size(); ++s) {
    const int p = hp.to_parent(s);
    mats_p[s] = kron(sigma1.matrix(h1.from_parent(p / n2)),
                     sigma2.matrix(h2.from_parent(p % n2)));
  }
  const Representation sigma_p(hp.groupoid(), std::move(dims_p), std::move(mats_p));

  const CosetSpacePtr csp = cosets(gp, hp);

  // Coset layouts factor: the coset of (x1, x2) is C1 x C2 and its minimal
  // representative is (x_C1, x_C2).
  double layout_exact = 0.0;
  std::vector<int> pair_coset(static_cast<std::size_t>(cs1->num_cosets()) *
                                  cs2->num_cosets(),
                              -1);
  for (int x1 = 0; x1 < g1->size(); ++x1)
    for (int x2 = 0; x2 < n2; ++x2) {
      const int e = csp->coset_of(x1 * n2 + x2);
      const int c1 = cs1->coset_of(x1), c2 = cs2->coset_of(x2);
      int& slot = pair_coset[c1 * cs2->num_cosets() + c2];
      if (slot < 0) slot = e;
      if (slot != e) layout_exact = 1.0;
    }
  for (int e = 0; e < csp->num_cosets(); ++e) {
    const int r = csp->representative(e);
    if (cs1->representative(cs1->coset_of(r / n2)) != r / n2 ||
        cs2->representative(cs2->coset_of(r % n2)) != r % n2)
      layout_exact = 1.0;
  }
  report.residual("coset_layout_factorization", layout_exact, 0.0);

  std::vector<double> wp(csp->num_cosets());
  for (int e = 0; e < csp->num_cosets(); ++e) {
    const int r = csp->representative(e);
    wp[e] = mu1.weight(cs1->coset_of(r / n2)) * mu2.weight(cs2->coset_of(r % n2));
  }
  const EquivariantSystem mup(csp, std::move(wp));
  if (!validate_equivariant(mup).pass)
    throw std::logic_error("verify_mackey: product system not equivariant");

  std::vector<double> cp(hp.groupoid()->num_units());
  for (int ui = 0; ui < gp->num_units(); ++ui)
    cp[ui] = haar1.unit_mass(g1->unit_index(gp->units()[ui] / n2)) *
             haar2.unit_mass(g2->unit_index(gp->units()[ui] % n2));
  const HaarSystem haar_p(hp.groupoid(), std::move(cp));

  const InducedRep ind_p = induce(gp, hp, sigma_p, mup, haar_p);
  const Representation tensor = outer_tensor(ind1.base(), ind2.base(), gp);

  long max_fiber = 0;
  for (int ui = 0; ui < gp->num_units(); ++ui)
    max_fiber = std::max<long>(max_fiber, ind_p.base().dim_at(ui));
  report.stat("product_fiber_dim", max_fiber);
  if (ind_p.base().dims() != tensor.dims()) {
    report.fail("fiber dimensions disagree between product and tensor sides");
    return report;
  }

  // Φ in representative coordinates: a permutation matching tensor index
  // (o1(C1)+i)·dimF2 + (o2(C2)+j) with product index oP(C1 x C2) + i·b + j.
  std::vector<Matrix> w(gp->num_units());
  double unitary_r = 0.0;
  for (int ui = 0; ui < gp->num_units(); ++ui) {
    const int u = gp->units()[ui];
    const int u1 = u / n2, u2 = u % n2;
    const int dim = ind_p.base().dim_at(ui);
    const int dim_f2 = ind2.base().dim_at(g2->unit_index(u2));
    Matrix wu = Matrix::Zero(dim, dim);
    for (const auto& b1 : ind1.layout(g1->unit_index(u1)))
      for (const auto& b2 : ind2.layout(g2->unit_index(u2))) {
        const int e = pair_coset[b1.coset * cs2->num_cosets() + b2.coset];
        const auto& bp = ind_p.block_of(e);
        for (int i = 0; i < b1.dim; ++i)
          for (int j = 0; j < b2.dim; ++j)
            wu(bp.offset + i * b2.dim + j,
               (b1.offset + i) * dim_f2 + (b2.offset + j)) = 1.0;
      }
    unitary_r = std::max(unitary_r,
                         max_abs(wu.adjoint() * wu - Matrix::Identity(dim, dim)));
    w[ui] = std::move(wu);
  }
  report.residual("phi_unitarity", unitary_r, tol);

  double intertwine_r = 0.0;
  for (int x = 0; x < gp->size(); ++x) {
    const int ri = gp->unit_index(gp->range(x)), di = gp->unit_index(gp->domain(x));
    intertwine_r = std::max(intertwine_r,
                            max_abs(w[ri] * tensor.matrix(x) - ind_p.base().matrix(x) * w[di]));
  }
  report.residual("phi_intertwining", intertwine_r, tol);

  // Generator factorization E(f, t1⊗t2) = E(f1,t1) ⊗ E(f2,t2) and the
  // inner-product product rule, on random pairs.
  std::mt19937_64 rng(opt.seed);
  double factor_r = 0.0, inner_r = 0.0;
  EquivariantFunction prev_phi, prev_e1, prev_e2;
  for (int trial = 0; trial < opt.generator_pairs; ++trial) {
    std::vector<Cplx> f1(g1->size()), f2(n2), fp(gp->size());
    for (auto& v : f1) v = gaussian(rng);
    for (auto& v : f2) v = gaussian(rng);
    std::vector<Vector> t1(g1->num_units()), t2(g2->num_units()),
        tp(gp->num_units());
    for (int i = 0; i < g1->num_units(); ++i)
      t1[i] = random_vector(rng, sigma1.dim_at(i));
    for (int i = 0; i < g2->num_units(); ++i)
      t2[i] = random_vector(rng, sigma2.dim_at(i));
    for (int x1 = 0; x1 < g1->size(); ++x1)
      for (int x2 = 0; x2 < n2; ++x2) fp[x1 * n2 + x2] = f1[x1] * f2[x2];
    for (int ui = 0; ui < gp->num_units(); ++ui) {
      const int u = gp->units()[ui];
      const Vector& a = t1[g1->unit_index(u / n2)];
      const Vector& b = t2[g2->unit_index(u % n2)];
      Vector v(a.size() * b.size());
      for (Eigen::Index i = 0; i < a.size(); ++i)
        v.segment(i * b.size(), b.size()) = a(i) * b;
      tp[ui] = std::move(v);
    }

    const EquivariantFunction e1 = generator(f1, t1, h1, sigma1, haar1);
    const EquivariantFunction e2 = generator(f2, t2, h2, sigma2, haar2);
    const EquivariantFunction ep = generator(fp, tp, hp, sigma_p, haar_p);
    const EquivariantFunction phi = tensor_phi(e1, e2, gp);
    for (int x = 0; x < gp->size(); ++x)
      factor_r = std::max(factor_r, vec_max_abs(ep.values[x] - phi.values[x]));

    if (trial > 0) {
      const std::vector<Cplx> cross = module_inner(phi, prev_phi, mup);
      const std::vector<Cplx> c1 = module_inner(e1, prev_e1, mu1);
      const std::vector<Cplx> c2 = module_inner(e2, prev_e2, mu2);
      for (int ui = 0; ui < gp->num_units(); ++ui) {
        const int u = gp->units()[ui];
        const Cplx want =
            c1[g1->unit_index(u / n2)] * c2[g2->unit_index(u % n2)];
        inner_r = std::max(inner_r, std::abs(cross[ui] - want));
      }
    }
    prev_phi = phi;
    prev_e1 = e1;
    prev_e2 = e2;
  }
  report.residual("generator_factorization", factor_r, tol);
  report.residual("inner_product_factorization", inner_r, tol);
  return report;
}

CheckReport conjugate_commutes(GroupoidPtr g, const WideSubgroupoid& h,
                               const Representation& sigma, const EquivariantSystem& mu,
                               const HaarSystem& h_haar) {
  CheckReport report;
  report.name = "conjugate_commutes";
  const Representation a = conjugate_rep(induce(g, h, sigma, mu, h_haar).base());
  const Representation b = induce(g, h, conjugate_rep(sigma), mu, h_haar).base();
  report.residual("entrywise_deviation", rep_equal_report(a, b), default_tolerance());
  return report;
}

BundleMap induced_equivalence(const BundleMap& t, const InducedRep& ind_src,
                              const InducedRep& ind_dst) {
  const auto& g = *ind_src.coset_space()->parent();
  if (ind_src.coset_space().get() != ind_dst.coset_space().get())
    bad("induced_equivalence: different coset spaces");
  BundleMap out;
  out.g = ind_src.coset_space()->parent();
  out.block.resize(g.num_units());
  for (int ui = 0; ui < g.num_units(); ++ui) {
    Matrix m = Matrix::Zero(ind_dst.base().dim_at(ui), ind_src.base().dim_at(ui));
    const auto& src_blocks = ind_src.layout(ui);
    const auto& dst_blocks = ind_dst.layout(ui);
    for (std::size_t i = 0; i < src_blocks.size(); ++i) {
      const int du = g.domain(ind_src.coset_space()->representative(src_blocks[i].coset));
      m.block(dst_blocks[i].offset, src_blocks[i].offset, dst_blocks[i].dim,
              src_blocks[i].dim) = t.block[g.unit_index(du)];
    }
    out.block[ui] = std::move(m);
  }
  return out;
}

BundleMap induced_sum_permutation(const InducedRep& ind_sum,
                                  const std::vector<const InducedRep*>& parts) {
  if (parts.empty()) bad("induced_sum_permutation: no parts");
  const auto& g = *ind_sum.coset_space()->parent();
  for (const auto* p : parts)
    if (p->coset_space().get() != ind_sum.coset_space().get())
      bad("induced_sum_permutation: parts over a different coset space");

  BundleMap out;
  out.g = ind_sum.coset_space()->parent();
  out.block.resize(g.num_units());
  for (int ui = 0; ui < g.num_units(); ++ui) {
    const int dim = ind_sum.base().dim_at(ui);
    Matrix m = Matrix::Zero(dim, dim);
    int part_base = 0;
    for (const auto* p : parts) {
      for (const auto& b : ind_sum.layout(ui)) {
        const auto& pb = p->block_of(b.coset);
        // Rows within the summed block belonging to this part.
        int before = 0;
        for (const auto* q : parts) {
          if (q == p) break;
          before += q->block_of(b.coset).dim;
        }
        for (int i = 0; i < pb.dim; ++i)
          m(part_base + pb.offset + i, b.offset + before + i) = 1.0;
      }
      part_base += p->base().dim_at(ui);
    }
    out.block[ui] = std::move(m);
  }
  return out;
}

}  // namespace indukt

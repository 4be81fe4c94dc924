#include "indukt/intertwiner.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include <Eigen/SVD>

#include "indukt/linalg.hpp"

namespace indukt {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

constexpr double kNullspaceTol = 1e-9;
constexpr double kInvertibleTol = 1e-6;
constexpr int kMaxDraws = 8;

struct Stacking {
  std::vector<int> offset;  // per unit index, into the stacked unknown vector
  int total = 0;
};

Stacking stacking_of(const Representation& pi, const Representation& pi2) {
  const auto& g = *pi.groupoid();
  Stacking s;
  s.offset.resize(g.num_units());
  for (int ui = 0; ui < g.num_units(); ++ui) {
    s.offset[ui] = s.total;
    s.total += pi2.dim_at(ui) * pi.dim_at(ui);
  }
  return s;
}

/// Unknowns are vec(T_u), column-major, stacked by unit index.
BundleMap unstack(const Vector& v, const Representation& pi, const Representation& pi2,
                  const Stacking& s) {
  const auto& g = *pi.groupoid();
  BundleMap t;
  t.g = pi.groupoid();
  t.block.resize(g.num_units());
  for (int ui = 0; ui < g.num_units(); ++ui) {
    const int rows = pi2.dim_at(ui), cols = pi.dim_at(ui);
    Matrix m(rows, cols);
    for (int j = 0; j < cols; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = v(s.offset[ui] + j * rows + i);
    t.block[ui] = std::move(m);
  }
  return t;
}

}  // namespace

std::vector<BundleMap> intertwiners(const Representation& pi, const Representation& pi2) {
  const auto& g = *pi.groupoid();
  if (pi2.groupoid().get() != &g) bad("intertwiners: different groupoids");
  const Stacking s = stacking_of(pi, pi2);

  long rows = 0;
  for (int x = 0; x < g.size(); ++x)
    rows += pi2.dim(g.range(x)) * pi.dim(g.domain(x));
  Matrix m = Matrix::Zero(rows, s.total);

  long row0 = 0;
  for (int x = 0; x < g.size(); ++x) {
    const int ri = g.unit_index(g.range(x)), di = g.unit_index(g.domain(x));
    const Matrix& px = pi.matrix(x);    // dim_pi(r) x dim_pi(d)
    const Matrix& qx = pi2.matrix(x);   // dim_pi2(r) x dim_pi2(d)
    const int a = static_cast<int>(qx.rows());  // rows of T_r
    const int b = static_cast<int>(px.cols());  // cols of T_d
    // Entry (i, j) of T_{r(x)} pi(x) - pi2(x) T_{d(x)}, i < a, j < b.
    for (int i = 0; i < a; ++i)
      for (int j = 0; j < b; ++j) {
        const long row = row0 + static_cast<long>(i) * b + j;
        for (int k = 0; k < px.rows(); ++k)
          m(row, s.offset[ri] + k * a + i) += px(k, j);
        for (int k = 0; k < qx.cols(); ++k)
          m(row, s.offset[di] + j * qx.cols() + k) -= qx(i, k);
      }
    row0 += static_cast<long>(a) * b;
  }

  const Matrix basis = nullspace(m, kNullspaceTol);
  std::vector<BundleMap> out;
  out.reserve(basis.cols());
  for (Eigen::Index c = 0; c < basis.cols(); ++c)
    out.push_back(unstack(basis.col(c), pi, pi2, s));
  return out;
}

double intertwining_residual(const Representation& pi, const Representation& pi2,
                             const BundleMap& t) {
  const auto& g = *pi.groupoid();
  double r = 0.0;
  for (int x = 0; x < g.size(); ++x) {
    const int ri = g.unit_index(g.range(x)), di = g.unit_index(g.domain(x));
    r = std::max(r, max_abs(t.block[ri] * pi.matrix(x) - pi2.matrix(x) * t.block[di]));
  }
  return r;
}

EquivalenceResult is_equivalent(const Representation& pi, const Representation& pi2,
                                std::uint64_t seed) {
  EquivalenceResult res;
  if (pi.groupoid().get() != pi2.groupoid().get())
    bad("is_equivalent: different groupoids");
  if (pi.dims() != pi2.dims()) {
    res.intertwiner_dim = 0;
    return res;
  }
  const auto basis = intertwiners(pi, pi2);
  res.intertwiner_dim = static_cast<int>(basis.size());
  if (basis.empty()) return res;

  const auto& g = *pi.groupoid();
  std::mt19937_64 rng(seed);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    std::vector<Matrix> t(g.num_units());
    for (int ui = 0; ui < g.num_units(); ++ui)
      t[ui] = Matrix::Zero(pi2.dim_at(ui), pi.dim_at(ui));
    for (const auto& b : basis) {
      const Cplx c = gaussian(rng);
      for (int ui = 0; ui < g.num_units(); ++ui) t[ui] += c * b.block[ui];
    }

    bool invertible = true;
    for (int ui = 0; ui < g.num_units() && invertible; ++ui) {
      Eigen::JacobiSVD<Matrix> svd(t[ui]);
      const auto& sv = svd.singularValues();
      if (sv.size() == 0 || sv(sv.size() - 1) <= kInvertibleTol * sv(0))
        invertible = false;
    }
    if (!invertible) continue;

    BundleMap u;
    u.g = pi.groupoid();
    u.block.resize(g.num_units());
    for (int ui = 0; ui < g.num_units(); ++ui) u.block[ui] = polar_unitary(t[ui]);

    double r = intertwining_residual(pi, pi2, u);
    for (int ui = 0; ui < g.num_units(); ++ui) {
      const Matrix& m = u.block[ui];
      r = std::max(r, max_abs(m.adjoint() * m - Matrix::Identity(m.cols(), m.cols())));
    }
    if (r <= default_tolerance()) {
      res.equivalent = true;
      res.residual = r;
      res.witness = std::move(u);
      return res;
    }
  }
  return res;  // no unitary intertwiner found; dimension reported as evidence
}

bool is_irreducible_transitive(const Representation& pi) {
  if (!is_transitive(*pi.groupoid()))
    throw NonTransitiveError(
        "is_irreducible_transitive: groupoid is not transitive; irreducibility is "
        "not decided on non-transitive groupoids");
  return intertwiners(pi, pi).size() == 1;
}

BundleMap evaluation_map(const BundleMap& t, const Representation& pi,
                         const InducedRep& ind) {
  const CosetSpace& cs = *ind.coset_space();
  const auto& g = *cs.parent();
  const auto& h = cs.sub();
  if (pi.groupoid().get() != &g) bad("evaluation_map: pi is not over G");
  const double pre = intertwining_residual(pi, ind.base(), t);
  if (pre > default_tolerance())
    bad("evaluation_map: T does not intertwine pi with the induced representation");

  BundleMap out;
  out.g = h.groupoid();
  out.block.resize(g.num_units());
  for (int ui = 0; ui < g.num_units(); ++ui) {
    const int u = g.units()[ui];
    const int c0 = cs.coset_of(u);
    const auto& b = ind.block_of(c0);
    const int rep = cs.representative(c0);
    // u = x_C h0 with h0 = x_C^-1 u ∈ H, so f(u) = σ(h0^-1) f(x_C).
    const int h0 = h.from_parent(g.product(g.inverse(rep), u));
    const Matrix transport = ind.sigma().matrix(h.groupoid()->inverse(h0));
    out.block[ui] = transport *
                    (t.block[ui].middleRows(b.offset, b.dim) /
                     std::sqrt(ind.mu().weight(c0)));
  }
  return out;
}

BundleMap coevaluation_map(const BundleMap& s, const Representation& pi,
                           const InducedRep& ind) {
  const CosetSpace& cs = *ind.coset_space();
  const auto& g = *cs.parent();
  const auto& h = cs.sub();
  if (pi.groupoid().get() != &g) bad("coevaluation_map: pi is not over G");
  const Representation pi_h = restrict_rep(pi, h);
  const double pre = intertwining_residual(pi_h, ind.sigma(), s);
  if (pre > default_tolerance())
    bad("coevaluation_map: S does not intertwine pi|_H with sigma");

  BundleMap out;
  out.g = cs.parent();
  out.block.resize(g.num_units());
  for (int ui = 0; ui < g.num_units(); ++ui) {
    Matrix m(ind.base().dim_at(ui), pi.dim_at(ui));
    for (const auto& b : ind.layout(ui)) {
      const int rep = cs.representative(b.coset);
      // [T_u v](x_C) = S_{d(x_C)} pi(x_C^-1) v, scaled into coordinates.
      m.middleRows(b.offset, b.dim) =
          std::sqrt(ind.mu().weight(b.coset)) *
          (s.block[g.unit_index(g.domain(rep))] * pi.matrix(g.inverse(rep)));
    }
    out.block[ui] = std::move(m);
  }
  return out;
}

CheckReport verify_frobenius(GroupoidPtr g, const WideSubgroupoid& h,
                             const Representation& pi, const Representation& sigma,
                             const EquivariantSystem& mu, const HaarSystem& h_haar) {
  CheckReport report;
  report.name = "frobenius";
  const double tol = default_tolerance();

  if (!is_transitive(*g)) report.fail("precondition: G is not transitive");
  if (!is_transitive(*h.groupoid())) report.fail("precondition: H is not transitive");
  if (!h_haar.normalized()) report.fail("precondition: Haar system of H is not normalized");
  try {
    if (!is_irreducible_transitive(pi)) report.fail("precondition: pi is not irreducible");
    if (!is_irreducible_transitive(sigma))
      report.fail("precondition: sigma is not irreducible");
  } catch (const NonTransitiveError&) {
    report.fail("precondition: irreducibility undecidable (non-transitive)");
  }
  if (!report.pass) return report;

  const InducedRep ind = induce(g, h, sigma, mu, h_haar);
  const auto basis_induced = intertwiners(pi, ind.base());
  const Representation pi_h = restrict_rep(pi, h);
  const auto basis_restricted = intertwiners(pi_h, sigma);

  report.stat("dim_mor_induced", static_cast<long>(basis_induced.size()));
  report.stat("dim_mor_restricted", static_cast<long>(basis_restricted.size()));
  if (basis_induced.size() != basis_restricted.size())
    report.fail("intertwiner dimensions disagree");

  // E and coE are mutually inverse on the computed bases.
  double round_r = 0.0, member_r = 0.0;
  for (const auto& t : basis_induced) {
    const BundleMap s = evaluation_map(t, pi, ind);
    member_r = std::max(member_r, intertwining_residual(pi_h, sigma, s));
    const BundleMap back = coevaluation_map(s, pi, ind);
    for (int ui = 0; ui < g->num_units(); ++ui)
      round_r = std::max(round_r, max_abs(back.block[ui] - t.block[ui]));
  }
  for (const auto& s : basis_restricted) {
    const BundleMap t = coevaluation_map(s, pi, ind);
    member_r = std::max(member_r, intertwining_residual(pi, ind.base(), t));
    const BundleMap back = evaluation_map(t, pi, ind);
    for (int ui = 0; ui < g->num_units(); ++ui)
      round_r = std::max(round_r, max_abs(back.block[ui] - s.block[ui]));
  }
  report.residual("evaluation_intertwining", member_r, tol);
  report.residual("round_trip", round_r, tol);
  return report;
}

FrobeniusMatrixResult frobenius_matrix(GroupoidPtr g, const WideSubgroupoid& h,
                                       const std::vector<Representation>& pis,
                                       const std::vector<Representation>& sigmas,
                                       const EquivariantSystem& mu,
                                       const HaarSystem& h_haar) {
  FrobeniusMatrixResult res;
  res.report.name = "frobenius_matrix";
  res.dims_induced.assign(pis.size(), std::vector<int>(sigmas.size(), -1));
  res.dims_restricted = res.dims_induced;

  double worst = 0.0;
  for (std::size_t i = 0; i < pis.size(); ++i)
    for (std::size_t j = 0; j < sigmas.size(); ++j) {
      CheckReport one = verify_frobenius(g, h, pis[i], sigmas[j], mu, h_haar);
      for (const auto& [k, v] : one.stats) {
        if (k == "dim_mor_induced") res.dims_induced[i][j] = static_cast<int>(v);
        if (k == "dim_mor_restricted") res.dims_restricted[i][j] = static_cast<int>(v);
      }
      worst = std::max(worst, one.max_residual());
      if (!one.pass) {
        std::ostringstream os;
        os << "pair (pi " << i << ", sigma " << j << "): " << one.failures.front();
        res.report.fail(os.str());
      }
    }
  res.report.residual("worst_pair_residual", worst, default_tolerance());
  if (res.dims_induced != res.dims_restricted)
    res.report.fail("dimension matrices disagree");
  return res;
}

}  // namespace indukt

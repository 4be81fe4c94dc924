#include "indukt/representation.hpp"

#include <sstream>
#include <stdexcept>

#include "indukt/linalg.hpp"

namespace indukt {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Representation::Representation(GroupoidPtr g, std::vector<int> dims,
                               std::vector<Matrix> matrices)
    : g_(std::move(g)), dims_(std::move(dims)), mats_(std::move(matrices)) {
  if (!g_) bad("representation: null groupoid");
  if (static_cast<int>(dims_.size()) != g_->num_units())
    bad("representation: one fiber dimension per unit required");
  for (int d : dims_)
    if (d < 1) bad("representation: fibers must be nonzero");
  if (static_cast<int>(mats_.size()) != g_->size())
    bad("representation: one matrix per element required");
  for (int x = 0; x < g_->size(); ++x)
    if (mats_[x].rows() != dim(g_->range(x)) || mats_[x].cols() != dim(g_->domain(x)))
      bad("representation: matrix shape mismatch at element " + std::to_string(x));
}

ValidationReport validate_representation(const Representation& rep) {
  ValidationReport out;
  const auto& g = *rep.groupoid();
  const double tol = default_tolerance();

  auto check = [&](double r, int x, const char* what) {
    out.observe(r);
    if (r > tol) {
      std::ostringstream os;
      os << what << " fails at element " << x << " (residual " << r << ")";
      out.fail(os.str());
    }
  };

  for (int u : g.units()) {
    const Matrix& m = rep.matrix(u);
    check(max_abs(m - Matrix::Identity(m.rows(), m.cols())), u, "identity at unit");
  }
  for (int x = 0; x < g.size(); ++x) {
    const Matrix& m = rep.matrix(x);
    check(max_abs(rep.matrix(g.inverse(x)) - m.adjoint()), x, "pi(x^-1) = pi(x)*");
    check(max_abs(m.adjoint() * m - Matrix::Identity(m.cols(), m.cols())), x,
          "unitarity");
    for (int y : g.r_fiber(g.domain(x))) {
      const double r = max_abs(m * rep.matrix(y) - rep.matrix(g.product(x, y)));
      out.observe(r);
      if (r > tol) {
        std::ostringstream os;
        os << "multiplicativity fails at pair (" << x << ", " << y << ") (residual "
           << r << ")";
        out.fail(os.str());
      }
    }
  }
  return out;
}

Representation trivial_rep(GroupoidPtr g, int k) {
  if (!g) bad("trivial_rep: null groupoid");
  return trivial_rep(g, std::vector<int>(g->num_units(), k));
}

Representation trivial_rep(GroupoidPtr g, const std::vector<int>& dims) {
  if (!g) bad("trivial_rep: null groupoid");
  if (static_cast<int>(dims.size()) != g->num_units())
    bad("trivial_rep: one dimension per unit required");
  for (const auto& orbit : unit_orbits(*g))
    for (int u : orbit)
      if (dims[g->unit_index(u)] != dims[g->unit_index(orbit.front())])
        bad("trivial_rep: dims must be constant on transitivity orbits");
  std::vector<Matrix> mats(g->size());
  for (int x = 0; x < g->size(); ++x) {
    const int d = dims[g->unit_index(g->domain(x))];
    mats[x] = Matrix::Identity(d, d);
  }
  return Representation(std::move(g), dims, std::move(mats));
}

Representation direct_sum(const std::vector<Representation>& reps) {
  if (reps.empty()) bad("direct_sum: empty list (fibers must be nonzero)");
  const GroupoidPtr& g = reps.front().groupoid();
  for (const auto& r : reps)
    if (r.groupoid().get() != g.get()) bad("direct_sum: representations over different groupoids");

  std::vector<int> dims(g->num_units(), 0);
  for (const auto& r : reps)
    for (int i = 0; i < g->num_units(); ++i) dims[i] += r.dim_at(i);

  std::vector<Matrix> mats(g->size());
  for (int x = 0; x < g->size(); ++x) {
    const int ri = g->unit_index(g->range(x)), di = g->unit_index(g->domain(x));
    Matrix m = Matrix::Zero(dims[ri], dims[di]);
    int ro = 0, co = 0;
    for (const auto& r : reps) {
      m.block(ro, co, r.dim_at(ri), r.dim_at(di)) = r.matrix(x);
      ro += r.dim_at(ri);
      co += r.dim_at(di);
    }
    mats[x] = std::move(m);
  }
  return Representation(g, std::move(dims), std::move(mats));
}

Representation conjugate_rep(const Representation& rep) {
  std::vector<Matrix> mats(rep.groupoid()->size());
  for (int x = 0; x < rep.groupoid()->size(); ++x) mats[x] = rep.matrix(x).conjugate();
  return Representation(rep.groupoid(), rep.dims(), std::move(mats));
}

Representation restrict_rep(const Representation& rep, const WideSubgroupoid& h) {
  if (h.parent().get() != rep.groupoid().get())
    bad("restrict: subgroupoid is not wide in the representation's groupoid");
  std::vector<Matrix> mats(h.size());
  for (int s = 0; s < h.size(); ++s) mats[s] = rep.matrix(h.to_parent(s));
  return Representation(h.groupoid(), rep.dims(), std::move(mats));
}

Representation outer_tensor(const Representation& a, const Representation& b,
                            GroupoidPtr product) {
  const auto& g1 = *a.groupoid();
  const auto& g2 = *b.groupoid();
  const int n2 = g2.size();
  if (!product || product->size() != g1.size() * n2)
    bad("outer_tensor: product groupoid size mismatch");
  // The product groupoid must follow the (x1, x2) -> x1*n2 + x2 convention.
  for (int x1 = 0; x1 < g1.size(); ++x1)
    for (int x2 = 0; x2 < n2; ++x2)
      if (product->range(x1 * n2 + x2) != g1.range(x1) * n2 + g2.range(x2) ||
          product->domain(x1 * n2 + x2) != g1.domain(x1) * n2 + g2.domain(x2))
        bad("outer_tensor: product groupoid does not follow the pair-id convention");

  std::vector<int> dims(product->num_units());
  for (int ui = 0; ui < product->num_units(); ++ui) {
    const int u = product->units()[ui];
    dims[ui] = a.dim(u / n2) * b.dim(u % n2);
  }
  std::vector<Matrix> mats(product->size());
  for (int x = 0; x < product->size(); ++x)
    mats[x] = kron(a.matrix(x / n2), b.matrix(x % n2));
  return Representation(std::move(product), std::move(dims), std::move(mats));
}

Representation outer_tensor(const Representation& a, const Representation& b) {
  return outer_tensor(a, b, make_product_groupoid(a.groupoid(), b.groupoid()));
}

double rep_equal_report(const Representation& a, const Representation& b) {
  if (a.groupoid().get() != b.groupoid().get())
    bad("rep_equal_report: different groupoids");
  if (a.dims() != b.dims()) bad("rep_equal_report: fiber dimensions differ");
  double dev = 0.0;
  for (int x = 0; x < a.groupoid()->size(); ++x)
    dev = std::max(dev, max_abs(a.matrix(x) - b.matrix(x)));
  return dev;
}

Representation transport_rep(const Representation& rep, GroupoidPtr target,
                             const std::vector<int>& elem_map) {
  const auto& src = *rep.groupoid();
  if (!target) bad("transport_rep: null target");
  if (static_cast<int>(elem_map.size()) != src.size() || target->size() != src.size())
    bad("transport_rep: element map must be a bijection onto the target");
  std::vector<bool> hit(src.size(), false);
  for (int t : elem_map) {
    if (t < 0 || t >= target->size() || hit[t]) bad("transport_rep: not a bijection");
    hit[t] = true;
  }
  std::vector<int> dims(target->num_units(), 0);
  for (int u : src.units()) {
    const int tu = elem_map[u];
    if (target->unit_index(tu) < 0) bad("transport_rep: unit maps to a non-unit");
    dims[target->unit_index(tu)] = rep.dim(u);
  }
  std::vector<Matrix> mats(target->size());
  for (int x = 0; x < src.size(); ++x) mats[elem_map[x]] = rep.matrix(x);
  return Representation(std::move(target), std::move(dims), std::move(mats));
}

Representation rebase_rep(const Representation& rep, const std::vector<Matrix>& unitary) {
  const auto& g = *rep.groupoid();
  if (static_cast<int>(unitary.size()) != g.num_units())
    bad("rebase_rep: one unitary per unit required");
  std::vector<Matrix> mats(g.size());
  for (int x = 0; x < g.size(); ++x)
    mats[x] = unitary[g.unit_index(g.range(x))] * rep.matrix(x) *
              unitary[g.unit_index(g.domain(x))].adjoint();
  return Representation(rep.groupoid(), rep.dims(), std::move(mats));
}

}  // namespace indukt

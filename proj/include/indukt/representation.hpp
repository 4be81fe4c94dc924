#pragma once

#include <vector>

#include "indukt/groupoid.hpp"
#include "indukt/report.hpp"
#include "indukt/types.hpp"

namespace indukt {

/// A finite-dimensional unitary representation of a groupoid on a Hilbert
/// bundle: a fiber dimension per unit and a matrix per element, with
/// matrix(x) of shape dim(r(x)) x dim(d(x)). Construction checks shapes only;
/// the representation axioms are checked by validate_representation().
class Representation {
 public:
  Representation(GroupoidPtr g, std::vector<int> dims, std::vector<Matrix> matrices);

  const GroupoidPtr& groupoid() const { return g_; }
  /// Fiber dimension by unit index.
  int dim_at(int unit_index) const { return dims_[unit_index]; }
  /// Fiber dimension at a unit element id.
  int dim(int u) const { return dims_[g_->unit_index(u)]; }
  const std::vector<int>& dims() const { return dims_; }
  const Matrix& matrix(int x) const { return mats_[x]; }

 private:
  GroupoidPtr g_;
  std::vector<int> dims_;
  std::vector<Matrix> mats_;
};

/// A bundle map between representations over the same groupoid: one block per
/// unit (indexed like units()). Whether it intertwines is a property checked
/// by operations, not an invariant of the type.
struct BundleMap {
  GroupoidPtr g;
  std::vector<Matrix> block;
};

/// Exhaustive check of the representation axioms: identity at units,
/// multiplicativity over composable pairs, adjoint = inverse, unitarity.
/// Residuals are max-norm; tolerance is default_tolerance().
ValidationReport validate_representation(const Representation& rep);

/// Identity matrices with constant fiber dimension k.
Representation trivial_rep(GroupoidPtr g, int k = 1);
/// Identity matrices with per-unit dimensions; dims must be constant on
/// transitivity orbits (unitarity forces this).
Representation trivial_rep(GroupoidPtr g, const std::vector<int>& dims);

/// Fiberwise direct sum; block-diagonal matrices. The list must be nonempty
/// (fibers are nonzero) and over one groupoid.
Representation direct_sum(const std::vector<Representation>& reps);

/// Entrywise complex conjugate (the matrix of the conjugate representation in
/// the dual basis).
Representation conjugate_rep(const Representation& rep);

/// Restriction to a wide subgroupoid, expressed over h.groupoid(). Fibers are
/// unchanged (unit indices align).
Representation restrict_rep(const Representation& rep, const WideSubgroupoid& h);

/// Outer tensor product over the given product groupoid, which must follow
/// the make_product_groupoid id convention for (a, b)'s groupoids. Tensor
/// basis is row-major: index = i * dim_b + j.
Representation outer_tensor(const Representation& a, const Representation& b,
                            GroupoidPtr product);
/// Convenience overload that builds the product groupoid itself.
Representation outer_tensor(const Representation& a, const Representation& b);

/// Max entrywise deviation over all elements. Throws on dim mismatch.
double rep_equal_report(const Representation& a, const Representation& b);

/// Re-expresses a representation over another groupoid via an element
/// bijection (elem_map[x] = corresponding element of target).
Representation transport_rep(const Representation& rep, GroupoidPtr target,
                             const std::vector<int>& elem_map);

/// Conjugates by a per-unit unitary family: x ↦ U_{r(x)} π(x) U_{d(x)}^*.
Representation rebase_rep(const Representation& rep, const std::vector<Matrix>& unitary);

}  // namespace indukt

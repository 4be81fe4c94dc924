#pragma once

#include <array>
#include <memory>
#include <string>
#include <vector>

#include "indukt/report.hpp"

namespace indukt {

class FiniteGroupoid;
using GroupoidPtr = std::shared_ptr<const FiniteGroupoid>;

/// Raw construction tables for a groupoid on elements 0..n-1. The product is
/// given as the list of composable triples [x, y, xy]; it must be defined on
/// exactly the pairs with d(x) = r(y).
struct GroupoidData {
  int n = 0;
  std::vector<int> units;
  std::vector<int> range;
  std::vector<int> domain;
  std::vector<int> inverse;
  std::vector<std::array<int, 3>> product;
};

/// A finite groupoid: elements are dense integer ids, all structure maps are
/// lookup tables. Immutable after construction; shareable across threads.
///
/// create() enforces structural well-formedness only (indices in range,
/// range/domain landing in the unit set, product defined on exactly the
/// composable pairs). The groupoid axioms themselves are checked by
/// validate_groupoid(), which is report-style.
class FiniteGroupoid {
 public:
  static GroupoidPtr create(GroupoidData data);

  int size() const { return n_; }
  int num_units() const { return static_cast<int>(units_.size()); }
  const std::vector<int>& units() const { return units_; }
  bool is_unit(int x) const { return unit_index_[x] >= 0; }
  /// Index of a unit in units(), or -1 for non-units.
  int unit_index(int u) const { return unit_index_[u]; }

  int range(int x) const { return range_[x]; }
  int domain(int x) const { return domain_[x]; }
  int inverse(int x) const { return inverse_[x]; }
  bool composable(int x, int y) const { return domain_[x] == range_[y]; }
  /// x.y, or -1 when (x, y) is not composable.
  int product(int x, int y) const { return product_[x * n_ + y]; }

  /// G^u: elements with range u, ascending ids. u must be a unit.
  const std::vector<int>& r_fiber(int u) const { return r_fiber_[unit_index_[u]]; }
  /// G_u: elements with domain u, ascending ids.
  const std::vector<int>& d_fiber(int u) const { return d_fiber_[unit_index_[u]]; }
  /// G^u_v = G^u ∩ G_v, ascending ids.
  std::vector<int> hom_set(int u, int v) const;

 private:
  FiniteGroupoid() = default;

  int n_ = 0;
  std::vector<int> units_;
  std::vector<int> unit_index_;
  std::vector<int> range_, domain_, inverse_;
  std::vector<int> product_;  // n*n, -1 = undefined
  std::vector<std::vector<int>> r_fiber_, d_fiber_;
};

/// Exhaustive axiom check: involution, associativity, cancellation,
/// r(x) = x x^-1 / d(x) = x^-1 x, unit laws, r/d behaviour under products,
/// and bijectivity of left translation. Returns witnesses on failure.
ValidationReport validate_groupoid(const FiniteGroupoid& g);

/// Pair groupoid on n units: elements (i, j) with id i*n + j,
/// (i,j)(j,k) = (i,k). Transitive with trivial isotropy.
GroupoidPtr make_pair_groupoid(int n);

/// One-unit groupoid from a finite group multiplication table
/// (table[a][b] = a*b). Rejects tables that are not groups.
GroupoidPtr make_group_groupoid(const std::vector<std::vector<int>>& table);

/// Transformation groupoid Γ⋉X from a group table and an action
/// (action[γ][x] = γ·x). Elements (γ, x) with id γ*|X| + x, d(γ,x) = x,
/// r(γ,x) = γ·x. Rejects maps that are not genuine actions.
GroupoidPtr make_action_groupoid(const std::vector<std::vector<int>>& table,
                                 const std::vector<std::vector<int>>& action);

/// Product groupoid G1 × G2: elements (x1, x2) with id x1*|G2| + x2,
/// componentwise structure, unit space G1^0 × G2^0.
GroupoidPtr make_product_groupoid(const GroupoidPtr& g1, const GroupoidPtr& g2);

/// True iff every ordered pair of units is joined by an element
/// ((r, d): G → G^0 × G^0 is surjective).
bool is_transitive(const FiniteGroupoid& g);

/// Partition of the unit space into transitivity classes (u ~ v when some
/// element has r = u, d = v). Classes ordered by smallest unit id.
std::vector<std::vector<int>> unit_orbits(const FiniteGroupoid& g);

/// The isotropy group G^u_u with its induced multiplication table.
struct Isotropy {
  std::vector<int> elements;  // parent ids, ascending; index = group id
  GroupoidPtr group;          // one-unit groupoid on those elements
};
Isotropy isotropy(const FiniteGroupoid& g, int u);

/// A wide subgroupoid H ≤ G: contains every unit, closed under product and
/// inverse. Carries a materialized FiniteGroupoid on dense sub ids (the
/// ascending rank in members()) so that H supports the full toolkit in its
/// own right. Unit indices of groupoid() coincide with the parent's.
class WideSubgroupoid {
 public:
  const GroupoidPtr& parent() const { return parent_; }
  const GroupoidPtr& groupoid() const { return sub_; }
  const std::vector<int>& members() const { return members_; }
  int size() const { return static_cast<int>(members_.size()); }
  int to_parent(int sub_id) const { return members_[sub_id]; }
  /// Sub id of a parent element, or -1 if it is not a member.
  int from_parent(int parent_id) const { return from_parent_[parent_id]; }
  bool contains(int parent_id) const { return from_parent_[parent_id] >= 0; }

  friend WideSubgroupoid subgroupoid(GroupoidPtr g, std::vector<int> members);

 private:
  GroupoidPtr parent_;
  GroupoidPtr sub_;
  std::vector<int> members_;
  std::vector<int> from_parent_;
};

/// Validates wideness and closure (throws std::invalid_argument with a
/// witness otherwise) and materializes the subgroupoid.
WideSubgroupoid subgroupoid(GroupoidPtr g, std::vector<int> members);

class CosetSpace;
using CosetSpacePtr = std::shared_ptr<const CosetSpace>;

/// The left G-space G/H: left cosets xH = {xξ : ξ ∈ H^{d(x)}}, the moment
/// map C ↦ r(x_C), and the translation action g·(xH) = (gx)H. Cosets are
/// indexed by discovery order over ascending element ids, so coset k has the
/// k-th smallest leading element; the default representative is that minimal
/// element.
class CosetSpace {
 public:
  const GroupoidPtr& parent() const { return parent_; }
  const WideSubgroupoid& sub() const { return sub_; }
  int num_cosets() const { return static_cast<int>(reps_.size()); }
  int coset_of(int x) const { return coset_of_[x]; }
  const std::vector<int>& coset_members(int c) const { return members_[c]; }
  int representative(int c) const { return reps_[c]; }
  /// Unit element id r(x_C).
  int moment(int c) const { return moment_[c]; }
  /// g·C, or -1 when d(g) != moment(C).
  int act(int g, int c) const { return action_[g * num_cosets() + c]; }
  /// (G/H)^u: cosets with moment u, ascending coset ids. u must be a unit.
  const std::vector<int>& cosets_at(int u) const { return at_unit_[unit_idx_of(u)]; }

  /// Same partition and action, custom representative choice. Each entry of
  /// reps must lie in its coset.
  CosetSpacePtr with_representatives(std::vector<int> reps) const;

  friend CosetSpacePtr cosets(GroupoidPtr g, WideSubgroupoid h);

 private:
  int unit_idx_of(int u) const { return parent_->unit_index(u); }

  GroupoidPtr parent_;
  WideSubgroupoid sub_;
  std::vector<int> coset_of_;
  std::vector<std::vector<int>> members_;
  std::vector<int> reps_;
  std::vector<int> moment_;
  std::vector<int> action_;  // |G| x num_cosets, -1 = undefined
  std::vector<std::vector<int>> at_unit_;
};

CosetSpacePtr cosets(GroupoidPtr g, WideSubgroupoid h);

/// G-orbits of cosets under C ~ g·C, ordered by smallest coset id.
std::vector<std::vector<int>> orbits(const CosetSpace& cs);

}  // namespace indukt

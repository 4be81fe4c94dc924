#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "indukt/groupoid.hpp"
#include "indukt/report.hpp"
#include "indukt/types.hpp"

namespace indukt {

/// Requested a normalized Haar system but the per-fiber mass equations admit
/// no positive solution.
struct NormalizationInfeasible : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A left Haar system on a finite groupoid. Left invariance
/// weight(xy) = weight(y) forces weight(x) = c(d(x)) for a positive function
/// c on units, so only c is stored and invalid states are unrepresentable.
class HaarSystem {
 public:
  HaarSystem(GroupoidPtr g, std::vector<double> unit_mass);

  const GroupoidPtr& groupoid() const { return g_; }
  /// c at a unit index.
  double unit_mass(int unit_index) const { return c_[unit_index]; }
  const std::vector<double>& unit_masses() const { return c_; }
  /// The mass of {x} under λ^{r(x)}, i.e. c(d(x)).
  double weight(int x) const { return c_[g_->unit_index(g_->domain(x))]; }
  /// Total mass of the fiber G^u.
  double fiber_mass(int u) const;
  /// True when every fiber has total mass 1 (within measure tolerance).
  bool normalized() const { return normalized_; }
  /// Weight of every element, indexed by element id.
  std::vector<double> weights() const;

 private:
  GroupoidPtr g_;
  std::vector<double> c_;
  bool normalized_;
};

/// The counting Haar system (c ≡ 1), or its normalized variant: solves
/// Σ_v |G^u_v| c(v) = 1 for all u (minimum-norm least squares) and demands a
/// positive solution with residual below measure tolerance.
HaarSystem counting_haar(GroupoidPtr g, bool normalize = false);

/// Exhaustive check of positivity and left invariance weight(xy) = weight(y)
/// for an arbitrary per-element weighting.
ValidationReport validate_haar(const FiniteGroupoid& g, const std::vector<double>& weight);
/// Same, on a HaarSystem; additionally rechecks the normalized flag.
ValidationReport validate_haar(const HaarSystem& h);

/// A full equivariant system on G/H: a positive weight per coset with
/// weight(g·C) = weight(C), i.e. constant on G-orbits of cosets.
class EquivariantSystem {
 public:
  EquivariantSystem(CosetSpacePtr cs, std::vector<double> coset_weights);

  const CosetSpacePtr& coset_space() const { return cs_; }
  double weight(int coset) const { return w_[coset]; }
  const std::vector<double>& weights() const { return w_; }

 private:
  CosetSpacePtr cs_;
  std::vector<double> w_;
};

/// Builds the orbit-constant system: weight 1 per orbit unless prescribed.
/// Keys of orbit_weights are orbit indices as produced by orbits(cs).
EquivariantSystem solve_equivariant(CosetSpacePtr cs,
                                    const std::map<int, double>& orbit_weights = {});

/// Positivity plus exhaustive equivariance weight(g·C) = weight(C).
ValidationReport validate_equivariant(const EquivariantSystem& mu);

/// The averaging map P: (Pf)(xH) = Σ_{ξ ∈ H^{d(x)}} f(xξ) λ_H(ξ), evaluated
/// at each coset through its representative. Independent of the
/// representative choice by left invariance of λ_H.
std::vector<Cplx> p_map(const std::vector<Cplx>& f, const CosetSpace& cs,
                        const HaarSystem& h_haar);

/// A nonnegative f on G with Pf = 1 on J: f = 1_J(xH) / (P1)(xH). J holds
/// coset indices and must be nonempty.
std::vector<double> section_of_unity(const std::vector<int>& J, const CosetSpace& cs,
                                     const HaarSystem& h_haar);

/// The Haar system on G induced by μ and λ_H: ∫ g dλ^u = ∫ Pg dμ^u, which on
/// finite models is weight(x) = μ(xH) · λ_H-weight of x_C^{-1} x.
HaarSystem induced_haar(const EquivariantSystem& mu, const HaarSystem& h_haar);

}  // namespace indukt

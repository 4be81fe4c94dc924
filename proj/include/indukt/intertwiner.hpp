#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "indukt/induction.hpp"
#include "indukt/report.hpp"
#include "indukt/representation.hpp"

namespace indukt {

/// Irreducibility is only decided on transitive groupoids.
struct NonTransitiveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed seed for the unitary-witness search so reports are reproducible.
inline constexpr std::uint64_t kWitnessSeed = 0x9e3779b97f4a7c15ULL;

/// Orthonormal basis (stacked-coordinates Euclidean sense) of
/// Mor(pi, pi2) = {T : T_{r(x)} pi(x) = pi2(x) T_{d(x)} for all x}, computed
/// as an SVD nullspace with singular values below 1e-9 of the largest
/// counting as zero.
std::vector<BundleMap> intertwiners(const Representation& pi, const Representation& pi2);

/// Max over x of the defining relation's residual for a candidate bundle map.
double intertwining_residual(const Representation& pi, const Representation& pi2,
                             const BundleMap& t);

struct EquivalenceResult {
  bool equivalent = false;
  int intertwiner_dim = 0;
  double residual = 0.0;            // witness checks, when equivalent
  std::optional<BundleMap> witness; // unitary intertwiner
};

/// Decides unitary equivalence: draws a random combination of the intertwiner
/// basis, requires every unit block to be invertible (smallest singular value
/// above 1e-6 of the largest), and returns its polar unitary, which still
/// intertwines because T*T lies in the commutant. Up to 8 draws before
/// reporting failure with the intertwiner dimension as evidence; when a
/// unitary intertwiner exists on finite-dimensional fibers the invertible
/// combinations form a dense open set, so the draws fail only in the
/// genuinely inequivalent case (enforced statistically, not proved here).
EquivalenceResult is_equivalent(const Representation& pi, const Representation& pi2,
                                std::uint64_t seed = kWitnessSeed);

/// True iff dim Mor(pi, pi) = 1. On a transitive finite groupoid the
/// self-intertwiner algebra is a finite-dimensional *-algebra whose
/// nontrivial projections correspond exactly to proper invariant subbundles
/// with nonzero fibers, so this is equivalent to irreducibility. Refuses
/// non-transitive groupoids (NonTransitiveError).
bool is_irreducible_transitive(const Representation& pi);

/// The evaluation map of Frobenius reciprocity: for T ∈ Mor(pi, ind σ),
/// (ET)_u v = [T_u v](u), computed by unscaling the uH block of T_u and
/// transporting by σ along the representative relation. Returns a bundle map
/// from restrict(pi, H) to σ over H's groupoid. T must intertwine.
BundleMap evaluation_map(const BundleMap& t, const Representation& pi,
                         const InducedRep& ind);

/// Its inverse: for S ∈ Mor(pi|_H, σ), [T_u v](x) = S_{d(x)} pi(x^-1) v. S
/// must intertwine pi|_H with σ.
BundleMap coevaluation_map(const BundleMap& s, const Representation& pi,
                           const InducedRep& ind);

/// Frobenius reciprocity on compact (here: finite) transitive groupoids:
/// checks preconditions (G and H transitive, λ_H normalized, π and σ
/// irreducible), then verifies dim Mor(π, ind σ) = dim Mor(π|_H, σ) and that
/// evaluation/coevaluation are mutually inverse on the computed bases.
CheckReport verify_frobenius(GroupoidPtr g, const WideSubgroupoid& h,
                             const Representation& pi, const Representation& sigma,
                             const EquivariantSystem& mu, const HaarSystem& h_haar);

struct FrobeniusMatrixResult {
  std::vector<std::vector<int>> dims_induced;    // dim Mor(pi_i, ind sigma_j)
  std::vector<std::vector<int>> dims_restricted; // dim Mor(pi_i|_H, sigma_j)
  CheckReport report;
};

/// Runs verify_frobenius over every (pi, sigma) pair and collects both
/// dimension matrices.
FrobeniusMatrixResult frobenius_matrix(GroupoidPtr g, const WideSubgroupoid& h,
                                       const std::vector<Representation>& pis,
                                       const std::vector<Representation>& sigmas,
                                       const EquivariantSystem& mu,
                                       const HaarSystem& h_haar);

}  // namespace indukt

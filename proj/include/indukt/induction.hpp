#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "indukt/groupoid.hpp"
#include "indukt/measures.hpp"
#include "indukt/report.hpp"
#include "indukt/representation.hpp"
#include "indukt/types.hpp"

namespace indukt {

/// Position of a coset's block inside the fiber of an induced representation.
struct CosetBlock {
  int coset = -1;
  int offset = 0;
  int dim = 0;
};

/// The induced representation (ind_H^G σ, μ) in representative coordinates.
///
/// The fiber at a unit u is the ordered direct sum over C ∈ (G/H)^u of the
/// σ-fibers at d(x_C); an equivariant function f contributes the coordinates
/// √μ(C) · f(x_C) per block. In these coordinates the left translation
/// (L(x)f)(y) = f(x^-1 y) has exactly one nonzero block per block row:
/// (C', C) with C = x^-1·C', equal to σ(h)^* for h = x_C^-1 x^-1 x_{C'} ∈ H
/// (the √μ factors cancel by equivariance), so the stored matrices are
/// ordinary unitaries.
class InducedRep {
 public:
  const Representation& base() const { return base_; }
  const Representation& sigma() const { return sigma_; }
  const CosetSpacePtr& coset_space() const { return cs_; }
  const WideSubgroupoid& sub() const { return cs_->sub(); }
  const EquivariantSystem& mu() const { return mu_; }
  const HaarSystem& h_haar() const { return h_haar_; }
  /// Block layout of the fiber at a unit index, in ascending coset order.
  const std::vector<CosetBlock>& layout(int unit_index) const { return layout_[unit_index]; }
  const CosetBlock& block_of(int coset) const { return *block_of_[coset]; }

  friend InducedRep induce(GroupoidPtr g, const WideSubgroupoid& h,
                           const Representation& sigma, const EquivariantSystem& mu,
                           const HaarSystem& h_haar);

 private:
  InducedRep(Representation base, Representation sigma, CosetSpacePtr cs,
             EquivariantSystem mu, HaarSystem h_haar,
             std::vector<std::vector<CosetBlock>> layout);

  Representation base_;
  Representation sigma_;
  CosetSpacePtr cs_;
  EquivariantSystem mu_;
  HaarSystem h_haar_;
  std::vector<std::vector<CosetBlock>> layout_;
  std::vector<const CosetBlock*> block_of_;
};

/// Constructs (ind_H^G σ, μ). sigma must be a representation of h.groupoid(),
/// mu a system on cosets(g, h), h_haar a Haar system of h; mismatched
/// references are rejected. Membership of every block element h in H is
/// asserted, not assumed.
InducedRep induce(GroupoidPtr g, const WideSubgroupoid& h, const Representation& sigma,
                  const EquivariantSystem& mu, const HaarSystem& h_haar);

/// A vector-valued function on G with values(x) in the σ-fiber at d(x);
/// members of F_0^σ(G) additionally satisfy values(xξ) = σ(ξ^-1) values(x).
struct EquivariantFunction {
  GroupoidPtr g;
  std::vector<Vector> values;
};

/// Max deviation from the equivariance law values(xξ) = σ(ξ^-1) values(x).
double equivariance_residual(const EquivariantFunction& f, const WideSubgroupoid& h,
                             const Representation& sigma);

/// The equivariant function supported on one coset with the given value at
/// the coset's representative: ξ(x_C k) = σ(k^-1) v.
EquivariantFunction coset_delta(const InducedRep& ind, int coset, const Vector& v);

/// The smoothing map f_α(x) = Σ_{η ∈ H^{d(x)}} σ(η) α(xη) λ_H(η); lands in
/// F_0^σ(G) for arbitrary α.
EquivariantFunction smooth(const std::vector<Vector>& alpha, const WideSubgroupoid& h,
                           const Representation& sigma, const HaarSystem& h_haar);

/// The generator E(f, t)(x) = Σ_{h ∈ H^{d(x)}} f(xh) σ(h) t(d(h)) λ_H(h),
/// with t one vector per unit (indexed by unit index).
EquivariantFunction generator(const std::vector<Cplx>& f, const std::vector<Vector>& t,
                              const WideSubgroupoid& h, const Representation& sigma,
                              const HaarSystem& h_haar);

/// Coordinates of f in the fiber at u: the blocks √μ(C) f(x_C) in layout
/// order.
Vector vector_of(const EquivariantFunction& f, int u, const InducedRep& ind);

/// The module inner product ⟨f, g⟩(u) = Σ_{C ∈ (G/H)^u} μ(C) ⟨f(x_C), g(x_C)⟩,
/// one value per unit index.
std::vector<Cplx> module_inner(const EquivariantFunction& f, const EquivariantFunction& g,
                               const EquivariantSystem& mu);

/// The composed system γ on G/K from μ_G on G/H and μ_H on H/K:
/// ∫ f dγ^u = ∫∫ f(x h K) dμ_H^{d(x)} dμ_G^u. Requires K ⊆ H ⊆ G; the result
/// is recomputed with alternative representatives to assert well-definedness.
EquivariantSystem compose_measures(const EquivariantSystem& mu_g,
                                   const EquivariantSystem& mu_h, CosetSpacePtr cs_gk);

/// The stages map (Φξ(x))(h) = ξ(xh) in representative coordinates: for
/// ξ ∈ F_0^σ(G) over K, Φξ(x) is the vector in the ind_K^H(σ)-fiber at d(x)
/// with blocks √μ_H(D) ξ(x x_D).
EquivariantFunction stages_phi(const EquivariantFunction& xi, const WideSubgroupoid& h,
                               const InducedRep& rho);

struct StagesOptions {
  std::map<int, double> mu_g_orbit_weights;
  std::map<int, double> mu_h_orbit_weights;
};

/// Verifies induction in stages for K ⊆ H ⊆ G: builds (ind_K^G σ, γ) and
/// (ind_H^G(ind_K^H σ, μ_H), μ_G), assembles the unitary induced by Φ column
/// by column through stages_phi, and checks fiberwise unitarity, full rank,
/// the Φ isometry, and the intertwining relation over every element.
CheckReport verify_stages(GroupoidPtr g, const WideSubgroupoid& h,
                          const WideSubgroupoid& k, const Representation& sigma_k,
                          const StagesOptions& opt = {});

/// Φ(f1 ⊗ f2)(x1, x2) = f1(x1) ⊗ f2(x2) over the product groupoid (which must
/// follow the pair-id convention).
EquivariantFunction tensor_phi(const EquivariantFunction& f1, const EquivariantFunction& f2,
                               GroupoidPtr product);

struct MackeyOptions {
  std::map<int, double> mu1_orbit_weights;
  std::map<int, double> mu2_orbit_weights;
  int generator_pairs = 20;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

/// Verifies the Mackey tensor product theorem: builds
/// (ind σ1, μ1) × (ind σ2, μ2) and (ind_{H1×H2}(σ1 × σ2), μ1 × μ2), checks
/// that coset layouts factor exactly, that Φ is a unitary intertwiner, and
/// that E(f, t1 ⊗ t2) = E(f1, t1) ⊗ E(f2, t2) on random generator pairs.
CheckReport verify_mackey(GroupoidPtr g1, const WideSubgroupoid& h1,
                          const Representation& sigma1, GroupoidPtr g2,
                          const WideSubgroupoid& h2, const Representation& sigma2,
                          const MackeyOptions& opt = {});

/// Verifies that conjugation commutes with induction: the matrices of
/// conj(ind σ) and ind(conj σ) agree entrywise in representative coordinates.
CheckReport conjugate_commutes(GroupoidPtr g, const WideSubgroupoid& h,
                               const Representation& sigma, const EquivariantSystem& mu,
                               const HaarSystem& h_haar);

/// Transports an equivalence T: σ → σ' to the induced representations: block
/// diagonal with block T_{d(x_C)} per coset. If every T_u is unitary the
/// result is a unitary intertwiner from ind σ to ind σ'.
BundleMap induced_equivalence(const BundleMap& t, const InducedRep& ind_src,
                              const InducedRep& ind_dst);

/// The explicit block permutation W identifying ind(⊕ σ_i) with ⊕ ind(σ_i).
/// All inputs must share one coset space and measure system; parts must be
/// listed in the direct sum's order.
BundleMap induced_sum_permutation(const InducedRep& ind_sum,
                                  const std::vector<const InducedRep*>& parts);

}  // namespace indukt

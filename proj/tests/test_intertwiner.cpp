#include <doctest.h>

#include <cmath>
#include <random>

#include "indukt/catalog.hpp"
#include "indukt/intertwiner.hpp"
#include "indukt/linalg.hpp"

using namespace indukt;

namespace {

/// Character-theoretic multiplicity oracle for the one-unit S3 and A3
/// fixtures: <chi, psi> = (1/|K|) sum_k chi(k) conj(psi(k)).
int multiplicity_oracle(const std::vector<Cplx>& chi, const std::vector<Cplx>& psi) {
  Cplx acc(0, 0);
  for (std::size_t k = 0; k < chi.size(); ++k) acc += chi[k] * std::conj(psi[k]);
  acc /= static_cast<double>(chi.size());
  return static_cast<int>(std::lround(acc.real()));
}

std::vector<Cplx> character_of(const Representation& rep) {
  std::vector<Cplx> chi(rep.groupoid()->size());
  for (int x = 0; x < rep.groupoid()->size(); ++x) chi[x] = rep.matrix(x).trace();
  return chi;
}

}  // namespace

TEST_CASE("intertwiner spaces of S3 representations") {
  const auto self = intertwiners(fixtures::s3_std2(), fixtures::s3_std2());
  CHECK(self.size() == 1);  // Schur
  const auto cross = intertwiners(fixtures::s3_trivial(), fixtures::s3_sign());
  CHECK(cross.empty());

  // Every basis element satisfies the defining relation tightly.
  for (const auto& t : self)
    CHECK(intertwining_residual(fixtures::s3_std2(), fixtures::s3_std2(), t) < 1e-12);

  // dim Mor(pi, pi) >= 1 always (the identity bundle map).
  const auto sum = direct_sum({fixtures::s3_trivial(), fixtures::s3_sign()});
  CHECK(intertwiners(sum, sum).size() == 2);
}

TEST_CASE("transitivity ties unit blocks together") {
  const Representation triv = fixtures::p2_trivial();
  const auto basis = intertwiners(triv, triv);
  REQUIRE(basis.size() == 1);
  // The two unit blocks of the basis element must be equal scalars.
  CHECK(std::abs(basis[0].block[0](0, 0) - basis[0].block[1](0, 0)) < 1e-12);
}

TEST_CASE("restriction multiplicities of the 2-dim S3 irreducible") {
  const auto& a3 = fixtures::a3_in_s3();
  const Representation res = restrict_rep(fixtures::s3_std2(), a3);
  CHECK(intertwiners(res, fixtures::a3_one()).empty());
  CHECK(intertwiners(res, fixtures::a3_omega()).size() == 1);
  CHECK(intertwiners(res, fixtures::a3_omega_bar()).size() == 1);

  // Character oracle agrees.
  const auto chi = character_of(res);
  CHECK(multiplicity_oracle(chi, character_of(fixtures::a3_one())) == 0);
  CHECK(multiplicity_oracle(chi, character_of(fixtures::a3_omega())) == 1);
}

TEST_CASE("is_equivalent") {
  SUBCASE("a representation is equivalent to itself with a unitary witness") {
    const EquivalenceResult eq = is_equivalent(fixtures::s3_std2(), fixtures::s3_std2());
    REQUIRE(eq.equivalent);
    CHECK(eq.residual < 1e-9);
    const Matrix& u = eq.witness->block[0];
    CHECK(max_abs(u.adjoint() * u - Matrix::Identity(2, 2)) < 1e-9);
  }
  SUBCASE("inequivalent characters are refused with dimension evidence") {
    const EquivalenceResult eq = is_equivalent(fixtures::s3_trivial(), fixtures::s3_sign());
    CHECK_FALSE(eq.equivalent);
    CHECK(eq.intertwiner_dim == 0);
  }
  SUBCASE("equal dims and nonzero Mor without any unitary intertwiner") {
    // Mor(triv ⊕ sign, triv ⊕ triv) is 2-dimensional but every element kills
    // the sign summand, so no combination is invertible.
    const Representation a = direct_sum({fixtures::s3_trivial(), fixtures::s3_sign()});
    const Representation b = direct_sum({fixtures::s3_trivial(), fixtures::s3_trivial()});
    const EquivalenceResult eq = is_equivalent(a, b);
    CHECK_FALSE(eq.equivalent);
    CHECK(eq.intertwiner_dim == 2);
  }
  SUBCASE("dimension invariance under random unitary re-basing") {
    std::mt19937_64 rng(5);
    const Representation& r = fixtures::p2xs3_std2();
    std::vector<Matrix> u(r.groupoid()->num_units());
    for (auto& m : u) m = random_unitary(rng, 2);
    const Representation moved = rebase_rep(r, u);
    CHECK(intertwiners(r, moved).size() == intertwiners(r, r).size());
    const EquivalenceResult eq = is_equivalent(r, moved);
    CHECK(eq.equivalent);
  }
}

TEST_CASE("irreducibility on transitive groupoids") {
  CHECK(is_irreducible_transitive(fixtures::s3_std2()));
  CHECK_FALSE(is_irreducible_transitive(
      direct_sum({fixtures::s3_trivial(), fixtures::s3_sign()})));
  CHECK(is_irreducible_transitive(fixtures::p2_trivial()));
  CHECK(is_irreducible_transitive(fixtures::p2xs3_std2()));
  CHECK_THROWS_AS(is_irreducible_transitive(trivial_rep(fixtures::c2_bundle(), 1)),
                  NonTransitiveError);
}

namespace {

struct FrobeniusFixture {
  GroupoidPtr g = fixtures::s3();
  const WideSubgroupoid& h = fixtures::a3_in_s3();
  CosetSpacePtr cs = cosets(g, h);
  EquivariantSystem mu = solve_equivariant(cs);
  HaarSystem haar = counting_haar(h.groupoid(), true);
  InducedRep ind = induce(g, h, fixtures::a3_omega(), mu, haar);
};

}  // namespace

TEST_CASE("evaluation and coevaluation maps") {
  FrobeniusFixture fx;
  const Representation& pi = fixtures::s3_std2();
  const auto basis = intertwiners(pi, fx.ind.base());
  REQUIRE(basis.size() == 1);

  SUBCASE("zero maps to zero both ways") {
    BundleMap z;
    z.g = fx.g;
    z.block = {Matrix::Zero(2, 2)};
    const BundleMap ez = evaluation_map(z, pi, fx.ind);
    CHECK(max_abs(ez.block[0]) == 0.0);
    BundleMap zs;
    zs.g = fx.h.groupoid();
    zs.block = {Matrix::Zero(1, 2)};
    const BundleMap tz = coevaluation_map(zs, pi, fx.ind);
    CHECK(max_abs(tz.block[0]) == 0.0);
  }
  SUBCASE("ET is a nonzero H-intertwiner for a spanning T") {
    const BundleMap et = evaluation_map(basis[0], pi, fx.ind);
    CHECK(max_abs(et.block[0]) > 1e-3);
    const Representation pi_h = restrict_rep(pi, fx.h);
    CHECK(intertwining_residual(pi_h, fixtures::a3_omega(), et) < 1e-9);
  }
  SUBCASE("round trips are the identity on both Mor spaces") {
    const BundleMap et = evaluation_map(basis[0], pi, fx.ind);
    const BundleMap back = coevaluation_map(et, pi, fx.ind);
    CHECK(max_abs(back.block[0] - basis[0].block[0]) < 1e-9);

    const Representation pi_h = restrict_rep(pi, fx.h);
    const auto s_basis = intertwiners(pi_h, fixtures::a3_omega());
    REQUIRE(s_basis.size() == 1);
    const BundleMap t = coevaluation_map(s_basis[0], pi, fx.ind);
    CHECK(intertwining_residual(pi, fx.ind.base(), t) < 1e-9);
    const BundleMap s2 = evaluation_map(t, pi, fx.ind);
    CHECK(max_abs(s2.block[0] - s_basis[0].block[0]) < 1e-9);
  }
  SUBCASE("injectivity: the only intertwiner with ET = 0 is T = 0") {
    // The Mor space is one-dimensional and E is nonzero on its basis, so
    // E T = 0 forces the coefficient to vanish.
    const BundleMap et = evaluation_map(basis[0], pi, fx.ind);
    CHECK(max_abs(et.block[0]) > 0.0);
  }
  SUBCASE("non-intertwiners are rejected as input") {
    BundleMap junk;
    junk.g = fx.g;
    junk.block = {Matrix::Ones(2, 2)};
    CHECK_THROWS_AS(evaluation_map(junk, pi, fx.ind), std::invalid_argument);
  }
}

TEST_CASE("evaluation map is independent of the representative choice") {
  FrobeniusFixture fx;
  const Representation& pi = fixtures::s3_std2();
  const auto basis = intertwiners(pi, fx.ind.base());
  REQUIRE(basis.size() == 1);
  const BundleMap et = evaluation_map(basis[0], pi, fx.ind);

  // Rebuild the induced representation over reshuffled representatives and
  // transport the same intertwiner along the canonical unitary between the
  // two coordinate systems: coordinates at the new representative x_C h are
  // sigma(h^-1) times the old ones.
  const CosetSpacePtr cs2 = fx.cs->with_representatives({4, 2});
  const EquivariantSystem mu2(cs2, fx.mu.weights());
  const InducedRep ind2 = induce(fx.g, fx.h, fixtures::a3_omega(), mu2, fx.haar);

  const int ui = 0;
  Matrix v = Matrix::Zero(ind2.base().dim_at(ui), fx.ind.base().dim_at(ui));
  for (const auto& b : fx.ind.layout(ui)) {
    const int h = fx.h.from_parent(fx.g->product(
        fx.g->inverse(fx.cs->representative(b.coset)), cs2->representative(b.coset)));
    const auto& b2 = ind2.block_of(b.coset);
    v.block(b2.offset, b.offset, b2.dim, b.dim) =
        fx.ind.sigma().matrix(fx.h.groupoid()->inverse(h));
  }
  BundleMap moved;
  moved.g = fx.g;
  moved.block = {v * basis[0].block[0]};
  CHECK(intertwining_residual(pi, ind2.base(), moved) < 1e-9);
  const BundleMap et2 = evaluation_map(moved, pi, ind2);
  CHECK(max_abs(et2.block[0] - et.block[0]) < 1e-9);
}

TEST_CASE("verify_frobenius on S3 / A3") {
  FrobeniusFixture fx;
  SUBCASE("pi = std2, sigma = omega: both dimensions 1") {
    const CheckReport rep = verify_frobenius(fx.g, fx.h, fixtures::s3_std2(),
                                             fixtures::a3_omega(), fx.mu, fx.haar);
    CHECK(rep.pass);
    for (const auto& [k, v] : rep.stats) CHECK(v == 1);
  }
  SUBCASE("pi = trivial, sigma = omega: both dimensions 0") {
    const CheckReport rep = verify_frobenius(fx.g, fx.h, fixtures::s3_trivial(),
                                             fixtures::a3_omega(), fx.mu, fx.haar);
    CHECK(rep.pass);
    for (const auto& [k, v] : rep.stats) CHECK(v == 0);
  }
  SUBCASE("preconditions are reported individually") {
    const HaarSystem unnormalized = counting_haar(fx.h.groupoid());
    const CheckReport rep1 = verify_frobenius(fx.g, fx.h, fixtures::s3_std2(),
                                              fixtures::a3_omega(), fx.mu, unnormalized);
    CHECK_FALSE(rep1.pass);
    bool found = false;
    for (const auto& f : rep1.failures)
      if (f.find("normalized") != std::string::npos) found = true;
    CHECK(found);

    const Representation reducible =
        direct_sum({fixtures::s3_trivial(), fixtures::s3_sign()});
    const CheckReport rep2 = verify_frobenius(fx.g, fx.h, reducible,
                                              fixtures::a3_omega(), fx.mu, fx.haar);
    CHECK_FALSE(rep2.pass);
    found = false;
    for (const auto& f : rep2.failures)
      if (f.find("pi is not irreducible") != std::string::npos) found = true;
    CHECK(found);
  }
}

TEST_CASE("frobenius dimension matrices match the character oracle") {
  FrobeniusFixture fx;
  const std::vector<Representation> pis = {fixtures::s3_trivial(), fixtures::s3_sign(),
                                           fixtures::s3_std2()};
  const std::vector<Representation> sigmas = {fixtures::a3_one(), fixtures::a3_omega(),
                                              fixtures::a3_omega_bar()};
  const FrobeniusMatrixResult res =
      frobenius_matrix(fx.g, fx.h, pis, sigmas, fx.mu, fx.haar);
  CHECK(res.report.pass);
  CHECK(res.dims_induced == res.dims_restricted);

  std::vector<std::vector<int>> oracle(3, std::vector<int>(3));
  for (int i = 0; i < 3; ++i) {
    const auto chi = character_of(restrict_rep(pis[i], fx.h));
    for (int j = 0; j < 3; ++j)
      oracle[i][j] = multiplicity_oracle(chi, character_of(sigmas[j]));
  }
  CHECK(res.dims_induced == oracle);
  const std::vector<std::vector<int>> frozen = {{1, 0, 0}, {1, 0, 0}, {0, 1, 1}};
  CHECK(oracle == frozen);
}

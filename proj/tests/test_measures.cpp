#include <doctest.h>

#include <cmath>
#include <random>

#include "indukt/catalog.hpp"
#include "indukt/linalg.hpp"
#include "indukt/measures.hpp"

using namespace indukt;

TEST_CASE("counting haar") {
  SUBCASE("unnormalized on P2: every element weight 1, fiber mass 2") {
    const HaarSystem h = counting_haar(fixtures::pair_groupoid(2));
    for (int x = 0; x < 4; ++x) CHECK(h.weight(x) == 1.0);
    for (int u : h.groupoid()->units()) CHECK(h.fiber_mass(u) == 2.0);
    CHECK(validate_haar(h).pass);
  }
  SUBCASE("normalized on S3: c = 1/6") {
    const HaarSystem h = counting_haar(fixtures::s3(), true);
    CHECK(h.unit_mass(0) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
    CHECK(h.normalized());
  }
  SUBCASE("normalized on P2xS3: c = 1/12 at both units") {
    // Oracle: |G^u_v| = 6 for every pair of units, so the 2x2 system is
    // 6 c(u0) + 6 c(u1) = 1 twice; the minimum-norm solution is c = 1/12.
    const HaarSystem h = counting_haar(fixtures::p2xs3(), true);
    CHECK(h.unit_mass(0) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(h.unit_mass(1) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));
    CHECK(validate_haar(h).pass);
  }
  SUBCASE("normalized on the S3 action groupoid: c = 1/6") {
    const HaarSystem h = counting_haar(fixtures::s3_action(), true);
    for (int ui = 0; ui < 3; ++ui)
      CHECK(h.unit_mass(ui) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  }
  SUBCASE("infeasible fiber-mass equations are reported") {
    // Structurally well-formed tables that break the inverse axioms can make
    // the system unsolvable in positive numbers: here G^u = {u} forces
    // c(u) = 1 while G^v = {v, x, y} with d(x) = d(y) = u forces c(v) = -1.
    GroupoidData d;
    d.n = 4;  // u = 0, v = 1, x = 2, y = 3
    d.units = {0, 1};
    d.range = {0, 1, 1, 1};
    d.domain = {0, 1, 0, 0};
    d.inverse = {0, 1, 3, 2};
    d.product = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {3, 0, 3}, {1, 2, 2}, {1, 3, 3}};
    const GroupoidPtr g = FiniteGroupoid::create(std::move(d));
    CHECK_FALSE(validate_groupoid(*g).pass);  // not a groupoid, just tables
    CHECK_THROWS_AS(counting_haar(g, true), NormalizationInfeasible);
  }
  SUBCASE("unit masses must be positive") {
    CHECK_THROWS_AS(HaarSystem(fixtures::s3(), {0.0}), std::invalid_argument);
    CHECK_THROWS_AS(HaarSystem(fixtures::s3(), {-1.0}), std::invalid_argument);
  }
}

TEST_CASE("validate_haar on raw weights") {
  const GroupoidPtr p2 = fixtures::pair_groupoid(2);

  SUBCASE("w(x) = c(d(x)) passes for arbitrary positive c") {
    std::vector<double> w(4);
    const double c[2] = {0.5, 2.0};
    for (int x = 0; x < 4; ++x) w[x] = c[p2->unit_index(p2->domain(x))];
    CHECK(validate_haar(*p2, w).pass);
  }
  SUBCASE("w(x) = f(r(x)) with f non-constant fails on a transitive groupoid") {
    std::vector<double> w(4);
    const double f[2] = {1.0, 2.0};
    for (int x = 0; x < 4; ++x) w[x] = f[p2->unit_index(p2->range(x))];
    const ValidationReport rep = validate_haar(*p2, w);
    CHECK_FALSE(rep.pass);
    CHECK(rep.max_residual == 1.0);
  }
  SUBCASE("non-positive weights are reported") {
    CHECK_FALSE(validate_haar(*p2, {1.0, 0.0, 1.0, 1.0}).pass);
  }
}

TEST_CASE("equivariant systems") {
  const CosetSpacePtr cs = cosets(fixtures::s3(), fixtures::a3_in_s3());

  SUBCASE("default all-ones system validates") {
    const EquivariantSystem mu = solve_equivariant(cs);
    CHECK(mu.weights() == std::vector<double>{1.0, 1.0});
    CHECK(validate_equivariant(mu).pass);
  }
  SUBCASE("a prescribed orbit weight lands on both cosets of the single orbit") {
    const EquivariantSystem mu = solve_equivariant(cs, {{0, 2.0}});
    CHECK(mu.weight(0) == 2.0);
    CHECK(mu.weight(1) == 2.0);
  }
  SUBCASE("per-component weights on the group bundle") {
    const CosetSpacePtr bcs =
        cosets(fixtures::c2_bundle(), fixtures::units_in_c2_bundle());
    const EquivariantSystem mu = solve_equivariant(bcs, {{0, 1.0}, {1, 3.0}});
    for (int c = 0; c < bcs->num_cosets(); ++c)
      CHECK(mu.weight(c) == (bcs->moment(c) == 0 ? 1.0 : 3.0));
    CHECK(validate_equivariant(mu).pass);
  }
  SUBCASE("non-positive prescriptions are rejected") {
    CHECK_THROWS_AS(solve_equivariant(cs, {{0, 0.0}}), std::invalid_argument);
    CHECK_THROWS_AS(solve_equivariant(cs, {{0, -1.0}}), std::invalid_argument);
  }
  SUBCASE("non-orbit-constant weights fail validation") {
    const EquivariantSystem mu(cs, {1.0, 2.0});
    CHECK_FALSE(validate_equivariant(mu).pass);
  }
}

TEST_CASE("p_map") {
  const GroupoidPtr s3 = fixtures::s3();
  const WideSubgroupoid& a3 = fixtures::a3_in_s3();
  const CosetSpacePtr cs = cosets(s3, a3);
  const HaarSystem haar = counting_haar(a3.groupoid());

  SUBCASE("f = 1 integrates to the subgroup fiber size") {
    const std::vector<Cplx> ones(6, Cplx(1, 0));
    const auto pf = p_map(ones, *cs, haar);
    CHECK(pf[0].real() == doctest::Approx(3.0));
    CHECK(pf[1].real() == doctest::Approx(3.0));
  }
  SUBCASE("indicator of A3 averages to (3, 0)") {
    std::vector<Cplx> f(6, Cplx(0, 0));
    for (int x : {0, 3, 4}) f[x] = 1.0;
    const auto pf = p_map(f, *cs, haar);
    CHECK(pf[0].real() == doctest::Approx(3.0));
    CHECK(std::abs(pf[1]) == doctest::Approx(0.0));
  }
  SUBCASE("support containment: f on one coset vanishes off it") {
    std::vector<Cplx> f(6, Cplx(0, 0));
    f[1] = Cplx(2, -1);
    const auto pf = p_map(f, *cs, haar);
    CHECK(std::abs(pf[0]) == 0.0);
    CHECK(std::abs(pf[1] - Cplx(2, -1)) < 1e-15);
  }
  SUBCASE("representative independence under random choices") {
    std::mt19937_64 rng(7);
    std::vector<Cplx> f(6);
    for (auto& v : f) v = gaussian(rng);
    const auto pf = p_map(f, *cs, haar);
    for (int round = 0; round < 5; ++round) {
      std::vector<int> reps(cs->num_cosets());
      for (int c = 0; c < cs->num_cosets(); ++c) {
        const auto& members = cs->coset_members(c);
        reps[c] = members[rng() % members.size()];
      }
      const auto pf2 = p_map(f, *cs->with_representatives(reps), haar);
      for (int c = 0; c < 2; ++c) CHECK(std::abs(pf[c] - pf2[c]) < 1e-12);
    }
  }
}

TEST_CASE("section_of_unity") {
  const GroupoidPtr s3 = fixtures::s3();
  const WideSubgroupoid& a3 = fixtures::a3_in_s3();
  const CosetSpacePtr cs = cosets(s3, a3);
  const HaarSystem haar = counting_haar(a3.groupoid());

  SUBCASE("J = all cosets gives f = 1/|H^{d(x)}|") {
    const auto f = section_of_unity({0, 1}, *cs, haar);
    for (int x = 0; x < 6; ++x) CHECK(f[x] == doctest::Approx(1.0 / 3.0));
  }
  SUBCASE("J = {A3} gives the scaled indicator") {
    const auto f = section_of_unity({0}, *cs, haar);
    for (int x = 0; x < 6; ++x)
      CHECK(f[x] == doctest::Approx(cs->coset_of(x) == 0 ? 1.0 / 3.0 : 0.0));
    std::vector<Cplx> fc(f.begin(), f.end());
    const auto pf = p_map(fc, *cs, haar);
    CHECK(std::abs(pf[0] - Cplx(1, 0)) < 1e-12);
  }
  SUBCASE("empty J is rejected") {
    CHECK_THROWS_AS(section_of_unity({}, *cs, haar), std::invalid_argument);
  }
  SUBCASE("Pf = 1 on J across fixtures") {
    struct Fixture {
      GroupoidPtr g;
      const WideSubgroupoid* h;
    };
    const Fixture fx[] = {
        {fixtures::s3(), &fixtures::a3_in_s3()},
        {fixtures::s3(), &fixtures::e_in_s3()},
        {fixtures::pair_groupoid(2), &fixtures::units_in_p2()},
        {fixtures::p2xs3(), &fixtures::p2xa3_in_p2xs3()},
        {fixtures::c2_bundle(), &fixtures::units_in_c2_bundle()},
    };
    for (const auto& [g, h] : fx) {
      const CosetSpacePtr c = cosets(g, *h);
      const HaarSystem hh = counting_haar(h->groupoid());
      std::vector<int> all(c->num_cosets());
      for (int i = 0; i < c->num_cosets(); ++i) all[i] = i;
      const auto f = section_of_unity(all, *c, hh);
      std::vector<Cplx> fc(f.begin(), f.end());
      const auto pf = p_map(fc, *c, hh);
      for (int i = 0; i < c->num_cosets(); ++i)
        CHECK(std::abs(pf[i] - Cplx(1, 0)) < 1e-12);
    }
  }
}

TEST_CASE("induced haar") {
  SUBCASE("H = units with mu = 1 recovers the counting measure") {
    const GroupoidPtr p2 = fixtures::pair_groupoid(2);
    const auto& units = fixtures::units_in_p2();
    const EquivariantSystem mu = solve_equivariant(cosets(p2, units));
    const HaarSystem lam = induced_haar(mu, counting_haar(units.groupoid()));
    for (int x = 0; x < 4; ++x) CHECK(lam.weight(x) == 1.0);
    CHECK(validate_haar(lam).pass);
  }
  SUBCASE("S3 / A3 with counting and mu = 1: all weights 1, fiber mass 6") {
    const auto& a3 = fixtures::a3_in_s3();
    const EquivariantSystem mu = solve_equivariant(cosets(fixtures::s3(), a3));
    const HaarSystem lam = induced_haar(mu, counting_haar(a3.groupoid()));
    for (int x = 0; x < 6; ++x) CHECK(lam.weight(x) == 1.0);
    CHECK(lam.fiber_mass(0) == 6.0);
    CHECK(validate_haar(lam).pass);
  }
  SUBCASE("scaling mu scales the induced weights linearly") {
    const auto& a3 = fixtures::a3_in_s3();
    const CosetSpacePtr cs = cosets(fixtures::s3(), a3);
    const HaarSystem hh = counting_haar(a3.groupoid());
    const HaarSystem base = induced_haar(solve_equivariant(cs), hh);
    const HaarSystem scaled = induced_haar(solve_equivariant(cs, {{0, 2.5}}), hh);
    for (int x = 0; x < 6; ++x) CHECK(scaled.weight(x) == 2.5 * base.weight(x));
  }
  SUBCASE("induced haar validates across fixtures") {
    struct Fixture {
      GroupoidPtr g;
      const WideSubgroupoid* h;
    };
    const Fixture fx[] = {
        {fixtures::s3(), &fixtures::a3_in_s3()},
        {fixtures::p2xs3(), &fixtures::p2xa3_in_p2xs3()},
        {fixtures::p2xs3(), &fixtures::units_in_p2xs3()},
        {fixtures::c2_bundle(), &fixtures::units_in_c2_bundle()},
    };
    for (const auto& [g, h] : fx) {
      const EquivariantSystem mu = solve_equivariant(cosets(g, *h));
      CHECK(validate_haar(induced_haar(mu, counting_haar(h->groupoid()))).pass);
    }
  }
}

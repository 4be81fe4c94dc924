// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Each criterion carries a wall-clock budget that is part of
// the pass condition.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "indukt/catalog.hpp"
#include "indukt/induction.hpp"
#include "indukt/intertwiner.hpp"
#include "indukt/linalg.hpp"
#include "indukt/measures.hpp"

using namespace indukt;

namespace {

constexpr std::uint64_t kAcceptanceSeed = 424242;

struct Ctx {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << (detail.tellp() > 0 ? "; " : "") << what;
    }
  }
  void note(const std::string& s) {
    detail << (detail.tellp() > 0 ? "; " : "") << s;
  }
};

struct NamedGroupoid {
  std::string name;
  GroupoidPtr g;
};

std::vector<NamedGroupoid> all_fixtures() {
  return {{"pair-1", fixtures::pair_groupoid(1)},
          {"pair-2", fixtures::pair_groupoid(2)},
          {"pair-3", fixtures::pair_groupoid(3)},
          {"pair-4", fixtures::pair_groupoid(4)},
          {"c2", fixtures::c2()},
          {"c3", fixtures::c3()},
          {"s3", fixtures::s3()},
          {"s3-action", fixtures::s3_action()},
          {"p2xs3", fixtures::p2xs3()},
          {"c2-bundle", fixtures::c2_bundle()}};
}

struct InductionCase {
  std::string name;
  GroupoidPtr g;
  WideSubgroupoid h;
  Representation sigma;
};

std::vector<InductionCase> induction_cases() {
  std::vector<InductionCase> out = {
      {"s3/a3 omega", fixtures::s3(), fixtures::a3_in_s3(), fixtures::a3_omega()},
      {"s3/a3 one", fixtures::s3(), fixtures::a3_in_s3(), fixtures::a3_one()},
      {"s3/a3 omega-bar", fixtures::s3(), fixtures::a3_in_s3(),
       fixtures::a3_omega_bar()},
      {"s3/{e} trivial", fixtures::s3(), fixtures::e_in_s3(),
       fixtures::e_in_s3_trivial()},
      {"p2/units trivial", fixtures::pair_groupoid(2), fixtures::units_in_p2(),
       fixtures::units_in_p2_trivial()},
      {"p2xs3/p2xa3 omega", fixtures::p2xs3(), fixtures::p2xa3_in_p2xs3(),
       fixtures::p2xa3_character(1)},
      {"p2xs3/units trivial", fixtures::p2xs3(), fixtures::units_in_p2xs3(),
       fixtures::units_in_p2xs3_trivial()},
  };
  const GroupoidPtr act = fixtures::s3_action();
  WideSubgroupoid act_units = subgroupoid(act, act->units());
  Representation act_triv = trivial_rep(act_units.groupoid(), 1);
  out.push_back({"s3-action/units trivial", act, act_units, std::move(act_triv)});
  // Mixed fiber dimensions across the two components of the group bundle.
  const GroupoidPtr bundle = fixtures::c2_bundle();
  const WideSubgroupoid& bundle_units = fixtures::units_in_c2_bundle();
  Representation mixed = trivial_rep(bundle_units.groupoid(), std::vector<int>{1, 2});
  out.push_back({"c2-bundle/units mixed dims", bundle, bundle_units, std::move(mixed)});
  return out;
}

// --------------------------------------------------------------------------

void criterion1_axioms(Ctx& c) {
  for (const auto& [name, g] : all_fixtures()) {
    const ValidationReport gr = validate_groupoid(*g);
    c.check(gr.pass && gr.max_residual < 1e-9, name + ": groupoid axioms");
    const ValidationReport hc = validate_haar(counting_haar(g));
    c.check(hc.pass && hc.max_residual < 1e-9, name + ": counting haar");
    const ValidationReport hn = validate_haar(counting_haar(g, true));
    c.check(hn.pass && hn.max_residual < 1e-9, name + ": normalized haar");
    const ValidationReport tr = validate_representation(trivial_rep(g, 1));
    c.check(tr.pass && tr.max_residual < 1e-9, name + ": trivial representation");
  }
  const std::vector<const Representation*> named = {
      &fixtures::s3_trivial(),        &fixtures::s3_sign(),
      &fixtures::s3_std2(),           &fixtures::a3_one(),
      &fixtures::a3_omega(),          &fixtures::a3_omega_bar(),
      &fixtures::p2_trivial(),        &fixtures::p2xs3_trivial(),
      &fixtures::p2xs3_sign(),        &fixtures::p2xs3_std2(),
      &fixtures::p2xa3_character(1),  &fixtures::p2xa3_character(2),
      &fixtures::e_in_s3_trivial(),   &fixtures::units_in_p2_trivial(),
      &fixtures::units_in_p2xs3_trivial()};
  for (const auto* rep : named) {
    const ValidationReport r = validate_representation(*rep);
    c.check(r.pass && r.max_residual < 1e-9, "catalog representation axioms");
  }
}

void criterion2_induction(Ctx& c) {
  for (const auto& tc : induction_cases()) {
    const CosetSpacePtr cs = cosets(tc.g, tc.h);
    const InducedRep ind = induce(tc.g, tc.h, tc.sigma, solve_equivariant(cs),
                                  counting_haar(tc.h.groupoid()));
    const ValidationReport r = validate_representation(ind.base());
    c.check(r.pass && r.max_residual < 1e-9, tc.name + ": induced axioms");
  }

  const auto& a3 = fixtures::a3_in_s3();
  const CosetSpacePtr cs = cosets(fixtures::s3(), a3);
  const InducedRep ind = induce(fixtures::s3(), a3, fixtures::a3_omega(),
                                solve_equivariant(cs), counting_haar(a3.groupoid()));
  c.check(ind.base().dim(0) == 2, "ind omega has dimension 2");
  // Classical induced character on the classes (e, transpositions, 3-cycles).
  const double expected[6] = {2, 0, 0, -1, -1, 0};
  for (int x = 0; x < 6; ++x)
    c.check(std::abs(ind.base().matrix(x).trace() - Cplx(expected[x], 0)) < 1e-9,
            "induced character (2, 0, -1)");
  const EquivalenceResult eq = is_equivalent(ind.base(), fixtures::s3_std2());
  c.check(eq.equivalent && eq.residual < 1e-9,
          "ind omega equivalent to the standard 2-dim irreducible");
}

void criterion3_theorem_3_9(Ctx& c) {
  std::mt19937_64 rng(kAcceptanceSeed);
  struct Case {
    GroupoidPtr g;
    const WideSubgroupoid* h;
    const Representation* sigma1;
    const Representation* sigma2;
  };
  const Case cases[] = {
      {fixtures::s3(), &fixtures::a3_in_s3(), &fixtures::a3_omega(),
       &fixtures::a3_omega_bar()},
      {fixtures::pair_groupoid(2), &fixtures::units_in_p2(),
       &fixtures::units_in_p2_trivial(), &fixtures::units_in_p2_trivial()},
  };
  for (const auto& tc : cases) {
    const CosetSpacePtr cs = cosets(tc.g, *tc.h);
    const EquivariantSystem mu = solve_equivariant(cs);
    const HaarSystem haar = counting_haar(tc.h->groupoid());

    // (i) transport of a random unitary equivalence sigma ~ sigma'.
    std::vector<Matrix> u(tc.h->groupoid()->num_units());
    for (int ui = 0; ui < tc.h->groupoid()->num_units(); ++ui)
      u[ui] = random_unitary(rng, tc.sigma1->dim_at(ui));
    const Representation moved = rebase_rep(*tc.sigma1, u);
    const InducedRep ind1 = induce(tc.g, *tc.h, *tc.sigma1, mu, haar);
    const InducedRep ind2 = induce(tc.g, *tc.h, moved, mu, haar);
    BundleMap t;
    t.g = tc.h->groupoid();
    t.block = u;
    const BundleMap w = induced_equivalence(t, ind1, ind2);
    c.check(intertwining_residual(ind1.base(), ind2.base(), w) < 1e-9,
            "(i) transported map intertwines");
    double unit_r = 0.0;
    for (const auto& m : w.block)
      unit_r = std::max(unit_r,
                        max_abs(m.adjoint() * m - Matrix::Identity(m.cols(), m.cols())));
    c.check(unit_r < 1e-9, "(i) transported map is unitary");

    // (ii) induce(sigma1 ⊕ sigma2) = induce(sigma1) ⊕ induce(sigma2) via W.
    const InducedRep ind_sum =
        induce(tc.g, *tc.h, direct_sum({*tc.sigma1, *tc.sigma2}), mu, haar);
    const InducedRep p2 = induce(tc.g, *tc.h, *tc.sigma2, mu, haar);
    const Representation sum_ind = direct_sum({ind1.base(), p2.base()});
    const BundleMap perm = induced_sum_permutation(ind_sum, {&ind1, &p2});
    double perm_unit = 0.0;
    for (const auto& m : perm.block)
      perm_unit = std::max(
          perm_unit, max_abs(m.adjoint() * m - Matrix::Identity(m.cols(), m.cols())));
    c.check(perm_unit < 1e-9, "(ii) W is unitary");
    c.check(intertwining_residual(ind_sum.base(), sum_ind, perm) < 1e-9,
            "(ii) W intertwines");
  }
}

void criterion4_conjugates(Ctx& c) {
  const auto& a3 = fixtures::a3_in_s3();
  const CosetSpacePtr cs = cosets(fixtures::s3(), a3);
  const CheckReport rep =
      conjugate_commutes(fixtures::s3(), a3, fixtures::a3_omega(),
                         solve_equivariant(cs), counting_haar(a3.groupoid()));
  c.check(rep.pass, "conjugation commutes with induction");
  c.check(rep.max_residual() < 1e-9, "entrywise deviation below 1e-9");
}

void criterion5_stages(Ctx& c) {
  const CheckReport s3rep =
      verify_stages(fixtures::s3(), fixtures::a3_in_s3(), fixtures::e_in_s3(),
                    fixtures::e_in_s3_trivial());
  c.check(s3rep.pass, "stages on {e} ⊆ A3 ⊆ S3");
  for (const auto& [k, v] : s3rep.stats)
    if (k == "dim_side_a" || k == "dim_side_b")
      c.check(v == 6, "both sides 6-dimensional");

  // Character oracle: both sides carry the regular representation (6, 0, 0).
  const auto& e = fixtures::e_in_s3();
  const auto& a3 = fixtures::a3_in_s3();
  const WideSubgroupoid e_in_a3 = subgroupoid(a3.groupoid(), {0});
  const CosetSpacePtr cs_hk = cosets(a3.groupoid(), e_in_a3);
  const CosetSpacePtr cs_gk = cosets(fixtures::s3(), e);
  const EquivariantSystem mu_h = solve_equivariant(cs_hk);
  const EquivariantSystem mu_g = solve_equivariant(cosets(fixtures::s3(), a3));
  const EquivariantSystem gamma = compose_measures(mu_g, mu_h, cs_gk);
  const InducedRep side_a = induce(fixtures::s3(), e, fixtures::e_in_s3_trivial(),
                                   gamma, counting_haar(e.groupoid()));
  const InducedRep rho =
      induce(a3.groupoid(), e_in_a3, trivial_rep(e_in_a3.groupoid(), 1), mu_h,
             counting_haar(e_in_a3.groupoid()));
  const InducedRep side_b = induce(fixtures::s3(), a3, rho.base(), mu_g,
                                   counting_haar(a3.groupoid()));
  for (int x = 0; x < 6; ++x) {
    const double want = x == 0 ? 6.0 : 0.0;
    c.check(std::abs(side_a.base().matrix(x).trace() - Cplx(want, 0)) < 1e-9,
            "side A regular character (6, 0, 0)");
    c.check(std::abs(side_b.base().matrix(x).trace() - Cplx(want, 0)) < 1e-9,
            "side B regular character (6, 0, 0)");
  }

  const CheckReport prep =
      verify_stages(fixtures::p2xs3(), fixtures::p2xa3_in_p2xs3(),
                    fixtures::units_in_p2xs3(), fixtures::units_in_p2xs3_trivial());
  c.check(prep.pass, "stages on units ⊆ P2xA3 ⊆ P2xS3");
}

void criterion6_mackey(Ctx& c) {
  MackeyOptions opt;
  opt.generator_pairs = 20;
  const CheckReport rep = verify_mackey(
      fixtures::s3(), fixtures::a3_in_s3(), fixtures::a3_omega(),
      fixtures::pair_groupoid(2), fixtures::units_in_p2(),
      fixtures::units_in_p2_trivial(), opt);
  c.check(rep.pass, "mackey tensor product");
  for (const auto& [k, v] : rep.stats)
    if (k == "product_fiber_dim") c.check(v == 4, "product side 4-dim per fiber");
  for (const auto& [k, v] : rep.residuals)
    c.check(v < 1e-9, k + " below 1e-9");
}

void criterion7_frobenius(Ctx& c) {
  const std::vector<std::vector<int>> frozen = {{1, 0, 0}, {1, 0, 0}, {0, 1, 1}};

  {
    const auto& h = fixtures::a3_in_s3();
    const FrobeniusMatrixResult res = frobenius_matrix(
        fixtures::s3(), h,
        {fixtures::s3_trivial(), fixtures::s3_sign(), fixtures::s3_std2()},
        {fixtures::a3_one(), fixtures::a3_omega(), fixtures::a3_omega_bar()},
        solve_equivariant(cosets(fixtures::s3(), h)),
        counting_haar(h.groupoid(), true));
    c.check(res.report.pass, "s3/a3: all pairs verified");
    c.check(res.dims_induced == frozen, "s3/a3: induced-side dimension matrix");
    c.check(res.dims_restricted == frozen, "s3/a3: restricted-side dimension matrix");
  }
  {
    const auto& h = fixtures::p2xa3_in_p2xs3();
    const FrobeniusMatrixResult res = frobenius_matrix(
        fixtures::p2xs3(), h,
        {fixtures::p2xs3_trivial(), fixtures::p2xs3_sign(), fixtures::p2xs3_std2()},
        {fixtures::p2xa3_character(0), fixtures::p2xa3_character(1),
         fixtures::p2xa3_character(2)},
        solve_equivariant(cosets(fixtures::p2xs3(), h)),
        counting_haar(h.groupoid(), true));
    c.check(res.report.pass, "p2xs3/p2xa3: all pairs verified");
    c.check(res.dims_induced == frozen, "p2xs3/p2xa3: identical dimension matrix");
    c.check(res.dims_restricted == frozen,
            "p2xs3/p2xa3: identical restricted matrix");
  }
}

void criterion8_sections(Ctx& c) {
  for (const auto& tc : induction_cases()) {
    const CosetSpacePtr cs = cosets(tc.g, tc.h);
    const HaarSystem haar = counting_haar(tc.h.groupoid());

    std::vector<int> all(cs->num_cosets());
    for (int i = 0; i < cs->num_cosets(); ++i) all[i] = i;
    for (const std::vector<int>& j : {all, std::vector<int>{0}}) {
      const std::vector<double> f = section_of_unity(j, *cs, haar);
      std::vector<Cplx> fc(f.begin(), f.end());
      const std::vector<Cplx> pf = p_map(fc, *cs, haar);
      for (int cidx : j)
        c.check(std::abs(pf[cidx] - Cplx(1, 0)) <= 1e-12,
                tc.name + ": Pf = 1 on J within 1e-12");
    }

    const EquivariantSystem mu = solve_equivariant(cs);
    const ValidationReport hr = validate_haar(induced_haar(mu, haar));
    c.check(hr.pass, tc.name + ": induced haar is a haar system");
  }
}

void criterion9_properties(Ctx& c) {
  std::mt19937_64 rng(kAcceptanceSeed);

  // (a) representative-choice independence of induce.
  {
    const auto& a3 = fixtures::a3_in_s3();
    const CosetSpacePtr cs = cosets(fixtures::s3(), a3);
    const EquivariantSystem mu = solve_equivariant(cs);
    const HaarSystem haar = counting_haar(a3.groupoid());
    const InducedRep base = induce(fixtures::s3(), a3, fixtures::a3_omega(), mu, haar);
    int ok = 0;
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<int> reps(cs->num_cosets());
      for (int cc = 0; cc < cs->num_cosets(); ++cc) {
        const auto& members = cs->coset_members(cc);
        reps[cc] = members[rng() % members.size()];
      }
      const EquivariantSystem mu2(cs->with_representatives(reps), mu.weights());
      const InducedRep moved =
          induce(fixtures::s3(), a3, fixtures::a3_omega(), mu2, haar);
      const EquivalenceResult eq = is_equivalent(base.base(), moved.base(), rng());
      if (eq.equivalent && eq.residual < 1e-9) ++ok;
    }
    c.check(ok == 50, "representative independence: " + std::to_string(ok) + "/50");
  }

  // (b) mu-orbit-scaling invariance of the orthonormalized matrices, on a
  // single-orbit quotient and on a two-orbit group bundle with independent
  // per-orbit scales.
  {
    struct Case {
      GroupoidPtr g;
      const WideSubgroupoid* h;
      const Representation* sigma;
    };
    const Case cases[] = {
        {fixtures::p2xs3(), &fixtures::p2xa3_in_p2xs3(), &fixtures::p2xa3_character(1)},
        {fixtures::c2_bundle(), &fixtures::units_in_c2_bundle(), nullptr},
    };
    int ok = 0;
    for (const auto& tc : cases) {
      const CosetSpacePtr cs = cosets(tc.g, *tc.h);
      const HaarSystem haar = counting_haar(tc.h->groupoid());
      const Representation sigma =
          tc.sigma ? *tc.sigma : trivial_rep(tc.h->groupoid(), 1);
      const InducedRep base = induce(tc.g, *tc.h, sigma, solve_equivariant(cs), haar);
      const auto orbs = orbits(*cs);
      for (int trial = 0; trial < 25; ++trial) {
        std::map<int, double> w;
        for (std::size_t o = 0; o < orbs.size(); ++o)
          w[static_cast<int>(o)] =
              std::exp((uniform01(rng) * 2.0 - 1.0) * std::log(10.0));
        const InducedRep moved =
            induce(tc.g, *tc.h, sigma, solve_equivariant(cs, w), haar);
        if (rep_equal_report(base.base(), moved.base()) < 1e-9) ++ok;
      }
    }
    c.check(ok == 50, "mu-scaling invariance: " + std::to_string(ok) + "/50");
  }

  // (c) intertwiner-dimension invariance under random unitary re-basing.
  {
    const Representation& pi = fixtures::p2xs3_std2();
    const Representation sum = direct_sum({fixtures::p2xs3_trivial(), pi});
    const std::size_t base_self = intertwiners(sum, sum).size();
    const std::size_t base_cross = intertwiners(pi, sum).size();
    int ok = 0;
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<Matrix> u(sum.groupoid()->num_units());
      for (int ui = 0; ui < sum.groupoid()->num_units(); ++ui)
        u[ui] = random_unitary(rng, sum.dim_at(ui));
      const Representation moved = rebase_rep(sum, u);
      if (intertwiners(moved, moved).size() == base_self &&
          intertwiners(pi, moved).size() == base_cross)
        ++ok;
    }
    c.check(ok == 50, "re-basing invariance: " + std::to_string(ok) + "/50");
  }
}

struct Criterion {
  int id;
  std::string title;
  double budget_seconds;
  std::function<void(Ctx&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "axiom suites on every catalog fixture", 1.0, criterion1_axioms},
      {2, "induced representations are unitary representations", 1.0,
       criterion2_induction},
      {3, "equivalences and direct sums transport through induction", 5.0,
       criterion3_theorem_3_9},
      {4, "conjugation commutes with induction", 5.0, criterion4_conjugates},
      {5, "induction in stages", 2.0, criterion5_stages},
      {6, "tensor products commute with induction", 2.0, criterion6_mackey},
      {7, "Frobenius reciprocity dimension matrices", 5.0, criterion7_frobenius},
      {8, "sections of unity and the induced Haar system", 5.0, criterion8_sections},
      {9, "randomized property suite (50 trials each)", 10.0, criterion9_properties},
  };

  int failures = 0;
  for (const auto& cr : criteria) {
    Ctx ctx;
    const auto start = std::chrono::steady_clock::now();
    try {
      cr.run(ctx);
    } catch (const std::exception& e) {
      ctx.check(false, std::string("exception: ") + e.what());
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    ctx.check(elapsed < cr.budget_seconds, "runtime budget exceeded");

    std::printf("[%s] criterion %d: %s (%.3fs)\n", ctx.pass ? "PASS" : "FAIL", cr.id,
                cr.title.c_str(), elapsed);
    if (!ctx.pass) {
      std::printf("       %s\n", ctx.detail.str().c_str());
      ++failures;
    }
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}

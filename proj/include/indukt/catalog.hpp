#pragma once

#include <string>
#include <vector>

#include "indukt/groupoid.hpp"
#include "indukt/representation.hpp"

namespace indukt {
namespace fixtures {

// Process-wide singletons so that subgroupoids, representations and coset
// spaces built from the same fixture share one groupoid identity.

std::vector<std::vector<int>> c2_table();
std::vector<std::vector<int>> c3_table();
/// S3 as permutations of {0,1,2} in lexicographic one-line order:
/// 0 = e, 1 = (12), 2 = (01), 3 = (012), 4 = (021), 5 = (02);
/// table[a][b] = a∘b.
std::vector<std::vector<int>> s3_table();

const GroupoidPtr& pair_groupoid(int n);  // n in 1..4
const GroupoidPtr& c2();
const GroupoidPtr& c3();
const GroupoidPtr& s3();
/// S3 ⋉ {0,1,2} under the natural action; 18 elements, isotropy of order 2.
const GroupoidPtr& s3_action();
const GroupoidPtr& p2xs3();
/// Disjoint union of two copies of C2 (a group bundle); not transitive.
const GroupoidPtr& c2_bundle();

const WideSubgroupoid& a3_in_s3();
const WideSubgroupoid& e_in_s3();        // the trivial subgroup {e}
const WideSubgroupoid& units_in_p2();
const WideSubgroupoid& units_in_p2xs3();
const WideSubgroupoid& p2xa3_in_p2xs3();
const WideSubgroupoid& units_in_c2_bundle();

const Representation& s3_trivial();
const Representation& s3_sign();
/// The standard 2-dim irreducible of S3 (real orthogonal, built from the
/// permutation action on the plane orthogonal to (1,1,1)).
const Representation& s3_std2();
const Representation& a3_one();
/// The ω = e^{2πi/3} character of A3 ≤ S3, over a3_in_s3().groupoid().
const Representation& a3_omega();
const Representation& a3_omega_bar();
const Representation& c3_omega(int j);  // χ_j, j in 0..2
const Representation& p2_trivial();
/// Irreducibles of P2 × S3: trivial bundle ⊗ the S3 irreducible.
const Representation& p2xs3_trivial();
const Representation& p2xs3_sign();
const Representation& p2xs3_std2();
/// σ over P2 × A3: trivial bundle ⊗ the A3 character (j = 0, 1, 2 for
/// 1, ω, ω̄).
const Representation& p2xa3_character(int j);
const Representation& e_in_s3_trivial();
const Representation& units_in_p2xs3_trivial();
const Representation& units_in_p2_trivial();

}  // namespace fixtures
}  // namespace indukt

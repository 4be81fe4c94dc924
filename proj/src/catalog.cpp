#include "indukt/catalog.hpp"

#include <cmath>
#include <stdexcept>

namespace indukt {
namespace fixtures {

namespace {

const Cplx kOmega(-0.5, std::sqrt(3.0) / 2.0);  // e^{2πi/3}

Matrix scalar(Cplx v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

/// ω^k as an exact-as-possible table (ω^0, ω, ω̄) instead of repeated powers.
Cplx omega_pow(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0: return Cplx(1, 0);
    case 1: return kOmega;
    default: return std::conj(kOmega);
  }
}

std::vector<std::vector<int>> compose_table(const std::vector<std::vector<int>>& perms) {
  const int n = static_cast<int>(perms.size());
  const int m = static_cast<int>(perms[0].size());
  auto index_of = [&](const std::vector<int>& p) {
    for (int i = 0; i < n; ++i)
      if (perms[i] == p) return i;
    throw std::logic_error("fixtures: permutation set not closed");
  };
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(m);
      for (int i = 0; i < m; ++i) c[i] = perms[a][perms[b][i]];
      table[a][b] = index_of(c);
    }
  return table;
}

const std::vector<std::vector<int>>& s3_perms() {
  static const std::vector<std::vector<int>> p = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                                  {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  return p;
}

}  // namespace

std::vector<std::vector<int>> c2_table() { return {{0, 1}, {1, 0}}; }

std::vector<std::vector<int>> c3_table() { return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}}; }

std::vector<std::vector<int>> s3_table() {
  static const auto table = compose_table(s3_perms());
  return table;
}

const GroupoidPtr& pair_groupoid(int n) {
  static const GroupoidPtr cache[] = {make_pair_groupoid(1), make_pair_groupoid(2),
                                      make_pair_groupoid(3), make_pair_groupoid(4)};
  if (n < 1 || n > 4) throw std::invalid_argument("fixtures: pair groupoid n in 1..4");
  return cache[n - 1];
}

const GroupoidPtr& c2() {
  static const GroupoidPtr g = make_group_groupoid(c2_table());
  return g;
}

const GroupoidPtr& c3() {
  static const GroupoidPtr g = make_group_groupoid(c3_table());
  return g;
}

const GroupoidPtr& s3() {
  static const GroupoidPtr g = make_group_groupoid(s3_table());
  return g;
}

const GroupoidPtr& s3_action() {
  static const GroupoidPtr g = make_action_groupoid(s3_table(), s3_perms());
  return g;
}

const GroupoidPtr& p2xs3() {
  static const GroupoidPtr g = make_product_groupoid(pair_groupoid(2), s3());
  return g;
}

const GroupoidPtr& c2_bundle() {
  static const GroupoidPtr g = [] {
    GroupoidData d;
    d.n = 4;
    d.units = {0, 2};
    d.range = {0, 0, 2, 2};
    d.domain = {0, 0, 2, 2};
    d.inverse = {0, 1, 2, 3};
    d.product = {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0},
                 {2, 2, 2}, {2, 3, 3}, {3, 2, 3}, {3, 3, 2}};
    return FiniteGroupoid::create(std::move(d));
  }();
  return g;
}

const WideSubgroupoid& a3_in_s3() {
  static const WideSubgroupoid h = subgroupoid(s3(), {0, 3, 4});
  return h;
}

const WideSubgroupoid& e_in_s3() {
  static const WideSubgroupoid h = subgroupoid(s3(), {0});
  return h;
}

const WideSubgroupoid& units_in_p2() {
  static const WideSubgroupoid h = subgroupoid(pair_groupoid(2), pair_groupoid(2)->units());
  return h;
}

const WideSubgroupoid& units_in_p2xs3() {
  static const WideSubgroupoid h = subgroupoid(p2xs3(), p2xs3()->units());
  return h;
}

const WideSubgroupoid& p2xa3_in_p2xs3() {
  static const WideSubgroupoid h = [] {
    std::vector<int> members;
    for (int p = 0; p < 4; ++p)
      for (int s : {0, 3, 4}) members.push_back(p * 6 + s);
    return subgroupoid(p2xs3(), members);
  }();
  return h;
}

const WideSubgroupoid& units_in_c2_bundle() {
  static const WideSubgroupoid h = subgroupoid(c2_bundle(), c2_bundle()->units());
  return h;
}

const Representation& s3_trivial() {
  static const Representation r = trivial_rep(s3(), 1);
  return r;
}

const Representation& s3_sign() {
  static const Representation r = [] {
    std::vector<Matrix> mats(6);
    for (int x = 0; x < 6; ++x)
      mats[x] = scalar((x == 0 || x == 3 || x == 4) ? 1.0 : -1.0);
    return Representation(s3(), {1}, std::move(mats));
  }();
  return r;
}

const Representation& s3_std2() {
  static const Representation r = [] {
    // Orthonormal basis of the plane orthogonal to (1,1,1).
    Eigen::Matrix<double, 3, 2> b;
    b << 1 / std::sqrt(2.0), 1 / std::sqrt(6.0),
        -1 / std::sqrt(2.0), 1 / std::sqrt(6.0),
        0, -2 / std::sqrt(6.0);
    std::vector<Matrix> mats(6);
    for (int a = 0; a < 6; ++a) {
      Eigen::Matrix3d p = Eigen::Matrix3d::Zero();
      for (int i = 0; i < 3; ++i) p(s3_perms()[a][i], i) = 1.0;
      const Eigen::Matrix2d m = b.transpose() * p * b;
      mats[a] = m.cast<Cplx>();
    }
    return Representation(s3(), {2}, std::move(mats));
  }();
  return r;
}

const Representation& a3_one() {
  static const Representation r = trivial_rep(a3_in_s3().groupoid(), 1);
  return r;
}

namespace {

Representation a3_character(int j) {
  // Sub ids: 0 = e, 1 = the 3-cycle 0→1→2→0, 2 = its square.
  std::vector<Matrix> mats(3);
  for (int k = 0; k < 3; ++k) mats[k] = scalar(omega_pow(j * k));
  return Representation(a3_in_s3().groupoid(), {1}, std::move(mats));
}

}  // namespace

const Representation& a3_omega() {
  static const Representation r = a3_character(1);
  return r;
}

const Representation& a3_omega_bar() {
  static const Representation r = a3_character(2);
  return r;
}

const Representation& c3_omega(int j) {
  static const std::vector<Representation> reps = [] {
    std::vector<Representation> out;
    for (int jj = 0; jj < 3; ++jj) {
      std::vector<Matrix> mats(3);
      for (int k = 0; k < 3; ++k) mats[k] = scalar(omega_pow(jj * k));
      out.emplace_back(c3(), std::vector<int>{1}, std::move(mats));
    }
    return out;
  }();
  if (j < 0 || j > 2) throw std::invalid_argument("fixtures: c3 character j in 0..2");
  return reps[j];
}

const Representation& p2_trivial() {
  static const Representation r = trivial_rep(pair_groupoid(2), 1);
  return r;
}

const Representation& p2xs3_trivial() {
  static const Representation r = outer_tensor(p2_trivial(), s3_trivial(), p2xs3());
  return r;
}

const Representation& p2xs3_sign() {
  static const Representation r = outer_tensor(p2_trivial(), s3_sign(), p2xs3());
  return r;
}

const Representation& p2xs3_std2() {
  static const Representation r = outer_tensor(p2_trivial(), s3_std2(), p2xs3());
  return r;
}

const Representation& p2xa3_character(int j) {
  static const std::vector<Representation> reps = [] {
    std::vector<Representation> out;
    const auto& h = p2xa3_in_p2xs3();
    for (int jj = 0; jj < 3; ++jj) {
      std::vector<Matrix> mats(h.size());
      for (int s = 0; s < h.size(); ++s) {
        const int s3_part = h.to_parent(s) % 6;
        const int k = s3_part == 0 ? 0 : (s3_part == 3 ? 1 : 2);
        mats[s] = scalar(omega_pow(jj * k));
      }
      out.emplace_back(h.groupoid(), std::vector<int>{1, 1}, std::move(mats));
    }
    return out;
  }();
  if (j < 0 || j > 2) throw std::invalid_argument("fixtures: p2xa3 character j in 0..2");
  return reps[j];
}

const Representation& e_in_s3_trivial() {
  static const Representation r = trivial_rep(e_in_s3().groupoid(), 1);
  return r;
}

const Representation& units_in_p2xs3_trivial() {
  static const Representation r = trivial_rep(units_in_p2xs3().groupoid(), 1);
  return r;
}

const Representation& units_in_p2_trivial() {
  static const Representation r = trivial_rep(units_in_p2().groupoid(), 1);
  return r;
}

}  // namespace fixtures
}  // namespace indukt

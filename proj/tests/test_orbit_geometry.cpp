#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ss;

namespace {

using oracle::ptr;

std::vector<oracle::SuiteCase> suite() { return oracle::linear_suite(); }

std::vector<Vec> units(const LieSuperalgebra& g, const std::vector<std::size_t>& idx) {
  std::vector<Vec> out;
  for (auto i : idx) out.push_back(g.unit(i));
  return out;
}

}  // namespace

TEST(LinearSphericity, SuiteVerdicts) {
  for (const auto& c : suite()) {
    auto bs = extend_to_hyperborels(c.v.g);
    auto ls = linear_sphericity(c.v, bs, 1);
    EXPECT_EQ(ls.verdict, c.expected) << c.v.g->name << " " << c.v.name;
  }
}

TEST(LinearSphericity, SymbolicAgreesWithSpecialization) {
  for (const auto& c : suite()) {
    auto bs = extend_to_hyperborels(c.v.g);
    for (const auto& b : bs) {
      auto fast = linear_open_orbit_test(c.v, b, 1, false);
      auto slow = linear_open_orbit_test(c.v, b, 1, true);
      EXPECT_EQ(fast.even_rank, slow.even_rank) << c.v.g->name << " " << c.v.name;
      EXPECT_EQ(fast.odd_rank, slow.odd_rank) << c.v.g->name << " " << c.v.name;
      auto empty = [](const PolyMatrix& m) { return m.empty() || m[0].empty(); };
      EXPECT_TRUE(slow.even_symbolic || empty(slow.even_matrix));
      EXPECT_TRUE(slow.odd_symbolic || empty(slow.odd_matrix));
    }
  }
}

TEST(LinearSphericity, SeedIndependent) {
  for (const auto& c : suite()) {
    auto bs = extend_to_hyperborels(c.v.g);
    for (std::uint64_t seed : {2, 3, 99}) EXPECT_EQ(linear_sphericity(c.v, bs, seed).verdict, c.expected);
  }
}

// The odd block of gl(0|2) on C^{0|2} is the zero map: b1 acts on V1 only
// through odd-to-even maps, and V0 = 0.
TEST(LinearSphericity, Gl02RankDeficiency) {
  auto v = standard_rep(ptr(gl(0, 2)));
  auto bs = extend_to_hyperborels(v.g);
  ASSERT_EQ(bs.size(), 1u);
  auto cert = linear_open_orbit_test(v, bs[0], 1, true);
  EXPECT_EQ(cert.odd_ambient, 2u);
  EXPECT_EQ(cert.odd_rank, 0u);
  EXPECT_FALSE(cert.full());
}

// A full-rank witness is a point where the specialized matrix really has full rank.
TEST(LinearSphericity, WitnessIsExact) {
  auto v = sym2(standard_rep(ptr(gl(2, 2))));
  auto bs = extend_to_hyperborels(v.g);
  auto ls = linear_sphericity(v, bs, 1);
  ASSERT_EQ(ls.verdict, Verdict::SPHERICAL);
  const auto& c = ls.certificates[ls.hyperborel];
  if (!c.even_witness.empty()) {
    EXPECT_EQ(rational_rank(specialize(c.even_matrix, c.even_witness)), c.even_ambient);
  }
  if (!c.odd_witness.empty()) {
    EXPECT_EQ(rational_rank(specialize(c.odd_matrix, c.odd_witness)), c.odd_ambient);
  }
}

TEST(CrossValidation, ConsistentOnSuite) {
  for (const auto& c : suite()) {
    for (const auto& b : extend_to_hyperborels(c.v.g)) {
      auto cv = cross_validate(c.v, b, 4, 1);
      EXPECT_TRUE(cv.consistent) << cv.bundle;
      if (cv.rank_verdict == Verdict::SPHERICAL) {
        EXPECT_NE(cv.function_verdict, Verdict::NOT_SPHERICAL);
      }
    }
  }
}

TEST(Homogeneous, BorelQuotientIsSpherical) {
  for (auto g : {ptr(gl(1, 1)), ptr(gl(2, 1)), ptr(osp(1, 2))}) {
    auto bs = extend_to_hyperborels(g);
    HomogeneousSpace X{g, bs.front().basis(), "G/B"};
    EXPECT_EQ(homogeneous_sphericity_test(X, bs).verdict, Verdict::SPHERICAL) << g->name;
  }
}

TEST(Homogeneous, PointStabilizerTooSmall) {
  auto g = ptr(gl(1, 1));
  HomogeneousSpace X{g, {}, "G"};
  auto res = homogeneous_sphericity_test(X, extend_to_hyperborels(g), 7, true);
  EXPECT_EQ(res.verdict, Verdict::NOT_SPHERICAL);
  for (const auto& c : res.per_hyperborel) EXPECT_EQ(c.method, "dimension-count");
}

// OSP(1|2)/T: the torus has no odd part, while b1 has dimension 1 < 2.
TEST(Homogeneous, OspTorusOddDeficiency) {
  auto g = ptr(osp(1, 2));
  auto rd = standard_root_decomposition(*g);
  HomogeneousSpace X{g, rd.h0, "OSP(1|2)/T"};
  auto bs = extend_to_hyperborels(g);
  auto res = homogeneous_sphericity_test(X, bs, 7, true);
  EXPECT_EQ(res.verdict, Verdict::NOT_SPHERICAL);
  for (const auto& c : res.per_hyperborel) {
    EXPECT_LT(c.odd_dim, g->odd_dim());
    EXPECT_EQ(c.even_dim, g->even_dim());
  }
}

TEST(Homogeneous, RejectsNonSubalgebra) {
  auto g = ptr(gl(1, 1));
  HomogeneousSpace X{g, units(*g, {2}), "bad"};  // a single odd root vector is fine
  EXPECT_NO_THROW(homogeneous_sphericity_test(X, extend_to_hyperborels(g)));
  HomogeneousSpace Y{g, units(*g, {2, 3}), "bad"};  // [E12, E21] leaves the span
  EXPECT_THROW(homogeneous_sphericity_test(Y, extend_to_hyperborels(g)), std::invalid_argument);
}

TEST(Homogeneous, DiagonalInProduct) {
  for (auto base : {gl(1, 1), gl(1, 2), osp(1, 2)}) {
    auto theta = swap_involution(base);
    auto sp = make_symmetric_pair(theta);
    HomogeneousSpace X{theta.g, sp.k, theta.name};
    EXPECT_EQ(homogeneous_sphericity_test(X, extend_to_hyperborels(theta.g)).verdict, Verdict::SPHERICAL) << theta.name;
  }
}

#include "superspherical/tables.hpp"

#include <gtest/gtest.h>

using namespace ss;

namespace {

AlgebraPtr ptr(LieSuperalgebra g) { return std::make_shared<const LieSuperalgebra>(std::move(g)); }

Weight negate(Weight w) {
  for (auto& x : w) x = -x;
  return w;
}

std::vector<Involution> small_involutions() {
  std::vector<Involution> ts;
  for (std::size_t n = 1; n <= 2; ++n) {
    ts.push_back(gl_q_involution(n));
    ts.push_back(gl_p_involution(n));
    ts.push_back(gl_osp_involution(1, n));
  }
  ts.push_back(gl_block_involution(1, 2, 0, 1));
  ts.push_back(gl_block_involution(2, 2, 1, 1));
  ts.push_back(osp_block_involution(2, 2, 1, 0));
  ts.push_back(osp_gl_involution(2, 1));
  ts.push_back(p_block_involution(2, 1));
  ts.push_back(p_gl_involution(2, 1));
  ts.push_back(grading_involution(ptr(gl(1, 1))));
  ts.push_back(swap_involution(gl(1, 1)));
  return ts;
}

}  // namespace

TEST(Involutions, AreInvolutiveAutomorphisms) {
  for (const auto& t : small_involutions()) {
    EXPECT_EQ(check_involution(t), "") << t.name;
    EXPECT_EQ(check_automorphism(*t.g, t.theta), "") << t.name;
    EXPECT_EQ(t.theta * t.theta, Matrix::identity(t.g->dim())) << t.name;
  }
}

TEST(SymmetricPair, CartanDecomposition) {
  for (const auto& t : small_involutions()) {
    auto sp = make_symmetric_pair(t);
    std::size_t d = t.g->dim();
    EXPECT_EQ(sp.k.size() + sp.p.size(), d) << t.name;
    EXPECT_EQ(check_subalgebra(*t.g, sp.k), "") << t.name;
    for (const auto& x : sp.k)
      for (const auto& y : sp.p) EXPECT_TRUE(in_span(sp.p, t.g->bracket(x, y), d)) << t.name;
    for (const auto& x : sp.p)
      for (const auto& y : sp.p) EXPECT_TRUE(in_span(sp.k, t.g->bracket(x, y), d)) << t.name;
    // a is even, inside p, and abelian
    for (const auto& h : sp.a) {
      EXPECT_EQ(t.g->parity_of(h), 0);
      EXPECT_TRUE(in_span(sp.p, h, d));
      for (const auto& h2 : sp.a) EXPECT_TRUE(is_zero(t.g->bracket(h, h2)));
    }
  }
}

TEST(SymmetricPair, RestrictedRootsComeInPairs) {
  for (const auto& t : small_involutions()) {
    auto sp = make_symmetric_pair(t);
    EXPECT_EQ(sp.sigma.size(), 2 * sp.sigma_plus.size()) << t.name;
    for (const auto& r : sp.sigma_plus) {
      EXPECT_FALSE(is_zero_weight(r.weight));
      bool found = std::any_of(sp.sigma.begin(), sp.sigma.end(),
                               [&](const RestrictedRoot& s) { return s.weight == negate(r.weight); });
      EXPECT_TRUE(found) << t.name;
    }
  }
}

TEST(Iwasawa, DiagonalPairs) {
  for (auto g : {gl(1, 2), gl(2, 2), osp(1, 2)}) {
    auto sp = make_symmetric_pair(swap_involution(g));
    auto iw = iwasawa_test(sp);
    EXPECT_EQ(iw.verdict, IwasawaVerdict::HAS_IWASAWA) << g.name;
    EXPECT_TRUE(iw.decomposition_verified);
  }
  auto sp = make_symmetric_pair(swap_involution(qn(2)));
  auto iw = iwasawa_test(sp);
  EXPECT_EQ(iw.verdict, IwasawaVerdict::NO_IWASAWA);
  EXPECT_EQ(iw.witness_parity, 1);
}

TEST(Iwasawa, WitnessLiesInCentralizerCapP) {
  for (const auto& t : {gl_p_involution(2), swap_involution(qn(2)), grading_involution(ptr(gl(1, 1)))}) {
    auto sp = make_symmetric_pair(t);
    auto iw = iwasawa_test(sp);
    ASSERT_EQ(iw.verdict, IwasawaVerdict::NO_IWASAWA) << t.name;
    std::size_t d = t.g->dim();
    EXPECT_TRUE(in_span(sp.p, iw.witness, d));
    EXPECT_TRUE(in_span(sp.centralizer_a, iw.witness, d));
    EXPECT_FALSE(in_span(sp.a, iw.witness, d));
  }
}

TEST(Iwasawa, GlQHasGlPHasNot) {
  for (std::size_t n = 1; n <= 3; ++n) {
    EXPECT_EQ(iwasawa_test(make_symmetric_pair(gl_q_involution(n))).verdict, IwasawaVerdict::HAS_IWASAWA) << n;
    EXPECT_EQ(iwasawa_test(make_symmetric_pair(gl_p_involution(n))).verdict, IwasawaVerdict::NO_IWASAWA) << n;
  }
}

// The hyperborel built from k + a + n complements k.
TEST(Iwasawa, HyperborelComplementsK) {
  for (const auto& t : {gl_q_involution(2), gl_osp_involution(1, 1), swap_involution(gl(1, 1)),
                        gl_block_involution(1, 2, 0, 1)}) {
    auto sp = make_symmetric_pair(t);
    ASSERT_EQ(iwasawa_test(sp).verdict, IwasawaVerdict::HAS_IWASAWA) << t.name;
    auto ih = iwasawa_to_hyperborel(sp);
    EXPECT_TRUE(verify_hyperborel(ih.b).ok) << t.name;
    EXPECT_TRUE(ih.complements) << t.name;
  }
}

TEST(PairAnalysis, SphericalWithoutIwasawa) {
  auto o = analyse_pair(gl_p_involution(2));
  EXPECT_EQ(o.iwasawa, IwasawaVerdict::NO_IWASAWA);
  EXPECT_EQ(o.spherical, Verdict::SPHERICAL);
}

TEST(PairAnalysis, GradingPairOnlySphericalWhenEven) {
  EXPECT_EQ(analyse_pair(grading_involution(ptr(gl(2, 0)))).spherical, Verdict::SPHERICAL);
  EXPECT_EQ(analyse_pair(grading_involution(ptr(gl(1, 1)))).spherical, Verdict::NOT_SPHERICAL);
  EXPECT_EQ(analyse_pair(grading_involution(ptr(osp(1, 2)))).spherical, Verdict::NOT_SPHERICAL);
}

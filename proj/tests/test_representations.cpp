#include "superspherical/hyperborel.hpp"
#include "superspherical/representation.hpp"

#include <gtest/gtest.h>

using namespace ss;

namespace {

AlgebraPtr ptr(LieSuperalgebra g) { return std::make_shared<const LieSuperalgebra>(std::move(g)); }

std::vector<AlgebraPtr> algebras() {
  return {ptr(gl(1, 1)), ptr(gl(2, 1)), ptr(gl(1, 2)), ptr(gl(2, 2)), ptr(sl(2, 1)), ptr(osp(1, 2)),
          ptr(osp(2, 2)), ptr(osp(3, 2)), ptr(pe(2)), ptr(qn(2))};
}

std::size_t total_dim(const std::vector<HighestWeightSpace>& ss) {
  std::size_t t = 0;
  for (const auto& s : ss) t += s.even + s.odd;
  return t;
}

Hyperborel upper(AlgebraPtr g) { return extend_to_hyperborels(std::move(g)).front(); }

}  // namespace

TEST(Representations, ModuleAxioms) {
  for (const auto& g : algebras())
    for (const char* name : {"standard", "trivial", "adjoint", "dual", "S2", "Pi", "PiS2", "Pidual"}) {
      auto v = rep_by_name(g, name);
      EXPECT_EQ(check_module(v), "") << g->name << " " << name;
    }
}

TEST(Representations, UnknownNameThrows) {
  EXPECT_THROW(rep_by_name(ptr(gl(1, 1)), "nope"), std::invalid_argument);
}

TEST(Representations, SymmetricSquareDimensions) {
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n) {
      if (m + n == 0) continue;
      auto s = sym2(standard_rep(ptr(gl(m, n))));
      EXPECT_EQ(s.even_dim(), m * (m + 1) / 2 + n * (n - 1) / 2) << m << "|" << n;
      EXPECT_EQ(s.odd_dim(), m * n);
      EXPECT_EQ(check_module(s), "");
    }
}

TEST(Representations, ParityShiftAndDual) {
  auto v = standard_rep(ptr(gl(2, 3)));
  auto p = pi_shift(v);
  EXPECT_EQ(p.even_dim(), v.odd_dim());
  EXPECT_EQ(p.odd_dim(), v.even_dim());
  auto d = dual(v);
  EXPECT_EQ(d.super_dim(), v.super_dim());
  EXPECT_EQ(check_module(d), "");
  EXPECT_EQ(check_module(dual(d)), "");
}

TEST(Representations, TensorAndScalars) {
  auto g = ptr(gl(1, 1));
  auto v = standard_rep(g);
  auto t = tensor(v, v);
  EXPECT_EQ(t.super_dim(), "(2|2)");
  EXPECT_EQ(check_module(t), "");
  auto w = with_scalars(v);
  EXPECT_EQ(w.g->dim(), g->dim() + 1);
  EXPECT_EQ(check_module(w), "");
  EXPECT_EQ(w.super_dim(), v.super_dim());
}

TEST(Representations, StandardWeightsAreCoordinates) {
  auto g = ptr(gl(2, 1));
  auto rd = standard_root_decomposition(*g);
  auto ws = basis_weights(standard_rep(g), rd.h0);
  ASSERT_TRUE(ws);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ((*ws)[i], unit_vec(3, i));
}

TEST(HighestWeights, StandardHasOneLine) {
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 2; ++n) {
      auto g = ptr(gl(m, n));
      auto v = standard_rep(g);
      for (const auto& b : extend_to_hyperborels(g)) {
        auto hw = highest_weight_spaces(v, b);
        EXPECT_EQ(total_dim(hw), 1u) << g->name;
      }
    }
}

// Adjoint gl(1|1) with the upper hyperborel: b-eigenvectors are exactly the
// identity (even, weight 0) and E12 (odd, weight e1 - d1).
TEST(HighestWeights, Gl11AdjointUpper) {
  auto g = ptr(gl(1, 1));
  auto rd = std::make_shared<const RootDecomposition>(standard_root_decomposition(*g));
  auto b = hyperborel_containing_positive(g, rd, default_positivity(*rd));
  ASSERT_TRUE(b);
  auto hw = highest_weight_spaces(adjoint_rep(g), *b);
  EXPECT_EQ(total_dim(hw), 2u);
  ASSERT_EQ(hw.size(), 2u);
  std::size_t even = 0, odd = 0;
  for (const auto& s : hw) {
    even += s.even;
    odd += s.odd;
    if (is_zero_weight(s.weight)) EXPECT_EQ(s.even, 1u);
    else EXPECT_EQ(s.weight, (Weight{1, -1}));
  }
  EXPECT_EQ(even, 1u);
  EXPECT_EQ(odd, 1u);
}

TEST(HighestWeights, TrivialIsEverything) {
  for (const auto& g : algebras()) {
    auto hw = highest_weight_spaces(trivial_rep(g), upper(g));
    EXPECT_EQ(total_dim(hw), 1u);
  }
}

// Every highest weight vector is killed by n and b1 and is an h0-eigenvector.
TEST(HighestWeights, VectorsAreEigenvectors) {
  for (const auto& g : algebras()) {
    for (const char* name : {"standard", "adjoint", "S2"}) {
      auto v = rep_by_name(g, name);
      for (const auto& b : extend_to_hyperborels(g)) {
        for (const auto& s : highest_weight_spaces(v, b)) {
          ASSERT_EQ(s.vectors.size(), s.even + s.odd);
          for (const auto& x : s.vectors) {
            for (const auto& y : b.n) EXPECT_TRUE(is_zero(v.act(y) * x));
            for (const auto& y : b.b1) EXPECT_TRUE(is_zero(v.act(y) * x));
            for (std::size_t c = 0; c < b.h0().size(); ++c)
              EXPECT_EQ(v.act(b.h0()[c]) * x, s.weight[c] * x);
          }
        }
      }
    }
  }
}

#include "superspherical/gl11.hpp"

#include <gtest/gtest.h>

using namespace ss;

namespace {

std::vector<Matrix> all_units() {
  return {GL11Ring::unit(0, 0), GL11Ring::unit(1, 1), GL11Ring::unit(0, 1), GL11Ring::unit(1, 0)};
}

}  // namespace

TEST(GL11Ring, StructureChecks) {
  auto c = check_gl11_ring(2);
  EXPECT_TRUE(c.ok()) << c.homomorphism_failures << " " << c.supercommutation_failures << " " << c.leibniz_failures;
}

TEST(GL11Ring, OddGeneratorsSquareToZero) {
  auto b = GL11Ring::generator(0, 1), g = GL11Ring::generator(1, 0);
  EXPECT_TRUE(g11_mul(b, b).empty());
  EXPECT_TRUE(g11_mul(g, g).empty());
  EXPECT_EQ(g11_mul(b, g), g11_lin({}, -1, g11_mul(g, b)));
}

TEST(Berezinian, MultiplicativeAndInvertible) {
  for (int k = -3; k <= 3; ++k)
    for (int l = -3; l <= 3; ++l) EXPECT_EQ(g11_mul(berezinian_power(k), berezinian_power(l)), berezinian_power(k + l));
  EXPECT_EQ(berezinian_power(0), g11_mono(0, 0, 0, 0));
}

// Odd units kill Ber^k from both sides; even units rescale it.
TEST(Berezinian, BiInvariant) {
  for (int k = -3; k <= 3; ++k) {
    auto ber = berezinian_power(k);
    for (auto side : {Side::Left, Side::Right})
      for (const auto& u : all_units()) {
        auto image = GL11Ring::act(side, u, ber);
        if (GL11Ring::matrix_parity(u)) {
          EXPECT_TRUE(image.empty()) << k;
        } else if (!image.empty()) {
          auto ratio = g11_as_vertex(image);
          ASSERT_TRUE(ratio) << g11_str(image);
          EXPECT_EQ(std::get<0>(*ratio), G11Row::Bottom);
          EXPECT_EQ(std::get<1>(*ratio), k);
        }
      }
  }
}

// Matrix coefficients of a module of dimension n span an n^2-dimensional
// subcoalgebra when the module is simple.
TEST(MatrixCoefficients, SimpleModules) {
  for (int i = -2; i <= 2; ++i) {
    auto mc = matrix_coefficients(gl11_one_dim(i, -i));
    EXPECT_EQ(mc.rank, 1u);
    EXPECT_TRUE(mc.equivariant);
  }
  for (auto [p, q] : {std::pair{2, 1}, std::pair{1, 0}, std::pair{-3, 1}}) {
    auto mc = matrix_coefficients(gl11_kac(p, q));
    EXPECT_EQ(mc.rank, 4u) << p << "," << q;
    EXPECT_TRUE(mc.equivariant);
  }
}

TEST(MatrixCoefficients, OneDimensionalNeedsZeroSum) {
  EXPECT_THROW(gl11_one_dim(2, 1), std::invalid_argument);
  EXPECT_NO_THROW(gl11_one_dim(2, -2));
}

// One-dimensional L(k, -k) has matrix coefficient Ber^k.
TEST(MatrixCoefficients, OneDimensionalIsBerezinianPower) {
  for (int k = -2; k <= 2; ++k) {
    auto mc = matrix_coefficients(gl11_one_dim(k, -k));
    ASSERT_EQ(mc.image.size(), 1u);
    auto v = g11_as_vertex(mc.image[0][0]);
    ASSERT_TRUE(v);
    EXPECT_EQ(std::get<0>(*v), G11Row::Bottom);
    EXPECT_EQ(std::get<1>(*v), k);
  }
}

// Atypical Kac modules K(p, -p): E12 acts by zero, so the group acts by
// triangular matrices and one coefficient vanishes identically.
TEST(MatrixCoefficients, AtypicalKacModule) {
  for (int p = -1; p <= 2; ++p) {
    auto mc = matrix_coefficients(gl11_kac(p, -p));
    EXPECT_TRUE(mc.equivariant);
    EXPECT_EQ(mc.rank, 3u) << p;
  }
}

TEST(Socle, PrincipalBlockBand) {
  for (int band : {1, 2}) {
    auto rep = verify_socle_and_block(band);
    EXPECT_TRUE(rep.ok()) << band;
    EXPECT_TRUE(rep.arrows_unit);
    EXPECT_TRUE(rep.failures.empty());
    EXPECT_EQ(rep.window_size, std::size_t(2 * band + 1));
    // soc^1 = bottom row, soc^2 adds the two middle rows, soc^3 the top
    EXPECT_LT(rep.soc1, rep.soc2);
    EXPECT_LT(rep.soc2, rep.soc3);
  }
}

// Arrows computed from the ring equal the drawn diagram, which is written
// down independently here: top -> middle by all four operators, middle ->
// bottom by the two that do not annihilate.
TEST(Socle, ArrowShape) {
  auto arrows = g11_arrows(-1, 1);
  std::set<std::tuple<G11Row, int, std::string, G11Row, int>> got, want;
  for (const auto& a : arrows) {
    got.insert({a.from_row, a.from_k, a.op, a.to_row, a.to_k});
    EXPECT_TRUE(a.coefficient == 1 || a.coefficient == -1);
  }
  for (int k = -1; k <= 1; ++k) {
    want.insert({G11Row::Top, k, "u", G11Row::MiddlePlus, k});
    want.insert({G11Row::Top, k, "v", G11Row::MiddleMinus, k - 1});
    want.insert({G11Row::Top, k, "ubar", G11Row::MiddlePlus, k - 1});
    want.insert({G11Row::Top, k, "vbar", G11Row::MiddleMinus, k});
    want.insert({G11Row::MiddlePlus, k, "v", G11Row::Bottom, k});
    want.insert({G11Row::MiddlePlus, k, "vbar", G11Row::Bottom, k + 1});
    want.insert({G11Row::MiddleMinus, k, "u", G11Row::Bottom, k + 1});
    want.insert({G11Row::MiddleMinus, k, "ubar", G11Row::Bottom, k});
  }
  EXPECT_EQ(got, want);
  EXPECT_EQ(g11_expected_arrows(-1, 1), want);
}

TEST(Socle, DiagramDotMentionsEveryArrow) {
  auto arrows = g11_arrows(-1, 1);
  auto dot = g11_diagram_dot(arrows);
  for (const auto& a : arrows)
    EXPECT_NE(dot.find("\"" + g11_vertex_name(a.from_row, a.from_k) + "\" -> \"" + g11_vertex_name(a.to_row, a.to_k) + "\""),
              std::string::npos);
}

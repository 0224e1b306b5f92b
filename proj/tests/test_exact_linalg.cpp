#include "superspherical/bareiss.hpp"
#include "superspherical/matrix.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ss;

namespace {

Matrix random_matrix(std::mt19937_64& gen, std::size_t r, std::size_t c, long lo = -4, long hi = 4) {
  std::uniform_int_distribution<long> dist(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = make_rational(dist(gen), 1 + std::abs(dist(gen)));
  return m;
}

// A rank-k matrix as a product of r x k and k x c factors.
Matrix low_rank(std::mt19937_64& gen, std::size_t r, std::size_t c, std::size_t k) {
  return random_matrix(gen, r, k) * random_matrix(gen, k, c);
}

std::vector<std::vector<Rational>> rows_of(const Matrix& m) {
  std::vector<std::vector<Rational>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) out[i] = m.row(i);
  return out;
}

Poly t(std::size_t nvars, std::size_t i) { return Poly::variable(nvars, i); }
Poly c(std::size_t nvars, long v) { return Poly(nvars, Rational(v)); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), make_rational(-3, 2));
  EXPECT_EQ(to_string(make_rational(4, -6)), "-2/3");
  EXPECT_TRUE(is_integer(parse_rational("10/5")));
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
}

TEST(Matrix, InverseRoundTrip) {
  std::mt19937_64 gen(11);
  int invertible = 0;
  for (int trial = 0; trial < 40; ++trial) {
    Matrix m = random_matrix(gen, 4, 4);
    auto inv = inverse(m);
    if (rank(m) < 4) {
      EXPECT_FALSE(inv);
      continue;
    }
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, Matrix::identity(4));
    EXPECT_EQ(*inv * m, Matrix::identity(4));
    ++invertible;
  }
  EXPECT_GT(invertible, 30);
}

TEST(Matrix, RankOfProducts) {
  std::mt19937_64 gen(12);
  for (std::size_t k = 0; k <= 4; ++k) {
    Matrix m = low_rank(gen, 5, 6, k);
    EXPECT_LE(rank(m), k);
    EXPECT_EQ(rank(m), rank(m.transpose()));
  }
}

TEST(Matrix, KernelIsKernel) {
  std::mt19937_64 gen(13);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix m = low_rank(gen, 4, 6, 1 + trial % 4);
    auto ker = kernel_basis(m);
    EXPECT_EQ(ker.size() + rank(m), m.cols());
    for (const auto& v : ker) EXPECT_TRUE(is_zero(m * v));
  }
}

TEST(Matrix, SolveAndSpans) {
  std::mt19937_64 gen(14);
  Matrix m = random_matrix(gen, 5, 3);
  Vec x{make_rational(1, 2), -3, 7};
  Vec b = m * x, y;
  ASSERT_TRUE(solve(m, b, y));
  EXPECT_EQ(m * y, b);

  std::vector<Vec> u{{1, 0, 0, 1}, {0, 1, 0, 1}}, w{{1, 1, 0, 2}, {0, 0, 1, 0}};
  auto meet = intersect(u, w, 4);
  ASSERT_EQ(meet.size(), 1u);
  EXPECT_TRUE(in_span(u, meet[0], 4));
  EXPECT_TRUE(in_span(w, meet[0], 4));
  EXPECT_TRUE(contains_span(u, {u[0] + u[1]}, 4));
  EXPECT_FALSE(in_span(u, w[1], 4));
}

TEST(Bareiss, AgreesWithRrefOverQ) {
  std::mt19937_64 gen(15);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t r = 2 + trial % 5, c = 2 + (trial / 5) % 5;
    Matrix m = low_rank(gen, r, c, trial % 4);
    auto br = bareiss_rank(rows_of(m));
    EXPECT_EQ(br.rank, rank(m));
    EXPECT_EQ(br.pivots.size(), br.rank);
  }
}

TEST(Bareiss, PivotsSelectAnInvertibleMinor) {
  std::mt19937_64 gen(16);
  Matrix m = low_rank(gen, 6, 5, 3);
  auto br = bareiss_rank(rows_of(m));
  ASSERT_EQ(br.rank, 3u);
  Matrix minor(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) minor(i, j) = m(br.pivots[i].first, br.pivots[j].second);
  EXPECT_EQ(rank(minor), 3u);
}

TEST(Poly, ArithmeticAndDivision) {
  Poly x = t(2, 0), y = t(2, 1);
  Poly p = (x + y) * (x - y);
  EXPECT_EQ(p, x * x - y * y);
  EXPECT_EQ(exact_div(p, x + y), x - y);
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.evaluate({3, 2}), 5);
  EXPECT_TRUE((p - p).is_zero());
}

TEST(RationalFunction, FieldOperations) {
  Poly x = t(1, 0);
  RationalFunction f(x + c(1, 1), x), g(x, x - c(1, 1));
  RationalFunction h = f * g;
  EXPECT_EQ(h.evaluate({3}), make_rational(4, 2));
  EXPECT_EQ((f / f).evaluate({5}), 1);
  EXPECT_EQ((f - f).is_zero(), true);
  EXPECT_THROW(f.evaluate({0}), std::domain_error);
}

// Generic rank over Q(t) against matrices with known rank.
TEST(GenericRank, SymbolicMatchesKnownRanks) {
  std::size_t nv = 2;
  Poly a = t(nv, 0), b = t(nv, 1), one = c(nv, 1);
  // rank 1: outer product of (1, a) and (a, b)
  std::vector<std::vector<Poly>> outer{{a, b}, {a * a, a * b}};
  // rank 2: determinant a^2 - b
  std::vector<std::vector<Poly>> full{{a, one}, {b, a}};
  // rank 2 although every entry vanishes at 0
  std::vector<std::vector<Poly>> vanishing{{a, Poly(nv)}, {Poly(nv), b}};

  for (bool symbolic : {false, true}) {
    EXPECT_EQ(generic_rank(outer, nv, 1, symbolic).rank, 1u);
    EXPECT_EQ(generic_rank(full, nv, 1, symbolic).rank, 2u);
    EXPECT_EQ(generic_rank(vanishing, nv, 1, symbolic).rank, 2u);
  }
  auto g = generic_rank(outer, nv, 1);
  EXPECT_TRUE(g.symbolic);  // rank-deficient cases always end in elimination
  auto s = generic_rank(full, nv, 1);
  EXPECT_FALSE(s.symbolic);
  ASSERT_EQ(s.witness_point.size(), nv);
  EXPECT_EQ(rational_rank(specialize(full, s.witness_point)), 2u);
}

TEST(GenericRank, SeedIndependent) {
  std::size_t nv = 3;
  Poly x = t(nv, 0), y = t(nv, 1), z = t(nv, 2);
  std::vector<std::vector<Poly>> m{{x, y, z}, {y, z, x}, {z, x, y}, {x + y, y + z, z + x}};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) EXPECT_EQ(generic_rank(m, nv, seed).rank, 3u);
}

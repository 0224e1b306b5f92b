#pragma once

// Fraction-free (Bareiss) elimination over an integral domain.
//
// At step k the pivot is the first nonzero entry of the trailing submatrix
// in row-major order; it is moved to (k, k) by a row and a column swap.
// Every entry below the pivot stays a (k+1)-minor of the permuted input, so
// the division by the previous pivot is exact.

#include "superspherical/matrix.hpp"
#include "superspherical/polynomial.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace ss {

template <class T>
struct DomainTraits;

template <>
struct DomainTraits<Poly> {
  static bool zero(const Poly& p) { return p.is_zero(); }
  static Poly div(const Poly& a, const Poly& b) { return exact_div(a, b); }
  static Poly one(const Poly& like) { return Poly(like.nvars(), 1); }
};

template <>
struct DomainTraits<Integer> {
  static bool zero(const Integer& p) { return p == 0; }
  static Integer div(const Integer& a, const Integer& b) {
    Integer q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
  static Integer one(const Integer&) { return 1; }
};

template <>
struct DomainTraits<Rational> {
  static bool zero(const Rational& p) { return p == 0; }
  static Rational div(const Rational& a, const Rational& b) { return a / b; }
  static Rational one(const Rational&) { return 1; }
};

struct BareissResult {
  std::size_t rank = 0;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // original (row, col)
};

template <class T>
BareissResult bareiss_rank(std::vector<std::vector<T>> m) {
  using Tr = DomainTraits<T>;
  BareissResult res;
  std::size_t rows = m.size();
  if (rows == 0) return res;
  std::size_t cols = m[0].size();
  std::vector<std::size_t> row_id(rows), col_id(cols);
  for (std::size_t i = 0; i < rows; ++i) row_id[i] = i;
  for (std::size_t j = 0; j < cols; ++j) col_id[j] = j;

  T prev = Tr::one(m[0].empty() ? T() : m[0][0]);
  std::size_t k = 0;
  for (; k < rows && k < cols; ++k) {
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows && pr == rows; ++i)
      for (std::size_t j = k; j < cols; ++j)
        if (!Tr::zero(m[i][j])) {
          pr = i;
          pc = j;
          break;
        }
    if (pr == rows) break;
    std::swap(m[k], m[pr]);
    std::swap(row_id[k], row_id[pr]);
    if (pc != k) {
      for (auto& r : m) std::swap(r[k], r[pc]);
      std::swap(col_id[k], col_id[pc]);
    }
    res.pivots.emplace_back(row_id[k], col_id[k]);
    for (std::size_t i = k + 1; i < rows; ++i) {
      for (std::size_t j = k + 1; j < cols; ++j) {
        T t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = Tr::div(t, prev);
      }
      m[i][k] = T();
    }
    prev = m[k][k];
  }
  res.rank = k;
  return res;
}

// Rank over Q(t); each row is cleared of denominators first, which leaves
// the rank unchanged since the multipliers are nonzero.
inline BareissResult rank(const std::vector<std::vector<RationalFunction>>& m) {
  std::vector<std::vector<Poly>> p;
  p.reserve(m.size());
  for (const auto& row : m) {
    Poly mult;
    bool have = false;
    for (const auto& e : row) {
      if (e.is_zero() || e.den().is_constant()) continue;
      mult = have ? mult * e.den() : e.den();
      have = true;
    }
    std::vector<Poly> prow;
    for (const auto& e : row) {
      if (!have) {
        prow.push_back(e.num() * Poly(e.num().nvars(), 1 / e.den().constant_value()));
        continue;
      }
      Poly scaled = exact_div(mult * e.num(), e.den());
      prow.push_back(scaled);
    }
    p.push_back(std::move(prow));
  }
  return bareiss_rank(std::move(p));
}

inline std::vector<std::vector<Rational>> specialize(const std::vector<std::vector<Poly>>& m, const Vec& point) {
  std::vector<std::vector<Rational>> out;
  for (const auto& row : m) {
    std::vector<Rational> r;
    for (const auto& e : row) r.push_back(e.evaluate(point));
    out.push_back(std::move(r));
  }
  return out;
}

inline std::size_t rational_rank(const std::vector<std::vector<Rational>>& m) {
  if (m.empty()) return 0;
  Matrix a(m.size(), m[0].size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) a(i, j) = m[i][j];
  return ss::rank(a);
}

// Seeded sample points with entries in [1, 997].
inline std::vector<Vec> sample_points(std::size_t nvars, std::size_t count, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<long> dist(1, 997);
  std::vector<Vec> pts;
  for (std::size_t s = 0; s < count; ++s) {
    Vec p(nvars);
    for (auto& x : p) x = dist(gen);
    pts.push_back(std::move(p));
  }
  return pts;
}

struct GenericRank {
  std::size_t rank = 0;
  bool symbolic = false;  // true when Bareiss over Q[t] decided it
  Vec witness_point;      // specialization attaining the rank, if any
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
};

// Rank over Q(t) of a polynomial matrix. A specialization of full rank is
// already exact (minors nonzero at a point are nonzero polynomials); any
// other outcome is settled by symbolic elimination.
inline GenericRank generic_rank(const std::vector<std::vector<Poly>>& m, std::size_t nvars, std::uint64_t seed,
                                bool force_symbolic = false) {
  GenericRank g;
  if (m.empty() || m[0].empty()) return g;
  std::size_t cap = std::min(m.size(), m[0].size());
  if (!force_symbolic) {
    for (const auto& pt : sample_points(nvars, 3, seed)) {
      auto sm = specialize(m, pt);
      auto br = bareiss_rank(sm);
      if (br.rank == cap) {
        g.rank = cap;
        g.witness_point = pt;
        g.pivots = br.pivots;
        return g;
      }
    }
  }
  auto br = bareiss_rank(m);
  g.rank = br.rank;
  g.symbolic = true;
  g.pivots = br.pivots;
  return g;
}

}  // namespace ss

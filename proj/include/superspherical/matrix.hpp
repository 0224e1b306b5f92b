#pragma once

#include "superspherical/rational.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ss {

// Dense row-major matrix over Q.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows_(r), cols_(c), a_(r * c) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  // Columns given as vectors of equal length.
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t nrows) {
    Matrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t ncols) {
    Matrix m(rows.size(), ncols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < ncols; ++j) m(i, j) = rows[i][j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const { return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec col(std::size_t j) const {
    Vec v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
    return v;
  }

  bool is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Rational& x) { return x == 0; });
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool operator==(const Matrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Matrix& operator+=(const Matrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  Matrix& operator*=(const Rational& s) {
    for (auto& x : a_) x *= s;
    return *this;
  }

  std::string str() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
      os << "[";
      for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
      os << "]\n";
    }
    return os.str();
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

inline Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
inline Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
inline Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

inline Matrix operator*(const Matrix& a, const Matrix& b) {
  assert(a.cols() == b.rows());
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) c(i, j) += x * b(k, j);
    }
  return c;
}

inline Vec operator*(const Matrix& a, const Vec& v) {
  Vec w(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (a(i, j) != 0 && v[j] != 0) w[i] += a(i, j) * v[j];
  return w;
}

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

// Gauss-Jordan with the first nonzero entry of each column as pivot.
inline Echelon rref(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

inline std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

// Right kernel; one vector per free column, with that coordinate equal to 1.
inline std::vector<Vec> kernel_basis(const Matrix& m) {
  Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    out.push_back(std::move(v));
  }
  return out;
}

// Solve m x = b; returns false when inconsistent.
inline bool solve(const Matrix& m, const Vec& b, Vec& x) {
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return false;
  x.assign(m.cols(), Rational(0));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.reduced(i, m.cols());
  return true;
}

// ---------------------------------------------------------------------------
// Subspaces of Q^n held as lists of spanning vectors.

inline std::size_t span_dim(const std::vector<Vec>& vs, std::size_t n) {
  if (vs.empty()) return 0;
  return rank(Matrix::from_rows(vs, n));
}

// Echelon basis of the span (rows of the reduced form).
inline std::vector<Vec> span_basis(const std::vector<Vec>& vs, std::size_t n) {
  std::vector<Vec> out;
  if (vs.empty()) return out;
  Echelon e = rref(Matrix::from_rows(vs, n));
  for (std::size_t i = 0; i < e.pivots.size(); ++i) out.push_back(e.reduced.row(i));
  return out;
}

// Greedy selection of an independent subset, preserving input order.
inline std::vector<Vec> independent_subset(const std::vector<Vec>& vs, std::size_t n) {
  std::vector<Vec> out;
  for (const auto& v : vs) {
    out.push_back(v);
    if (span_dim(out, n) < out.size()) out.pop_back();
  }
  return out;
}

inline bool in_span(const std::vector<Vec>& basis, const Vec& v, std::size_t n) {
  if (is_zero(v)) return true;
  if (basis.empty()) return false;
  std::vector<Vec> ext = basis;
  ext.push_back(v);
  return span_dim(ext, n) == span_dim(basis, n);
}

inline bool contains_span(const std::vector<Vec>& big, const std::vector<Vec>& small, std::size_t n) {
  std::vector<Vec> ext = big;
  ext.insert(ext.end(), small.begin(), small.end());
  return span_dim(ext, n) == span_dim(big, n);
}

// Coordinates of v in an independent list; false if v is outside the span.
inline bool coordinates(const std::vector<Vec>& basis, const Vec& v, std::size_t n, Vec& c) {
  if (basis.empty()) {
    c.clear();
    return is_zero(v);
  }
  return solve(Matrix::from_columns(basis, n), v, c);
}

inline std::vector<Vec> intersect(const std::vector<Vec>& u, const std::vector<Vec>& w, std::size_t n) {
  if (u.empty() || w.empty()) return {};
  // [U | -W] (a;b) = 0  =>  U a lies in both.
  std::vector<Vec> cols = u;
  for (const auto& x : w) cols.push_back(Rational(-1) * x);
  std::vector<Vec> out;
  for (const auto& k : kernel_basis(Matrix::from_columns(cols, n))) {
    Vec v(n);
    for (std::size_t i = 0; i < u.size(); ++i) axpy(v, k[i], u[i]);
    out.push_back(std::move(v));
  }
  return span_basis(out, n);
}

inline std::optional<Matrix> inverse(const Matrix& m) {
  std::size_t n = m.rows();
  if (n != m.cols()) return std::nullopt;
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  Echelon e = rref(aug);
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

}  // namespace ss

#pragma once

// Exact scalars. gmpxx keeps mpq_class canonical after every arithmetic
// operation; construction from a raw pair goes through make_rational.

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace ss {

using Integer = mpz_class;
using Rational = mpq_class;
using Vec = std::vector<Rational>;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) {
  return make_rational(Integer(num), Integer(den));
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline bool is_zero(const Vec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n);
  v[i] = 1;
  return v;
}

inline Vec& axpy(Vec& y, const Rational& a, const Vec& x) {
  if (a == 0) return y;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (x[i] != 0) y[i] += a * x[i];
  return y;
}

inline Vec operator+(Vec a, const Vec& b) { return axpy(a, 1, b); }
inline Vec operator-(Vec a, const Vec& b) { return axpy(a, -1, b); }
inline Vec operator*(const Rational& s, Vec a) {
  for (auto& x : a) x *= s;
  return a;
}

inline Rational dot(const Vec& a, const Vec& b) {
  Rational s;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// Scale so the first nonzero entry is 1.
inline Vec normalize_leading(Vec v) {
  for (const auto& x : v)
    if (x != 0) {
      Rational inv = 1 / x;
      for (auto& y : v) y *= inv;
      break;
    }
  return v;
}

}  // namespace ss

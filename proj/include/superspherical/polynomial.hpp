#pragma once

// Sparse multivariate polynomials over Q and the field Q(t1..tk) built on them.

#include "superspherical/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ss {

class Poly {
 public:
  using Mono = std::vector<int>;
  using Terms = std::map<Mono, Rational>;  // lex order; leading term is the last

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}
  Poly(std::size_t nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_[Mono(nvars, 0)] = c;
  }

  static Poly variable(std::size_t nvars, std::size_t i) {
    Poly p(nvars);
    Mono m(nvars, 0);
    m[i] = 1;
    p.terms_[m] = 1;
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
  }
  Rational constant_value() const {
    auto it = terms_.find(Mono(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Mono& leading_mono() const { return terms_.rbegin()->first; }
  const Rational& leading_coeff() const { return terms_.rbegin()->second; }

  int degree() const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, total_degree(m));
    return d;
  }

  void add_term(const Mono& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Poly& operator+=(const Poly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    adopt(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  Poly& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [m, c] : terms_) c *= s;
    return *this;
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    Poly r(std::max(a.nvars_, b.nvars_));
    if (a.is_zero() || b.is_zero()) return r;
    Mono m(r.nvars_);
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) {
        for (std::size_t i = 0; i < r.nvars_; ++i) m[i] = ma[i] + mb[i];
        r.add_term(m, ca * cb);
      }
    return r;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Exact quotient; throws if b does not divide a.
  friend Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    Poly q(std::max(a.nvars_, b.nvars_));
    if (b.is_constant()) {
      q = a;
      q *= 1 / b.constant_value();
      return q;
    }
    Poly r = a;
    const Mono& lb = b.leading_mono();
    Rational lc_inv = 1 / b.leading_coeff();
    Mono t(q.nvars_);
    while (!r.is_zero()) {
      const Mono& lr = r.leading_mono();
      for (std::size_t i = 0; i < q.nvars_; ++i) {
        t[i] = lr[i] - lb[i];
        if (t[i] < 0) throw std::domain_error("inexact polynomial division");
      }
      Rational c = r.leading_coeff() * lc_inv;
      q.add_term(t, c);
      for (const auto& [mb, cb] : b.terms_) {
        Mono m(q.nvars_);
        for (std::size_t i = 0; i < q.nvars_; ++i) m[i] = t[i] + mb[i];
        r.add_term(m, -c * cb);
      }
    }
    return q;
  }

  Rational evaluate(const Vec& point) const {
    Rational s;
    for (const auto& [m, c] : terms_) {
      Rational v = c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (int e = 0; e < m[i]; ++e) v *= point[i];
      s += v;
    }
    return s;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [m, c] = *it;
      Rational a = c;
      if (!first) os << (a < 0 ? " - " : " + ");
      else if (a < 0) os << "-";
      first = false;
      a = abs(a);
      bool unit = total_degree(m) > 0 && a == 1;
      if (!unit) os << a.get_str();
      bool star = !unit;
      for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        os << (star ? "*" : "") << "t" << (i + 1);
        if (m[i] > 1) os << "^" << m[i];
        star = true;
      }
    }
    return os.str();
  }

 private:
  static int total_degree(const Mono& m) {
    int d = 0;
    for (int e : m) d += e;
    return d;
  }
  void adopt(const Poly& o) {
    if (o.nvars_ > nvars_) {
      Terms t;
      for (auto& [m, c] : terms_) {
        Mono w = m;
        w.resize(o.nvars_, 0);
        t.emplace(std::move(w), c);
      }
      terms_ = std::move(t);
      nvars_ = o.nvars_;
    }
  }

  std::size_t nvars_ = 0;
  Terms terms_;
};

// Element of Q(t1..tk); the denominator is kept monic in lex order.
class RationalFunction {
 public:
  RationalFunction() : num_(0), den_(0, 1) {}
  RationalFunction(const Poly& num) : num_(num), den_(num.nvars(), 1) {}  // NOLINT
  RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    normalize();
  }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw std::domain_error("division by zero rational function");
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  Rational evaluate(const Vec& point) const {
    Rational d = den_.evaluate(point);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.evaluate(point) / d;
  }

  std::string str() const {
    if (den_.is_constant()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  void normalize() {
    if (num_.is_zero()) {
      den_ = Poly(den_.nvars(), 1);
      return;
    }
    Rational lc = den_.leading_coeff();
    if (lc != 1) {
      num_ *= 1 / lc;
      den_ *= 1 / lc;
    }
  }

  Poly num_, den_;
};

}  // namespace ss

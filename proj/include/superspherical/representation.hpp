#pragma once

// Finite-dimensional representations with exact action matrices.

#include "superspherical/hyperborel.hpp"

#include <string>
#include <vector>

namespace ss {

struct Representation {
  AlgebraPtr g;
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> parity;
  std::vector<Matrix> action;  // one matrix per basis element of g

  std::size_t dim() const { return parity.size(); }
  std::size_t even_dim() const { return std::count(parity.begin(), parity.end(), 0); }
  std::size_t odd_dim() const { return dim() - even_dim(); }
  SuperVectorSpace space() const { return {even_dim(), odd_dim(), labels, parity}; }
  std::string super_dim() const {
    return "(" + std::to_string(even_dim()) + "|" + std::to_string(odd_dim()) + ")";
  }

  Matrix act(const Vec& x) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i] != 0) m += x[i] * action[i];
    return m;
  }
};

// Empty on success, else the first failing basis pair.
inline std::string check_module(const Representation& v) {
  const auto& g = *v.g;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const Matrix& a = v.action[i];
    for (std::size_t r = 0; r < v.dim(); ++r)
      for (std::size_t c = 0; c < v.dim(); ++c)
        if (a(r, c) != 0 && (v.parity[r] ^ v.parity[c]) != g.parity[i])
          return "action of " + g.labels[i] + " is not parity-homogeneous";
  }
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) {
      Matrix lhs(v.dim(), v.dim());
      for (const auto& [k, c] : g.table[i][j]) lhs += c * v.action[k];
      if (lhs != supercommutator(v.action[i], g.parity[i], v.action[j], g.parity[j]))
        return "module axiom fails on " + g.labels[i] + ", " + g.labels[j];
    }
  return {};
}

inline Representation standard_rep(AlgebraPtr g) {
  if (!g->realization) throw std::invalid_argument(g->name + " has no matrix realization");
  const auto& r = *g->realization;
  Representation v;
  v.g = g;
  v.name = "standard";
  for (std::size_t a = 0; a < r.size(); ++a) {
    v.parity.push_back(r.position_parity(a));
    v.labels.push_back("v" + std::to_string(a + 1));
  }
  v.action = r.basis;
  return v;
}

inline Representation trivial_rep(AlgebraPtr g) {
  Representation v;
  v.g = g;
  v.name = "trivial";
  v.parity = {0};
  v.labels = {"1"};
  v.action.assign(g->dim(), Matrix(1, 1));
  return v;
}

inline Representation adjoint_rep(AlgebraPtr g) {
  Representation v;
  v.g = g;
  v.name = "adjoint";
  v.parity = g->parity;
  v.labels = g->labels;
  for (std::size_t i = 0; i < g->dim(); ++i) v.action.push_back(g->ad(g->unit(i)));
  return v;
}

inline Representation pi_shift(const Representation& v) {
  Representation w = v;
  w.name = "Pi(" + v.name + ")";
  for (auto& p : w.parity) p ^= 1;
  return w;
}

// (x phi)(v) = -(-1)^{|x||phi|} phi(x v) on the dual basis.
inline Representation dual(const Representation& v) {
  Representation w;
  w.g = v.g;
  w.name = v.name + "*";
  w.parity = v.parity;
  for (const auto& l : v.labels) w.labels.push_back(l + "*");
  std::size_t n = v.dim();
  for (std::size_t i = 0; i < v.g->dim(); ++i) {
    int px = v.g->parity[i];
    Matrix d(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        const Rational& a = v.action[i](c, r);
        if (a == 0) continue;
        d(r, c) = (px & v.parity[c]) ? a : Rational(-a);
      }
    w.action.push_back(std::move(d));
  }
  return w;
}

// x(v (x) w) = xv (x) w + (-1)^{|x||v|} v (x) xw; basis index i*dim(W)+j.
inline Representation tensor(const Representation& v, const Representation& w) {
  Representation t;
  t.g = v.g;
  t.name = v.name + "(x)" + w.name;
  std::size_t n = v.dim(), m = w.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      t.parity.push_back(v.parity[i] ^ w.parity[j]);
      t.labels.push_back(v.labels[i] + "." + w.labels[j]);
    }
  for (std::size_t x = 0; x < v.g->dim(); ++x) {
    int px = v.g->parity[x];
    Matrix a(n * m, n * m);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < m; ++j) {
        std::size_t col = i * m + j;
        for (std::size_t k = 0; k < n; ++k)
          if (v.action[x](k, i) != 0) a(k * m + j, col) += v.action[x](k, i);
        Rational s = (px & v.parity[i]) ? -1 : 1;
        for (std::size_t l = 0; l < m; ++l)
          if (w.action[x](l, j) != 0) a(i * m + l, col) += s * w.action[x](l, j);
      }
    t.action.push_back(std::move(a));
  }
  return t;
}

// Super-symmetric square: monomials v_i v_j (i <= j, i < j when v_i is odd)
// in the free supercommutative algebra on V.
inline Representation sym2(const Representation& v) {
  Representation s;
  s.g = v.g;
  s.name = "S2(" + v.name + ")";
  std::size_t n = v.dim();
  std::vector<std::vector<long>> index(n, std::vector<long>(n, -1));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && v.parity[i]) continue;
      index[i][j] = static_cast<long>(s.parity.size());
      s.parity.push_back(v.parity[i] ^ v.parity[j]);
      s.labels.push_back(v.labels[i] + "." + v.labels[j]);
    }
  // v_a v_b as (+-1, index) or zero
  auto product = [&](std::size_t a, std::size_t b, Rational& sign) -> long {
    if (a == b && v.parity[a]) return -1;
    sign = 1;
    if (a > b) {
      if (v.parity[a] & v.parity[b]) sign = -1;
      std::swap(a, b);
    }
    return index[a][b];
  };
  for (std::size_t x = 0; x < v.g->dim(); ++x) {
    int px = v.g->parity[x];
    const Matrix& a = v.action[x];
    Matrix m(s.dim(), s.dim());
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        long col = index[i][j];
        if (col < 0) continue;
        for (std::size_t k = 0; k < n; ++k) {
          Rational sg;
          if (a(k, i) != 0) {
            long row = product(k, j, sg);
            if (row >= 0) m(row, col) += sg * a(k, i);
          }
          if (a(k, j) != 0) {
            long row = product(i, k, sg);
            Rational koszul = (px & v.parity[i]) ? -1 : 1;
            if (row >= 0) m(row, col) += koszul * sg * a(k, j);
          }
        }
      }
    s.action.push_back(std::move(m));
  }
  return s;
}

// V (x) W as a representation of g1 + g2.
inline Representation external_tensor(const Representation& v, const Representation& w) {
  DirectSumMaps maps;
  auto sum = std::make_shared<const LieSuperalgebra>(direct_sum(*v.g, *w.g, &maps));
  std::size_t n = v.dim(), m = w.dim();
  Representation t;
  t.g = sum;
  t.name = v.name + "[x]" + w.name;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      t.parity.push_back(v.parity[i] ^ w.parity[j]);
      t.labels.push_back(v.labels[i] + "." + w.labels[j]);
    }
  t.action.assign(sum->dim(), Matrix(n * m, n * m));
  for (std::size_t x = 0; x < v.g->dim(); ++x) {
    Matrix& a = t.action[maps.first[x]];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (v.action[x](k, i) != 0)
          for (std::size_t j = 0; j < m; ++j) a(k * m + j, i * m + j) = v.action[x](k, i);
  }
  for (std::size_t x = 0; x < w.g->dim(); ++x) {
    int px = w.g->parity[x];
    Matrix& a = t.action[maps.second[x]];
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = (px & v.parity[i]) ? -1 : 1;
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t l = 0; l < m; ++l)
          if (w.action[x](l, j) != 0) a(i * m + l, i * m + j) = s * w.action[x](l, j);
    }
  }
  return t;
}

// gl(1|0), the scalars.
inline LieSuperalgebra scalars() {
  LieSuperalgebra c = gl(1, 0);
  c.name = "C";
  c.labels = {"z"};
  c.coord_names = {"c"};
  return c;
}

// V as a representation of g + C with the extra summand acting by 1.
inline Representation with_scalars(const Representation& v) {
  auto c = std::make_shared<const LieSuperalgebra>(scalars());
  Representation one;
  one.g = c;
  one.name = "1";
  one.parity = {0};
  one.labels = {"1"};
  Matrix id(1, 1);
  id(0, 0) = 1;
  one.action = {id};
  Representation t = external_tensor(v, one);
  t.name = v.name;
  t.labels = v.labels;
  return t;
}

// ---------------------------------------------------------------------------
// Highest weight vectors.

struct HighestWeightSpace {
  Weight weight;
  std::vector<Vec> vectors;
  std::size_t even = 0, odd = 0;
};

// Weights of h0 on V when V's basis consists of weight vectors.
inline std::optional<std::vector<Weight>> basis_weights(const Representation& v, const std::vector<Vec>& h0) {
  std::vector<Matrix> hs;
  for (const auto& h : h0) hs.push_back(v.act(h));
  std::vector<Weight> out(v.dim());
  for (std::size_t c = 0; c < v.dim(); ++c)
    for (const auto& m : hs) {
      for (std::size_t r = 0; r < v.dim(); ++r)
        if (r != c && m(r, c) != 0) return std::nullopt;
      out[c].push_back(m(c, c));
    }
  return out;
}

// Joint kernel of the given operators inside the span of basis vectors of parity p.
inline std::vector<Vec> joint_kernel_of_parity(const std::vector<Matrix>& ops, const std::vector<int>& parity, int p) {
  std::size_t n = parity.size();
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < n; ++i)
    if (parity[i] == p) cols.push_back(i);
  if (cols.empty()) return {};
  Matrix stack(ops.size() * n, cols.size());
  for (std::size_t t = 0; t < ops.size(); ++t)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < cols.size(); ++c) stack(t * n + r, c) = ops[t](r, cols[c]);
  std::vector<Vec> out;
  for (const auto& k : kernel_basis(stack)) {
    Vec v(n);
    for (std::size_t c = 0; c < cols.size(); ++c) v[cols[c]] = k[c];
    out.push_back(std::move(v));
  }
  return out;
}

// b-eigenvectors: killed by n and by the odd part of b, h0-homogeneous.
inline std::vector<HighestWeightSpace> highest_weight_spaces(const Representation& v, const Hyperborel& b) {
  std::vector<Matrix> kill;
  for (const auto& x : b.n) kill.push_back(v.act(x));
  for (const auto& x : b.b1) kill.push_back(v.act(x));
  std::vector<Matrix> hs;
  for (const auto& h : b.h0()) hs.push_back(v.act(h));
  std::map<Weight, HighestWeightSpace> by_weight;
  for (int p = 0; p < 2; ++p) {
    auto ker = joint_kernel_of_parity(kill, v.parity, p);
    if (ker.empty()) continue;
    auto parts = joint_eigenspaces(hs, ker, v.dim());
    if (!parts) throw std::logic_error("h0 does not act diagonalizably over Q on " + v.name);
    for (auto& part : *parts) {
      if (part.weight.empty()) part.weight.assign(hs.size(), Rational(0));
      auto& slot = by_weight[part.weight];
      slot.weight = part.weight;
      for (auto& vec : part.basis) slot.vectors.push_back(normalize_leading(vec));
      (p ? slot.odd : slot.even) += part.basis.size();
    }
  }
  std::vector<HighestWeightSpace> out;
  for (auto& [w, s] : by_weight) out.push_back(std::move(s));
  return out;
}

// Representations by name: standard, trivial, adjoint, S2 and their shifts/duals.
inline Representation rep_by_name(AlgebraPtr g, const std::string& name) {
  if (name == "standard") return standard_rep(g);
  if (name == "trivial") return trivial_rep(g);
  if (name == "adjoint") return adjoint_rep(g);
  if (name == "dual") return dual(standard_rep(g));
  if (name == "S2") return sym2(standard_rep(g));
  if (name == "Pi" || name == "Pistandard") return pi_shift(standard_rep(g));
  if (name == "PiS2") return pi_shift(sym2(standard_rep(g)));
  if (name == "Pidual") return pi_shift(dual(standard_rep(g)));
  throw std::invalid_argument("unknown representation: " + name);
}

}  // namespace ss

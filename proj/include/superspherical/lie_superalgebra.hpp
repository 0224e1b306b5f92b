#pragma once

// Finite-dimensional Lie superalgebras with exact structure constants.

#include "superspherical/matrix.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ss {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;
using Weight = std::vector<Rational>;

struct SuperVectorSpace {
  std::size_t even_dim = 0, odd_dim = 0;
  std::vector<std::string> labels;
  std::vector<int> parity;
  std::size_t dim() const { return parity.size(); }
};

// Supercommutator of homogeneous matrices.
inline Matrix supercommutator(const Matrix& x, int px, const Matrix& y, int py) {
  Matrix xy = x * y, yx = y * x;
  return (px & py) ? xy + yx : xy - yx;
}

// Embedding of the basis into gl(even|odd) together with a left inverse on
// a fixed set of pivot entries.
struct MatrixRealization {
  std::size_t even = 0, odd = 0;
  std::vector<Matrix> basis;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;
  Matrix solve_map;  // coords = solve_map * (entries at pivots)

  std::size_t size() const { return even + odd; }
  int position_parity(std::size_t a) const { return a < even ? 0 : 1; }

  void prepare() {
    std::size_t n = size(), d = basis.size();
    Matrix a(d, n * n);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(k, i * n + j) = basis[k](i, j);
    Echelon e = rref(a);
    if (e.pivots.size() != d) throw std::logic_error("matrix basis is linearly dependent");
    Matrix s(d, d);
    pivots.clear();
    for (std::size_t c = 0; c < d; ++c) {
      std::size_t p = e.pivots[c];
      pivots.emplace_back(p / n, p % n);
      for (std::size_t k = 0; k < d; ++k) s(k, c) = a(k, p);
    }
    auto inv = inverse(s);
    solve_map = inv->transpose();
  }

  // Coordinates of x; nullopt when x is not in the span.
  std::optional<Vec> coords(const Matrix& x) const {
    Vec xp(pivots.size());
    for (std::size_t c = 0; c < pivots.size(); ++c) xp[c] = x(pivots[c].first, pivots[c].second);
    Vec c = solve_map * xp;
    if (to_matrix(c) != x) return std::nullopt;
    return c;
  }

  Matrix to_matrix(const Vec& c) const {
    Matrix m(size(), size());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k] != 0) m += c[k] * basis[k];
    return m;
  }
};

class LieSuperalgebra {
 public:
  std::string name;
  std::vector<std::string> labels;
  std::vector<int> parity;                 // even basis elements come first
  std::vector<std::vector<SparseVec>> table;  // table[i][j] = [b_i, b_j]
  std::vector<std::size_t> cartan;         // basis indices spanning h0
  std::vector<std::string> coord_names;    // one weight coordinate per cartan element
  std::optional<MatrixRealization> realization;

  std::size_t dim() const { return parity.size(); }
  std::size_t even_dim() const { return std::count(parity.begin(), parity.end(), 0); }
  std::size_t odd_dim() const { return dim() - even_dim(); }

  SuperVectorSpace space() const { return {even_dim(), odd_dim(), labels, parity}; }

  Vec unit(std::size_t i) const { return unit_vec(dim(), i); }

  Vec bracket(const Vec& x, const Vec& y) const {
    Vec r(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) continue;
        Rational c = x[i] * y[j];
        for (const auto& [k, v] : table[i][j]) r[k] += c * v;
      }
    }
    return r;
  }

  // Matrix of ad(x) acting on coordinate columns.
  Matrix ad(const Vec& x) const {
    Matrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j)
        for (const auto& [k, v] : table[i][j]) m(k, j) += x[i] * v;
    }
    return m;
  }

  // 0 or 1 for homogeneous nonzero vectors, -1 otherwise; zero counts as even.
  int parity_of(const Vec& x) const {
    bool ev = false, od = false;
    for (std::size_t i = 0; i < dim(); ++i)
      if (x[i] != 0) (parity[i] ? od : ev) = true;
    if (ev && od) return -1;
    return od ? 1 : 0;
  }

  std::vector<std::size_t> indices_of_parity(int p) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < dim(); ++i)
      if (parity[i] == p) out.push_back(i);
    return out;
  }

  std::string super_dim() const {
    return "(" + std::to_string(even_dim()) + "|" + std::to_string(odd_dim()) + ")";
  }
};

using AlgebraPtr = std::shared_ptr<const LieSuperalgebra>;

inline SparseVec to_sparse(const Vec& v) {
  SparseVec s;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) s.emplace_back(k, v[k]);
  return s;
}

// Structure constants from a matrix basis; throws if the span is not closed.
inline void fill_table_from_realization(LieSuperalgebra& g) {
  const auto& r = *g.realization;
  std::size_t d = g.dim();
  g.table.assign(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Matrix br = supercommutator(r.basis[i], g.parity[i], r.basis[j], g.parity[j]);
      if (br.is_zero()) continue;
      auto c = r.coords(br);
      if (!c) throw std::logic_error(g.name + ": basis span is not closed under the bracket");
      g.table[i][j] = to_sparse(*c);
    }
}

// ---------------------------------------------------------------------------
// Weight formatting.

inline std::string weight_str(const Weight& w, const std::vector<std::string>& names) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t c = 0; c < w.size(); ++c) {
    if (w[c] == 0) continue;
    Rational a = w[c];
    if (a < 0) os << "-";
    else if (!first) os << "+";
    a = abs(a);
    if (a != 1) os << a.get_str();
    os << (c < names.size() ? names[c] : "w" + std::to_string(c + 1));
    first = false;
  }
  return first ? "0" : os.str();
}

inline bool is_zero_weight(const Weight& w) {
  return std::all_of(w.begin(), w.end(), [](const Rational& x) { return x == 0; });
}

// ---------------------------------------------------------------------------
// Matrix algebras cut out of gl(m|n) as fixed points of a linear map.
//
// pos_weight[a] is the h0-weight of the a-th standard basis vector; the map
// must commute with h0 so the fixed points split into weight spaces, each
// solved separately. Weight-zero even solutions form the Cartan h0.

using MatrixMap = std::function<Matrix(const Matrix&)>;

inline Matrix unit_matrix(std::size_t n, std::size_t i, std::size_t j) {
  Matrix m(n, n);
  m(i, j) = 1;
  return m;
}

inline LieSuperalgebra fixed_point_algebra(const std::string& name, std::size_t m, std::size_t n,
                                           const std::vector<Weight>& pos_weight, const MatrixMap& theta,
                                           const std::vector<std::string>& coord_names,
                                           bool gl_labels = false) {
  std::size_t N = m + n;
  auto ppar = [&](std::size_t a) { return a < m ? 0 : 1; };
  std::map<std::pair<int, Weight>, std::vector<std::size_t>> groups;  // unit index i*N+j
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Weight w = pos_weight[i];
      for (std::size_t c = 0; c < w.size(); ++c) w[c] -= pos_weight[j][c];
      groups[{ppar(i) ^ ppar(j), w}].push_back(i * N + j);
    }

  struct Elem {
    int parity;
    bool zero_weight;
    std::size_t lead;
    Matrix mat;
    Weight w;
  };
  std::vector<Elem> elems;
  for (const auto& [key, units] : groups) {
    std::vector<Vec> cols;
    for (auto u : units) {
      Matrix e = unit_matrix(N, u / N, u % N);
      Matrix d = theta(e) - e;
      Vec v(N * N);
      for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) v[i * N + j] = d(i, j);
      cols.push_back(std::move(v));
    }
    for (auto& k : kernel_basis(Matrix::from_columns(cols, N * N))) {
      k = normalize_leading(k);
      Matrix x(N, N);
      std::size_t lead = SIZE_MAX;
      for (std::size_t t = 0; t < units.size(); ++t) {
        if (k[t] == 0) continue;
        x(units[t] / N, units[t] % N) = k[t];
        lead = std::min(lead, units[t]);
      }
      elems.push_back({key.first, is_zero_weight(key.second), lead, std::move(x), key.second});
    }
  }
  std::sort(elems.begin(), elems.end(), [](const Elem& a, const Elem& b) {
    if (a.parity != b.parity) return a.parity < b.parity;
    if (a.zero_weight != b.zero_weight) return a.zero_weight;
    return a.lead < b.lead;
  });

  LieSuperalgebra g;
  g.name = name;
  g.coord_names = coord_names;
  MatrixRealization r;
  r.even = m;
  r.odd = n;
  std::map<Weight, int> seen;
  std::size_t hcount = 0, hbar = 0;
  for (std::size_t idx = 0; idx < elems.size(); ++idx) {
    const auto& e = elems[idx];
    std::string label;
    if (gl_labels) {
      label = "E(" + std::to_string(e.lead / N + 1) + "," + std::to_string(e.lead % N + 1) + ")";
    } else if (e.zero_weight) {
      label = e.parity ? "hbar" + std::to_string(++hbar) : "h" + std::to_string(++hcount);
    } else {
      label = "x[" + weight_str(e.w, coord_names) + "]";
      int c = ++seen[e.w];
      if (c > 1) label += "#" + std::to_string(c);
    }
    if (e.parity == 0 && e.zero_weight) g.cartan.push_back(idx);
    g.labels.push_back(label);
    g.parity.push_back(e.parity);
    r.basis.push_back(e.mat);
  }
  r.prepare();
  g.realization = std::move(r);
  fill_table_from_realization(g);
  return g;
}

// ---------------------------------------------------------------------------
// Families.

inline LieSuperalgebra gl(std::size_t m, std::size_t n) {
  if (m + n == 0) throw std::invalid_argument("gl(m|n) requires m + n >= 1");
  std::size_t N = m + n;
  std::vector<Weight> pw(N, Weight(N));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < N; ++a) {
    pw[a][a] = 1;
    names.push_back(a < m ? "e" + std::to_string(a + 1) : "d" + std::to_string(a - m + 1));
  }
  std::string nm = "gl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return fixed_point_algebra(nm, m, n, pw, [](const Matrix& x) { return x; }, names, true);
}

// Derived subalgebra of gl(m|n): off-diagonal units plus supertrace-free
// diagonal matrices h_a = E_aa + s E_{a+1,a+1}.
inline LieSuperalgebra sl(std::size_t m, std::size_t n) {
  std::size_t N = m + n;
  if (N < 2) throw std::invalid_argument("sl(m|n) requires m + n >= 2");
  auto str_sign = [&](std::size_t a) { return a < m ? 1 : -1; };
  LieSuperalgebra g;
  g.name = "sl(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  MatrixRealization r;
  r.even = m;
  r.odd = n;
  struct E {
    int parity;
    int kind;  // 0 cartan, 1 root
    std::size_t order;
    Matrix mat;
    std::string label;
  };
  std::vector<E> es;
  for (std::size_t a = 0; a + 1 < N; ++a) {
    Matrix h(N, N);
    h(a, a) = 1;
    h(a + 1, a + 1) = -str_sign(a) * str_sign(a + 1);
    es.push_back({0, 0, a, h, "h" + std::to_string(a + 1)});
    g.coord_names.push_back("w" + std::to_string(a + 1));
  }
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) {
        int p = (i < m) != (j < m);
        es.push_back({p, 1, i * N + j, unit_matrix(N, i, j),
                      "E(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"});
      }
  std::stable_sort(es.begin(), es.end(), [](const E& x, const E& y) {
    if (x.parity != y.parity) return x.parity < y.parity;
    if (x.kind != y.kind) return x.kind < y.kind;
    return x.order < y.order;
  });
  for (std::size_t i = 0; i < es.size(); ++i) {
    if (es[i].kind == 0) g.cartan.push_back(i);
    g.labels.push_back(es[i].label);
    g.parity.push_back(es[i].parity);
    r.basis.push_back(es[i].mat);
  }
  r.prepare();
  g.realization = std::move(r);
  fill_table_from_realization(g);
  return g;
}

// Super transpose [[A,B],[C,D]] -> [[A^T, C^T], [-B^T, D^T]].
inline Matrix super_transpose(const Matrix& x, std::size_t m) {
  std::size_t N = x.rows();
  Matrix t(N, N);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      Rational v = x(j, i);
      if (i >= m && j < m) v = -v;  // lower-left of the result comes from B
      t(i, j) = v;
    }
  return t;
}

// theta_J(X) = -J^{-1} X^{st} J; its fixed points preserve the form J.
inline MatrixMap form_involution(const Matrix& J, std::size_t m) {
  Matrix Jinv = *inverse(J);
  return [J, Jinv, m](const Matrix& x) { return Rational(-1) * (Jinv * super_transpose(x, m) * J); };
}

// Ordered weight basis of C^{m|n} for osp: e_1..e_k, e_-1..e_-k, (e_0),
// f_1..f_l, f_-1..f_-l, with l = n/2.
struct OspLayout {
  std::size_t m, n, k, l;
  bool has_zero;
  Matrix form;                       // even supersymmetric form
  std::vector<Weight> pos_weight;    // coordinates e1..ek, d1..dl
  std::vector<std::string> names;
};

inline OspLayout osp_layout(std::size_t m, std::size_t n) {
  OspLayout L{m, n, m / 2, n / 2, m % 2 == 1, Matrix(m + n, m + n), {}, {}};
  std::size_t r = L.k + L.l;
  for (std::size_t i = 0; i < L.k; ++i) L.names.push_back("e" + std::to_string(i + 1));
  for (std::size_t j = 0; j < L.l; ++j) L.names.push_back("d" + std::to_string(j + 1));
  L.pos_weight.assign(m + n, Weight(r));
  for (std::size_t i = 0; i < L.k; ++i) {
    L.pos_weight[i][i] = 1;
    L.pos_weight[L.k + i][i] = -1;
    L.form(i, L.k + i) = 1;
    L.form(L.k + i, i) = 1;
  }
  if (L.has_zero) L.form(2 * L.k, 2 * L.k) = 1;
  for (std::size_t j = 0; j < L.l; ++j) {
    std::size_t a = m + j, b = m + L.l + j;
    L.pos_weight[a][L.k + j] = 1;
    L.pos_weight[b][L.k + j] = -1;
    L.form(a, b) = 1;
    L.form(b, a) = -1;
  }
  return L;
}

inline LieSuperalgebra osp(std::size_t m, std::size_t n) {
  if (n % 2 != 0) throw std::invalid_argument("osp(m|n) requires even symplectic rank n");
  if (m + n == 0) throw std::invalid_argument("osp(m|n) requires m + n >= 1");
  auto L = osp_layout(m, n);
  std::string nm = "osp(" + std::to_string(m) + "|" + std::to_string(n) + ")";
  return fixed_point_algebra(nm, m, n, L.pos_weight, form_involution(L.form, m), L.names);
}

// p(n): matrices [[A, B], [C, -A^T]] with B symmetric and C skew, i.e. the
// fixed points of theta_J for the odd form J = [[0, I], [I, 0]].
inline Matrix odd_form(std::size_t n) {
  Matrix J(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    J(i, n + i) = 1;
    J(n + i, i) = 1;
  }
  return J;
}

inline std::vector<Weight> pe_weights(std::size_t n, int odd_sign) {
  std::vector<Weight> pw(2 * n, Weight(n));
  for (std::size_t i = 0; i < n; ++i) {
    pw[i][i] = 1;
    pw[n + i][i] = odd_sign;
  }
  return pw;
}

inline std::vector<std::string> e_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
  return names;
}

inline LieSuperalgebra pe(std::size_t n) {
  if (n < 1) throw std::invalid_argument("p(n) requires n >= 1");
  return fixed_point_algebra("p(" + std::to_string(n) + ")", n, n, pe_weights(n, -1),
                             form_involution(odd_form(n), n), e_names(n));
}

// Conjugation by the block swap [[0, I], [I, 0]].
inline MatrixMap block_swap(std::size_t n) {
  return [n](const Matrix& x) {
    Matrix y(2 * n, 2 * n);
    for (std::size_t i = 0; i < 2 * n; ++i)
      for (std::size_t j = 0; j < 2 * n; ++j) y((i + n) % (2 * n), (j + n) % (2 * n)) = x(i, j);
    return y;
  };
}

// q(n): matrices [[A, B], [B, A]].
inline LieSuperalgebra qn(std::size_t n) {
  if (n < 1) throw std::invalid_argument("q(n) requires n >= 1");
  return fixed_point_algebra("q(" + std::to_string(n) + ")", n, n, pe_weights(n, 1), block_swap(n), e_names(n));
}

enum class Family { gl, sl, osp, p, q };

inline Family parse_family(const std::string& s) {
  if (s == "gl") return Family::gl;
  if (s == "sl") return Family::sl;
  if (s == "osp") return Family::osp;
  if (s == "p" || s == "pe") return Family::p;
  if (s == "q") return Family::q;
  throw std::invalid_argument("unknown family: " + s);
}

// For p and q only n is used.
inline LieSuperalgebra construct(Family f, std::size_t m, std::size_t n) {
  switch (f) {
    case Family::gl: return gl(m, n);
    case Family::sl: return sl(m, n);
    case Family::osp: return osp(m, n);
    case Family::p: return pe(n);
    case Family::q: return qn(n);
  }
  throw std::invalid_argument("unknown family");
}

// ---------------------------------------------------------------------------
// Functors.

// Odd-odd brackets set to zero.
inline LieSuperalgebra associated_graded(const LieSuperalgebra& g) {
  LieSuperalgebra h = g;
  h.name = "gr(" + g.name + ")";
  h.realization.reset();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      if (g.parity[i] && g.parity[j]) h.table[i][j].clear();
  return h;
}

struct DirectSumMaps {
  std::vector<std::size_t> first, second;  // basis index of each summand's basis in the sum
};

// Even parts of both summands first, then odd parts.
inline LieSuperalgebra direct_sum(const LieSuperalgebra& a, const LieSuperalgebra& b, DirectSumMaps* maps = nullptr) {
  LieSuperalgebra s;
  s.name = a.name + "+" + b.name;
  std::vector<std::size_t> ia(a.dim()), ib(b.dim());
  std::size_t pos = 0;
  for (int p = 0; p < 2; ++p) {
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (a.parity[i] == p) ia[i] = pos++;
    for (std::size_t i = 0; i < b.dim(); ++i)
      if (b.parity[i] == p) ib[i] = pos++;
  }
  std::size_t d = pos;
  s.labels.resize(d);
  s.parity.resize(d);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    s.labels[ia[i]] = a.labels[i] + "_1";
    s.parity[ia[i]] = a.parity[i];
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    s.labels[ib[i]] = b.labels[i] + "_2";
    s.parity[ib[i]] = b.parity[i];
  }
  s.table.assign(d, std::vector<SparseVec>(d));
  auto copy = [&](const LieSuperalgebra& g, const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j) {
        SparseVec v;
        for (const auto& [k, c] : g.table[i][j]) v.emplace_back(idx[k], c);
        std::sort(v.begin(), v.end());
        s.table[idx[i]][idx[j]] = std::move(v);
      }
  };
  copy(a, ia);
  copy(b, ib);
  for (auto c : a.cartan) s.cartan.push_back(ia[c]);
  for (auto c : b.cartan) s.cartan.push_back(ib[c]);
  for (const auto& nme : a.coord_names) s.coord_names.push_back(nme + "_1");
  for (const auto& nme : b.coord_names) s.coord_names.push_back(nme + "_2");
  if (a.realization && b.realization) {
    const auto& ra = *a.realization;
    const auto& rb = *b.realization;
    MatrixRealization r;
    r.even = ra.even + rb.even;
    r.odd = ra.odd + rb.odd;
    std::size_t N = r.size();
    // positions: even of a, even of b, odd of a, odd of b
    auto pa = [&](std::size_t x) { return x < ra.even ? x : ra.even + rb.even + (x - ra.even); };
    auto pb = [&](std::size_t x) { return x < rb.even ? ra.even + x : r.even + ra.odd + (x - rb.even); };
    r.basis.assign(d, Matrix(N, N));
    for (std::size_t i = 0; i < a.dim(); ++i)
      for (std::size_t x = 0; x < ra.size(); ++x)
        for (std::size_t y = 0; y < ra.size(); ++y) r.basis[ia[i]](pa(x), pa(y)) = ra.basis[i](x, y);
    for (std::size_t i = 0; i < b.dim(); ++i)
      for (std::size_t x = 0; x < rb.size(); ++x)
        for (std::size_t y = 0; y < rb.size(); ++y) r.basis[ib[i]](pb(x), pb(y)) = rb.basis[i](x, y);
    r.prepare();
    s.realization = std::move(r);
  }
  if (maps) {
    maps->first = ia;
    maps->second = ib;
  }
  return s;
}

// Subalgebra spanned by the even basis elements.
inline LieSuperalgebra even_part(const LieSuperalgebra& g) {
  LieSuperalgebra h;
  h.name = g.name + "_0";
  auto ev = g.indices_of_parity(0);  // these are 0..even_dim-1
  std::size_t d = ev.size();
  for (auto i : ev) {
    h.labels.push_back(g.labels[i]);
    h.parity.push_back(0);
  }
  h.table.assign(d, std::vector<SparseVec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) h.table[i][j] = g.table[ev[i]][ev[j]];
  h.cartan = g.cartan;
  h.coord_names = g.coord_names;
  if (g.realization) {
    MatrixRealization r = *g.realization;
    r.basis.resize(d);
    r.prepare();
    h.realization = std::move(r);
  }
  return h;
}

// ---------------------------------------------------------------------------
// Axiom checks. Each returns an empty string on success, else a witness.

inline std::string check_parity(const LieSuperalgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j)
      for (const auto& [k, c] : g.table[i][j])
        if (g.parity[k] != (g.parity[i] ^ g.parity[j]))
          return "parity: [" + g.labels[i] + "," + g.labels[j] + "] has component " + g.labels[k];
  return {};
}

inline std::string check_super_antisymmetry(const LieSuperalgebra& g) {
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j) {
      Rational s = (g.parity[i] & g.parity[j]) ? 1 : -1;
      SparseVec expect;
      for (const auto& [k, c] : g.table[j][i]) expect.emplace_back(k, s * c);
      if (expect != g.table[i][j]) return "antisymmetry: " + g.labels[i] + ", " + g.labels[j];
    }
  return {};
}

// [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|} [y,[x,z]] on all basis triples.
inline std::string check_jacobi(const LieSuperalgebra& g) {
  std::size_t d = g.dim();
  auto apply = [&](std::size_t i, const SparseVec& v, Vec& acc, const Rational& s) {
    for (const auto& [k, c] : v)
      for (const auto& [l, e] : g.table[i][k]) acc[l] += s * c * e;
  };
  auto apply_right = [&](const SparseVec& v, std::size_t z, Vec& acc, const Rational& s) {
    for (const auto& [k, c] : v)
      for (const auto& [l, e] : g.table[k][z]) acc[l] += s * c * e;
  };
  for (std::size_t x = 0; x < d; ++x)
    for (std::size_t y = 0; y < d; ++y)
      for (std::size_t z = 0; z < d; ++z) {
        Vec acc(d);
        apply(x, g.table[y][z], acc, 1);
        apply_right(g.table[x][y], z, acc, -1);
        apply(y, g.table[x][z], acc, (g.parity[x] & g.parity[y]) ? 1 : -1);
        if (!is_zero(acc))
          return "jacobi: " + g.labels[x] + ", " + g.labels[y] + ", " + g.labels[z];
      }
  return {};
}

// True iff phi is a homomorphism given as images of basis vectors.
inline std::string check_homomorphism(const LieSuperalgebra& src, const LieSuperalgebra& dst,
                                      const std::vector<Vec>& image) {
  for (std::size_t i = 0; i < src.dim(); ++i)
    for (std::size_t j = 0; j < src.dim(); ++j) {
      Vec lhs(dst.dim());
      for (const auto& [k, c] : src.table[i][j]) axpy(lhs, c, image[k]);
      Vec rhs = dst.bracket(image[i], image[j]);
      if (lhs != rhs) return "homomorphism fails on " + src.labels[i] + ", " + src.labels[j];
    }
  return {};
}

// Linear map given by a matrix acting on coordinate columns.
inline std::string check_automorphism(const LieSuperalgebra& g, const Matrix& theta) {
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Vec ti = theta.col(i);
    if (g.parity_of(ti) != g.parity[i] && !is_zero(ti)) return "parity not preserved by " + g.labels[i];
  }
  std::vector<Vec> img;
  for (std::size_t i = 0; i < g.dim(); ++i) img.push_back(theta.col(i));
  return check_homomorphism(g, g, img);
}

// ---------------------------------------------------------------------------
// Cartan data and root decompositions.

struct CartanData {
  std::vector<Vec> h0;  // Cartan of g0
  std::vector<Vec> h;   // centralizer of h0 in g
  std::vector<Vec> h1;  // odd part of h
  bool is_cartan_even = true;
  std::vector<std::string> coord_names;
};

inline Matrix stacked_ad(const LieSuperalgebra& g, const std::vector<Vec>& xs) {
  std::size_t d = g.dim();
  Matrix m(d * xs.size(), d);
  for (std::size_t t = 0; t < xs.size(); ++t) {
    Matrix a = g.ad(xs[t]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(t * d + i, j) = a(i, j);
  }
  return m;
}

inline std::vector<Vec> centralizer(const LieSuperalgebra& g, const std::vector<Vec>& xs) {
  if (xs.empty()) {
    std::vector<Vec> all;
    for (std::size_t i = 0; i < g.dim(); ++i) all.push_back(g.unit(i));
    return all;
  }
  return kernel_basis(stacked_ad(g, xs));
}

inline CartanData cartan_data(const LieSuperalgebra& g) {
  CartanData cd;
  for (auto c : g.cartan) cd.h0.push_back(g.unit(c));
  cd.h = centralizer(g, cd.h0);
  for (const auto& v : cd.h)
    if (g.parity_of(v) == 1) cd.h1.push_back(v);
  // kernel vectors of a parity-graded system need not be homogeneous; split them
  std::vector<Vec> odd_parts;
  for (const auto& v : cd.h) {
    Vec o(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (g.parity[i]) o[i] = v[i];
    if (!is_zero(o)) odd_parts.push_back(o);
  }
  cd.h1 = span_basis(odd_parts, g.dim());
  cd.is_cartan_even = cd.h1.empty();
  cd.coord_names = g.coord_names;
  return cd;
}

struct RootSpace {
  Weight weight;
  int parity = 0;
  std::vector<Vec> basis;
};

// g = h0 + (odd zero-weight part h1) + sum of root spaces, for a Cartan h0
// of g0 whose adjoint action has rational eigenvalues.
struct RootDecomposition {
  std::vector<Vec> h0;
  std::vector<Vec> h1;
  std::vector<RootSpace> roots;  // nonzero weights only
  std::vector<std::string> coord_names;

  std::vector<const RootSpace*> of_parity(int p) const {
    std::vector<const RootSpace*> out;
    for (const auto& r : roots)
      if (r.parity == p) out.push_back(&r);
    return out;
  }
};

// Fast path when the basis consists of weight vectors for the cartan indices.
inline std::optional<RootDecomposition> basis_root_decomposition(const LieSuperalgebra& g) {
  RootDecomposition rd;
  rd.coord_names = g.coord_names;
  for (auto c : g.cartan) rd.h0.push_back(g.unit(c));
  std::map<std::pair<int, Weight>, std::vector<std::size_t>> groups;
  for (std::size_t j = 0; j < g.dim(); ++j) {
    Weight w;
    for (auto c : g.cartan) {
      const auto& br = g.table[c][j];
      if (br.empty()) {
        w.push_back(0);
        continue;
      }
      if (br.size() != 1 || br[0].first != j) return std::nullopt;
      w.push_back(br[0].second);
    }
    groups[{g.parity[j], w}].push_back(j);
  }
  for (const auto& [key, idx] : groups) {
    if (is_zero_weight(key.second)) {
      if (key.first == 1)
        for (auto j : idx) rd.h1.push_back(g.unit(j));
      continue;
    }
    RootSpace rs{key.second, key.first, {}};
    for (auto j : idx) rs.basis.push_back(g.unit(j));
    rd.roots.push_back(std::move(rs));
  }
  return rd;
}

// Rational eigenvalues of a matrix whose characteristic roots are all rational
// is not assumed; this helper splits a space into joint eigenspaces of
// commuting operators when possible and reports failure otherwise.
struct JointEigen {
  Weight weight;
  std::vector<Vec> basis;
};

// Distinct rational roots of a polynomial given by coefficients c[0] + c[1] x + ...
inline std::vector<Rational> rational_roots(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  std::size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) {
    roots.push_back(0);
    c.erase(c.begin(), c.begin() + shift);
  }
  if (c.size() <= 1) return roots;
  Integer l = 1;
  for (const auto& x : c) l = lcm(l, Integer(x.get_den()));
  std::vector<Integer> z;
  for (const auto& x : c) z.push_back(Integer(x * l));
  auto divisors = [](Integer v) {
    v = abs(v);
    std::vector<Integer> d;
    for (Integer i = 1; i * i <= v; ++i)
      if (v % i == 0) {
        d.push_back(i);
        if (i * i != v) d.push_back(v / i);
      }
    return d;
  };
  auto eval = [&](const Rational& x) {
    Rational s = 0;
    for (std::size_t i = z.size(); i-- > 0;) s = s * x + Rational(z[i]);
    return s;
  };
  for (const auto& p : divisors(z.front()))
    for (const auto& q : divisors(z.back()))
      for (int sg : {1, -1}) {
        Rational x = make_rational(Integer(sg * p), q);
        if (eval(x) == 0 && std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Minimal polynomial by Krylov iteration on the flattened powers.
inline std::vector<Rational> minimal_polynomial(const Matrix& a) {
  std::size_t n = a.rows();
  std::vector<Vec> powers;
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vec flat(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = p(i, j);
    Vec c;
    if (!powers.empty() && coordinates(powers, flat, n * n, c)) {
      std::vector<Rational> poly(k + 1);
      for (std::size_t i = 0; i < k; ++i) poly[i] = -c[i];
      poly[k] = 1;
      return poly;
    }
    powers.push_back(std::move(flat));
    p = p * a;
  }
  throw std::logic_error("minimal polynomial not found");
}

// Diagonalizable over Q: the minimal polynomial has deg-many distinct rational roots.
inline std::optional<std::vector<Rational>> rational_semisimple_spectrum(const Matrix& a) {
  auto mp = minimal_polynomial(a);
  auto roots = rational_roots(mp);
  if (roots.size() + 1 != mp.size()) return std::nullopt;
  return roots;
}

// Joint eigenspaces of commuting operators acting on the span of `space`.
inline std::optional<std::vector<JointEigen>> joint_eigenspaces(const std::vector<Matrix>& ops,
                                                                const std::vector<Vec>& space, std::size_t n) {
  std::vector<JointEigen> parts{{Weight{}, space}};
  for (const auto& op : ops) {
    auto spec = rational_semisimple_spectrum(op);
    if (!spec) return std::nullopt;
    std::vector<JointEigen> next;
    for (const auto& part : parts) {
      if (part.basis.empty()) continue;
      std::size_t got = 0;
      for (const auto& lam : *spec) {
        Matrix shifted = op - lam * Matrix::identity(n);
        auto ker = kernel_basis(shifted);
        auto common = intersect(part.basis, ker, n);
        if (common.empty()) continue;
        got += common.size();
        Weight w = part.weight;
        w.push_back(lam);
        next.push_back({w, common});
      }
      if (got != part.basis.size()) return std::nullopt;
    }
    parts = std::move(next);
  }
  return parts;
}

// Root decomposition for an arbitrary toral h0 (vectors in g).
inline std::optional<RootDecomposition> root_decomposition(const LieSuperalgebra& g, const std::vector<Vec>& h0,
                                                           const std::vector<std::string>& names = {}) {
  RootDecomposition rd;
  rd.h0 = h0;
  rd.coord_names = names;
  std::vector<Matrix> ops;
  for (const auto& h : h0) ops.push_back(g.ad(h));
  for (int p = 0; p < 2; ++p) {
    std::vector<Vec> space;
    for (auto i : g.indices_of_parity(p)) space.push_back(g.unit(i));
    if (space.empty()) continue;
    auto parts = joint_eigenspaces(ops, space, g.dim());
    if (!parts) return std::nullopt;
    for (auto& part : *parts) {
      if (part.weight.empty()) part.weight.assign(h0.size(), Rational(0));
      if (is_zero_weight(part.weight)) {
        if (p == 1) rd.h1 = part.basis;
        continue;
      }
      rd.roots.push_back({part.weight, p, part.basis});
    }
  }
  std::sort(rd.roots.begin(), rd.roots.end(), [](const RootSpace& a, const RootSpace& b) {
    if (a.parity != b.parity) return a.parity < b.parity;
    return a.weight > b.weight;
  });
  return rd;
}

inline RootDecomposition standard_root_decomposition(const LieSuperalgebra& g) {
  if (auto rd = basis_root_decomposition(g)) return *rd;
  std::vector<Vec> h0;
  for (auto c : g.cartan) h0.push_back(g.unit(c));
  auto rd = root_decomposition(g, h0, g.coord_names);
  if (!rd) throw std::logic_error(g.name + ": Cartan does not act diagonalizably over Q");
  return *rd;
}

// ---------------------------------------------------------------------------
// Positivity: a functional on weight coordinates, generic if no root pairs to 0.

inline Rational pair(const Vec& phi, const Weight& w) { return dot(phi, w); }

// Lexicographic functional: the sign of phi(alpha) is the sign of the first
// nonzero coordinate of alpha. With e-coordinates listed before d-coordinates
// this is the "e >> d" convention.
inline Vec default_positivity(const RootDecomposition& rd) {
  Rational big = 1;
  for (const auto& r : rd.roots)
    for (const auto& x : r.weight) big = std::max(big, Rational(abs(x)));
  std::size_t r = rd.h0.size();
  Rational base = 2 * big * Rational(static_cast<long>(r + 1)) + 1;
  Vec phi(r);
  Rational p = 1;
  for (std::size_t c = r; c-- > 0;) {
    phi[c] = p;
    p *= base;
  }
  return phi;
}

inline bool is_generic(const RootDecomposition& rd, const Vec& phi) {
  for (const auto& r : rd.roots)
    if (pair(phi, r.weight) == 0) return false;
  return true;
}

}  // namespace ss

#pragma once

// Involutions, supersymmetric pairs (g, k = g^theta) and Iwasawa
// decompositions g = k + a + n.

#include "superspherical/orbit_geometry.hpp"

#include <random>
#include <string>
#include <vector>

namespace ss {

struct Involution {
  AlgebraPtr g;
  Matrix theta;  // acts on coordinate columns
  std::string name;
};

// Empty when theta is an involutive, parity preserving automorphism.
inline std::string check_involution(const Involution& t) {
  if (t.theta * t.theta != Matrix::identity(t.g->dim())) return "theta^2 != 1";
  return check_automorphism(*t.g, t.theta);
}

inline Involution involution_from_map(AlgebraPtr g, const MatrixMap& f, const std::string& name) {
  if (!g->realization) throw std::invalid_argument(g->name + " has no matrix realization");
  const auto& r = *g->realization;
  std::vector<Vec> cols;
  for (std::size_t i = 0; i < g->dim(); ++i) {
    auto c = r.coords(f(r.basis[i]));
    if (!c) throw std::invalid_argument(name + " does not preserve " + g->name);
    cols.push_back(*c);
  }
  return {g, Matrix::from_columns(cols, g->dim()), name};
}

inline MatrixMap conjugation(const Matrix& s) {
  Matrix inv = *inverse(s);
  return [s, inv](const Matrix& x) { return s * x * inv; };
}

inline Matrix diagonal(const std::vector<int>& signs) {
  Matrix d(signs.size(), signs.size());
  for (std::size_t i = 0; i < signs.size(); ++i) d(i, i) = signs[i];
  return d;
}

inline std::string sizes_str(std::initializer_list<std::size_t> xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// Grading automorphism x -> (-1)^|x| x.
inline Involution grading_involution(AlgebraPtr g) {
  std::vector<int> signs;
  for (auto p : g->parity) signs.push_back(p ? -1 : 1);
  return {g, diagonal(signs), "delta"};
}

// gl(m|n) -> gl(r|s) x gl(m-r|n-s).
inline Involution gl_block_involution(std::size_t m, std::size_t n, std::size_t r, std::size_t s) {
  if (r > m || s > n) throw std::invalid_argument("gl block pair requires r <= m and s <= n");
  auto g = std::make_shared<const LieSuperalgebra>(gl(m, n));
  std::vector<int> d;
  for (std::size_t i = 0; i < m; ++i) d.push_back(i < r ? 1 : -1);
  for (std::size_t j = 0; j < n; ++j) d.push_back(j < s ? 1 : -1);
  return involution_from_map(g, conjugation(diagonal(d)), "gl-block(" + sizes_str({m, n, r, s}) + ")");
}

// gl(m|2n) -> osp(m|2n).
inline Involution gl_osp_involution(std::size_t m, std::size_t n) {
  auto g = std::make_shared<const LieSuperalgebra>(gl(m, 2 * n));
  auto L = osp_layout(m, 2 * n);
  return involution_from_map(g, form_involution(L.form, m), "gl-osp(" + sizes_str({m, n}) + ")");
}

// gl(n|n) -> p(n).
inline Involution gl_p_involution(std::size_t n) {
  auto g = std::make_shared<const LieSuperalgebra>(gl(n, n));
  return involution_from_map(g, form_involution(odd_form(n), n), "gl-p(" + sizes_str({n}) + ")");
}

// gl(n|n) -> q(n).
inline Involution gl_q_involution(std::size_t n) {
  auto g = std::make_shared<const LieSuperalgebra>(gl(n, n));
  return involution_from_map(g, block_swap(n), "gl-q(" + sizes_str({n}) + ")");
}

// osp(m|2n) -> osp(r|2s) x osp(m-r|2n-2s), as conjugation by an orthosymplectic
// reflection. Split-form pairs e_i, e_-i are kept (+1), negated (-1), or
// swapped (one eigenvalue of each sign).
inline Involution osp_block_involution(std::size_t m, std::size_t n, std::size_t r, std::size_t s) {
  if (r > m || s > n) throw std::invalid_argument("osp block pair requires r <= m and s <= n");
  auto g = std::make_shared<const LieSuperalgebra>(osp(m, 2 * n));
  auto L = osp_layout(m, 2 * n);
  std::size_t N = m + 2 * n;
  Matrix t(N, N);
  std::size_t plus = r;
  if (L.has_zero) {
    bool mid = r % 2 == 1;
    t(2 * L.k, 2 * L.k) = mid ? 1 : -1;
    if (mid) --plus;
  }
  std::size_t full = plus / 2;
  bool swapped = plus % 2 == 1;
  for (std::size_t i = 0; i < L.k; ++i) {
    if (i < full) {
      t(i, i) = 1;
      t(L.k + i, L.k + i) = 1;
    } else if (i == full && swapped) {
      t(i, L.k + i) = 1;
      t(L.k + i, i) = 1;
    } else {
      t(i, i) = -1;
      t(L.k + i, L.k + i) = -1;
    }
  }
  for (std::size_t j = 0; j < L.l; ++j) {
    int sg = j < s ? 1 : -1;
    t(m + j, m + j) = sg;
    t(m + L.l + j, m + L.l + j) = sg;
  }
  return involution_from_map(g, conjugation(t), "osp-block(" + sizes_str({m, n, r, s}) + ")");
}

// osp(2m|2n) -> gl(m|n): +1 on the isotropic half e_i, f_j and -1 on its dual.
inline Involution osp_gl_involution(std::size_t m, std::size_t n) {
  auto g = std::make_shared<const LieSuperalgebra>(osp(2 * m, 2 * n));
  std::vector<int> d;
  for (std::size_t i = 0; i < 2 * m; ++i) d.push_back(i < m ? 1 : -1);
  for (std::size_t j = 0; j < 2 * n; ++j) d.push_back(j < n ? 1 : -1);
  return involution_from_map(g, conjugation(diagonal(d)), "osp-gl(" + sizes_str({m, n}) + ")");
}

// p(n) -> p(r) x p(n-r).
inline Involution p_block_involution(std::size_t n, std::size_t r) {
  if (r > n) throw std::invalid_argument("p block pair requires r <= n");
  auto g = std::make_shared<const LieSuperalgebra>(pe(n));
  std::vector<int> d;
  for (int rep = 0; rep < 2; ++rep)
    for (std::size_t i = 0; i < n; ++i) d.push_back(i < r ? 1 : -1);
  return involution_from_map(g, conjugation(diagonal(d)), "p-block(" + sizes_str({n, r}) + ")");
}

// p(n) -> gl(r|n-r): the block involution composed with delta.
inline Involution p_gl_involution(std::size_t n, std::size_t r) {
  if (r > n) throw std::invalid_argument("p to gl pair requires r <= n");
  auto g = std::make_shared<const LieSuperalgebra>(pe(n));
  std::vector<int> d;
  for (int rep = 0; rep < 2; ++rep)
    for (std::size_t i = 0; i < n; ++i) d.push_back((i < r ? 1 : -1) * (rep ? -1 : 1));
  return involution_from_map(g, conjugation(diagonal(d)), "p-gl(" + sizes_str({n, r}) + ")");
}

// Swap of the summands of g + g.
inline Involution swap_involution(const LieSuperalgebra& g) {
  DirectSumMaps maps;
  auto s = std::make_shared<const LieSuperalgebra>(direct_sum(g, g, &maps));
  Matrix t(s->dim(), s->dim());
  for (std::size_t i = 0; i < g.dim(); ++i) {
    t(maps.second[i], maps.first[i]) = 1;
    t(maps.first[i], maps.second[i]) = 1;
  }
  return {s, t, "swap(" + g.name + ")"};
}

// ---------------------------------------------------------------------------

struct RestrictedRoot {
  Weight weight;  // coordinates against the basis of a
  std::size_t even_mult = 0, odd_mult = 0;
  std::vector<Vec> basis;
};

enum class IwasawaVerdict { HAS_IWASAWA, NO_IWASAWA };

inline std::string to_string(IwasawaVerdict v) { return v == IwasawaVerdict::HAS_IWASAWA ? "HAS_IWASAWA" : "NO_IWASAWA"; }

struct SymmetricPair {
  Involution theta;
  std::vector<Vec> k, p;
  std::vector<Vec> a;
  bool a_maximal = false;
  std::vector<RestrictedRoot> sigma;  // nonzero a-weights
  std::vector<RestrictedRoot> sigma_plus;
  std::vector<Vec> centralizer_a;     // C(a)
  const LieSuperalgebra& g() const { return *theta.g; }
};

inline std::vector<Vec> eigenspace(const Matrix& t, int lambda) {
  Matrix s = t - Rational(lambda) * Matrix::identity(t.rows());
  return kernel_basis(s);
}

// Homogeneous basis of a graded subspace.
inline std::vector<Vec> graded_basis(const LieSuperalgebra& g, const std::vector<Vec>& vs) {
  auto out = parity_component(g, vs, 0);
  auto odd = parity_component(g, vs, 1);
  out.insert(out.end(), odd.begin(), odd.end());
  return out;
}

inline bool commutes_with(const LieSuperalgebra& g, const Vec& x, const std::vector<Vec>& span) {
  for (const auto& y : span)
    if (!is_zero(g.bracket(x, y))) return false;
  return true;
}

// Greedy toral extension inside `pool` (even elements). Candidates are pool
// vectors, then pairwise sums and differences, then seeded small integer
// combinations; stops when the commutant of `acc` inside pool equals acc.
inline std::vector<Vec> greedy_toral(const LieSuperalgebra& g, std::vector<Vec> acc, const std::vector<Vec>& pool,
                                     const std::vector<Vec>& fixed, bool* maximal) {
  std::size_t d = g.dim();
  // elements of span(pool) commuting with cur and fixed
  auto commutant = [&](const std::vector<Vec>& cur) {
    std::vector<Vec> all = cur;
    all.insert(all.end(), fixed.begin(), fixed.end());
    if (all.empty() || pool.empty()) return pool;
    Matrix m(d * all.size(), pool.size());
    for (std::size_t t = 0; t < all.size(); ++t)
      for (std::size_t i = 0; i < pool.size(); ++i) {
        Vec br = g.bracket(pool[i], all[t]);
        for (std::size_t r = 0; r < d; ++r) m(t * d + r, i) = br[r];
      }
    std::vector<Vec> z;
    for (const auto& c : kernel_basis(m)) {
      Vec x(d);
      for (std::size_t i = 0; i < pool.size(); ++i) axpy(x, c[i], pool[i]);
      z.push_back(x);
    }
    return z;
  };
  auto try_add = [&](const Vec& x) {
    if (is_zero(x) || in_span(acc, x, d)) return false;
    if (!commutes_with(g, x, acc) || !commutes_with(g, x, fixed)) return false;
    if (!rational_semisimple_spectrum(g.ad(x))) return false;
    acc.push_back(x);
    return true;
  };
  std::mt19937_64 rng(20240611);
  for (int round = 0; round < 8; ++round) {
    auto z = commutant(acc);
    if (span_dim(z, d) == span_dim(acc, d)) {
      if (maximal) *maximal = true;
      return acc;
    }
    bool progress = false;
    for (const auto& x : z) progress |= try_add(x);
    for (std::size_t i = 0; i < z.size() && !progress; ++i)
      for (std::size_t j = i + 1; j < z.size() && !progress; ++j) {
        progress |= try_add(z[i] + z[j]);
        if (!progress) progress |= try_add(z[i] - z[j]);
      }
    for (int tries = 0; tries < 64 && !progress; ++tries) {
      Vec x(d);
      for (const auto& v : z) axpy(x, Rational(static_cast<long>(rng() % 5) - 2), v);
      progress |= try_add(x);
    }
    if (!progress) break;
  }
  if (maximal) *maximal = span_dim(commutant(acc), d) == span_dim(acc, d);
  return acc;
}

inline std::vector<Vec> maximal_toral(const SymmetricPair& sp, bool* maximal = nullptr) {
  auto p0 = parity_component(sp.g(), sp.p, 0);
  return greedy_toral(sp.g(), {}, p0, {}, maximal);
}

// Lex positivity on weights: sign of the first nonzero coordinate.
inline bool lex_positive(const Weight& w) {
  for (const auto& x : w)
    if (x != 0) return x > 0;
  return false;
}

inline SymmetricPair make_symmetric_pair(const Involution& theta) {
  if (auto err = check_involution(theta); !err.empty()) throw std::invalid_argument(theta.name + ": " + err);
  SymmetricPair sp{theta, {}, {}, {}, false, {}, {}, {}};
  const auto& g = *theta.g;
  sp.k = graded_basis(g, eigenspace(theta.theta, 1));
  sp.p = graded_basis(g, eigenspace(theta.theta, -1));
  sp.a = maximal_toral(sp, &sp.a_maximal);
  sp.centralizer_a = graded_basis(g, centralizer(g, sp.a));
  if (!sp.a.empty()) {
    std::vector<Matrix> ops;
    for (const auto& x : sp.a) ops.push_back(g.ad(x));
    std::vector<Vec> all;
    for (std::size_t i = 0; i < g.dim(); ++i) all.push_back(g.unit(i));
    for (int par = 0; par < 2; ++par) {
      std::vector<Vec> space;
      for (auto i : g.indices_of_parity(par)) space.push_back(g.unit(i));
      if (space.empty()) continue;
      auto parts = joint_eigenspaces(ops, space, g.dim());
      if (!parts) throw std::logic_error("a does not act diagonalizably");
      for (auto& part : *parts) {
        if (is_zero_weight(part.weight)) continue;
        auto it = std::find_if(sp.sigma.begin(), sp.sigma.end(), [&](const RestrictedRoot& r) { return r.weight == part.weight; });
        if (it == sp.sigma.end()) {
          sp.sigma.push_back({part.weight, 0, 0, {}});
          it = sp.sigma.end() - 1;
        }
        (par ? it->odd_mult : it->even_mult) += part.basis.size();
        it->basis.insert(it->basis.end(), part.basis.begin(), part.basis.end());
      }
    }
    std::sort(sp.sigma.begin(), sp.sigma.end(), [](const RestrictedRoot& x, const RestrictedRoot& y) { return x.weight > y.weight; });
    for (const auto& r : sp.sigma)
      if (lex_positive(r.weight)) sp.sigma_plus.push_back(r);
  }
  return sp;
}

struct IwasawaResult {
  IwasawaVerdict verdict = IwasawaVerdict::NO_IWASAWA;
  std::vector<Vec> n;
  Vec witness;        // element of C(a) cap p outside a
  int witness_parity = -1;
  std::size_t k_dim[2] = {0, 0}, a_dim = 0, n_dim[2] = {0, 0};
  bool decomposition_verified = false;
};

inline IwasawaResult iwasawa_test(const SymmetricPair& sp) {
  const auto& g = sp.g();
  std::size_t d = g.dim();
  IwasawaResult res;
  auto cap = intersect(sp.centralizer_a, sp.p, d);
  if (span_dim(cap, d) != span_dim(sp.a, d)) {
    // prefer an odd witness
    auto odd = parity_component(g, cap, 1);
    if (!odd.empty()) {
      res.witness = odd.front();
      res.witness_parity = 1;
    } else {
      for (const auto& v : parity_component(g, cap, 0))
        if (!in_span(sp.a, v, d)) {
          res.witness = v;
          res.witness_parity = 0;
          break;
        }
    }
    return res;
  }
  res.verdict = IwasawaVerdict::HAS_IWASAWA;
  for (const auto& r : sp.sigma_plus) res.n.insert(res.n.end(), r.basis.begin(), r.basis.end());
  for (int par = 0; par < 2; ++par) {
    res.k_dim[par] = parity_component(g, sp.k, par).size();
    res.n_dim[par] = parity_component(g, res.n, par).size();
  }
  res.a_dim = sp.a.size();
  std::vector<Vec> all = sp.k;
  all.insert(all.end(), sp.a.begin(), sp.a.end());
  all.insert(all.end(), res.n.begin(), res.n.end());
  bool dims = res.k_dim[0] + res.a_dim + res.n_dim[0] == g.even_dim() && res.k_dim[1] + res.n_dim[1] == g.odd_dim();
  res.decomposition_verified = dims && span_dim(all, d) == d;
  if (!res.decomposition_verified) throw std::logic_error(sp.theta.name + ": g != k + a + n");
  return res;
}

struct IwasawaHyperborel {
  Hyperborel b;
  std::size_t sum_dim = 0;  // dim(b + k)
  bool complements = false;
};

// Cartan h0' = a + t with t toral in z_k0(a), roots ordered with the
// a-coordinates first, b containing all positive root spaces.
inline IwasawaHyperborel iwasawa_to_hyperborel(const SymmetricPair& sp) {
  const auto& g = sp.g();
  std::size_t d = g.dim();
  auto k0 = parity_component(g, sp.k, 0);
  auto z = intersect(k0, centralizer(g, sp.a), d);
  auto t = greedy_toral(g, {}, z, sp.a, nullptr);
  std::vector<Vec> h0 = sp.a;
  h0.insert(h0.end(), t.begin(), t.end());
  auto c0 = parity_component(g, centralizer(g, h0), 0);
  if (span_dim(c0, d) != h0.size()) throw std::logic_error(sp.theta.name + ": a + t is not a Cartan subalgebra of g0");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < sp.a.size(); ++i) names.push_back("a" + std::to_string(i + 1));
  for (std::size_t i = 0; i < t.size(); ++i) names.push_back("t" + std::to_string(i + 1));
  auto rd0 = root_decomposition(g, h0, names);
  if (!rd0) throw std::logic_error(sp.theta.name + ": Cartan does not act diagonalizably over Q");
  auto rd = std::make_shared<const RootDecomposition>(*rd0);
  Vec phi = default_positivity(*rd);
  auto hb = hyperborel_containing_positive(sp.theta.g, rd, phi);
  if (!hb) throw std::logic_error(sp.theta.name + ": positive root spaces do not extend to a hyperborel");
  IwasawaHyperborel out{*hb, 0, false};
  std::vector<Vec> sum = hb->basis();
  sum.insert(sum.end(), sp.k.begin(), sp.k.end());
  out.sum_dim = span_dim(sum, d);
  out.complements = out.sum_dim == d;
  return out;
}

}  // namespace ss

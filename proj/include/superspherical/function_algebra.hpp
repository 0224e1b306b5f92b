#pragma once

// C[V] = S(V*) = (polynomials in the even coordinates) (x) (exterior algebra
// on the odd coordinates), with g acting by derivations.

#include "superspherical/representation.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ss {

struct Monomial {
  std::vector<int> e;      // exponents of the even coordinates
  std::uint64_t odd = 0;   // subset of odd coordinates, product in increasing order

  int degree() const {
    int d = std::popcount(odd);
    for (int x : e) d += x;
    return d;
  }
  int parity() const { return std::popcount(odd) & 1; }
  bool even_only() const { return odd == 0; }

  // Graded lexicographic: degree, then even exponents, then odd subset.
  friend bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    if (a.e != b.e) return a.e < b.e;
    return a.odd < b.odd;
  }
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e && a.odd == b.odd; }
};

using SuperPoly = std::map<Monomial, Rational>;

// Product of monomials with the Koszul sign; nullopt when an odd coordinate repeats.
inline std::optional<std::pair<int, Monomial>> multiply(const Monomial& a, const Monomial& b) {
  if (a.odd & b.odd) return std::nullopt;
  Monomial m;
  m.e = a.e;
  for (std::size_t i = 0; i < m.e.size(); ++i) m.e[i] += b.e[i];
  m.odd = a.odd | b.odd;
  // each pair (i in a, j in b) with i > j costs a sign
  int swaps = 0;
  for (std::uint64_t bb = b.odd; bb; bb &= bb - 1) {
    int j = std::countr_zero(bb);
    swaps += std::popcount(a.odd >> (j + 1));
  }
  return std::make_pair(swaps % 2 ? -1 : 1, m);
}

inline bool nilpotent(const SuperPoly& f) {
  for (const auto& [m, c] : f)
    if (m.even_only() && c != 0) return false;
  return true;
}

inline SuperPoly body(const SuperPoly& f) {
  SuperPoly b;
  for (const auto& [m, c] : f)
    if (m.even_only() && c != 0) b[m] = c;
  return b;
}

class SuperPolynomialAlgebra {
 public:
  SuperPolynomialAlgebra(Representation v, int d_max = 8) : v_(std::move(v)), dual_(dual(v_)), d_max_(d_max) {
    for (std::size_t i = 0; i < v_.dim(); ++i) {
      if (v_.parity[i] == 0) {
        slot_.push_back(even_.size());
        even_.push_back(i);
      } else {
        slot_.push_back(odd_.size());
        odd_.push_back(i);
      }
    }
    if (odd_.size() > 63) throw std::length_error("too many odd coordinates");
  }

  const Representation& rep() const { return v_; }
  int d_max() const { return d_max_; }
  std::size_t even_count() const { return even_.size(); }
  std::size_t odd_count() const { return odd_.size(); }

  // Coordinate function dual to basis vector i of V.
  Monomial generator(std::size_t i) const {
    Monomial m;
    m.e.assign(even_.size(), 0);
    if (v_.parity[i] == 0) m.e[slot_[i]] = 1;
    else m.odd = std::uint64_t(1) << slot_[i];
    return m;
  }

  std::string name(std::size_t i) const {
    return v_.parity[i] == 0 ? "x" + std::to_string(slot_[i] + 1) : "xi" + std::to_string(slot_[i] + 1);
  }

  // Monomials of degree d, in decreasing order.
  std::vector<Monomial> monomials(int d) const {
    check_degree(d);
    std::vector<Monomial> out;
    std::size_t k = odd_.size();
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << k); ++s) {
      int rest = d - std::popcount(s);
      if (rest < 0) continue;
      std::vector<int> e(even_.size(), 0);
      compositions(e, 0, rest, s, out);
    }
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return b < a; });
    return out;
  }

  // Weight of a monomial for the given h0: coordinates dual to V's weight basis.
  Weight weight(const Monomial& m, const std::vector<Weight>& vweights) const {
    std::size_t r = vweights.empty() ? 0 : vweights[0].size();
    Weight w(r);
    for (std::size_t s = 0; s < even_.size(); ++s)
      for (std::size_t c = 0; c < r; ++c) w[c] -= m.e[s] * vweights[even_[s]][c];
    for (std::size_t s = 0; s < odd_.size(); ++s)
      if (m.odd >> s & 1)
        for (std::size_t c = 0; c < r; ++c) w[c] -= vweights[odd_[s]][c];
    return w;
  }

  // Derivation induced by x in g (given as a coordinate vector).
  SuperPoly derive(const Vec& x, const SuperPoly& f) const {
    Matrix a = dual_.act(x);
    int px = v_.g->parity_of(x);
    if (px < 0) throw std::invalid_argument("derivation of an inhomogeneous element");
    SuperPoly out;
    for (const auto& [m, c] : f) derive_monomial(a, px, m, c, out);
    return out;
  }

  SuperPoly derive_basis(std::size_t i, const SuperPoly& f) const { return derive(v_.g->unit(i), f); }

  // Matrix of x on degree-d polynomials, rows and columns indexed by monomials(d).
  Matrix action_matrix(const Vec& x, int d) const {
    auto ms = monomials(d);
    std::map<Monomial, std::size_t> idx;
    for (std::size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = i;
    Matrix a = dual_.act(x);
    int px = v_.g->parity_of(x);
    Matrix out(ms.size(), ms.size());
    for (std::size_t j = 0; j < ms.size(); ++j) {
      SuperPoly img;
      derive_monomial(a, px, ms[j], 1, img);
      for (const auto& [m, c] : img) out(idx.at(m), j) = c;
    }
    return out;
  }

  SuperPoly product(const SuperPoly& f, const SuperPoly& g) const {
    SuperPoly out;
    for (const auto& [a, ca] : f)
      for (const auto& [b, cb] : g) {
        auto p = multiply(a, b);
        if (!p) continue;
        add(out, p->second, ca * cb * p->first);
      }
    return out;
  }

  std::string str(const SuperPoly& f) const {
    if (f.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      Rational c = it->second;
      if (!first) s += c < 0 ? " - " : " + ";
      else if (c < 0) s += "-";
      first = false;
      c = abs(c);
      std::string mono = monomial_str(it->first);
      if (mono.empty()) s += c.get_str();
      else s += (c == 1 ? "" : c.get_str() + "*") + mono;
    }
    return s;
  }

  std::string monomial_str(const Monomial& m) const {
    std::string s;
    for (std::size_t k = 0; k < even_.size(); ++k) {
      if (m.e[k] == 0) continue;
      if (!s.empty()) s += "*";
      s += name(even_[k]);
      if (m.e[k] > 1) s += "^" + std::to_string(m.e[k]);
    }
    for (std::size_t k = 0; k < odd_.size(); ++k)
      if (m.odd >> k & 1) {
        if (!s.empty()) s += "*";
        s += name(odd_[k]);
      }
    return s;
  }

  static void add(SuperPoly& f, const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = f.emplace(m, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) f.erase(it);
    }
  }

 private:
  void check_degree(int d) const {
    if (d > d_max_) throw std::out_of_range("degree " + std::to_string(d) + " exceeds the truncation bound " + std::to_string(d_max_));
  }

  void compositions(std::vector<int>& e, std::size_t pos, int rest, std::uint64_t odd, std::vector<Monomial>& out) const {
    if (pos + 1 >= e.size()) {
      if (e.empty()) {
        if (rest == 0) out.push_back({e, odd});
        return;
      }
      e[pos] = rest;
      out.push_back({e, odd});
      e[pos] = 0;
      return;
    }
    for (int k = 0; k <= rest; ++k) {
      e[pos] = k;
      compositions(e, pos + 1, rest - k, odd, out);
    }
    e[pos] = 0;
  }

  // D(x^e xi_S) = sum_k e_k D(x_k) x^{e-1_k} xi_S
  //             + sum_{j in S} (-1)^{|D| #(S before j)} x^e xi_{<j} D(xi_j) xi_{>j}
  void derive_monomial(const Matrix& a, int px, const Monomial& m, const Rational& coeff, SuperPoly& out) const {
    for (std::size_t k = 0; k < even_.size(); ++k) {
      if (m.e[k] == 0) continue;
      Monomial rest = m;
      rest.e[k] -= 1;
      Rational mult = coeff * m.e[k];
      apply_generator(a, even_[k], mult, Monomial{std::vector<int>(even_.size(), 0), 0}, rest, out);
    }
    int before = 0;
    for (std::size_t k = 0; k < odd_.size(); ++k) {
      if (!(m.odd >> k & 1)) continue;
      std::uint64_t low = m.odd & ((std::uint64_t(1) << k) - 1);
      std::uint64_t high = m.odd & ~((std::uint64_t(2) << k) - 1);
      Monomial left{m.e, low};
      Monomial right{std::vector<int>(even_.size(), 0), high};
      Rational mult = (px && (before & 1)) ? Rational(-coeff) : coeff;
      apply_generator(a, odd_[k], mult, left, right, out);
      ++before;
    }
  }

  // left * D(gen) * right, with D(gen) = sum_r a(r, gen) gen_r.
  void apply_generator(const Matrix& a, std::size_t gen, const Rational& mult, const Monomial& left,
                       const Monomial& right, SuperPoly& out) const {
    for (std::size_t r = 0; r < v_.dim(); ++r) {
      const Rational& c = a(r, gen);
      if (c == 0) continue;
      auto p1 = multiply(left, generator(r));
      if (!p1) continue;
      auto p2 = multiply(p1->second, right);
      if (!p2) continue;
      add(out, p2->second, mult * c * (p1->first * p2->first));
    }
  }

  Representation v_, dual_;
  int d_max_;
  std::vector<std::size_t> even_, odd_, slot_;
};

// ---------------------------------------------------------------------------
// Highest weight functions.

struct HighestWeightFunction {
  Weight weight;
  int degree = 0;
  int parity = 0;
  SuperPoly f;
  bool nilpotent = false;
};

// Everything found at one (degree, weight, parity): the full eigenspace and
// how much of it has nonzero body.
struct HighestWeightBlock {
  Weight weight;
  int degree = 0;
  int parity = 0;
  std::vector<SuperPoly> basis;
  std::size_t body_rank = 0;              // dim of the space of bodies
  std::optional<SuperPoly> nilpotent_witness;
};

// Operators that must kill a b-eigenfunction: n and the odd part of b.
inline std::vector<Vec> killing_set(const Hyperborel& b) {
  std::vector<Vec> kill = b.n;
  for (const auto& y : b.b1)
    if (!in_span(b.n, y, b.g->dim())) kill.push_back(y);
  return kill;
}

inline std::vector<HighestWeightBlock> highest_weight_blocks(const SuperPolynomialAlgebra& A, const std::vector<Vec>& kill,
                                                             const std::vector<Vec>& h0, int d) {
  auto vw = basis_weights(A.rep(), h0);
  if (!vw) throw std::invalid_argument("representation basis is not an h0 weight basis");
  auto ms = A.monomials(d);
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < ms.size(); ++i) idx[ms[i]] = i;

  // images of each monomial under each killing operator
  std::vector<std::vector<SuperPoly>> images(kill.size(), std::vector<SuperPoly>(ms.size()));
  for (std::size_t t = 0; t < kill.size(); ++t)
    for (std::size_t j = 0; j < ms.size(); ++j) images[t][j] = A.derive(kill[t], SuperPoly{{ms[j], 1}});

  std::map<std::pair<Weight, int>, std::vector<std::size_t>> blocks;
  for (std::size_t j = 0; j < ms.size(); ++j) blocks[{A.weight(ms[j], *vw), ms[j].parity()}].push_back(j);

  std::vector<HighestWeightBlock> out;
  for (const auto& [key, cols] : blocks) {
    // rows: (operator, target monomial)
    std::map<std::pair<std::size_t, Monomial>, std::size_t> rows;
    for (std::size_t t = 0; t < kill.size(); ++t)
      for (auto j : cols)
        for (const auto& [m, c] : images[t][j]) rows.emplace(std::make_pair(t, m), rows.size());
    Matrix sys(rows.size(), cols.size());
    for (std::size_t t = 0; t < kill.size(); ++t)
      for (std::size_t c = 0; c < cols.size(); ++c)
        for (const auto& [m, v] : images[t][cols[c]]) sys(rows.at({t, m}), c) = v;
    auto ker = rows.empty() ? std::vector<Vec>{} : kernel_basis(sys);
    if (rows.empty())
      for (std::size_t c = 0; c < cols.size(); ++c) ker.push_back(unit_vec(cols.size(), c));
    if (ker.empty()) continue;
    // echelon form so the first nonzero coefficient in monomial order is 1
    ker = span_basis(ker, cols.size());
    HighestWeightBlock blk;
    blk.weight = key.first;
    blk.degree = d;
    blk.parity = key.second;
    for (const auto& k : ker) {
      SuperPoly f;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (k[c] != 0) f[ms[cols[c]]] = k[c];
      blk.basis.push_back(std::move(f));
    }
    // body projection
    std::vector<std::size_t> even_cols;
    for (std::size_t c = 0; c < cols.size(); ++c)
      if (ms[cols[c]].even_only()) even_cols.push_back(c);
    Matrix proj(even_cols.size(), ker.size());
    for (std::size_t r = 0; r < even_cols.size(); ++r)
      for (std::size_t k = 0; k < ker.size(); ++k) proj(r, k) = ker[k][even_cols[r]];
    blk.body_rank = even_cols.empty() ? 0 : rank(proj);
    if (blk.body_rank < ker.size()) {
      auto nil = even_cols.empty() ? std::vector<Vec>{unit_vec(ker.size(), 0)} : kernel_basis(proj);
      Vec comb(cols.size());
      for (std::size_t k = 0; k < ker.size(); ++k) axpy(comb, nil[0][k], ker[k]);
      comb = normalize_leading(comb);
      SuperPoly f;
      for (std::size_t c = 0; c < cols.size(); ++c)
        if (comb[c] != 0) f[ms[cols[c]]] = comb[c];
      blk.nilpotent_witness = std::move(f);
    }
    out.push_back(std::move(blk));
  }
  return out;
}

inline std::vector<HighestWeightBlock> highest_weight_functions(const SuperPolynomialAlgebra& A, const Hyperborel& b, int d) {
  return highest_weight_blocks(A, killing_set(b), b.h0(), d);
}

// ---------------------------------------------------------------------------
// Weight monoids and the degree-bounded sphericity test.

enum class Verdict { SPHERICAL, NOT_SPHERICAL, INCONCLUSIVE_AT_DEGREE };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SPHERICAL: return "SPHERICAL";
    case Verdict::NOT_SPHERICAL: return "NOT_SPHERICAL";
    case Verdict::INCONCLUSIVE_AT_DEGREE: return "INCONCLUSIVE_AT_DEGREE";
  }
  return "?";
}

struct MonoidEntry {
  Weight weight;
  int degree = 0;
  SuperPoly certificate;  // a highest weight function with nonzero body
  std::size_t multiplicity = 0;  // nonzero-body multiplicity summed over degrees
};

struct WeightMonoid {
  std::vector<MonoidEntry> weights;        // sorted by weight
  std::vector<MonoidEntry> nilpotent_only; // weights whose eigenfunctions all have zero body
  std::vector<HighestWeightBlock> nilpotent_witnesses;
  std::vector<std::pair<Weight, std::size_t>> multiplicities;  // total eigenspace dims per weight
  int degree = 0;

  bool contains(const Weight& w) const {
    for (const auto& e : weights)
      if (e.weight == w) return true;
    return false;
  }
};

inline WeightMonoid weight_monoid_from(const SuperPolynomialAlgebra& A, const std::vector<Vec>& kill,
                                       const std::vector<Vec>& h0, int d) {
  WeightMonoid wm;
  wm.degree = d;
  std::map<Weight, MonoidEntry> found, nil;
  std::map<Weight, std::size_t> total;
  for (int k = 0; k <= d; ++k)
    for (auto& blk : highest_weight_blocks(A, kill, h0, k)) {
      total[blk.weight] += blk.basis.size();
      if (blk.nilpotent_witness) wm.nilpotent_witnesses.push_back(blk);
      if (blk.body_rank > 0) {
        auto& e = found[blk.weight];
        if (e.multiplicity == 0) {
          e.weight = blk.weight;
          e.degree = k;
          for (const auto& f : blk.basis)
            if (!nilpotent(f)) {
              e.certificate = f;
              break;
            }
        }
        e.multiplicity += blk.body_rank;
      } else {
        auto& e = nil[blk.weight];
        e.weight = blk.weight;
        e.degree = k;
        e.certificate = blk.basis.front();
        e.multiplicity += blk.basis.size();
      }
    }
  for (auto& [w, e] : found) wm.weights.push_back(e);
  for (auto& [w, e] : nil)
    if (!found.count(w)) wm.nilpotent_only.push_back(e);
  for (auto& [w, n] : total) wm.multiplicities.emplace_back(w, n);
  return wm;
}

inline WeightMonoid weight_monoid(const SuperPolynomialAlgebra& A, const Hyperborel& b, int d) {
  return weight_monoid_from(A, killing_set(b), b.h0(), d);
}

struct FunctionEvidence {
  Verdict status = Verdict::INCONCLUSIVE_AT_DEGREE;
  std::string kind;  // "nilpotent", "multiplicity", or empty
  Weight weight;
  int degree = 0;
  std::vector<SuperPoly> functions;
  std::string description;
};

// NOT_SPHERICAL on a nilpotent eigenfunction or a weight with a
// two-dimensional eigenspace; never SPHERICAL on its own.
inline FunctionEvidence affine_sphericity_test(const SuperPolynomialAlgebra& A, const Hyperborel& b, int d) {
  auto wm = weight_monoid(A, b, d);
  FunctionEvidence ev;
  if (!wm.nilpotent_witnesses.empty()) {
    const auto& blk = wm.nilpotent_witnesses.front();
    ev.status = Verdict::NOT_SPHERICAL;
    ev.kind = "nilpotent";
    ev.weight = blk.weight;
    ev.degree = blk.degree;
    ev.functions = {*blk.nilpotent_witness};
    ev.description = "nilpotent highest weight function " + A.str(*blk.nilpotent_witness);
    return ev;
  }
  for (const auto& [w, n] : wm.multiplicities)
    if (n >= 2) {
      ev.status = Verdict::NOT_SPHERICAL;
      ev.kind = "multiplicity";
      ev.weight = w;
      for (int k = 0; k <= d && ev.functions.size() < 2; ++k)
        for (const auto& blk : highest_weight_functions(A, b, k))
          if (blk.weight == w)
            for (const auto& f : blk.basis)
              if (ev.functions.size() < 2) ev.functions.push_back(f);
      ev.description = "weight with a " + std::to_string(n) + "-dimensional space of eigenfunctions";
      return ev;
    }
  return ev;
}

// Re-derive a NOT_SPHERICAL certificate from its functions alone.
inline bool recheck_evidence(const SuperPolynomialAlgebra& A, const Hyperborel& b, const FunctionEvidence& ev) {
  if (ev.status != Verdict::NOT_SPHERICAL) return true;
  auto vw = basis_weights(A.rep(), b.h0());
  auto kill = killing_set(b);
  for (const auto& f : ev.functions) {
    if (f.empty()) return false;
    for (const auto& x : kill)
      if (!A.derive(x, f).empty()) return false;
    for (const auto& [m, c] : f)
      if (A.weight(m, *vw) != ev.weight) return false;
  }
  if (ev.kind == "nilpotent") return ev.functions.size() == 1 && nilpotent(ev.functions[0]);
  if (ev.kind == "multiplicity") {
    if (ev.functions.size() < 2) return false;
    std::map<Monomial, std::size_t> idx;
    for (const auto& f : ev.functions)
      for (const auto& [m, c] : f) idx.emplace(m, idx.size());
    std::vector<Vec> vs;
    for (const auto& f : ev.functions) {
      Vec v(idx.size());
      for (const auto& [m, c] : f) v[idx[m]] = c;
      vs.push_back(v);
    }
    return span_dim(vs, idx.size()) == vs.size();
  }
  return false;
}

// ---------------------------------------------------------------------------
// The even reduction X0 = V0 under g0, with b0.

struct EvenReduction {
  Representation v0;  // representation of g0 on the even part of V
  std::vector<Vec> kill, h0;
};

inline EvenReduction even_reduction(const Representation& v, const Hyperborel& b) {
  auto g0 = std::make_shared<const LieSuperalgebra>(even_part(*v.g));
  std::vector<std::size_t> ev;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v.parity[i] == 0) ev.push_back(i);
  EvenReduction r;
  r.v0.g = g0;
  r.v0.name = v.name + "_0";
  for (auto i : ev) {
    r.v0.parity.push_back(0);
    r.v0.labels.push_back(v.labels[i]);
  }
  for (std::size_t x = 0; x < g0->dim(); ++x) {
    Matrix m(ev.size(), ev.size());
    for (std::size_t i = 0; i < ev.size(); ++i)
      for (std::size_t j = 0; j < ev.size(); ++j) m(i, j) = v.action[x](ev[i], ev[j]);
    r.v0.action.push_back(std::move(m));
  }
  auto restrict = [&](const Vec& x) { return Vec(x.begin(), x.begin() + g0->dim()); };
  for (const auto& x : b.n0()) r.kill.push_back(restrict(x));
  for (const auto& h : b.h0()) r.h0.push_back(restrict(h));
  return r;
}

inline WeightMonoid even_weight_monoid(const Representation& v, const Hyperborel& b, int d) {
  auto r = even_reduction(v, b);
  SuperPolynomialAlgebra A0(r.v0, d);
  return weight_monoid_from(A0, r.kill, r.h0, d);
}

// ---------------------------------------------------------------------------
// Lattices generated by weights.

// Row Hermite normal form over Z; zero rows dropped.
inline std::vector<std::vector<Integer>> hermite_rows(std::vector<std::vector<Integer>> rows) {
  if (rows.empty()) return rows;
  std::size_t n = rows[0].size(), r = 0;
  for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
    for (;;) {
      std::size_t best = rows.size();
      for (std::size_t i = r; i < rows.size(); ++i)
        if (rows[i][c] != 0 && (best == rows.size() || abs(rows[i][c]) < abs(rows[best][c]))) best = i;
      if (best == rows.size()) break;
      std::swap(rows[r], rows[best]);
      bool done = true;
      for (std::size_t i = r + 1; i < rows.size(); ++i) {
        if (rows[i][c] == 0) continue;
        Integer q = rows[i][c] / rows[r][c];
        for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        if (rows[i][c] != 0) done = false;
      }
      if (done) {
        if (rows[r][c] < 0)
          for (auto& x : rows[r]) x = -x;
        for (std::size_t i = 0; i < r; ++i) {
          Integer q = rows[i][c] / rows[r][c];
          if (rows[i][c] - q * rows[r][c] < 0) q -= 1;
          for (std::size_t j = 0; j < n; ++j) rows[i][j] -= q * rows[r][j];
        }
        ++r;
        break;
      }
    }
  }
  rows.resize(r);
  return rows;
}

inline std::vector<std::vector<Integer>> lattice_of(const std::vector<Weight>& ws) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& w : ws) {
    std::vector<Integer> r;
    for (const auto& x : w) {
      if (!is_integer(x)) throw std::domain_error("non-integral weight");
      r.push_back(Integer(x));
    }
    rows.push_back(std::move(r));
  }
  return hermite_rows(std::move(rows));
}

inline std::vector<Weight> monoid_weights(const WeightMonoid& m) {
  std::vector<Weight> out;
  for (const auto& e : m.weights) out.push_back(e.weight);
  return out;
}

// Rank of the group generated by the computed monoid; a lower bound in general.
inline std::size_t monoid_rank(const WeightMonoid& m) { return lattice_of(monoid_weights(m)).size(); }

}  // namespace ss

#pragma once

// Hyperborel subalgebras b = b0 + b1 with b0 a Borel of g0 and
// [b1, b1] inside [b0, b0] = n0, maximal with these properties.
//
// b0 is fixed by a positivity functional on even roots. The odd part is
// assembled from whole odd root spaces and individual h1 basis vectors
// ("candidates"); a candidate set is admissible when it is closed under
// [b0, -] and all pairwise brackets land in n0.

#include "superspherical/lie_superalgebra.hpp"

#include <cstdint>
#include <deque>
#include <memory>
#include <set>
#include <string>
#include <vector>

namespace ss {

using RootDataPtr = std::shared_ptr<const RootDecomposition>;

struct OddCandidate {
  std::string label;
  Weight weight;        // zero for h1 directions
  bool cartan = false;  // true for an h1 basis vector
  std::vector<Vec> basis;
};

struct Hyperborel {
  AlgebraPtr g;
  RootDataPtr rd;
  Vec phi;                            // positivity functional on weight coordinates
  std::vector<Weight> even_roots;     // positive even roots
  std::vector<std::string> odd_parts; // labels of the chosen candidates
  std::vector<Weight> odd_weights;
  std::vector<Vec> b0, b1, n;

  std::vector<Vec> basis() const {
    std::vector<Vec> all = b0;
    all.insert(all.end(), b1.begin(), b1.end());
    return all;
  }
  std::size_t even_dim() const { return b0.size(); }
  std::size_t odd_dim() const { return b1.size(); }
  const std::vector<Vec>& h0() const { return rd->h0; }
  const std::vector<std::string>& coord_names() const { return rd->coord_names; }
  std::vector<Vec> n0() const {
    std::vector<Vec> out;
    for (const auto& v : n)
      if (g->parity_of(v) == 0) out.push_back(v);
    return out;
  }
};

inline std::vector<OddCandidate> odd_candidates(const LieSuperalgebra& g, const RootDecomposition& rd) {
  std::vector<OddCandidate> out;
  for (const auto& r : rd.roots)
    if (r.parity == 1) out.push_back({"x[" + weight_str(r.weight, rd.coord_names) + "]", r.weight, false, r.basis});
  std::sort(out.begin(), out.end(), [](const OddCandidate& a, const OddCandidate& b) { return a.weight > b.weight; });
  auto h1 = span_basis(rd.h1, g.dim());
  for (std::size_t i = 0; i < h1.size(); ++i)
    out.push_back({"hbar" + std::to_string(i + 1), Weight(rd.h0.size()), true, {h1[i]}});
  return out;
}

// Even root spaces with phi > 0, plus h0.
inline std::vector<Vec> borel_even_part(const RootDecomposition& rd, const Vec& phi, std::vector<Weight>* roots = nullptr) {
  std::vector<Vec> b0 = rd.h0;
  for (const auto& r : rd.roots)
    if (r.parity == 0 && pair(phi, r.weight) > 0) {
      b0.insert(b0.end(), r.basis.begin(), r.basis.end());
      if (roots) roots->push_back(r.weight);
    }
  return b0;
}

inline std::vector<Vec> positive_even_span(const RootDecomposition& rd, const Vec& phi) {
  std::vector<Vec> n0;
  for (const auto& r : rd.roots)
    if (r.parity == 0 && pair(phi, r.weight) > 0) n0.insert(n0.end(), r.basis.begin(), r.basis.end());
  return n0;
}

inline bool even_generic(const RootDecomposition& rd, const Vec& phi) {
  for (const auto& r : rd.roots)
    if (r.parity == 0 && pair(phi, r.weight) == 0) return false;
  return true;
}

using CandidateSet = std::uint64_t;

// Precomputed bracket data for candidate sets.
class HyperborelSearch {
 public:
  HyperborelSearch(AlgebraPtr g, RootDataPtr rd, Vec phi) : g_(std::move(g)), rd_(std::move(rd)), phi_(std::move(phi)) {
    if (!even_generic(*rd_, phi_)) throw std::invalid_argument("positivity functional vanishes on an even root");
    cands_ = odd_candidates(*g_, *rd_);
    if (cands_.size() > 63) throw std::length_error("too many odd candidates for hyperborel search");
    std::size_t d = g_->dim();
    b0_ = borel_even_part(*rd_, phi_, &even_roots_);
    n0_ = positive_even_span(*rd_, phi_);

    // Coordinates of odd vectors in the candidate basis.
    std::vector<Vec> cols;
    for (std::size_t c = 0; c < cands_.size(); ++c)
      for (const auto& v : cands_[c].basis) {
        cols.push_back(v);
        owner_.push_back(c);
      }
    odd_basis_ = Matrix::from_columns(cols, d);

    std::size_t k = cands_.size();
    requires_.assign(k, 0);
    compat_.assign(k, 0);
    for (std::size_t c = 0; c < k; ++c) {
      for (const auto& y : cands_[c].basis)
        for (const auto& x : b0_) requires_[c] |= owners_of(g_->bracket(x, y));
      requires_[c] &= ~(CandidateSet(1) << c);
    }
    for (std::size_t c = 0; c < k; ++c)
      for (std::size_t e = c; e < k; ++e) {
        bool ok = true;
        for (const auto& y : cands_[c].basis)
          for (const auto& z : cands_[e].basis)
            if (ok && !in_span(n0_, g_->bracket(y, z), d)) ok = false;
        if (ok) {
          compat_[c] |= CandidateSet(1) << e;
          compat_[e] |= CandidateSet(1) << c;
        }
      }
  }

  const std::vector<OddCandidate>& candidates() const { return cands_; }
  std::size_t size() const { return cands_.size(); }

  CandidateSet closure(CandidateSet s) const {
    for (;;) {
      CandidateSet t = s;
      for (std::size_t c = 0; c < cands_.size(); ++c)
        if (s >> c & 1) t |= requires_[c];
      if (t == s) return s;
      s = t;
    }
  }

  bool closed(CandidateSet s) const { return closure(s) == s; }

  bool pairwise_ok(CandidateSet s) const {
    for (std::size_t c = 0; c < cands_.size(); ++c)
      if ((s >> c & 1) && (s & ~compat_[c])) return false;
    return true;
  }

  bool admissible(CandidateSet s) const { return closed(s) && pairwise_ok(s); }

  // All maximal admissible sets, sorted by bitmask.
  std::vector<CandidateSet> maximal_sets() const {
    std::set<CandidateSet> seen{0};
    std::deque<CandidateSet> queue{0};
    std::vector<CandidateSet> out;
    while (!queue.empty()) {
      CandidateSet s = queue.front();
      queue.pop_front();
      bool maximal = true;
      for (std::size_t c = 0; c < cands_.size(); ++c) {
        if (s >> c & 1) continue;
        CandidateSet t = closure(s | CandidateSet(1) << c);
        if (!pairwise_ok(t)) continue;
        maximal = false;
        if (seen.insert(t).second) queue.push_back(t);
      }
      if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Adds candidates in index order while the set stays admissible; the
  // result admits no further candidate, so it is maximal.
  CandidateSet extend_greedy(CandidateSet s) const {
    s = closure(s);
    if (!pairwise_ok(s)) throw std::invalid_argument("odd candidate set is not admissible");
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t c = 0; c < cands_.size(); ++c) {
        if (s >> c & 1) continue;
        CandidateSet t = closure(s | CandidateSet(1) << c);
        if (pairwise_ok(t)) {
          s = t;
          grew = true;
        }
      }
    }
    return s;
  }

  Hyperborel build(CandidateSet s) const {
    Hyperborel b;
    b.g = g_;
    b.rd = rd_;
    b.phi = phi_;
    b.even_roots = even_roots_;
    b.b0 = b0_;
    b.n = n0_;
    for (std::size_t c = 0; c < cands_.size(); ++c) {
      if (!(s >> c & 1)) continue;
      b.odd_parts.push_back(cands_[c].label);
      b.odd_weights.push_back(cands_[c].weight);
      b.b1.insert(b.b1.end(), cands_[c].basis.begin(), cands_[c].basis.end());
      if (!cands_[c].cartan) b.n.insert(b.n.end(), cands_[c].basis.begin(), cands_[c].basis.end());
    }
    return b;
  }

  CandidateSet set_of(const std::vector<std::string>& labels) const {
    CandidateSet s = 0;
    for (std::size_t c = 0; c < cands_.size(); ++c)
      if (std::find(labels.begin(), labels.end(), cands_[c].label) != labels.end()) s |= CandidateSet(1) << c;
    return s;
  }

 private:
  CandidateSet owners_of(const Vec& v) const {
    CandidateSet s = 0;
    if (is_zero(v)) return s;
    Vec c;
    if (!solve(odd_basis_, v, c)) throw std::logic_error("odd candidates do not span g1");
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) s |= CandidateSet(1) << owner_[i];
    return s;
  }

  AlgebraPtr g_;
  RootDataPtr rd_;
  Vec phi_;
  std::vector<OddCandidate> cands_;
  std::vector<Vec> b0_, n0_;
  std::vector<Weight> even_roots_;
  Matrix odd_basis_;
  std::vector<std::size_t> owner_;
  std::vector<CandidateSet> requires_, compat_;
};

// Residual symmetry fixing b0 is the stabilizer of a Weyl chamber, which is
// trivial, so distinct candidate sets are distinct hyperborels.
inline std::vector<Hyperborel> extend_to_hyperborels(AlgebraPtr g, RootDataPtr rd, const Vec& phi) {
  HyperborelSearch s(std::move(g), std::move(rd), phi);
  std::vector<Hyperborel> out;
  for (auto set : s.maximal_sets()) out.push_back(s.build(set));
  return out;
}

inline std::vector<Hyperborel> extend_to_hyperborels(AlgebraPtr g, const std::optional<Vec>& phi = std::nullopt) {
  auto rd = std::make_shared<const RootDecomposition>(standard_root_decomposition(*g));
  Vec f = phi ? *phi : default_positivity(*rd);
  return extend_to_hyperborels(std::move(g), rd, f);
}

// Hyperborel containing b0 and the odd root spaces positive for phi, if that
// odd set is admissible; nullopt otherwise.
inline std::optional<Hyperborel> hyperborel_containing_positive(AlgebraPtr g, RootDataPtr rd, const Vec& phi) {
  HyperborelSearch s(g, rd, phi);
  CandidateSet pos = 0;
  for (std::size_t c = 0; c < s.size(); ++c)
    if (!s.candidates()[c].cartan && pair(phi, s.candidates()[c].weight) > 0) pos |= CandidateSet(1) << c;
  pos = s.closure(pos);
  if (!s.pairwise_ok(pos)) return std::nullopt;
  return s.build(s.extend_greedy(pos));
}

// ---------------------------------------------------------------------------
// Independent verification from spans alone.

struct HyperborelReport {
  bool ok = true;
  std::string axiom;    // "borel", "bracket", "subalgebra", "maximality", "radical"
  std::string witness;
};

inline std::vector<Vec> brackets_of(const LieSuperalgebra& g, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> out;
  for (const auto& x : a)
    for (const auto& y : b) {
      Vec z = g.bracket(x, y);
      if (!is_zero(z)) out.push_back(std::move(z));
    }
  return out;
}

inline HyperborelReport verify_hyperborel(const Hyperborel& b) {
  const auto& g = *b.g;
  const auto& rd = *b.rd;
  std::size_t d = g.dim();
  HyperborelReport rep;
  auto fail = [&](std::string ax, std::string w) {
    rep.ok = false;
    rep.axiom = std::move(ax);
    rep.witness = std::move(w);
    return rep;
  };

  // b0 is a Borel of g0: contains h0, closed, exactly one of each +-alpha
  // among even roots, and meets the centralizer of h0 in g0 only in h0.
  if (!contains_span(b.b0, rd.h0, d)) return fail("borel", "b0 does not contain h0");
  for (const auto& v : b.b0)
    if (g.parity_of(v) != 0) return fail("borel", "b0 has an odd vector");
  for (const auto& z : brackets_of(g, b.b0, b.b0))
    if (!in_span(b.b0, z, d)) return fail("borel", "b0 not closed under bracket");
  std::size_t expected = rd.h0.size();
  for (const auto& r : rd.roots) {
    if (r.parity != 0) continue;
    bool in = contains_span(b.b0, r.basis, d);
    Weight neg = r.weight;
    for (auto& x : neg) x = -x;
    const RootSpace* opp = nullptr;
    for (const auto& s : rd.roots)
      if (s.parity == 0 && s.weight == neg) opp = &s;
    bool opp_in = opp && contains_span(b.b0, opp->basis, d);
    if (in == opp_in) return fail("borel", "even roots +-" + weight_str(r.weight, rd.coord_names) + " not split");
    if (in) expected += r.basis.size();
  }
  if (span_dim(b.b0, d) != expected) return fail("borel", "b0 has extra zero-weight directions");

  // [b1, b1] in [b0, b0]
  auto n0 = brackets_of(g, b.b0, b.b0);
  for (std::size_t i = 0; i < b.b1.size(); ++i)
    for (std::size_t j = i; j < b.b1.size(); ++j) {
      Vec z = g.bracket(b.b1[i], b.b1[j]);
      if (!in_span(n0, z, d)) return fail("bracket", "[b1_" + std::to_string(i) + ", b1_" + std::to_string(j) + "] not in [b0,b0]");
    }
  auto all = b.basis();
  for (const auto& z : brackets_of(g, all, all))
    if (!in_span(all, z, d)) return fail("subalgebra", "b not closed under bracket");

  // Maximality: no candidate closure can be added.
  auto cands = odd_candidates(g, rd);
  auto b0ab = n0;
  std::vector<Vec> cols;
  std::vector<std::size_t> owner;
  for (std::size_t c = 0; c < cands.size(); ++c)
    for (const auto& v : cands[c].basis) {
      cols.push_back(v);
      owner.push_back(c);
    }
  Matrix odd_basis = Matrix::from_columns(cols, d);
  for (const auto& c : cands) {
    if (contains_span(b.b1, c.basis, d)) continue;
    // smallest b0-stable extension containing c, built by repeated bracketing
    std::vector<Vec> ext = b.b1;
    ext.insert(ext.end(), c.basis.begin(), c.basis.end());
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& z : brackets_of(g, b.b0, ext))
        if (!in_span(ext, z, d)) {
          ext.push_back(z);
          grew = true;
        }
    }
    // enlarge to whole candidate spaces, matching the admissible-set granularity
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& v : ext) {
        Vec co;
        solve(odd_basis, v, co);
        for (std::size_t i = 0; i < co.size(); ++i)
          if (co[i] != 0 && !contains_span(ext, cands[owner[i]].basis, d)) {
            ext.insert(ext.end(), cands[owner[i]].basis.begin(), cands[owner[i]].basis.end());
            grew = true;
          }
        if (grew) break;
      }
    }
    bool ok = true;
    for (std::size_t i = 0; i < ext.size() && ok; ++i)
      for (std::size_t j = i; j < ext.size() && ok; ++j)
        if (!in_span(b0ab, g.bracket(ext[i], ext[j]), d)) ok = false;
    if (ok) return fail("maximality", "addable: " + c.label);
  }

  // n is an ideal of b with b/n abelian
  for (const auto& z : brackets_of(g, all, b.n))
    if (!in_span(b.n, z, d)) return fail("radical", "n is not an ideal of b");
  for (const auto& z : brackets_of(g, all, all))
    if (!in_span(b.n, z, d)) return fail("radical", "b/n is not abelian");
  return rep;
}

// ---------------------------------------------------------------------------
// Characters.

// Z-basis of the integer kernel of an integer matrix (rows are equations).
inline std::vector<std::vector<Integer>> integer_kernel(const std::vector<std::vector<Integer>>& rows, std::size_t n) {
  // Column operations on [A; I] recorded through the identity block.
  std::size_t m = rows.size();
  std::vector<std::vector<Integer>> a(m + n, std::vector<Integer>(n));
  for (std::size_t i = 0; i < m; ++i) a[i] = rows[i];
  for (std::size_t j = 0; j < n; ++j) a[m + j][j] = 1;
  std::size_t col = 0;
  for (std::size_t i = 0; i < m && col < n; ++i) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = col; j < n; ++j)
        if (a[i][j] != 0 && (best == n || abs(a[i][j]) < abs(a[i][best]))) best = j;
      if (best == n) break;
      if (best != col)
        for (auto& r : a) std::swap(r[best], r[col]);
      bool done = true;
      for (std::size_t j = col + 1; j < n; ++j) {
        if (a[i][j] == 0) continue;
        Integer q = a[i][j] / a[i][col];
        for (auto& r : a) r[j] -= q * r[col];
        if (a[i][j] != 0) done = false;
      }
      if (done) {
        ++col;
        break;
      }
    }
  }
  std::vector<std::vector<Integer>> out;
  for (std::size_t j = col; j < n; ++j) {
    std::vector<Integer> v(n);
    for (std::size_t k = 0; k < n; ++k) v[k] = a[m + k][j];
    out.push_back(std::move(v));
  }
  return out;
}

struct CharacterLattice {
  std::size_t rank = 0;
  std::vector<std::vector<Integer>> basis;  // in weight coordinates
  std::size_t derived_cartan_dim = 0;       // dim([b,b] cap h0)
};

inline CharacterLattice character_lattice(const Hyperborel& b) {
  const auto& g = *b.g;
  std::size_t d = g.dim(), r = b.h0().size();
  auto all = b.basis();
  auto derived = span_basis(brackets_of(g, all, all), d);
  auto meet = intersect(derived, b.h0(), d);
  CharacterLattice cl;
  cl.derived_cartan_dim = meet.size();
  std::vector<std::vector<Integer>> eqs;
  for (const auto& v : meet) {
    Vec c;
    coordinates(b.h0(), v, d, c);
    Integer l = 1;
    for (const auto& x : c) l = lcm(l, Integer(x.get_den()));
    std::vector<Integer> row;
    for (const auto& x : c) row.push_back(Integer(x * l));
    eqs.push_back(std::move(row));
  }
  cl.basis = integer_kernel(eqs, r);
  cl.rank = cl.basis.size();
  return cl;
}

}  // namespace ss

#pragma once

// Open-orbit tests by exact generic rank.
//
// Linear actions: the columns u.x (u in b) at the generic even point
// x = sum t_i e_i span T_x X iff b has an open orbit through x.
// Homogeneous spaces G/K: b + Ad(g)k = g for generic g in G0.

#include "superspherical/bareiss.hpp"
#include "superspherical/function_algebra.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ss {

using PolyMatrix = std::vector<std::vector<Poly>>;

struct OrbitRankCertificate {
  std::size_t even_rank = 0, odd_rank = 0;
  std::size_t even_ambient = 0, odd_ambient = 0;
  bool even_symbolic = false, odd_symbolic = false;
  PolyMatrix even_matrix, odd_matrix;  // rows: V0 (resp. V1), columns: b0 (resp. b1)
  std::vector<std::pair<std::size_t, std::size_t>> even_pivots, odd_pivots;
  Vec even_witness, odd_witness;
  std::size_t nvars = 0;

  bool full() const { return even_rank == even_ambient && odd_rank == odd_ambient; }
};

inline PolyMatrix evaluation_block(const Representation& v, const std::vector<Vec>& us, int row_parity) {
  std::vector<std::size_t> ev, rows;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (v.parity[i] == 0) ev.push_back(i);
    if (v.parity[i] == row_parity) rows.push_back(i);
  }
  std::size_t nv = ev.size();
  PolyMatrix m(rows.size(), std::vector<Poly>(us.size(), Poly(nv)));
  for (std::size_t c = 0; c < us.size(); ++c) {
    Matrix a = v.act(us[c]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t k = 0; k < nv; ++k)
        if (a(rows[r], ev[k]) != 0) m[r][c] += a(rows[r], ev[k]) * Poly::variable(nv, k);
  }
  return m;
}

inline OrbitRankCertificate linear_open_orbit_test(const Representation& v, const Hyperborel& b, std::uint64_t seed = 1,
                                                   bool force_symbolic = false) {
  OrbitRankCertificate cert;
  cert.even_ambient = v.even_dim();
  cert.odd_ambient = v.odd_dim();
  cert.nvars = v.even_dim();
  cert.even_matrix = evaluation_block(v, b.b0, 0);
  cert.odd_matrix = evaluation_block(v, b.b1, 1);
  auto er = generic_rank(cert.even_matrix, cert.nvars, seed, force_symbolic);
  auto od = generic_rank(cert.odd_matrix, cert.nvars, seed + 1, force_symbolic);
  cert.even_rank = er.rank;
  cert.even_symbolic = er.symbolic;
  cert.even_pivots = er.pivots;
  cert.even_witness = er.witness_point;
  cert.odd_rank = od.rank;
  cert.odd_symbolic = od.symbolic;
  cert.odd_pivots = od.pivots;
  cert.odd_witness = od.witness_point;
  return cert;
}

// Seeded specializations never exceed the generic rank; attained flags whether
// one of them reached it.
struct SpecializationCheck {
  bool sound = true;
  bool attained = false;
};

inline SpecializationCheck specialization_check(const PolyMatrix& m, std::size_t nvars, std::size_t generic,
                                                std::uint64_t seed, std::size_t samples = 5) {
  SpecializationCheck sc;
  if (m.empty()) {
    sc.attained = generic == 0;
    return sc;
  }
  for (const auto& pt : sample_points(nvars, samples, seed)) {
    std::size_t r = bareiss_rank(specialize(m, pt)).rank;
    if (r > generic) sc.sound = false;
    if (r == generic) sc.attained = true;
  }
  return sc;
}

struct LinearSphericity {
  Verdict verdict = Verdict::NOT_SPHERICAL;
  std::size_t hyperborel = 0;  // index of the first hyperborel with an open orbit
  std::vector<OrbitRankCertificate> certificates;
};

// Every hyperborel is conjugate to one containing the fixed b0, so the list
// from extend_to_hyperborels is exhaustive for this test.
inline LinearSphericity linear_sphericity(const Representation& v, const std::vector<Hyperborel>& bs, std::uint64_t seed = 1,
                                          bool all = false, bool force_symbolic = false) {
  LinearSphericity out;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    out.certificates.push_back(linear_open_orbit_test(v, bs[i], seed, force_symbolic));
    if (out.certificates.back().full() && out.verdict != Verdict::SPHERICAL) {
      out.verdict = Verdict::SPHERICAL;
      out.hyperborel = i;
      if (!all) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cross validation of the rank certificate against function evidence.

struct CrossValidation {
  bool consistent = true;
  Verdict rank_verdict = Verdict::NOT_SPHERICAL;
  Verdict function_verdict = Verdict::INCONCLUSIVE_AT_DEGREE;
  Verdict combined = Verdict::INCONCLUSIVE_AT_DEGREE;
  std::string bundle;  // reproduction data when inconsistent
};

inline CrossValidation cross_validate(const Representation& v, const Hyperborel& b, int d, std::uint64_t seed = 1) {
  CrossValidation cv;
  auto cert = linear_open_orbit_test(v, b, seed);
  SuperPolynomialAlgebra A(v, d);
  auto ev = affine_sphericity_test(A, b, d);
  cv.rank_verdict = cert.full() ? Verdict::SPHERICAL : Verdict::NOT_SPHERICAL;
  cv.function_verdict = ev.status;
  if (cert.full() && ev.status == Verdict::NOT_SPHERICAL) {
    cv.consistent = false;
    std::string odd;
    for (const auto& l : b.odd_parts) odd += l + " ";
    cv.bundle = "algebra=" + v.g->name + " rep=" + v.name + " degree=" + std::to_string(d) + " seed=" +
                std::to_string(seed) + " odd_part=" + odd + "evidence=" + ev.description;
  }
  cv.combined = cert.full() ? Verdict::SPHERICAL
                            : (cv.consistent ? Verdict::NOT_SPHERICAL : Verdict::INCONCLUSIVE_AT_DEGREE);
  return cv;
}

// ---------------------------------------------------------------------------
// Homogeneous spaces.

struct HomogeneousSpace {
  AlgebraPtr g;
  std::vector<Vec> k;
  std::string name;
};

// Empty if k is a subalgebra, else a witness.
inline std::string check_subalgebra(const LieSuperalgebra& g, const std::vector<Vec>& k) {
  for (std::size_t i = 0; i < k.size(); ++i)
    for (std::size_t j = i; j < k.size(); ++j)
      if (!in_span(k, g.bracket(k[i], k[j]), g.dim()))
        return "[k_" + std::to_string(i) + ", k_" + std::to_string(j) + "] leaves k";
  return {};
}

// Parity components of a graded subspace.
inline std::vector<Vec> parity_component(const LieSuperalgebra& g, const std::vector<Vec>& vs, int p) {
  std::vector<Vec> out;
  for (const auto& v : vs) {
    Vec w(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i)
      if (g.parity[i] == p) w[i] = v[i];
    if (!is_zero(w)) out.push_back(std::move(w));
  }
  return span_basis(out, g.dim());
}

// Trace form of the matrix realization restricted to k0 is nondegenerate;
// sufficient for k0 to be reductive.
inline std::optional<bool> k0_reductive(const LieSuperalgebra& g, const std::vector<Vec>& k) {
  if (!g.realization) return std::nullopt;
  auto k0 = parity_component(g, k, 0);
  if (k0.empty()) return true;
  std::vector<Matrix> ms;
  for (const auto& x : k0) ms.push_back(g.realization->to_matrix(x));
  Matrix form(k0.size(), k0.size());
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j) {
      Matrix p = ms[i] * ms[j];
      Rational tr;
      for (std::size_t a = 0; a < p.rows(); ++a) tr += p(a, a);
      form(i, j) = tr;
    }
  if (rank(form) == k0.size()) return true;
  return std::nullopt;
}

struct EvenRootVector {
  Vec e;
  Matrix ad;  // nilpotent
};

inline std::vector<EvenRootVector> even_root_vectors(const LieSuperalgebra& g, const RootDecomposition& rd, const Vec& phi) {
  std::vector<EvenRootVector> pos, neg;
  for (const auto& r : rd.roots) {
    if (r.parity != 0) continue;
    for (const auto& e : r.basis) (pair(phi, r.weight) > 0 ? pos : neg).push_back({e, g.ad(e)});
  }
  pos.insert(pos.end(), neg.begin(), neg.end());
  return pos;
}

// exp(s ad e) at a rational s.
inline Matrix exp_nilpotent(const Matrix& n, const Rational& s) {
  std::size_t d = n.rows();
  Matrix out = Matrix::identity(d), term = Matrix::identity(d);
  for (std::size_t k = 1; k <= d; ++k) {
    term = term * n;
    if (term.is_zero()) break;
    term *= s / Rational(static_cast<long>(k));
    out += term;
  }
  return out;
}

// Columns Ad(g) k with g = prod_i exp(s_i ad e_i), symbolic in s.
inline std::vector<std::vector<Poly>> symbolic_conjugate(const std::vector<EvenRootVector>& roots, const std::vector<Vec>& k,
                                                         std::size_t d) {
  std::size_t nv = roots.size();
  std::vector<std::vector<Poly>> cols;
  for (const auto& v : k) {
    std::vector<Poly> c(d, Poly(nv));
    for (std::size_t i = 0; i < d; ++i)
      if (v[i] != 0) c[i] = Poly(nv, v[i]);
    cols.push_back(std::move(c));
  }
  // rightmost factor acts first
  for (std::size_t f = roots.size(); f-- > 0;) {
    const Matrix& n = roots[f].ad;
    Poly s = Poly::variable(nv, f);
    for (auto& c : cols) {
      // term_k = N^k v / k!, acc = sum s^k term_k
      std::vector<Poly> acc = c, term = c;
      Poly spow(nv, 1);
      for (std::size_t k = 1; k <= d; ++k) {
        std::vector<Poly> next(d, Poly(nv));
        bool nonzero = false;
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            if (n(i, j) != 0 && !term[j].is_zero()) {
              next[i] += n(i, j) * term[j];
              nonzero = true;
            }
        if (!nonzero) break;
        Rational inv = Rational(1) / Rational(static_cast<long>(k));
        for (auto& t : next) t *= inv;
        spow = spow * s;
        for (std::size_t i = 0; i < d; ++i)
          if (!next[i].is_zero()) acc[i] += spow * next[i];
        term = std::move(next);
      }
      c = std::move(acc);
    }
  }
  return cols;
}

struct HomogeneousCertificate {
  std::size_t hyperborel = 0;
  std::size_t even_dim = 0, odd_dim = 0;  // generic dims of (b + Ad(g)k) per parity
  std::string method;                     // dimension-count, specialization, symbolic
  Vec witness;                            // parameters s at which full rank was reached
  bool full = false;
};

struct HomogeneousResult {
  Verdict verdict = Verdict::NOT_SPHERICAL;
  std::vector<HomogeneousCertificate> per_hyperborel;
  std::optional<bool> k0_reductive;
};

inline std::size_t rank_of_columns(const std::vector<Vec>& cols, std::size_t d) { return span_dim(cols, d); }

inline HomogeneousResult homogeneous_sphericity_test(const HomogeneousSpace& X, const std::vector<Hyperborel>& bs,
                                                     std::uint64_t seed = 7, bool all = false) {
  const auto& g = *X.g;
  std::size_t d = g.dim();
  if (auto w = check_subalgebra(g, X.k); !w.empty()) throw std::invalid_argument("k is not a subalgebra: " + w);
  HomogeneousResult res;
  res.k0_reductive = k0_reductive(g, X.k);
  if (bs.empty()) return res;
  const auto& rd = *bs.front().rd;
  auto roots = even_root_vectors(g, rd, bs.front().phi);
  std::size_t g0 = g.even_dim(), g1 = g.odd_dim();
  auto k0 = parity_component(g, X.k, 0), k1 = parity_component(g, X.k, 1);

  for (std::size_t bi = 0; bi < bs.size(); ++bi) {
    const auto& b = bs[bi];
    HomogeneousCertificate hc;
    hc.hyperborel = bi;
    if (b.b0.size() + k0.size() < g0 || b.b1.size() + k1.size() < g1) {
      hc.method = "dimension-count";
      hc.even_dim = std::min(g0, b.b0.size() + k0.size());
      hc.odd_dim = std::min(g1, b.b1.size() + k1.size());
      res.per_hyperborel.push_back(hc);
      continue;
    }
    // seeded specializations first: full rank at one point is exact
    for (const auto& pt : sample_points(roots.size(), 3, seed + bi)) {
      Matrix m = Matrix::identity(d);
      for (std::size_t f = 0; f < roots.size(); ++f) m = m * exp_nilpotent(roots[f].ad, pt[f]);
      std::vector<Vec> c0 = b.b0, c1 = b.b1;
      for (const auto& v : k0) c0.push_back(m * v);
      for (const auto& v : k1) c1.push_back(m * v);
      hc.even_dim = rank_of_columns(c0, d);
      hc.odd_dim = rank_of_columns(c1, d);
      if (hc.even_dim == g0 && hc.odd_dim == g1) {
        hc.method = "specialization";
        hc.witness = pt;
        hc.full = true;
        break;
      }
    }
    if (!hc.full) {
      hc.method = "symbolic";
      std::size_t nv = roots.size();
      auto rank_part = [&](const std::vector<Vec>& bpart, const std::vector<Vec>& kpart, int p) {
        auto conj = symbolic_conjugate(roots, kpart, d);
        std::vector<std::size_t> rows = g.indices_of_parity(p);
        PolyMatrix m(rows.size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
          for (const auto& v : bpart) m[r].push_back(Poly(nv, v[rows[r]]));
          for (const auto& c : conj) m[r].push_back(c[rows[r]]);
        }
        return generic_rank(m, nv, seed, true).rank;
      };
      hc.even_dim = rank_part(b.b0, k0, 0);
      hc.odd_dim = rank_part(b.b1, k1, 1);
      hc.full = hc.even_dim == g0 && hc.odd_dim == g1;
    }
    res.per_hyperborel.push_back(hc);
    if (hc.full) {
      res.verdict = Verdict::SPHERICAL;
      if (!all) break;
    }
  }
  return res;
}

}  // namespace ss

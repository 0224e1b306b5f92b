#pragma once

// Reproduction tables: named cases, expectation files, and row runners
// shared by the command-line tool and the acceptance checks.

#include "superspherical/serialize.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace ss {

// ---------------------------------------------------------------------------
// Expectation files: '#' comment lines, then a CSV header and plain rows
// without quoting.

using CsvRow = std::map<std::string, std::string>;

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

inline std::vector<CsvRow> read_expectations(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open expectation file " + path);
  std::vector<std::string> header;
  std::vector<CsvRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line, ',');
    if (header.empty()) {
      header = cells;
      continue;
    }
    if (cells.size() != header.size()) throw std::runtime_error(path + ": ragged row: " + line);
    CsvRow r;
    for (std::size_t i = 0; i < cells.size(); ++i) r[header[i]] = cells[i];
    rows.push_back(std::move(r));
  }
  return rows;
}

inline std::vector<std::size_t> parse_sizes(const std::string& s) {
  std::vector<std::size_t> out;
  if (s == "-" || s.empty()) return out;
  for (const auto& p : split(s, '/')) out.push_back(std::stoul(p));
  return out;
}

// Runs f(0..n-1) on a small pool; results are stored by index, so the
// output order never depends on scheduling.
template <class F>
void parallel_for(std::size_t n, F f, unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1)));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < n;) f(i);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

// ---------------------------------------------------------------------------
// Spherical representations.

// Families: gl-standard, gl-S2, gl-PiS2 on gl(m|n); osp-standard,
// osp-Pistandard on osp(m|2n); p-Pistandard on p(n). The osp and p
// representations carry the extra scalar factor.
inline Representation table_representation(const std::string& family, std::size_t m, std::size_t n) {
  auto alg = [](LieSuperalgebra g) { return std::make_shared<const LieSuperalgebra>(std::move(g)); };
  if (family == "gl-standard") return standard_rep(alg(gl(m, n)));
  if (family == "gl-S2") return sym2(standard_rep(alg(gl(m, n))));
  if (family == "gl-PiS2") return pi_shift(sym2(standard_rep(alg(gl(m, n)))));
  if (family == "osp-standard") return with_scalars(standard_rep(alg(osp(m, 2 * n))));
  if (family == "osp-Pistandard") return with_scalars(pi_shift(standard_rep(alg(osp(m, 2 * n)))));
  if (family == "p-Pistandard") return with_scalars(pi_shift(standard_rep(alg(pe(n)))));
  throw std::invalid_argument("unknown representation family: " + family);
}

struct RepTableRow {
  std::string family;
  std::size_t m = 0, n = 0;
  std::string super_dim, expected_dim;
  Verdict verdict = Verdict::NOT_SPHERICAL;
  std::string expected;
  std::size_t hyperborels = 0;
  OrbitRankCertificate certificate;  // of the first hyperborel with an open orbit, else the last tried
  bool match() const { return super_dim == expected_dim && to_string(verdict) == expected; }
};

inline RepTableRow run_rep_row(const CsvRow& e, std::uint64_t seed, bool force_symbolic = true) {
  RepTableRow r;
  r.family = e.at("family");
  r.m = std::stoul(e.at("m"));
  r.n = std::stoul(e.at("n"));
  r.expected_dim = e.at("sdim");
  r.expected = e.at("spherical");
  auto v = table_representation(r.family, r.m, r.n);
  r.super_dim = v.super_dim();
  auto bs = extend_to_hyperborels(v.g);
  r.hyperborels = bs.size();
  auto ls = linear_sphericity(v, bs, seed, false, force_symbolic);
  r.verdict = ls.verdict;
  r.certificate = ls.verdict == Verdict::SPHERICAL ? ls.certificates[ls.hyperborel] : ls.certificates.back();
  return r;
}

// Rows whose size label sum is at most max_total.
inline std::vector<CsvRow> select_rep_rows(const std::vector<CsvRow>& all, std::size_t max_total) {
  std::vector<CsvRow> out;
  for (const auto& e : all)
    if (std::stoul(e.at("m")) + std::stoul(e.at("n")) <= max_total) out.push_back(e);
  return out;
}

// ---------------------------------------------------------------------------
// Symmetric pairs.

// nullopt for the exceptional rows, which have no construction here.
inline std::optional<Involution> table_involution(const std::string& pair, const std::vector<std::size_t>& s) {
  auto alg = [](LieSuperalgebra g) { return std::make_shared<const LieSuperalgebra>(std::move(g)); };
  auto need = [&](std::size_t k) {
    if (s.size() != k) throw std::invalid_argument(pair + " expects " + std::to_string(k) + " sizes");
  };
  if (pair == "delta-gl") return need(2), grading_involution(alg(gl(s[0], s[1])));
  if (pair == "delta-osp") return need(2), grading_involution(alg(osp(s[0], 2 * s[1])));
  if (pair == "delta-p") return need(1), grading_involution(alg(pe(s[0])));
  if (pair == "delta-q") return need(1), grading_involution(alg(qn(s[0])));
  if (pair == "gl-block") return need(4), gl_block_involution(s[0], s[1], s[2], s[3]);
  if (pair == "gl-osp") return need(2), gl_osp_involution(s[0], s[1]);
  if (pair == "gl-p") return need(1), gl_p_involution(s[0]);
  if (pair == "gl-q") return need(1), gl_q_involution(s[0]);
  if (pair == "osp-block") return need(4), osp_block_involution(s[0], s[1], s[2], s[3]);
  if (pair == "osp-gl") return need(2), osp_gl_involution(s[0], s[1]);
  if (pair == "p-block") return need(2), p_block_involution(s[0], s[1]);
  if (pair == "p-gl") return need(2), p_gl_involution(s[0], s[1]);
  return std::nullopt;
}

struct PairOutcome {
  IwasawaVerdict iwasawa = IwasawaVerdict::NO_IWASAWA;
  Verdict spherical = Verdict::NOT_SPHERICAL;
  std::string method;  // how the spherical verdict was reached
  std::size_t hyperborels = 0;
  SymmetricPair pair;
  IwasawaResult iw;
  HomogeneousResult hom;
};

// With an Iwasawa decomposition the hyperborel built from it decides; otherwise
// every hyperborel through the standard b0 is tried.
inline PairOutcome analyse_pair(const Involution& theta, std::uint64_t seed = 7) {
  PairOutcome o{IwasawaVerdict::NO_IWASAWA, Verdict::NOT_SPHERICAL, "", 0, make_symmetric_pair(theta), {}, {}};
  o.iw = iwasawa_test(o.pair);
  o.iwasawa = o.iw.verdict;
  HomogeneousSpace X{theta.g, o.pair.k, theta.name};
  if (o.iwasawa == IwasawaVerdict::HAS_IWASAWA) {
    auto ih = iwasawa_to_hyperborel(o.pair);
    o.hom = homogeneous_sphericity_test(X, {ih.b}, seed);
    o.hyperborels = 1;
    o.method = "iwasawa-hyperborel/" + o.hom.per_hyperborel.front().method;
    if (o.hom.verdict != Verdict::SPHERICAL) {
      auto bs = extend_to_hyperborels(theta.g);
      o.hom = homogeneous_sphericity_test(X, bs, seed);
      o.hyperborels = bs.size();
      o.method = "all-hyperborels/" + o.hom.per_hyperborel.back().method;
    }
  } else {
    auto bs = extend_to_hyperborels(theta.g);
    o.hyperborels = bs.size();
    o.hom = homogeneous_sphericity_test(X, bs, seed);
    std::string m = o.hom.per_hyperborel.empty() ? "none" : o.hom.per_hyperborel.back().method;
    for (const auto& c : o.hom.per_hyperborel)
      if (c.full) m = c.method;
    o.method = "all-hyperborels/" + m;
  }
  o.spherical = o.hom.verdict;
  return o;
}

struct PairTableRow {
  std::string pair, sizes;
  std::string expected_spherical, expected_iwasawa;
  std::string spherical = "UNIMPLEMENTED", iwasawa = "UNIMPLEMENTED";
  std::string method;
  bool implemented = false;
  std::string super_dim;

  bool spherical_match() const { return !implemented || spherical == expected_spherical; }
  bool iwasawa_match() const { return !implemented || iwasawa == expected_iwasawa; }
  bool match() const { return spherical_match() && iwasawa_match(); }
  std::string match_str() const { return implemented ? (match() ? "yes" : "NO") : "n/a"; }
};

inline PairTableRow run_pair_row(const CsvRow& e, std::uint64_t seed = 7) {
  PairTableRow r;
  r.pair = e.at("pair");
  r.sizes = e.at("sizes");
  r.expected_spherical = e.at("spherical");
  r.expected_iwasawa = e.at("iwasawa");
  auto theta = table_involution(r.pair, parse_sizes(r.sizes));
  if (!theta) return r;
  auto o = analyse_pair(*theta, seed);
  r.implemented = true;
  r.super_dim = theta->g->super_dim();
  r.spherical = to_string(o.spherical);
  r.iwasawa = to_string(o.iwasawa);
  r.method = o.method;
  return r;
}

inline std::vector<CsvRow> select_pair_rows(const std::vector<CsvRow>& all, std::size_t max_size) {
  std::vector<CsvRow> out;
  for (const auto& e : all) {
    auto s = parse_sizes(e.at("sizes"));
    if (std::all_of(s.begin(), s.end(), [&](std::size_t x) { return x <= max_size; })) out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Weight monoids in the coordinates of the even generators.

struct LatticeMonoid {
  std::vector<std::string> basis;            // weights of the even coordinate functions
  bool in_basis = false;                     // every weight was expressed in that basis
  std::vector<std::vector<Rational>> points; // monoid weights, basis coordinates (or raw)
  std::vector<std::vector<Rational>> nilpotent_only;
  WeightMonoid raw;
};

inline std::vector<Weight> even_generator_weights(const Representation& v, const std::vector<Vec>& h0) {
  auto vw = basis_weights(v, h0);
  if (!vw) throw std::logic_error(v.name + ": basis is not a weight basis");
  std::vector<Weight> out;
  for (std::size_t i = 0; i < v.dim(); ++i)
    if (v.parity[i] == 0) {
      Weight w = (*vw)[i];
      for (auto& x : w) x = -x;
      out.push_back(std::move(w));
    }
  return out;
}

inline LatticeMonoid lattice_monoid(const SuperPolynomialAlgebra& A, const Hyperborel& b, int d) {
  LatticeMonoid lm;
  lm.raw = weight_monoid(A, b, d);
  auto gens = even_generator_weights(A.rep(), b.h0());
  std::size_t r = b.h0().size();
  lm.in_basis = !gens.empty() && span_dim(gens, r) == gens.size();
  auto express = [&](const Weight& w) {
    if (!lm.in_basis) return std::vector<Rational>(w.begin(), w.end());
    Vec c;
    if (!coordinates(gens, w, r, c)) {
      lm.in_basis = false;
      return std::vector<Rational>(w.begin(), w.end());
    }
    return c;
  };
  for (const auto& e : lm.raw.weights) lm.points.push_back(express(e.weight));
  for (const auto& e : lm.raw.nilpotent_only) lm.nilpotent_only.push_back(express(e.weight));
  if (!lm.in_basis) {
    lm.points.clear();
    lm.nilpotent_only.clear();
    for (const auto& e : lm.raw.weights) lm.points.emplace_back(e.weight.begin(), e.weight.end());
    for (const auto& e : lm.raw.nilpotent_only) lm.nilpotent_only.emplace_back(e.weight.begin(), e.weight.end());
    lm.basis = b.coord_names();
  } else {
    for (const auto& w : gens) lm.basis.push_back(weight_str(w, b.coord_names()));
  }
  std::sort(lm.points.begin(), lm.points.end());
  std::sort(lm.nilpotent_only.begin(), lm.nilpotent_only.end());
  return lm;
}

// Hyperborel through the standard b0 containing the odd root spaces that are
// positive (upper) or negative (lower) for the default functional.
inline Hyperborel triangular_hyperborel(AlgebraPtr g, bool upper) {
  auto rd = std::make_shared<const RootDecomposition>(standard_root_decomposition(*g));
  Vec phi = default_positivity(*rd);
  if (!upper)
    for (auto& x : phi) x = -x;
  auto b = hyperborel_containing_positive(g, rd, phi);
  if (!b) throw std::logic_error(g->name + ": no hyperborel contains the chosen odd root spaces");
  return *b;
}

// Plain SVG scatter of integer points; y grows upward.
inline std::string lattice_svg(const std::vector<std::vector<Rational>>& pts, const std::vector<std::string>& axes,
                               const std::string& title) {
  long maxx = 1, maxy = 1;
  for (const auto& p : pts) {
    maxx = std::max(maxx, p.size() > 0 ? static_cast<long>(p[0].get_d()) : 0L);
    maxy = std::max(maxy, p.size() > 1 ? static_cast<long>(p[1].get_d()) : 0L);
  }
  const long s = 40, pad = 40;
  long w = maxx * s + 2 * pad, h = maxy * s + 2 * pad;
  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\">\n";
  o << "<title>" << title << "</title>\n";
  o << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << w - pad / 2 << "\" y2=\"" << h - pad
    << "\" stroke=\"gray\"/>\n";
  o << "<line x1=\"" << pad << "\" y1=\"" << h - pad << "\" x2=\"" << pad << "\" y2=\"" << pad / 2 << "\" stroke=\"gray\"/>\n";
  if (axes.size() >= 2) {
    o << "<text x=\"" << w - pad / 2 << "\" y=\"" << h - pad / 4 << "\">" << axes[0] << "</text>\n";
    o << "<text x=\"" << pad / 4 << "\" y=\"" << pad / 2 << "\">" << axes[1] << "</text>\n";
  }
  for (const auto& p : pts) {
    if (p.size() < 2) continue;
    o << "<circle cx=\"" << pad + static_cast<long>(p[0].get_d()) * s << "\" cy=\""
      << h - pad - static_cast<long>(p[1].get_d()) * s << "\" r=\"4\" data-point=\"" << p[0].get_str() << ","
      << p[1].get_str() << "\"/>\n";
  }
  o << "</svg>\n";
  return o.str();
}

}  // namespace ss

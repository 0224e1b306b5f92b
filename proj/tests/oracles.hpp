#pragma once

// Independent reference computations shared by the unit tests and the
// acceptance binary. Nothing here calls the search or monoid code it checks.

#include "superspherical/tables.hpp"

#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using namespace ss;
using LabelSet = std::set<std::string>;

inline AlgebraPtr ptr(LieSuperalgebra g) { return std::make_shared<const LieSuperalgebra>(std::move(g)); }

inline std::vector<Vec> brackets(const LieSuperalgebra& g, const std::vector<Vec>& a, const std::vector<Vec>& b) {
  std::vector<Vec> out;
  for (const auto& x : a)
    for (const auto& y : b) out.push_back(g.bracket(x, y));
  return out;
}

// Hyperborels of gl(m|n) through the standard b0: every subset of odd root
// spaces is tested for b0-stability and [b1, b1] in [b0, b0], and the
// maximal ones are kept.
inline std::set<LabelSet> brute_force_hyperborels(const LieSuperalgebra& g) {
  auto rd = standard_root_decomposition(g);
  Vec phi = default_positivity(rd);
  std::size_t d = g.dim();
  std::vector<Vec> b0 = rd.h0;
  for (const auto* r : rd.of_parity(0))
    if (pair(phi, r->weight) > 0) b0.insert(b0.end(), r->basis.begin(), r->basis.end());
  auto b0b0 = brackets(g, b0, b0);
  auto odd = rd.of_parity(1);
  std::size_t k = odd.size();

  std::vector<std::uint32_t> good;
  for (std::uint32_t s = 0; s < (1u << k); ++s) {
    std::vector<Vec> b1;
    for (std::size_t i = 0; i < k; ++i)
      if (s >> i & 1) b1.insert(b1.end(), odd[i]->basis.begin(), odd[i]->basis.end());
    bool ok = true;
    for (const auto& z : brackets(g, b0, b1))
      if (!in_span(b1, z, d)) ok = false;
    for (const auto& z : brackets(g, b1, b1))
      if (ok && !in_span(b0b0, z, d)) ok = false;
    if (ok) good.push_back(s);
  }
  std::set<LabelSet> out;
  for (auto s : good) {
    bool maximal = std::none_of(good.begin(), good.end(), [&](std::uint32_t t) { return t != s && (t & s) == s; });
    if (!maximal) continue;
    LabelSet ls;
    for (std::size_t i = 0; i < k; ++i)
      if (s >> i & 1) ls.insert("x[" + weight_str(odd[i]->weight, rd.coord_names) + "]");
    out.insert(ls);
  }
  return out;
}

inline std::set<LabelSet> odd_part_sets(const std::vector<Hyperborel>& bs) {
  std::set<LabelSet> out;
  for (const auto& b : bs) out.insert(LabelSet(b.odd_parts.begin(), b.odd_parts.end()));
  return out;
}

using Point = std::pair<long, long>;

// Weight monoid of S^2 C^{1|2} in the basis of its even generators: the
// origin plus the points with j >= 1 (upper) or i >= 1 (lower), up to degree d.
inline std::set<Point> gl12_monoid(bool upper, int d) {
  std::set<Point> out{{0, 0}};
  for (long i = 0; i <= d; ++i)
    for (long j = 0; i + j <= d; ++j)
      if (upper ? j >= 1 : i >= 1) out.insert({i, j});
  return out;
}

inline std::optional<std::set<Point>> as_points(const std::vector<std::vector<Rational>>& pts) {
  std::set<Point> out;
  for (const auto& p : pts) {
    if (p.size() != 2 || !is_integer(p[0]) || !is_integer(p[1])) return std::nullopt;
    out.insert({p[0].get_num().get_si(), p[1].get_num().get_si()});
  }
  return out;
}

// Every weight of the full monoid appears in the monoid of the even part.
inline bool contained_in_even_monoid(const WeightMonoid& full, const WeightMonoid& even) {
  std::set<Weight> ev;
  for (const auto& e : even.weights) ev.insert(e.weight);
  return std::all_of(full.weights.begin(), full.weights.end(), [&](const MonoidEntry& e) { return ev.count(e.weight) > 0; });
}

struct SuiteCase {
  Representation v;
  Verdict expected;
};

// Linear actions with known answers.
inline std::vector<SuiteCase> linear_suite() {
  std::vector<SuiteCase> out;
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 2; ++n) {
      out.push_back({standard_rep(ptr(gl(m, n))), Verdict::SPHERICAL});
      out.push_back({sym2(standard_rep(ptr(gl(m, n)))), Verdict::SPHERICAL});
    }
  out.push_back({pi_shift(sym2(standard_rep(ptr(gl(1, 1))))), Verdict::SPHERICAL});
  out.push_back({with_scalars(standard_rep(ptr(osp(2, 2)))), Verdict::SPHERICAL});
  out.push_back({with_scalars(pi_shift(standard_rep(ptr(osp(1, 2))))), Verdict::SPHERICAL});
  out.push_back({with_scalars(pi_shift(standard_rep(ptr(pe(2))))), Verdict::SPHERICAL});
  out.push_back({standard_rep(ptr(gl(0, 2))), Verdict::NOT_SPHERICAL});
  out.push_back({standard_rep(ptr(gl(0, 3))), Verdict::NOT_SPHERICAL});
  // SO(3) has an invariant quadric on C^3, so no open Borel orbit without scalars
  out.push_back({standard_rep(ptr(osp(3, 0))), Verdict::NOT_SPHERICAL});
  return out;
}

// Every algebra family at small sizes.
inline std::vector<AlgebraPtr> constructed_algebras() {
  std::vector<AlgebraPtr> out;
  for (std::size_t m = 0; m <= 3; ++m)
    for (std::size_t n = 0; n <= 3; ++n)
      if (m + n >= 1 && m + n <= 4) out.push_back(ptr(gl(m, n)));
  for (auto [m, n] : {std::pair{2, 1}, std::pair{1, 2}, std::pair{2, 2}}) out.push_back(ptr(sl(m, n)));
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t n : {2, 4}) out.push_back(ptr(osp(m, n)));
  for (std::size_t n = 1; n <= 3; ++n) {
    out.push_back(ptr(pe(n)));
    out.push_back(ptr(qn(n)));
  }
  return out;
}

}  // namespace oracle

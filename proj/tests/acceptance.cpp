// Acceptance run: one PASS or FAIL line per criterion, exit status 1 if any
// criterion fails.

#include "oracles.hpp"

#include <chrono>
#include <iostream>
#include <regex>
#include <sstream>

using namespace ss;
using oracle::ptr;

namespace {

std::string data(const std::string& f) { return std::string(SUPERSPHERICAL_DATA_DIR) + "/" + f; }

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  void check(bool ok, const std::string& what) {
    if (!ok) problems_.push_back(what);
  }
  void note(const std::string& s) { notes_.push_back(s); }
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool report() const {
    bool ok = problems_.empty();
    std::ostringstream o;
    o.setf(std::ios::fixed);
    o.precision(2);
    o << (ok ? "PASS" : "FAIL") << " criterion " << id_ << ": " << title_ << " [" << seconds() << " s]";
    for (const auto& n : notes_) o << "; " << n;
    std::cout << o.str() << "\n";
    for (const auto& p : problems_) std::cout << "    problem: " << p << "\n";
    return ok;
  }

 private:
  int id_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::vector<std::string> notes_, problems_;
};

// Runs a criterion body; an exception counts as a failure of that criterion.
template <class F>
bool run(int id, const std::string& title, F body) {
  Criterion c(id, title);
  try {
    body(c);
  } catch (const std::exception& e) {
    c.check(false, std::string("exception: ") + e.what());
  }
  return c.report();
}

bool empty_block(const PolyMatrix& m) { return m.empty() || m[0].empty(); }

void monoid_figures(Criterion& c) {
  auto g = ptr(gl(1, 2));
  SuperPolynomialAlgebra A(sym2(standard_rep(g)), 6);
  for (bool upper : {true, false}) {
    std::string name = upper ? "B+" : "B-";
    auto lm = lattice_monoid(A, triangular_hyperborel(g, upper), 6);
    c.check(lm.in_basis, name + ": weights not in the lattice of even generators");
    auto pts = oracle::as_points(lm.points);
    c.check(pts && *pts == oracle::gl12_monoid(upper, 6), name + ": monoid differs from the predicted set");
    c.check(lm.nilpotent_only.empty(), name + ": weights carried only by nilpotent functions");
    c.note(name + " " + std::to_string(lm.points.size()) + " points");
  }
  c.check(c.seconds() < 10, "runtime over 10 s");
}

void counterexamples(Criterion& c) {
  for (std::size_t n : {2, 3}) {
    auto g = ptr(gl(0, n));
    auto v = standard_rep(g);
    std::string name = g->name;
    auto rd = standard_root_decomposition(*g);
    auto ws = basis_weights(v, rd.h0);
    c.check(ws && std::set<Weight>(ws->begin(), ws->end()).size() == ws->size(), name + ": weights not multiplicity free");
    auto bs = extend_to_hyperborels(g);
    c.check(linear_sphericity(v, bs, 1, true, true).verdict == Verdict::NOT_SPHERICAL, name + ": rank test says spherical");
    SuperPolynomialAlgebra A(v, 4);
    for (const auto& b : bs) {
      auto ev = affine_sphericity_test(A, b, 4);
      bool witness = ev.status == Verdict::NOT_SPHERICAL && ev.kind == "nilpotent" && ev.functions.size() == 1 &&
                     nilpotent(ev.functions[0]) && recheck_evidence(A, b, ev);
      c.check(witness, name + ": no rechecked nilpotent highest weight function");
      if (witness) c.note(name + " witness " + A.str(ev.functions[0]));
    }
  }

  auto g = ptr(osp(1, 2));
  auto rd = standard_root_decomposition(*g);
  HomogeneousSpace X{g, rd.h0, "OSP(1|2)/T"};
  auto res = homogeneous_sphericity_test(X, extend_to_hyperborels(g), 7, true);
  c.check(res.verdict == Verdict::NOT_SPHERICAL, "OSP(1|2)/T: spherical");
  c.check(g->odd_dim() == 2, "OSP(1|2)/T: odd dimension of X is not 2");
  for (const auto& h : res.per_hyperborel) {
    c.check(h.odd_dim < g->odd_dim(), "OSP(1|2)/T: odd rank is full");
    c.check(h.even_dim == g->even_dim(), "OSP(1|2)/T: even rank is deficient too");
  }
  c.note("OSP(1|2)/T odd rank " + std::to_string(res.per_hyperborel.front().odd_dim) + "/" +
         std::to_string(g->odd_dim()));
}

void representation_table(Criterion& c) {
  auto rows = read_expectations(data("spherical_reps.csv"));
  std::size_t ok = 0;
  for (const auto& e : rows) {
    auto r = run_rep_row(e, 1, true);
    std::string tag = r.family + " " + std::to_string(r.m) + "|" + std::to_string(r.n);
    bool symbolic = (r.certificate.even_symbolic || empty_block(r.certificate.even_matrix)) &&
                    (r.certificate.odd_symbolic || empty_block(r.certificate.odd_matrix));
    c.check(r.verdict == Verdict::SPHERICAL, tag + ": " + to_string(r.verdict));
    c.check(r.super_dim == r.expected_dim, tag + ": dim " + r.super_dim + " expected " + r.expected_dim);
    c.check(symbolic, tag + ": certificate is not symbolic");
    ok += r.match() && symbolic;
  }
  c.note(std::to_string(ok) + "/" + std::to_string(rows.size()) + " rows spherical by symbolic rank");
  c.check(c.seconds() < 120, "runtime over 2 min");
}

void iwasawa_table(Criterion& c) {
  auto rows = select_pair_rows(read_expectations(data("symmetric_pairs.csv")), 3);
  std::size_t ok = 0, implemented = 0, unimplemented = 0;
  for (const auto& e : rows) {
    auto theta = table_involution(e.at("pair"), parse_sizes(e.at("sizes")));
    if (!theta) {
      ++unimplemented;
      continue;
    }
    ++implemented;
    auto verdict = to_string(iwasawa_test(make_symmetric_pair(*theta)).verdict);
    bool match = verdict == e.at("iwasawa");
    c.check(match, e.at("pair") + " " + e.at("sizes") + ": " + verdict + " expected " + e.at("iwasawa"));
    ok += match;
  }
  c.note(std::to_string(ok) + "/" + std::to_string(implemented) + " rows match");
  c.note(std::to_string(unimplemented) + " exceptional rows UNIMPLEMENTED");
  c.check(c.seconds() < 120, "runtime over 2 min");
}

void diagonal_pairs(Criterion& c) {
  for (auto g : {gl(1, 2), gl(2, 2), osp(1, 2), qn(2)}) {
    bool even = cartan_data(g).is_cartan_even;
    auto iw = iwasawa_test(make_symmetric_pair(swap_involution(g)));
    bool has = iw.verdict == IwasawaVerdict::HAS_IWASAWA;
    c.check(has == even, g.name + ": " + to_string(iw.verdict) + " but Cartan-even is " + (even ? "true" : "false"));
    c.note(g.name + " " + (has ? "HAS" : "NO"));
  }
}

void gl11_block(Criterion& c) {
  auto rep = verify_socle_and_block(2);
  c.check(rep.socle_is_bottom_row && rep.socle_matches_epsilon && rep.epsilon_independent,
          "socle is not the sum of L(x)L* over the band");
  c.check(rep.loewy_length_three && rep.middle_is_second_layer, "Loewy layers differ from the three-row pattern");
  c.check(rep.arrows_unit, "arrow coefficients are not +-1 in the recorded normalization");
  for (const auto& f : rep.failures) c.check(false, f);

  // arrows read back from the emitted graph
  std::set<std::string> emitted, expected;
  std::string dot = g11_diagram_dot(rep.arrows);
  std::regex edge("\"([^\"]+)\" -> \"([^\"]+)\" \\[label=\"([a-z]+) ");
  for (std::sregex_iterator it(dot.begin(), dot.end(), edge), end; it != end; ++it)
    emitted.insert((*it)[1].str() + " " + (*it)[3].str() + " " + (*it)[2].str());
  for (const auto& [fr, fk, op, tr, tk] : g11_expected_arrows(-2, 2))
    expected.insert(g11_vertex_name(fr, fk) + " " + op + " " + g11_vertex_name(tr, tk));
  c.check(!emitted.empty() && emitted == expected, "emitted arrow set differs from the diagram");
  c.note(std::to_string(emitted.size()) + " arrows, socle layers " + std::to_string(rep.soc1) + "/" +
         std::to_string(rep.soc2) + "/" + std::to_string(rep.soc3));
}

void property_suites(Criterion& c) {
  auto algebras = oracle::constructed_algebras();
  std::size_t hyperborels = 0;
  for (const auto& g : algebras) {
    c.check(check_jacobi(*g).empty(), g->name + ": Jacobi fails");
    for (const auto& b : extend_to_hyperborels(g)) {
      auto rep = verify_hyperborel(b);
      c.check(rep.ok, g->name + ": hyperborel axiom " + rep.axiom + " fails");
      ++hyperborels;
    }
  }
  c.note(std::to_string(algebras.size()) + " algebras, " + std::to_string(hyperborels) + " hyperborels");

  std::size_t oracle_cases = 0;
  for (std::size_t m = 0; m <= 4; ++m)
    for (std::size_t n = 0; m + n <= 4; ++n) {
      if (m + n == 0) continue;
      auto g = ptr(gl(m, n));
      c.check(oracle::odd_part_sets(extend_to_hyperborels(g)) == oracle::brute_force_hyperborels(*g),
              g->name + ": hyperborels differ from exhaustive search");
      ++oracle_cases;
    }
  c.note(std::to_string(oracle_cases) + " gl cases agree with exhaustive search");

  std::size_t conflicts = 0, runs = 0;
  for (const auto& sc : oracle::linear_suite())
    for (const auto& b : extend_to_hyperborels(sc.v.g)) {
      auto cv = cross_validate(sc.v, b, 4, 1);
      ++runs;
      if (!cv.consistent) {
        ++conflicts;
        c.check(false, "cross-validation conflict: " + cv.bundle);
      }
    }
  c.note(std::to_string(runs) + " cross-validations, " + std::to_string(conflicts) + " conflicts");

  auto g = ptr(gl(1, 2));
  auto v = sym2(standard_rep(g));
  std::size_t monoid_runs = 0;
  for (int d : {6, 10}) {
    SuperPolynomialAlgebra A(v, d);
    for (bool upper : {true, false}) {
      auto b = triangular_hyperborel(g, upper);
      auto lm = lattice_monoid(A, b, d);
      if (d == 10) {
        auto pts = oracle::as_points(lm.points);
        c.check(pts && *pts == oracle::gl12_monoid(upper, 10), "orthant containment fails at degree 10");
      }
      c.check(oracle::contained_in_even_monoid(lm.raw, even_weight_monoid(v, b, d)),
              "monoid not contained in the even monoid at degree " + std::to_string(d));
      ++monoid_runs;
    }
  }
  c.note(std::to_string(monoid_runs) + " monoid runs checked against the even monoid");
}

}  // namespace

int main() {
  bool ok = true;
  ok &= run(1, "weight monoid figures for GL(1|2) on S^2 C^{1|2}", monoid_figures);
  ok &= run(2, "counterexamples GL(0|n) on C^{0|n} and OSP(1|2)/T", counterexamples);
  ok &= run(3, "spherical representation table", representation_table);
  ok &= run(4, "Iwasawa column of the symmetric pair table", iwasawa_table);
  ok &= run(5, "diagonal pairs have Iwasawa iff Cartan-even", diagonal_pairs);
  ok &= run(6, "GL(1|1) principal block, band [-2, 2]", gl11_block);
  ok &= run(7, "property suites", property_suites);
  return ok ? 0 : 1;
}

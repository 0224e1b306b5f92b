// superspherical: command-line front end.
//
// Exit codes: 0 success, 1 internal failure, 2 verdict mismatch in table
// mode, 64 malformed flags.

#include "superspherical/tables.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#ifndef SUPERSPHERICAL_DATA_DIR
#define SUPERSPHERICAL_DATA_DIR "data"
#endif

namespace {

using namespace ss;

constexpr int kUsage = 64;
constexpr int kMismatch = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string resolve_output(const std::string& path) {
  namespace fs = std::filesystem;
  if (path.empty()) return path;
  fs::path p(path);
  if (p.is_relative())
    if (const char* dir = std::getenv("SUPERSPHERICAL_OUT_DIR"); dir && *dir) p = fs::path(dir) / p;
  if (p.has_parent_path()) fs::create_directories(p.parent_path());
  return p.string();
}

void emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::string where = resolve_output(path);
  std::ofstream out(where, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + where);
  out << content;
}

void emit_json(const RunConfig& cfg, Json body) {
  Json j{{"config", cfg.to_json()}};
  for (auto& [k, v] : body.items()) j[k] = std::move(v);
  emit(cfg.output, dump(j));
}

// Algebra from --algebra/--m/--n; for osp, n is the full odd size.
AlgebraPtr make_algebra(const std::string& name, std::size_t m, std::size_t n) {
  Family f;
  try {
    f = parse_family(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (f == Family::osp && n % 2) throw UsageError("osp needs an even --n");
  return std::make_shared<const LieSuperalgebra>(construct(f, m, n));
}

Representation make_rep(AlgebraPtr g, const std::string& name, bool scalars) {
  Representation v;
  try {
    v = rep_by_name(std::move(g), name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return scalars ? with_scalars(v) : v;
}

Vec parse_positivity(const std::string& s, const RootDecomposition& rd) {
  Vec phi = default_positivity(rd);
  if (s == "default" || s.empty()) return phi;
  if (s == "opposite") {
    for (auto& x : phi) x = -x;
    return phi;
  }
  Vec out;
  try {
    for (const auto& part : split(s, ',')) out.push_back(parse_rational(part));
  } catch (const std::invalid_argument&) {
    throw UsageError("--positivity expects default, opposite, or a comma-separated list of rationals");
  }
  if (out.size() != rd.h0.size())
    throw UsageError("--positivity needs " + std::to_string(rd.h0.size()) + " coordinates");
  return out;
}

std::vector<Hyperborel> hyperborels_for(AlgebraPtr g, const RunConfig& cfg) {
  auto rd = std::make_shared<const RootDecomposition>(standard_root_decomposition(*g));
  Vec phi = parse_positivity(cfg.positivity, *rd);
  if (!even_generic(*rd, phi)) throw UsageError("positivity functional vanishes on an even root");
  return extend_to_hyperborels(std::move(g), rd, phi);
}

Json int_or_string(const Rational& q) {
  if (is_integer(q) && q.get_num().fits_slong_p()) return q.get_num().get_si();
  return q.get_str();
}

Json points_json(const std::vector<std::vector<Rational>>& pts) {
  Json a = Json::array();
  for (const auto& p : pts) {
    Json row = Json::array();
    for (const auto& x : p) row.push_back(int_or_string(x));
    a.push_back(std::move(row));
  }
  return a;
}

void add_common(CLI::App* sub, RunConfig& cfg, bool formats = false) {
  sub->add_option("--degree", cfg.degree, "degree bound for function computations")->check(CLI::Range(0, 64));
  sub->add_option("--seed", cfg.seed, "seed for randomized fast paths");
  sub->add_option("--positivity", cfg.positivity, "default, opposite, or comma-separated functional");
  sub->add_option("--out", cfg.output, "output path (relative paths go under $SUPERSPHERICAL_OUT_DIR)");
  if (formats) sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "svg", "dot"}));
}

struct AlgebraFlags {
  std::string algebra = "gl";
  std::size_t m = 1, n = 1;
  std::string rep = "standard";
  bool scalars = false;

  void add(CLI::App* sub, bool with_rep) {
    sub->add_option("--algebra", algebra, "gl, sl, osp, p, q")->check(CLI::IsMember({"gl", "sl", "osp", "p", "pe", "q"}));
    sub->add_option("--m", m, "even size")->check(CLI::Range(0, 8));
    sub->add_option("--n", n, "odd size")->check(CLI::Range(0, 8));
    if (with_rep) {
      sub->add_option("--rep", rep, "standard, dual, S2, Pi, PiS2, Pidual, adjoint, trivial");
      sub->add_flag("--scalars", scalars, "add a central C acting by 1");
    }
  }
};

// ---------------------------------------------------------------------------

int cmd_hyperborels(const RunConfig& cfg, const AlgebraFlags& af) {
  auto g = make_algebra(af.algebra, af.m, af.n);
  auto bs = hyperborels_for(g, cfg);
  Json list = Json::array();
  for (const auto& b : bs) {
    Json j = to_json(b);
    auto rep = verify_hyperborel(b);
    j["verified"] = rep.ok;
    if (!rep.ok) j["failure"] = rep.axiom + ": " + rep.witness;
    j["character_rank"] = character_lattice(b).rank;
    list.push_back(std::move(j));
  }
  auto cd = cartan_data(*g);
  emit_json(cfg, Json{{"algebra", g->name},
                      {"super_dim", g->super_dim()},
                      {"cartan_even", cd.is_cartan_even},
                      {"count", bs.size()},
                      {"hyperborels", list}});
  return 0;
}

int cmd_rep(const RunConfig& cfg, const AlgebraFlags& af, bool show_hw, bool structure) {
  auto g = make_algebra(af.algebra, af.m, af.n);
  auto v = make_rep(g, af.rep, af.scalars);
  if (auto err = check_module(v); !err.empty()) throw std::logic_error(err);
  Json j{{"representation", to_json(v)}};
  if (structure) j["algebra"] = to_json(*v.g);
  if (show_hw) {
    Json hw = Json::array();
    for (const auto& b : hyperborels_for(v.g, cfg)) {
      Json spaces = Json::array();
      for (const auto& s : highest_weight_spaces(v, b))
        spaces.push_back(Json{{"weight", weight_str(s.weight, b.coord_names())},
                              {"dim", "(" + std::to_string(s.even) + "|" + std::to_string(s.odd) + ")"}});
      hw.push_back(Json{{"hyperborel", b.odd_parts}, {"highest_weight_spaces", spaces}});
    }
    j["highest_weights"] = hw;
  }
  emit_json(cfg, std::move(j));
  return 0;
}

int cmd_spherical(const RunConfig& cfg, const AlgebraFlags& af, bool all, bool symbolic) {
  auto g = make_algebra(af.algebra, af.m, af.n);
  auto v = make_rep(g, af.rep, af.scalars);
  auto bs = hyperborels_for(v.g, cfg);
  auto ls = linear_sphericity(v, bs, cfg.seed, all, symbolic);
  Json certs = Json::array();
  for (std::size_t i = 0; i < ls.certificates.size(); ++i)
    certs.push_back(Json{{"hyperborel", bs[i].odd_parts}, {"certificate", to_json(ls.certificates[i])}});

  // Function-side evidence on the deciding hyperborel, or the first one.
  const Hyperborel& b = bs[ls.verdict == Verdict::SPHERICAL ? ls.hyperborel : 0];
  SuperPolynomialAlgebra A(v, cfg.degree);
  auto ev = affine_sphericity_test(A, b, cfg.degree);
  if (ls.verdict == Verdict::SPHERICAL && ev.status == Verdict::NOT_SPHERICAL)
    throw std::logic_error("rank certificate and function evidence disagree: " + ev.description);
  emit_json(cfg, Json{{"algebra", v.g->name},
                      {"representation", v.name},
                      {"super_dim", v.super_dim()},
                      {"hyperborels", bs.size()},
                      {"verdict", to_string(ls.verdict)},
                      {"rank_certificates", certs},
                      {"function_evidence", to_json(ev, A)}});
  return 0;
}

Json monoid_json(const Representation& v, const Hyperborel& b, int d, std::uint64_t seed) {
  SuperPolynomialAlgebra A(v, d);
  auto lm = lattice_monoid(A, b, d);
  auto cert = linear_open_orbit_test(v, b, seed);
  auto ev = affine_sphericity_test(A, b, d);
  Verdict verdict = cert.full() ? Verdict::SPHERICAL : Verdict::NOT_SPHERICAL;
  if (cert.full() && ev.status == Verdict::NOT_SPHERICAL)
    throw std::logic_error("rank certificate and function evidence disagree: " + ev.description);
  auto even = even_weight_monoid(v, b, d);
  Json functions = Json::array();
  for (const auto& e : lm.raw.weights)
    functions.push_back(Json{{"weight", weight_str(e.weight, b.coord_names())}, {"degree", e.degree},
                             {"function", A.str(e.certificate)}});
  return Json{{"algebra", v.g->name},
              {"representation", v.name},
              {"hyperborel", b.odd_parts},
              {"basis", lm.basis},
              {"weights", points_json(lm.points)},
              {"excluded_nilpotent", points_json(lm.nilpotent_only)},
              {"even_monoid_size", even.weights.size()},
              {"verdict", to_string(verdict)},
              {"evidence", Json{{"rank", to_json(cert)}, {"functions", to_json(ev, A)}}},
              {"eigenfunctions", functions}};
}

int cmd_monoid(const RunConfig& cfg, const AlgebraFlags& af, const std::string& borel) {
  auto g = make_algebra(af.algebra, af.m, af.n);
  auto v = make_rep(g, af.rep, af.scalars);
  auto b = triangular_hyperborel(v.g, borel == "upper");
  emit_json(cfg, monoid_json(v, b, cfg.degree, cfg.seed));
  return 0;
}

int cmd_figure(RunConfig cfg, const std::string& example, const std::string& borel) {
  if (example != "gl12-s2") throw UsageError("unknown example: " + example);
  auto g = std::make_shared<const LieSuperalgebra>(gl(1, 2));
  auto v = sym2(standard_rep(g));
  auto b = triangular_hyperborel(g, borel == "upper");
  SuperPolynomialAlgebra A(v, cfg.degree);
  auto lm = lattice_monoid(A, b, cfg.degree);
  // (i, j) = exponents of the generators of weight lambda and mu
  std::string title = "Lambda+ for B" + std::string(borel == "upper" ? "+" : "-") + ", degree up to " +
                      std::to_string(cfg.degree);
  if (cfg.format == "csv") {
    std::ostringstream o;
    o << cfg.csv_comment() << "\n# " << title << "; lambda = " << lm.basis.at(0) << ", mu = " << lm.basis.at(1) << "\n";
    o << "lambda,mu\n";
    for (const auto& p : lm.points) o << p[0].get_str() << "," << p[1].get_str() << "\n";
    emit(cfg.output, o.str());
  } else if (cfg.format == "svg") {
    std::vector<std::vector<Rational>> swapped;
    for (const auto& p : lm.points) swapped.push_back({p[1], p[0]});
    std::string svg = lattice_svg(swapped, {"mu", "lambda"}, title);
    std::string desc = "<desc>" + cfg.csv_comment().substr(2) + "</desc>\n";
    svg.insert(svg.find("<title>"), desc);
    emit(cfg.output, svg);
  } else if (cfg.format == "json") {
    emit_json(cfg, Json{{"example", example}, {"borel", borel}, {"axes", Json::array({"lambda", "mu"})},
                        {"basis", lm.basis}, {"weights", points_json(lm.points)}});
  } else {
    throw UsageError("figure supports svg, csv, json");
  }
  return 0;
}

struct PairFlags {
  std::string pair;
  std::size_t m = 0, n = 0, r = 0, s = 0;
  std::string algebra = "gl";
};

Involution make_involution(const PairFlags& pf) {
  if (pf.pair == "swap") {
    auto g = make_algebra(pf.algebra, pf.m, pf.n);
    return swap_involution(*g);
  }
  std::vector<std::size_t> sizes;
  const std::string& p = pf.pair;
  if (p == "gl-block" || p == "osp-block") sizes = {pf.m, pf.n, pf.r, pf.s};
  else if (p == "gl-osp" || p == "osp-gl" || p == "delta-gl" || p == "delta-osp") sizes = {pf.m, pf.n};
  else if (p == "gl-p" || p == "gl-q" || p == "delta-p" || p == "delta-q") sizes = {pf.n};
  else if (p == "p-block" || p == "p-gl") sizes = {pf.n, pf.r};
  else throw UsageError("unknown pair: " + p);
  try {
    return *table_involution(p, sizes);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

int cmd_iwasawa(const RunConfig& cfg, const PairFlags& pf) {
  auto theta = make_involution(pf);
  auto o = analyse_pair(theta, cfg.seed);
  Json j = to_json(o.pair, o.iw);
  Json hom = Json::array();
  for (const auto& c : o.hom.per_hyperborel) hom.push_back(to_json(c));
  Json body{{"iwasawa", j},
            {"spherical", to_string(o.spherical)},
            {"spherical_method", o.method},
            {"hyperborels_tried", o.hyperborels},
            {"homogeneous_certificates", hom}};
  if (o.hom.k0_reductive) body["k0_reductive"] = *o.hom.k0_reductive;
  emit_json(cfg, std::move(body));
  return 0;
}

std::string data_file(const std::string& name) {
  if (const char* dir = std::getenv("SUPERSPHERICAL_DATA_DIR"); dir && *dir) return std::string(dir) + "/" + name;
  return std::string(SUPERSPHERICAL_DATA_DIR) + "/" + name;
}

int cmd_table(RunConfig cfg, const std::string& which, std::size_t max, std::string expect, unsigned threads) {
  if (cfg.format != "csv" && cfg.format != "json") throw UsageError("table supports csv and json");
  bool mismatch = false;
  std::ostringstream csv;
  Json rows = Json::array();
  if (which == "spherical-reps") {
    if (expect.empty()) expect = data_file("spherical_reps.csv");
    auto sel = select_rep_rows(read_expectations(expect), max ? max : 5);
    std::vector<RepTableRow> out(sel.size());
    parallel_for(sel.size(), [&](std::size_t i) { out[i] = run_rep_row(sel[i], cfg.seed, true); }, threads);
    csv << "family,m,n,super_dim,expected_super_dim,spherical,expected,certificate,match\n";
    for (const auto& r : out) {
      std::string cert = "rank " + std::to_string(r.certificate.even_rank) + "/" + std::to_string(r.certificate.even_ambient) +
                         " " + std::to_string(r.certificate.odd_rank) + "/" + std::to_string(r.certificate.odd_ambient) +
                         (r.certificate.even_symbolic && r.certificate.odd_symbolic ? " symbolic" : "");
      csv << r.family << "," << r.m << "," << r.n << "," << r.super_dim << "," << r.expected_dim << ","
          << to_string(r.verdict) << "," << r.expected << "," << cert << "," << (r.match() ? "yes" : "NO") << "\n";
      rows.push_back(Json{{"family", r.family}, {"m", r.m}, {"n", r.n}, {"super_dim", r.super_dim},
                          {"expected_super_dim", r.expected_dim}, {"spherical", to_string(r.verdict)},
                          {"expected", r.expected}, {"certificate", to_json(r.certificate)}, {"match", r.match()}});
      mismatch |= !r.match();
    }
  } else if (which == "symmetric-pairs") {
    if (expect.empty()) expect = data_file("symmetric_pairs.csv");
    auto sel = select_pair_rows(read_expectations(expect), max ? max : 3);
    std::vector<PairTableRow> out(sel.size());
    parallel_for(sel.size(), [&](std::size_t i) { out[i] = run_pair_row(sel[i], cfg.seed); }, threads);
    csv << "pair,sizes,spherical,iwasawa,expected_spherical,expected_iwasawa,match,method\n";
    for (const auto& r : out) {
      csv << r.pair << "," << r.sizes << "," << r.spherical << "," << r.iwasawa << "," << r.expected_spherical << ","
          << r.expected_iwasawa << "," << r.match_str() << "," << r.method << "\n";
      rows.push_back(Json{{"pair", r.pair}, {"sizes", r.sizes}, {"spherical", r.spherical}, {"iwasawa", r.iwasawa},
                          {"expected_spherical", r.expected_spherical}, {"expected_iwasawa", r.expected_iwasawa},
                          {"match", r.match_str()}, {"method", r.method}});
      mismatch |= !r.match();
    }
  } else {
    throw UsageError("unknown table: " + which);
  }
  if (cfg.format == "csv") {
    emit(cfg.output, cfg.csv_comment() + "\n# expectations: " + std::filesystem::path(expect).filename().string() +
                         "\n" + csv.str());
  } else {
    emit_json(cfg, Json{{"table", which}, {"expectations", std::filesystem::path(expect).filename().string()},
                        {"rows", rows}, {"all_match", !mismatch}});
  }
  return mismatch ? kMismatch : 0;
}

int cmd_gl11(RunConfig cfg, int band, const std::string& diagram) {
  auto rep = verify_socle_and_block(band);
  if (!diagram.empty()) {
    RunConfig dc = cfg;
    dc.format = "dot";
    dc.output = diagram;
    emit(diagram, "// " + dc.csv_comment().substr(2) + "\n" + g11_diagram_dot(rep.arrows));
  }
  emit_json(cfg, Json{{"report", to_json(rep)}});
  return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for spherical supervarieties", "superspherical"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "expand all help");

  RunConfig cfg;
  AlgebraFlags af;

  auto* hb = app.add_subcommand("hyperborels", "enumerate hyperborels through the standard Borel of g0");
  af.add(hb, false);
  add_common(hb, cfg);

  bool show_hw = false, structure = false;
  auto* rep = app.add_subcommand("rep", "dump a representation");
  af.add(rep, true);
  add_common(rep, cfg);
  rep->add_flag("--show-hw", show_hw, "list highest weight spaces per hyperborel");
  rep->add_flag("--structure", structure, "include the algebra's structure constants");

  bool all_hb = false, symbolic = false;
  auto* sph = app.add_subcommand("spherical", "sphericity of a linear action");
  af.add(sph, true);
  add_common(sph, cfg);
  sph->add_flag("--all-hyperborels", all_hb, "certify every hyperborel instead of stopping at the first");
  sph->add_flag("--symbolic", symbolic, "skip the specialization shortcut in rank computations");

  std::string borel = "upper";
  auto* mon = app.add_subcommand("monoid", "weight monoid up to a degree bound");
  af.add(mon, true);
  add_common(mon, cfg);
  mon->add_option("--borel", borel, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));

  std::string example = "gl12-s2";
  auto* fig = app.add_subcommand("figure", "lattice plot of a weight monoid");
  fig->add_option("--example", example, "gl12-s2");
  fig->add_option("--borel", borel, "upper or lower")->check(CLI::IsMember({"upper", "lower"}));
  add_common(fig, cfg, true);

  PairFlags pf;
  auto* iw = app.add_subcommand("iwasawa", "Iwasawa decomposition and sphericity of a symmetric pair");
  iw->add_option("--pair", pf.pair, "delta-gl, delta-osp, delta-p, delta-q, gl-block, gl-osp, gl-p, gl-q, osp-block, osp-gl, p-block, p-gl, swap")
      ->required();
  iw->add_option("--m", pf.m)->check(CLI::Range(0, 8));
  iw->add_option("--n", pf.n)->check(CLI::Range(0, 8));
  iw->add_option("--r", pf.r)->check(CLI::Range(0, 8));
  iw->add_option("--s", pf.s)->check(CLI::Range(0, 8));
  iw->add_option("--algebra", pf.algebra, "algebra for --pair swap");
  add_common(iw, cfg);

  std::string which, expect;
  std::size_t max = 0;
  unsigned threads = 0;
  auto* tab = app.add_subcommand("table", "reproduce a table and compare against its expectation file");
  tab->add_option("which", which, "spherical-reps or symmetric-pairs")
      ->required()
      ->check(CLI::IsMember({"spherical-reps", "symmetric-pairs"}));
  tab->add_option("--max-rank,--max-size", max, "largest size label (default 5 for representations, 3 for pairs)");
  tab->add_option("--expect", expect, "expectation file");
  tab->add_option("--threads", threads, "worker threads (0 = hardware)");
  add_common(tab, cfg, true);

  int band = 2;
  std::string diagram;
  auto* g11 = app.add_subcommand("gl11", "matrix coefficients and socle filtration of C[GL(1|1)]");
  g11->add_option("--band", band, "weights k in [-band, band]")->check(CLI::Range(1, 6));
  g11->add_option("--emit-diagram", diagram, "write the arrow diagram as a dot file");
  add_common(g11, cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    auto subs = app.get_subcommands();
    std::cerr << (subs.empty() ? app.help() : subs.back()->help());
    return kUsage;
  }

  if (mon->parsed() && !mon->count("--degree")) cfg.degree = 8;
  if (sph->parsed() && !sph->count("--degree")) cfg.degree = 4;
  if (fig->parsed() && !fig->count("--degree")) cfg.degree = 6;
  if (fig->parsed() && !fig->count("--format")) cfg.format = "svg";
  if (tab->parsed() && !tab->count("--format")) cfg.format = "csv";
  if (g11->parsed()) cfg.format = "json";

  try {
    if (hb->parsed()) return cmd_hyperborels(cfg, af);
    if (rep->parsed()) return cmd_rep(cfg, af, show_hw, structure);
    if (sph->parsed()) return cmd_spherical(cfg, af, all_hb, symbolic);
    if (mon->parsed()) return cmd_monoid(cfg, af, borel);
    if (fig->parsed()) return cmd_figure(cfg, example, borel);
    if (iw->parsed()) return cmd_iwasawa(cfg, pf);
    if (tab->parsed()) return cmd_table(cfg, which, max, expect, threads);
    if (g11->parsed()) return cmd_gl11(cfg, band, diagram);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n\n";
    auto subs = app.get_subcommands();
    std::cerr << (subs.empty() ? app.help() : subs.back()->help());
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kUsage;
}

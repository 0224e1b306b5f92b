#pragma once

// JSON views of the library objects. Rationals are written as strings
// ("-3/2") so that nothing passes through floating point.

#include "superspherical/gl11.hpp"
#include "superspherical/orbit_geometry.hpp"
#include "superspherical/symmetric_pairs.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ss {

using Json = nlohmann::ordered_json;

struct RunConfig {
  int degree = 8;
  std::uint64_t seed = 1;
  std::string positivity = "default";
  std::string output;  // empty means stdout
  std::string format = "json";

  Json to_json() const {
    return Json{{"degree", degree}, {"seed", seed}, {"positivity", positivity}, {"output", output}, {"format", format}};
  }

  // One comment line for CSV outputs.
  std::string csv_comment() const {
    return "# config: degree=" + std::to_string(degree) + " seed=" + std::to_string(seed) + " positivity=" + positivity +
           " output=" + (output.empty() ? "-" : output) + " format=" + format;
  }
};

inline Json to_json(const Rational& q) { return q.get_str(); }

inline Json to_json(const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(x.get_str());
  return a;
}

inline Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json r = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j).get_str());
    rows.push_back(std::move(r));
  }
  return rows;
}

// Structure constants as [i, j, k, c] with [b_i, b_j] = sum c b_k, i <= j.
inline Json to_json(const LieSuperalgebra& g) {
  Json consts = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i; j < g.dim(); ++j)
      for (const auto& [k, c] : g.table[i][j]) consts.push_back(Json::array({i, j, k, c.get_str()}));
  Json cartan = Json::array();
  for (auto c : g.cartan) cartan.push_back(c);
  return Json{{"name", g.name},
              {"super_dim", g.super_dim()},
              {"labels", g.labels},
              {"parity", g.parity},
              {"cartan", cartan},
              {"weight_coordinates", g.coord_names},
              {"structure_constants", consts}};
}

inline Json weight_json(const Weight& w, const std::vector<std::string>& names) {
  return Json{{"coordinates", to_json(w)}, {"label", weight_str(w, names)}};
}

inline Json to_json(const Hyperborel& b) {
  Json even = Json::array(), odd = Json::array();
  for (const auto& w : b.even_roots) even.push_back(weight_str(w, b.coord_names()));
  for (const auto& l : b.odd_parts) odd.push_back(l);
  return Json{{"algebra", b.g->name},
              {"positivity", to_json(b.phi)},
              {"even_roots", even},
              {"odd_parts", odd},
              {"super_dim", "(" + std::to_string(b.even_dim()) + "|" + std::to_string(b.odd_dim()) + ")"}};
}

inline Json to_json(const Representation& v, bool with_matrices = true) {
  Json j{{"algebra", v.g->name}, {"name", v.name}, {"super_dim", v.super_dim()}, {"labels", v.labels}, {"parity", v.parity}};
  if (with_matrices) {
    Json acts = Json::object();
    for (std::size_t i = 0; i < v.action.size(); ++i) acts[v.g->labels[i]] = to_json(v.action[i]);
    j["action"] = std::move(acts);
  }
  return j;
}

inline Json to_json(const OrbitRankCertificate& c, bool with_matrices = false) {
  auto pivots = [](const std::vector<std::pair<std::size_t, std::size_t>>& ps) {
    Json a = Json::array();
    for (const auto& [r, col] : ps) a.push_back(Json::array({r, col}));
    return a;
  };
  Json j{{"generic_rank", Json::array({c.even_rank, c.odd_rank})},
         {"ambient", Json::array({c.even_ambient, c.odd_ambient})},
         {"full", c.full()},
         {"symbolic", Json::array({c.even_symbolic, c.odd_symbolic})},
         {"even_pivots", pivots(c.even_pivots)},
         {"odd_pivots", pivots(c.odd_pivots)},
         {"even_witness", to_json(c.even_witness)},
         {"odd_witness", to_json(c.odd_witness)}};
  if (with_matrices) {
    auto mat = [](const PolyMatrix& m) {
      Json rows = Json::array();
      for (const auto& r : m) {
        Json row = Json::array();
        for (const auto& p : r) row.push_back(p.str());
        rows.push_back(std::move(row));
      }
      return rows;
    };
    j["even_matrix"] = mat(c.even_matrix);
    j["odd_matrix"] = mat(c.odd_matrix);
  }
  return j;
}

inline Json to_json(const HomogeneousCertificate& c) {
  return Json{{"hyperborel", c.hyperborel},
              {"dims", Json::array({c.even_dim, c.odd_dim})},
              {"method", c.method},
              {"full", c.full},
              {"witness", to_json(c.witness)}};
}

inline Json to_json(const FunctionEvidence& e, const SuperPolynomialAlgebra& A) {
  Json fs = Json::array();
  for (const auto& f : e.functions) fs.push_back(A.str(f));
  return Json{{"status", to_string(e.status)}, {"kind", e.kind}, {"weight", to_json(e.weight)}, {"degree", e.degree},
              {"functions", fs}, {"description", e.description}};
}

inline Json to_json(const RestrictedRoot& r) {
  return Json{{"weight", to_json(r.weight)}, {"multiplicity", Json::array({r.even_mult, r.odd_mult})}};
}

inline Json to_json(const SymmetricPair& sp, const IwasawaResult& iw) {
  const auto& g = sp.g();
  Json sigma = Json::array();
  for (const auto& r : sp.sigma_plus) sigma.push_back(to_json(r));
  Json j{{"pair", sp.theta.name},
         {"algebra", g.name},
         {"super_dim", g.super_dim()},
         {"k_dim", Json::array({iw.k_dim[0], iw.k_dim[1]})},
         {"a_dim", sp.a.size()},
         {"a_maximal", sp.a_maximal},
         {"sigma_plus", sigma},
         {"verdict", to_string(iw.verdict)}};
  if (iw.verdict == IwasawaVerdict::HAS_IWASAWA) {
    j["n_dim"] = Json::array({iw.n_dim[0], iw.n_dim[1]});
    j["decomposition_verified"] = iw.decomposition_verified;
  } else {
    j["witness"] = to_json(iw.witness);
    j["witness_parity"] = iw.witness_parity;
  }
  return j;
}

inline Json to_json(const G11Arrow& a) {
  return Json{{"from", g11_vertex_name(a.from_row, a.from_k)},
              {"op", a.op},
              {"to", g11_vertex_name(a.to_row, a.to_k)},
              {"coefficient", a.coefficient.get_str()}};
}

inline Json to_json(const SocleReport& r) {
  Json arrows = Json::array();
  for (const auto& a : r.arrows) arrows.push_back(to_json(a));
  return Json{{"band", r.band},
              {"window_size", r.window_size},
              {"socle_layers", Json::array({r.soc1, r.soc2, r.soc3})},
              {"checks",
               {{"socle_is_bottom_row", r.socle_is_bottom_row},
                {"middle_is_second_layer", r.middle_is_second_layer},
                {"loewy_length_three", r.loewy_length_three},
                {"socle_matches_epsilon", r.socle_matches_epsilon},
                {"epsilon_independent", r.epsilon_independent},
                {"bottom_reached_both_sides", r.bottom_reached_both_sides},
                {"left_components_equal", r.left_components_equal},
                {"semisimple_blocks_split", r.semisimple_blocks_split},
                {"arrows_unit", r.arrows_unit},
                {"diagram_matches", r.diagram_matches}}},
              {"ok", r.ok()},
              {"failures", r.failures},
              {"normalization",
               {{"u", "left E21"}, {"v", "left E12"}, {"ubar", "right E21"}, {"vbar", "right E12"},
                {"T_k", "a^(k-1) d^(-k-1) beta gamma"}, {"Mp_k", "a^k d^(-k-1) beta"},
                {"Mm_k", "a^k d^(-k-1) gamma"}, {"B_k", "Ber^k"}}},
              {"arrows", arrows}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace ss

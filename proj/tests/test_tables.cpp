#include "superspherical/tables.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ss;

namespace {

std::string data(const std::string& f) { return std::string(SUPERSPHERICAL_DATA_DIR) + "/" + f; }

std::string sdim(std::size_t e, std::size_t o) { return "(" + std::to_string(e) + "|" + std::to_string(o) + ")"; }

// Super-dimension of each family from its formula.
std::string rep_dim(const std::string& family, std::size_t m, std::size_t n) {
  if (family == "gl-standard") return sdim(m, n);
  if (family == "gl-S2") return sdim(m * (m + 1) / 2 + n * (n - 1) / 2, m * n);
  if (family == "gl-PiS2") return sdim(m * n, m * (m + 1) / 2 + n * (n - 1) / 2);
  if (family == "osp-standard") return sdim(m, 2 * n);
  if (family == "osp-Pistandard") return sdim(2 * n, m);
  if (family == "p-Pistandard") return sdim(n, n);
  ADD_FAILURE() << "unknown family " << family;
  return "";
}

bool block_condition(long m, long n, long r, long s) {
  return (r >= m - r && s >= n - s) || (r <= m - r && s <= n - s);
}

// Expected (spherical, iwasawa) from the closed-form rules for each row kind.
std::pair<bool, bool> pair_rule(const std::string& pair, const std::vector<std::size_t>& s) {
  if (pair == "delta-gl" || pair == "delta-osp") {
    bool even = s[0] == 0 || s[1] == 0;
    return {even, even};
  }
  if (pair == "delta-p" || pair == "delta-q") return {false, false};
  if (pair == "gl-block" || pair == "osp-block") {
    bool c = block_condition(s[0], s[1], s[2], s[3]);
    return {c, c};
  }
  if (pair == "gl-osp" || pair == "gl-q" || pair == "osp-gl") return {true, true};
  if (pair == "gl-p") return {true, false};
  if (pair == "p-block") return {std::min(s[1], s[0] - s[1]) == 1, false};
  if (pair == "p-gl") return {s[0] == 2 || s[0] == 3, false};
  ADD_FAILURE() << "unknown pair " << pair;
  return {false, false};
}

}  // namespace

TEST(Csv, SplitAndSizes) {
  EXPECT_EQ(split("a,b,,c", ','), (std::vector<std::string>{"a", "b", "", "c"}));
  EXPECT_EQ(parse_sizes("3/3/2/1"), (std::vector<std::size_t>{3, 3, 2, 1}));
  EXPECT_TRUE(parse_sizes("-").empty());
  EXPECT_THROW(read_expectations("/nonexistent/file.csv"), std::runtime_error);
}

TEST(RepresentationData, DimensionsFollowFormulas) {
  auto rows = read_expectations(data("spherical_reps.csv"));
  ASSERT_GE(rows.size(), 40u);
  std::set<std::string> families;
  for (const auto& e : rows) {
    std::size_t m = std::stoul(e.at("m")), n = std::stoul(e.at("n"));
    EXPECT_EQ(e.at("sdim"), rep_dim(e.at("family"), m, n)) << e.at("family") << " " << m << " " << n;
    EXPECT_EQ(e.at("spherical"), "SPHERICAL");
    EXPECT_LE(m + n, 5u);
    families.insert(e.at("family"));
  }
  EXPECT_EQ(families.size(), 6u);
}

TEST(RepresentationData, ConstructedDimensionsMatch) {
  for (const auto& e : read_expectations(data("spherical_reps.csv"))) {
    auto v = table_representation(e.at("family"), std::stoul(e.at("m")), std::stoul(e.at("n")));
    EXPECT_EQ(v.super_dim(), e.at("sdim")) << e.at("family") << " " << e.at("m") << " " << e.at("n");
    EXPECT_EQ(check_module(v), "");
  }
}

TEST(RepresentationData, SmallRowsReproduce) {
  auto rows = select_rep_rows(read_expectations(data("spherical_reps.csv")), 3);
  ASSERT_FALSE(rows.empty());
  for (const auto& e : rows) {
    auto r = run_rep_row(e, 1);
    EXPECT_TRUE(r.match()) << r.family << " " << r.m << " " << r.n;
    EXPECT_TRUE(r.certificate.full());
  }
}

TEST(PairData, ExpectationsFollowRules) {
  auto rows = read_expectations(data("symmetric_pairs.csv"));
  std::size_t exceptional = 0;
  for (const auto& e : rows) {
    auto s = parse_sizes(e.at("sizes"));
    if (!table_involution(e.at("pair"), s)) {
      ++exceptional;
      continue;
    }
    auto [sph, iw] = pair_rule(e.at("pair"), s);
    EXPECT_EQ(e.at("spherical"), sph ? "SPHERICAL" : "NOT_SPHERICAL") << e.at("pair") << " " << e.at("sizes");
    EXPECT_EQ(e.at("iwasawa"), iw ? "HAS_IWASAWA" : "NO_IWASAWA") << e.at("pair") << " " << e.at("sizes");
    for (auto x : s) EXPECT_LE(x, 3u);
  }
  EXPECT_EQ(exceptional, 6u);
}

TEST(PairData, InvolutionsAreValid) {
  for (const auto& e : select_pair_rows(read_expectations(data("symmetric_pairs.csv")), 2)) {
    auto t = table_involution(e.at("pair"), parse_sizes(e.at("sizes")));
    if (!t) continue;
    EXPECT_EQ(check_involution(*t), "") << t->name;
  }
}

TEST(PairData, SmallRowsReproduce) {
  auto rows = select_pair_rows(read_expectations(data("symmetric_pairs.csv")), 1);
  ASSERT_FALSE(rows.empty());
  for (const auto& e : rows) {
    auto r = run_pair_row(e);
    EXPECT_TRUE(r.match()) << r.pair << " " << r.sizes << ": " << r.spherical << " " << r.iwasawa;
  }
}

TEST(PairData, ExceptionalRowsAreUnimplemented) {
  CsvRow e{{"pair", "G(1|2)/osp(3|2)+sl(2)"}, {"sizes", "-"}, {"spherical", "SPHERICAL"}, {"iwasawa", "HAS_IWASAWA"}};
  auto r = run_pair_row(e);
  EXPECT_FALSE(r.implemented);
  EXPECT_EQ(r.spherical, "UNIMPLEMENTED");
  EXPECT_EQ(r.match_str(), "n/a");
}

TEST(ParallelFor, ResultsByIndex) {
  std::vector<std::size_t> out(200);
  parallel_for(out.size(), [&](std::size_t i) { out[i] = i * i; }, 4);
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  parallel_for(0, [&](std::size_t) { FAIL(); }, 4);
}

TEST(Svg, OnePointElementPerPoint) {
  std::vector<std::vector<Rational>> pts{{0, 0}, {0, 1}, {2, 3}};
  auto svg = lattice_svg(pts, {"mu", "lambda"}, "test");
  std::size_t count = 0;
  for (auto pos = svg.find("data-point="); pos != std::string::npos; pos = svg.find("data-point=", pos + 1)) ++count;
  EXPECT_EQ(count, pts.size());
  EXPECT_NE(svg.find("data-point=\"2,3\""), std::string::npos);
  EXPECT_EQ(svg.find("<="), std::string::npos);
}

#include <gtest/gtest.h>

#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "jqc/census.hpp"
#include "jqc/io.hpp"
#include "jqc/parse.hpp"
#include "oracle.hpp"

using jqc::BFilter;
using jqc::CurveCounts;
using jqc::Errc;
using jqc::FieldCtx;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

std::set<std::uint64_t> j_set(const jqc::CensusReport& r, bool ordinary_only) {
  std::set<std::uint64_t> s;
  for (const auto& c : r.classes)
    if (!ordinary_only || c.kind == jqc::JClass::Ordinary) s.insert(c.j.rank());
  return s;
}

/// Distinct j over F_p by integer arithmetic only.
std::size_t brute_general(std::int64_t p) {
  std::set<std::int64_t> js;
  for (std::int64_t a = 0; a < p; ++a)
    for (std::int64_t b = 1; b < p; ++b)
      if (oracle::mod(a * a - 4 * b, p) != 0) js.insert(oracle::j_general(a, b, p));
  return js.size();
}

}  // namespace

TEST(Predict, ClassCounts) {
  EXPECT_EQ(jqc::predict_N_jacobi(13), 3u);
  EXPECT_EQ(jqc::predict_N_jacobi(11), 2u);
  EXPECT_EQ(jqc::predict_N_jacobi(25), 5u);
  EXPECT_EQ(jqc::predict_N_general(13), 9u);
  EXPECT_EQ(jqc::predict_N_general(11), 7u);
  EXPECT_EQ(jqc::predict_N_general(5), 3u);
  EXPECT_EQ(jqc::predict_class_counts_ordinary(13, true), 1u);
  EXPECT_EQ(jqc::predict_class_counts_ordinary(13, false), 6u);
  EXPECT_EQ(jqc::predict_class_counts_ordinary(11, false), 4u);
}

TEST(Predict, CurveCounts) {
  EXPECT_EQ(jqc::predict_curve_counts(13, true), (CurveCounts{36, 66, 12, 18}));
  EXPECT_EQ(jqc::predict_curve_counts(11, true), (CurveCounts{30, 45, 0, 15}));
  // The a = 0 curves give j = 1728 for every b: (11 - 1)/2 of them here.
  EXPECT_EQ(jqc::predict_curve_counts(11, false), (CurveCounts{40, 55, 10, 5}));
  for (std::uint64_t q : {5, 7, 11, 13, 17, 19, 23, 25, 49, 121, 169})
    for (bool sq : {true, false}) {
      auto c = jqc::predict_curve_counts(q, sq);
      EXPECT_EQ(c.ordinary + c.j0 + c.j1728, c.total) << q;
    }
}

TEST(Predict, RemarkAndErrors) {
  EXPECT_TRUE(jqc::remark_consistency(13));
  EXPECT_TRUE(jqc::remark_consistency(11));
  EXPECT_EQ(jqc::predict_special_classes(13, true), 2u);
  EXPECT_EQ(jqc::predict_special_classes(11, true), 1u);
  for (std::uint64_t bad : {0, 1, 2, 3, 4, 6, 9, 12, 15, 27, 35, 64}) {
    try {
      jqc::predict_N_jacobi(bad);
      ADD_FAILURE() << bad;
    } catch (const jqc::Error& e) {
      EXPECT_EQ(e.code(), Errc::BadCardinality) << bad;
    }
  }
  for (std::uint64_t q : {5, 7, 25, 49, 121, 125, 169, 343}) EXPECT_TRUE(jqc::remark_consistency(q)) << q;
}

TEST(Census, JacobiExamples) {
  auto r13 = jqc::census_jacobi(FieldCtx::make(13));
  EXPECT_EQ(r13.distinct_j, 3u);
  EXPECT_TRUE(r13.match);
  EXPECT_EQ(r13.total_curves, 11u);
  auto r11 = jqc::census_jacobi(FieldCtx::make(11));
  EXPECT_EQ(r11.distinct_j, 2u);
  EXPECT_TRUE(r11.match);
  for (const auto& f : oracle::small_fields(49)) EXPECT_EQ(jqc::census_jacobi(f).total_curves, f->q() - 2);
}

TEST(Census, GeneralExamples) {
  auto f13 = FieldCtx::make(13);
  auto all = jqc::census_general(f13);
  EXPECT_EQ(all.distinct_j, 9u);
  EXPECT_TRUE(all.match);
  EXPECT_EQ(jqc::census_general(FieldCtx::make(5)).distinct_j, 3u);
  auto sq = jqc::census_general(f13, BFilter::SquareB);
  EXPECT_EQ(sq.total_curves, 66u);
  EXPECT_EQ(sq.ordinary_classes(), 1u);
  EXPECT_EQ(jqc::class_size_histogram(sq), (std::map<std::uint64_t, std::uint64_t>{{36, 1}}));
  auto ns = jqc::census_general(f13, BFilter::NonsquareB);
  EXPECT_EQ(jqc::class_size_histogram(ns), (std::map<std::uint64_t, std::uint64_t>{{12, 6}}));
  ASSERT_EQ(ns.notes.size(), 1u);
}

TEST(Census, MatchesIntegerBruteForce) {
  for (std::int64_t p : {5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    EXPECT_EQ(jqc::census_general(FieldCtx::make(p)).distinct_j, brute_general(p)) << p;
}

TEST(Census, ReportInvariants) {
  for (const auto& f : oracle::small_fields(49)) {
    std::vector<jqc::CensusReport> reports{jqc::census_jacobi(f), jqc::census_general(f, BFilter::All),
                                           jqc::census_general(f, BFilter::SquareB),
                                           jqc::census_general(f, BFilter::NonsquareB)};
    for (const auto& r : reports) {
      std::uint64_t sum = 0;
      for (const auto& c : r.classes) sum += c.size;
      EXPECT_EQ(sum, r.total_curves);
      EXPECT_EQ(r.distinct_j, r.classes.size());
      EXPECT_EQ(r.match, r.distinct_j == r.predicted);
      EXPECT_TRUE(r.match) << f->descriptor() << " " << jqc::family_name(r.family);
      std::uint64_t ordinary = 0;
      for (const auto& [size, n] : jqc::class_size_histogram(r)) ordinary += size * n;
      EXPECT_EQ(ordinary, r.ordinary_curves());
      for (std::size_t i = 1; i < r.classes.size(); ++i) EXPECT_LT(r.classes[i - 1].j.rank(), r.classes[i].j.rank());
    }
  }
}

TEST(Census, CurveCountsAndClassSizes) {
  for (const auto& f : oracle::small_fields(49)) {
    const std::uint64_t q = f->q();
    for (bool sq : {true, false}) {
      auto r = jqc::census_general(f, sq ? BFilter::SquareB : BFilter::NonsquareB);
      EXPECT_EQ((CurveCounts{r.ordinary_curves(), r.total_curves, r.j0_curves, r.j1728_curves}),
                jqc::predict_curve_counts(q, sq))
          << f->descriptor() << " square=" << sq;
      EXPECT_EQ(r.total_curves, sq ? (q - 2) * (q - 1) / 2 : q * (q - 1) / 2);
      for (const auto& [size, n] : jqc::class_size_histogram(r)) EXPECT_EQ(size, sq ? 3 * (q - 1) : q - 1);
      EXPECT_EQ(r.ordinary_classes(), jqc::predict_class_counts_ordinary(q, sq));
      EXPECT_EQ(r.has_class(jqc::JClass::Zero) + r.has_class(jqc::JClass::J1728),
                static_cast<int>(jqc::predict_special_classes(q, sq)));
    }
  }
}

TEST(Census, CrossFilterStructure) {
  for (const auto& f : oracle::small_fields(49)) {
    auto sq = jqc::census_general(f, BFilter::SquareB);
    auto ns = jqc::census_general(f, BFilter::NonsquareB);
    auto all = jqc::census_general(f, BFilter::All);
    auto sq_ord = j_set(sq, true), ns_ord = j_set(ns, true);
    for (auto j : sq_ord) EXPECT_FALSE(ns_ord.count(j)) << f->descriptor();
    EXPECT_EQ(sq_ord.size() + ns_ord.size() + 2, all.distinct_j) << f->descriptor();
    // Jacobi j-values = square-b j-values, specials included.
    EXPECT_EQ(j_set(jqc::census_jacobi(f), false), j_set(sq, false)) << f->descriptor();
  }
}

TEST(Census, DeterministicAcrossJobCounts) {
  for (auto f : {FieldCtx::make(13), FieldCtx::make(31), FieldCtx::make(7, 2)}) {
    const std::string ref = jqc::to_json_string(jqc::census_general(f, BFilter::All, 1));
    for (unsigned jobs : {2u, 3u, 8u, 64u}) EXPECT_EQ(jqc::to_json_string(jqc::census_general(f, BFilter::All, jobs)), ref);
    EXPECT_EQ(jqc::to_json_string(jqc::census_jacobi(f, 5)), jqc::to_json_string(jqc::census_jacobi(f, 1)));
  }
}

TEST(Accumulator, MergeIsAssociativeAndCommutative) {
  std::mt19937_64 rng(7);
  auto random_acc = [&] {
    jqc::CensusAccumulator acc;
    for (int i = 0; i < 50; ++i) acc.add(rng() % 10, rng() % 20, rng() % 20, 1 + rng() % 3);
    return acc;
  };
  for (int t = 0; t < 20; ++t) {
    auto x = random_acc(), y = random_acc(), z = random_acc();
    auto xy = x;
    xy.merge(y);
    auto yx = y;
    yx.merge(x);
    EXPECT_EQ(xy, yx);
    auto xy_z = xy;
    xy_z.merge(z);
    auto yz = y;
    yz.merge(z);
    auto x_yz = x;
    x_yz.merge(yz);
    EXPECT_EQ(xy_z, x_yz);
  }
  jqc::CensusAccumulator a;
  a.add(4, 3, 9);
  a.add(4, 2, 10);
  a.add(4, 2, 11);
  const auto& s = a.slots().at(4);
  EXPECT_EQ(s.size, 3u);
  EXPECT_EQ(s.rep_a, 2u);
  EXPECT_EQ(s.rep_b, 10u);
}

class Golden : public ::testing::TestWithParam<std::tuple<const char*, const char*, const char*, const char*>> {};

TEST_P(Golden, MatchesFrozenOutput) {
  const auto [name, field, family, filter] = GetParam();
  auto f = jqc::parse_field_spec(field);
  jqc::CensusReport r;
  if (std::string(family) == "jacobi") {
    r = jqc::census_jacobi(f);
  } else {
    const std::string fl = filter;
    r = jqc::census_general(f, fl == "all" ? BFilter::All : fl == "square-b" ? BFilter::SquareB : BFilter::NonsquareB);
  }
  const std::string base = std::string(JQC_GOLDEN_DIR) + "/" + name;
  const std::string json = jqc::to_json_string(r);
  EXPECT_EQ(json, slurp(base + ".json"));
  EXPECT_EQ(jqc::to_csv(r), slurp(base + ".csv"));
  // Re-serializing parsed JSON is byte-identical.
  EXPECT_EQ(nlohmann::json::parse(json).dump(2) + "\n", json);
}

INSTANTIATE_TEST_SUITE_P(Census, Golden,
                         ::testing::Values(std::make_tuple("f13_jacobi", "13", "jacobi", "all"),
                                           std::make_tuple("f13_general", "13", "general", "all"),
                                           std::make_tuple("f13_general_square_b", "13", "general", "square-b"),
                                           std::make_tuple("f11_general_nonsquare_b", "11", "general", "nonsquare-b"),
                                           std::make_tuple("f5_general", "5", "general", "all"),
                                           std::make_tuple("f25_jacobi", "25", "jacobi", "all"),
                                           std::make_tuple("f25_general", "25", "general", "all")),
                         [](const auto& info) { return std::string(std::get<0>(info.param)); });

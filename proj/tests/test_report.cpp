#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hnlab/registry.hpp"
#include "hnlab/report.hpp"
#include "hnlab/sweep.hpp"

using namespace hnlab;

namespace {

Assignment at(const Rational& a, const Rational& b) { return {{"a", a}, {"b", b}}; }

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("hnlab_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST(Json, SchemaKeys) {
  const auto j = to_json(make_report(analyze(g4_5())));
  for (const char* key : {"algebra", "params", "connection", "F", "theta", "nijenhuis", "riemann", "ricci", "scalars",
                          "sectional", "classes", "discrepancies"})
    EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j.size(), 12u);
  EXPECT_TRUE(j["params"]["point"].is_null());
  EXPECT_EQ(j["F"]["J1"]["113"], "1");
  EXPECT_EQ(j["scalars"]["tau"]["value"], "2*a^2 + 2*a*b + 2*b^2 + 2*a + 2*b + 2");
  EXPECT_EQ(j["scalars"]["tau"]["sign"], 1);
  EXPECT_EQ(j["classes"]["J2"]["kind"], "norden");
}

TEST(Json, RoundTrip) {
  for (const auto& alg : builtin_catalog()) {
    for (const std::optional<Assignment>& p : {std::optional<Assignment>{}, std::optional<Assignment>{at(Rational(1), Rational(1, 2))}}) {
      const auto r = make_report(analyze(alg, standard_frame(), standard_classifiers(), p));
      const auto text = to_json(r).dump();
      EXPECT_EQ(report_from_json(nlohmann::json::parse(text)), r) << alg.name;
    }
  }
}

TEST(Json, MatchesGoldenSnapshot) {
  std::ifstream in(std::string(HNLAB_GOLDEN_DIR) + "/g4_5_symbolic.json");
  ASSERT_TRUE(in) << "missing golden file";
  const auto golden = nlohmann::json::parse(in);
  EXPECT_EQ(to_json(make_report(analyze(g4_5()))), golden);
}

TEST(Report, PointModeListsPinnedDisagreements) {
  const auto r = make_report(analyze(g4_5(), at(Rational(2), Rational(3))));
  ASSERT_TRUE(r.point.has_value());
  EXPECT_EQ(r.point->at("a"), "2");
  // Only the entries whose printed value disagrees with the computation.
  for (const auto& d : r.discrepancies) EXPECT_NE(d.expected, d.computed);
  EXPECT_EQ(r.scalars.at("tau").value, "50");
}

TEST(Report, TextRendering) {
  std::ostringstream os;
  print_report(os, make_report(analyze(g4_5())), standard_frame());
  const auto text = os.str();
  EXPECT_NE(text.find("2*a^2 + 2*a*b + 2*b^2 + 2*a + 2*b + 2"), std::string::npos);
  EXPECT_NE(text.find("W2+W4"), std::string::npos);
}

TEST(Grid, Parse) {
  auto r = GridRange::parse("-1:1:1/2");
  EXPECT_EQ(r.values().size(), 5u);
  EXPECT_EQ(r.values().back(), Rational(1));
  EXPECT_EQ(GridRange::parse("0:1:0.25").values().size(), 5u);
  EXPECT_TRUE(GridRange::parse("1:0:1").values().empty());
  EXPECT_TRUE(GridRange::parse("0:1:0").values().empty());
  EXPECT_TRUE(GridRange::parse("0:1:-1").values().empty());
  EXPECT_THROW(GridRange::parse("0:1"), ParseError);
  EXPECT_THROW(GridRange::parse("0:1:x"), ParseError);
}

TEST(Sweep, AgreesWithPointAnalysis) {
  const auto alg = g4_5();
  const auto symbolic = analyze(alg);
  const auto vals = GridRange::parse("-2:2:1").values();
  const auto res = sweep(symbolic, vals, vals, 4);
  EXPECT_EQ(res.points.size(), 16u);
  EXPECT_EQ(res.skipped, 9u);
  for (const auto& p : res.points) {
    const auto pt = analyze(alg, p.at);
    EXPECT_EQ(p.tau_sign, pt.curvature.tau.constant_value().sign());
    for (std::size_t k = 0; k < 3; ++k) {
      EXPECT_EQ(p.tau_star_star_signs[k], pt.curvature.tau_star_star[k].constant_value().sign());
      EXPECT_EQ(p.classes[k], pt.classes[k].minimal_class);
    }
    for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(p.sectional_signs[k], pt.sectional[k].k.constant_value().sign());
  }
}

TEST(Sweep, PositiveRegions) {
  const auto g45 = sweep(analyze(g4_5()), GridRange::parse("1:3:1").values(), GridRange::parse("1:3:1").values(), 2);
  EXPECT_EQ(g45.points.size(), 9u);
  EXPECT_EQ(g45.skipped, 0u);
  for (const auto& p : g45.points) EXPECT_EQ(p.tau_sign, 1);
  const auto g46 = sweep(analyze(g4_6()), {Rational(1)}, {Rational(2)}, 1);
  ASSERT_EQ(g46.points.size(), 1u);
  for (int s : g46.points[0].sectional_signs) EXPECT_EQ(s, 1);
}

TEST(Sweep, ThreadCountDoesNotChangeResults) {
  const auto symbolic = analyze(g4_6());
  const auto as = GridRange::parse("-3:3:1/2").values(), bs = GridRange::parse("-1:2:1/3").values();
  const auto one = sweep(symbolic, as, bs, 1), many = sweep(symbolic, as, bs, 8);
  ASSERT_EQ(one.points.size(), many.points.size());
  EXPECT_EQ(one.skipped, many.skipped);
  for (std::size_t i = 0; i < one.points.size(); ++i) {
    EXPECT_EQ(one.points[i].at, many.points[i].at);
    EXPECT_EQ(one.points[i].classes, many.points[i].classes);
    EXPECT_EQ(one.points[i].sectional_signs, many.points[i].sectional_signs);
  }
}

TEST(Registry, AddListAndReject) {
  TempDir dir;
  Registry reg(dir.path);
  EXPECT_TRUE(reg.load_all().empty());
  auto alg = load_algebra(R"({"name": "heis", "brackets": [{"i": 1, "j": 2, "coeffs": ["0", "0", "1", "0"]}]})");
  auto path = reg.add(alg);
  EXPECT_TRUE(std::filesystem::is_regular_file(path));
  ASSERT_EQ(reg.load_all().size(), 1u);
  EXPECT_EQ(reg.load_all()[0], alg);
  EXPECT_THROW(reg.add(alg), std::invalid_argument);
  auto clash = alg;
  clash.name = "g4_5";
  EXPECT_THROW(reg.add(clash), std::invalid_argument);
  EXPECT_EQ(catalog_get("heis", reg.load_all()), alg);
}

TEST(Registry, InvalidFileNamesPath) {
  TempDir dir;
  std::filesystem::create_directories(dir.path);
  std::ofstream(dir.path / "broken.json") << "{";
  try {
    Registry(dir.path).load_all();
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("broken.json"), std::string::npos);
  }
}

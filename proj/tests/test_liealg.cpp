#include <gtest/gtest.h>

#include <random>

#include "hnlab/liealg.hpp"

using namespace hnlab;

namespace {

Poly P(const LieAlgebraSpec& alg, const char* s) { return Poly::parse(s, alg.params); }

Vector vec(const LieAlgebraSpec& alg, std::array<const char*, 4> c) {
  Vector v(alg.zero());
  for (std::size_t i = 0; i < 4; ++i) v(i) = P(alg, c[i]);
  return v;
}

Vector random_vector(const LieAlgebraSpec& alg, std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-3, 3), e(0, 1);
  Vector v(alg.zero());
  for (std::size_t i = 0; i < 4; ++i)
    v(i) = Poly::monomial(alg.params, {static_cast<unsigned>(e(rng)), static_cast<unsigned>(e(rng))}, Rational(c(rng))) +
           Poly(alg.params, Rational(c(rng)));
  return v;
}

Vector add(const Vector& x, const Vector& y) {
  Vector r = x;
  for (std::size_t i = 0; i < 4; ++i) r(i) += y(i);
  return r;
}

const char* kG45File = R"({
  "name": "g4_5",
  "params": ["a", "b"],
  "constraints": ["a != 0", "b != 0"],
  "brackets": [
    {"i": 1, "j": 4, "coeffs": ["1", "0", "0", "0"]},
    {"i": 2, "j": 4, "coeffs": ["0", "a", "0", "0"]},
    {"i": 3, "j": 4, "coeffs": ["0", "0", "b", "0"]}
  ]
})";

}  // namespace

TEST(Bracket, CatalogExamples) {
  auto g45 = g4_5();
  EXPECT_EQ(bracket(g45, g45.basis_vector(1), g45.basis_vector(3)), vec(g45, {"0", "a", "0", "0"}));
  auto g46 = g4_6();
  EXPECT_EQ(bracket(g46, g46.basis_vector(2), g46.basis_vector(3)), vec(g46, {"0", "1", "b", "0"}));
  EXPECT_EQ(bracket(g46, g46.basis_vector(1), g46.basis_vector(3)), vec(g46, {"0", "b", "-1", "0"}));
  EXPECT_EQ(bracket(g46, g46.basis_vector(0), g46.basis_vector(3)), vec(g46, {"a", "0", "0", "0"}));
}

TEST(BracketProperty, AntisymmetricAndBilinear) {
  std::mt19937 rng(5);
  for (const auto& alg : builtin_catalog())
    for (int t = 0; t < 40; ++t) {
      Vector x = random_vector(alg, rng), y = random_vector(alg, rng), z = random_vector(alg, rng);
      EXPECT_TRUE(is_zero(bracket(alg, x, x)));
      Vector xy = bracket(alg, x, y), yx = bracket(alg, y, x);
      for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(xy(i), -yx(i));
      EXPECT_EQ(bracket(alg, add(x, z), y), add(bracket(alg, x, y), bracket(alg, z, y)));
    }
}

TEST(Catalog, StructureIsAntisymmetric) {
  for (const auto& alg : builtin_catalog())
    PolyTensor<3>::for_each_index([&](const auto& idx) {
      auto [i, j, k] = idx;
      EXPECT_EQ(alg.structure(i, j, k), -alg.structure(j, i, k));
    });
}

TEST(Catalog, JacobiHoldsIdentically) {
  for (const auto& alg : builtin_catalog()) EXPECT_TRUE(jacobi_check(alg).empty()) << alg.name;
}

TEST(Catalog, ExactlyThreeBracketFamilies) {
  EXPECT_EQ(bracket_strings(g4_5()),
            (std::vector<std::string>{"[e1,e4] = e1", "[e2,e4] = a*e2", "[e3,e4] = b*e3"}));
  EXPECT_EQ(bracket_strings(g4_6()),
            (std::vector<std::string>{"[e1,e4] = a*e1", "[e2,e4] = b*e2 - e3", "[e3,e4] = e2 + b*e3"}));
}

TEST(Catalog, DomainConstraints) {
  auto g45 = g4_5();
  ASSERT_EQ(g45.constraints.size(), 2u);
  EXPECT_EQ(g45.constraints[0].to_string(), "a != 0");
  EXPECT_EQ(g45.constraints[1].to_string(), "b != 0");
  auto g46 = g4_6();
  EXPECT_EQ(g46.constraints[1].to_string(), "b >= 0");
  EXPECT_THROW(g45.check_point({{"a", Rational(0)}, {"b", Rational(1)}}), DomainError);
  EXPECT_NO_THROW(g46.check_point({{"a", Rational(1)}, {"b", Rational(0)}}));
  EXPECT_THROW(g46.check_point({{"a", Rational(1)}, {"b", Rational(-1)}}), DomainError);
}

TEST(Catalog, UnknownNameListsEntries) {
  try {
    catalog_get("g9_99");
    FAIL();
  } catch (const std::invalid_argument& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("g4_5"), std::string::npos);
    EXPECT_NE(msg.find("g4_6"), std::string::npos);
  }
}

TEST(Jacobi, ViolationDetected) {
  auto v = g4_5().params;
  auto alg = make_algebra("broken", v,
                          {{0, 3, {Poly(v, 1), Poly(v), Poly(v), Poly(v)}},
                           {1, 3, {Poly(v), Poly::variable(v, "a"), Poly(v), Poly(v)}},
                           {2, 3, {Poly(v), Poly(v), Poly::variable(v, "b"), Poly(v)}},
                           {0, 1, {Poly(v), Poly(v), Poly(v, 1), Poly(v)}}},
                          {});
  auto violations = jacobi_check(alg);
  ASSERT_FALSE(violations.empty());
  // [[e1,e2],e4] + [[e2,e4],e1] + [[e4,e1],e2] = b e3 - a e3 - e3
  const auto& v0 = violations.front();
  EXPECT_EQ(v0.triple, (std::array<std::size_t, 3>{0, 1, 3}));
  EXPECT_EQ(v0.residual(2), Poly::parse("b - a - 1", v));
}

TEST(Load, CatalogDocumentRoundTrip) {
  EXPECT_EQ(load_algebra(kG45File), g4_5());
  for (const auto& alg : builtin_catalog()) EXPECT_EQ(load_algebra(serialize_algebra(alg)), alg);
}

TEST(Load, LowerTriangleEntriesAreNegated) {
  auto alg = load_algebra(R"({"name": "x", "brackets": [{"i": 2, "j": 1, "coeffs": ["0", "0", "1", "0"]}]})");
  EXPECT_EQ(alg.structure(0, 1, 2), Poly(alg.params, Rational(-1)));
}

TEST(Load, EmptyTableIsAbelian) {
  auto alg = load_algebra(R"({"name": "abelian", "params": [], "brackets": []})");
  PolyTensor<3>::for_each_index([&](const auto& idx) { EXPECT_TRUE(alg.structure.at(idx).is_zero()); });
}

TEST(Load, JacobiFailureNamesTriple) {
  const char* doc = R"({"name": "bad", "brackets": [
      {"i": 1, "j": 2, "coeffs": ["0", "0", "1", "0"]},
      {"i": 1, "j": 3, "coeffs": ["1", "0", "0", "0"]}]})";
  try {
    load_algebra(doc);
    FAIL();
  } catch (const JacobiError& e) {
    EXPECT_NE(std::string(e.what()).find("(e1, e2, e3)"), std::string::npos) << e.what();
  }
}

TEST(Load, MalformedInputs) {
  EXPECT_THROW(load_algebra("not json"), ParseError);
  EXPECT_THROW(load_algebra(R"({"name": "x", "brackets": [{"i": 1, "j": 1, "coeffs": ["0","0","0","0"]}]})"), ParseError);
  EXPECT_THROW(load_algebra(R"({"name": "x", "brackets": [{"i": 1, "j": 5, "coeffs": ["0","0","0","0"]}]})"), ParseError);
  EXPECT_THROW(load_algebra(R"({"name": "x", "brackets": [{"i": 1, "j": 2, "coeffs": ["0","0","0"]}]})"), ParseError);
  EXPECT_THROW(load_algebra(R"({"name": "x", "brackets": [{"i": 1, "j": 2, "coeffs": ["1","0","0","0"]},
                                                          {"i": 2, "j": 1, "coeffs": ["1","0","0","0"]}]})"),
               ParseError);
  EXPECT_THROW(load_algebra(R"({"name": "x", "params": ["a"], "brackets": [{"i": 1, "j": 2, "coeffs": ["c","0","0","0"]}]})"),
               ParseError);
}

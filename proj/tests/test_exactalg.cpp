#include <gtest/gtest.h>

#include <random>

#include "hnlab/matrix.hpp"
#include "hnlab/poly.hpp"
#include "hnlab/rational.hpp"

using namespace hnlab;

namespace {

const Variables kAB{"a", "b"};

Poly P(const char* s) { return Poly::parse(s, kAB); }

// Random small polynomials of total degree <= 3 with coefficients p/q,
// |p| <= 5, 1 <= q <= 3.
struct PolyGen {
  std::mt19937 rng;
  explicit PolyGen(unsigned seed) : rng(seed) {}

  Rational coeff() {
    std::uniform_int_distribution<int> num(-5, 5), den(1, 3);
    return Rational(num(rng), den(rng));
  }
  Poly poly() {
    std::uniform_int_distribution<int> nterms(0, 4), exp(0, 2);
    Poly p(kAB);
    for (int t = nterms(rng); t > 0; --t) p += Poly::monomial(kAB, {static_cast<unsigned>(exp(rng)), static_cast<unsigned>(exp(rng))}, coeff());
    return p;
  }
  Assignment point() { return {{"a", coeff()}, {"b", coeff()}}; }
};

}  // namespace

TEST(Rational, NormalizesAndCompares) {
  Rational r(6, -4);
  EXPECT_EQ(r.numerator(), -3);
  EXPECT_EQ(r.denominator(), 2);
  EXPECT_EQ(r, Rational(-3, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_EQ(r.to_string(), "-3/2");
}

TEST(Rational, ParsesFractionsAndDecimals) {
  EXPECT_EQ(Rational::parse("-3/4"), Rational(-3, 4));
  EXPECT_EQ(Rational::parse("0.125"), Rational(1, 8));
  EXPECT_EQ(Rational::parse("-2.5"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), ParseError);
  EXPECT_THROW(Rational::parse("abc"), ParseError);
  EXPECT_THROW(Rational::parse(""), ParseError);
  EXPECT_THROW(Rational(1) / Rational(0), std::domain_error);
}

TEST(Rational, ArbitraryPrecision) {
  Rational big = Rational(10).pow(40) + Rational(1);
  EXPECT_EQ(big - Rational(10).pow(40), Rational(1));
}

TEST(Poly, AdditiveInverseIsZero) {
  Poly p = P("a + 1") + P("-a - 1");
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
}

TEST(Poly, DifferenceOfSquares) { EXPECT_EQ(P("(a + b)*(a - b)"), P("a^2 - b^2")); }

TEST(Poly, CanonicalPrinting) {
  Poly tau = Rational(2) * P("a^2 + b^2 + a*b + a + b + 1");
  EXPECT_EQ(tau.to_string(), "2*a^2 + 2*a*b + 2*b^2 + 2*a + 2*b + 2");
  EXPECT_EQ(P("b - a").to_string(), "-a + b");
  EXPECT_EQ(P("1/2*a").to_string(), "1/2*a");
  EXPECT_EQ(Poly(kAB).to_string(), "0");
  EXPECT_EQ(P("-(a + b + 2)").to_string(), "-a - b - 2");
}

TEST(Poly, ParseRoundTripsCanonicalStrings) {
  PolyGen gen(7);
  for (int i = 0; i < 200; ++i) {
    Poly p = gen.poly();
    EXPECT_EQ(Poly::parse(p.to_string(), kAB), p) << p.to_string();
  }
}

TEST(Poly, ParseErrors) {
  EXPECT_THROW(P("a +"), ParseError);
  EXPECT_THROW(P("c"), ParseError);
  EXPECT_THROW(P("a / b"), ParseError);
  EXPECT_THROW(P("(a"), ParseError);
}

TEST(Poly, EvaluateExamples) {
  EXPECT_EQ(P("a + 1").evaluate({{"a", Rational(-1)}, {"b", Rational(1)}}), Rational(0));
  EXPECT_EQ((Rational(2) * P("a^2 + b^2 + a*b + a + b + 1")).evaluate({{"a", Rational(1)}, {"b", Rational(1)}}), Rational(12));
  EXPECT_EQ(Poly(kAB).evaluate({{"a", Rational(5)}, {"b", Rational(1, 3)}}), Rational(0));
  EXPECT_THROW(P("a + b").evaluate({{"a", Rational(1)}}), std::invalid_argument);
}

TEST(Poly, MismatchedVariablesThrow) {
  Poly x = Poly::variable(Variables{"x"}, "x");
  EXPECT_THROW(P("a") + x, std::invalid_argument);
  EXPECT_THROW(P("a") * x, std::invalid_argument);
}

TEST(Poly, PrimitiveForm) {
  EXPECT_EQ(P("-2*a - 4").primitive(), P("a + 2"));
  EXPECT_EQ(P("1/2*a^2 + 1/3*b").primitive(), P("3*a^2 + 2*b"));
  EXPECT_EQ(Poly(kAB, Rational(-7)).primitive(), Poly(kAB, Rational(1)));
}

TEST(PolyProperty, RingLaws) {
  PolyGen gen(11);
  for (int i = 0; i < 150; ++i) {
    Poly p = gen.poly(), q = gen.poly(), r = gen.poly();
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_EQ(p - p, Poly(kAB));
    EXPECT_EQ(p * Poly(kAB, Rational(1)), p);
  }
}

TEST(PolyProperty, EvaluationIsRingHomomorphism) {
  PolyGen gen(13);
  for (int i = 0; i < 150; ++i) {
    Poly p = gen.poly(), q = gen.poly();
    Assignment at = gen.point();
    EXPECT_EQ((p * q).evaluate(at), p.evaluate(at) * q.evaluate(at));
    EXPECT_EQ((p + q).evaluate(at), p.evaluate(at) + q.evaluate(at));
  }
}

TEST(PolyProperty, SubstitutionComposesWithEvaluation) {
  PolyGen gen(17);
  for (int i = 0; i < 100; ++i) {
    Poly p = gen.poly();
    std::vector<Poly> images{gen.poly(), gen.poly()};
    Assignment at = gen.point();
    Assignment inner{{"a", images[0].evaluate(at)}, {"b", images[1].evaluate(at)}};
    EXPECT_EQ(p.substitute(images).evaluate(at), p.evaluate(inner));
  }
}

TEST(Matrix, NullspaceExamples) {
  EXPECT_TRUE(solve_nullspace(RatMatrix::identity(3)).empty());
  EXPECT_EQ(solve_nullspace(RatMatrix(2, 2, Rational(0))).size(), 2u);
  RatMatrix m(1, 3, Rational(0));
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  EXPECT_EQ(solve_nullspace(m).size(), 2u);
}

TEST(MatrixProperty, NullspaceVectorsAreAnnihilated) {
  std::mt19937 rng(19);
  std::uniform_int_distribution<int> dim(1, 6), entry(-3, 3), zero(0, 2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t r = dim(rng), c = dim(rng);
    RatMatrix m(r, c, Rational(0));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (zero(rng)) m(i, j) = Rational(entry(rng), 1 + zero(rng));
    auto kernel = solve_nullspace(m);
    EXPECT_EQ(kernel.size() + rank(m), c);
    for (const auto& k : kernel) EXPECT_TRUE(is_zero_vector(hnlab::apply(m, std::span<const Rational>(k))));
    EXPECT_TRUE(jointly_independent(kernel));
  }
}

TEST(Matrix, ProjectorOntoCoordinateAxis) {
  std::vector<RatVector> sub{{Rational(1), Rational(0)}}, comp{{Rational(0), Rational(1)}};
  RatMatrix p = projector_onto(sub, comp);
  RatMatrix want(2, 2, Rational(0));
  want(0, 0) = 1;
  EXPECT_EQ(p, want);
}

TEST(Matrix, ProjectorRejectsDependentVectors) {
  std::vector<RatVector> sub{{Rational(1), Rational(1)}}, comp{{Rational(2), Rational(2)}};
  EXPECT_THROW(projector_onto(sub, comp), std::invalid_argument);
}

TEST(MatrixProperty, ProjectorIsIdempotentAlongComplement) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> entry(-4, 4), split(1, 4);
  int built = 0;
  while (built < 100) {
    const std::size_t n = 5;
    std::vector<RatVector> vs(n, RatVector(n));
    for (auto& v : vs)
      for (auto& x : v) x = entry(rng);
    if (!jointly_independent(vs)) continue;
    ++built;
    const std::size_t k = split(rng);
    std::vector<RatVector> sub(vs.begin(), vs.begin() + k), comp(vs.begin() + k, vs.end());
    RatMatrix p = projector_onto(sub, comp);
    EXPECT_EQ(p * p, p);
    for (const auto& v : sub) EXPECT_EQ(hnlab::apply(p, std::span<const Rational>(v)), v);
    for (const auto& w : comp) EXPECT_TRUE(is_zero_vector(hnlab::apply(p, std::span<const Rational>(w))));
  }
}

TEST(Matrix, InverseAndDeterminant) {
  RatMatrix m(2, 2, Rational(0));
  m(0, 0) = 2;
  m(0, 1) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  EXPECT_EQ(determinant(m), Rational(1));
  auto inv = inverse(m);
  ASSERT_TRUE(inv.has_value());
  EXPECT_EQ(*inv * m, RatMatrix::identity(2));
  m(1, 1) = Rational(1, 2);
  EXPECT_EQ(determinant(m), Rational(0));
  EXPECT_FALSE(inverse(m).has_value());
}

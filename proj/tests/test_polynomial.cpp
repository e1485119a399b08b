#include <gtest/gtest.h>

#include <random>

#include "combid/polynomial.hpp"

using namespace combid;

namespace {

const Polynomial x = Polynomial::var("x");
const Polynomial y = Polynomial::var("y");

Polynomial random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4), deg(0, 3), count(0, 4);
  Polynomial p;
  for (int i = count(rng); i > 0; --i)
    p += Polynomial::monomial(Monomial{{"x", static_cast<std::uint32_t>(deg(rng))}, {"y", static_cast<std::uint32_t>(deg(rng))}},
                              Rational(coeff(rng), 1 + deg(rng)));
  return p;
}

}  // namespace

TEST(Monomial, CanonicalFactorOrder) {
  Monomial a{{"y", 2}, {"x", 1}, {"y", 1}, {"z", 0}};
  Monomial b{{"x", 1}, {"y", 3}};
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.degree(), 4u);
  EXPECT_EQ(a.degree("y"), 3u);
  EXPECT_EQ(a.without("y"), Monomial::var("x"));
}

TEST(Polynomial, CancellationLeavesNoZeroTerms) {
  Polynomial p = (x + 1) * (x - 1) - (x * x - 1);
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.size(), 0u);
  EXPECT_EQ(p.str(), "0");
}

TEST(Polynomial, BinomialExpansion) {
  Polynomial p = pow(Polynomial(1) - x, 5);
  for (int j = 0; j <= 5; ++j) {
    const int c[] = {1, -5, 10, -10, 5, -1};
    EXPECT_EQ(p.coefficient(Monomial::var("x", j)), Rational(c[j]));
  }
  EXPECT_EQ(p.degree(), 5);
  EXPECT_EQ(pow(x + y, 3).str(), "x^3 + 3*x^2*y + 3*x*y^2 + y^3");
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 300; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    ASSERT_EQ(a + b, b + a);
    ASSERT_EQ(a * b, b * a);
    ASSERT_EQ((a + b) + c, a + (b + c));
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_TRUE((a - a).is_zero());
    ASSERT_EQ(-(-a), a);
  }
}

TEST(Polynomial, EvaluateIsAHomomorphism) {
  std::mt19937_64 rng(11);
  const std::map<std::string, Rational> at{{"x", Rational(3, 2)}, {"y", Rational(-2, 5)}};
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng);
    ASSERT_EQ((a * b).evaluate(at), a.evaluate(at) * b.evaluate(at));
    ASSERT_EQ((a + b).evaluate(at), a.evaluate(at) + b.evaluate(at));
  }
}

TEST(Polynomial, Substitute) {
  Polynomial p = x * x + y;
  EXPECT_EQ(p.substitute("x", y + 1), y * y + 3 * y + 1);
  EXPECT_EQ(p.substitute("z", y), p);
}

TEST(RationalFunction, ArithmeticAndFormalEquality) {
  RationalFunction a(Polynomial(1), x + 1), b(Polynomial(1), x - 1);
  RationalFunction sum = a + b;
  EXPECT_EQ(sum, RationalFunction(2 * x, x * x - 1));
  EXPECT_EQ(a * (x + 1), RationalFunction(Rational(1)));
  EXPECT_EQ(a / a, RationalFunction(Rational(1)));
  EXPECT_EQ(RationalFunction(2 * x + 2, 2 * x * x - 2), RationalFunction(Polynomial(1), x - 1));
  EXPECT_NE(a, b);
  EXPECT_THROW(RationalFunction(x, Polynomial()), PoleError);
  EXPECT_THROW(a / RationalFunction(), PoleError);
}

TEST(RationalFunction, ZeroIsNormalized) {
  RationalFunction z(Polynomial(), x + 1);
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.den(), Polynomial(1));
}

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "wallcross/error.hpp"
#include "wallcross/exactnum.hpp"

namespace wallcross {
namespace {

using testing::Gen;

TEST(Rational, CanonicalForm) {
  Rational x(6, -4);
  EXPECT_EQ(x.num(), -3);
  EXPECT_EQ(x.den(), 2);
  EXPECT_EQ(x.str(), "-3/2");
  EXPECT_EQ(Rational(4, 2).str(), "2");
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(Rational, Parse) {
  EXPECT_EQ(Rational::parse(" -10/4 "), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("+7"), Rational(7));
  EXPECT_THROW(Rational::parse("1.5"), Error);
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, FloorCeil) {
  EXPECT_EQ(Rational(-7, 2).floor(), -4);
  EXPECT_EQ(Rational(-7, 2).ceil(), -3);
  EXPECT_EQ(Rational(6, 3).floor(), 2);
  EXPECT_EQ(Rational(6, 3).ceil(), 2);
}

TEST(Rational, BigIntegersDoNotOverflow) {
  Rational n(1000);
  Rational big = pow(n, 3) * pow(n, 3) * pow(n, 3);
  EXPECT_EQ(big.str(), "1" + std::string(27, '0'));
}

TEST(Surd, SpecComparisons) {
  Surd r2(0, 1, 2);
  EXPECT_EQ(surd_cmp(r2, Surd(1)), std::strong_ordering::greater);
  EXPECT_EQ(surd_cmp(Surd(3), Surd(3)), std::strong_ordering::equal);
  EXPECT_EQ(surd_cmp(Surd(1, 1, 2), Surd(1, 2, 2)), std::strong_ordering::less);
}

TEST(Surd, SquareFactorsMoveOut) {
  Surd x(1, 1, 12);  // 1 + sqrt(12) = 1 + 2 sqrt(3)
  EXPECT_EQ(x.m(), 3);
  EXPECT_EQ(x.b(), Rational(2));
  Surd y(0, 3, 16);
  EXPECT_TRUE(y.is_rational());
  EXPECT_EQ(y.as_rational(), Rational(12));
}

TEST(Surd, MixedRadicandsRejected) {
  EXPECT_THROW((void)(Surd(0, 1, 2) + Surd(0, 1, 3)), Error);
  EXPECT_THROW((void)surd_cmp(Surd(0, 1, 2), Surd(0, 1, 3)), Error);
}

TEST(Surd, ArithmeticInField) {
  Surd x(1, 1, 2);
  Surd prod = x * x.conjugate();  // 1 - 2
  EXPECT_TRUE(prod.is_rational());
  EXPECT_EQ(prod.as_rational(), Rational(-1));
  Surd q = Surd(1) / x;  // sqrt(2) - 1
  EXPECT_EQ(q, Surd(-1, 1, 2));
}

TEST(Surd, ParseRoundTrip) {
  Surd x = Surd::parse("1/2 - 3/4*sqrt(5)");
  EXPECT_EQ(x, Surd(Rational(1, 2), Rational(-3, 4), 5));
  EXPECT_EQ(Surd::parse(x.str()), x);
}

TEST(Surd, FloorCeilAroundIrrationals) {
  Surd r2(0, 1, 2);
  EXPECT_EQ(r2.floor(), 1);
  EXPECT_EQ(r2.ceil(), 2);
  EXPECT_EQ((-r2).floor(), -2);
  Surd big(Rational(0), Rational(1000), 2);  // 1414.21...
  EXPECT_EQ(big.floor(), 1414);
}

TEST(Quadratic, SpecExamples) {
  QuadraticRoots a = quadratic_roots(1, 0, -2);
  ASSERT_EQ(a.roots.size(), 2u);
  EXPECT_EQ(a.roots[0], Surd(0, -1, 2));
  EXPECT_EQ(a.roots[1], Surd(0, 1, 2));
  QuadraticRoots b = quadratic_roots(1, -2, 1);
  ASSERT_EQ(b.roots.size(), 1u);
  EXPECT_TRUE(b.double_root);
  EXPECT_EQ(b.roots[0], Surd(1));
  EXPECT_TRUE(quadratic_roots(1, 0, 1).empty());
  EXPECT_THROW(quadratic_roots(0, 1, 1), Error);
}

TEST(QuadraticProperty, RootsSubstituteToZero) {
  Gen g(11);
  int checked = 0;
  for (int i = 0; i < 2000; ++i) {
    Rational a = g.rational(9), b = g.rational(9), c = g.rational(9);
    if (a.is_zero()) continue;
    for (const Surd& x : quadratic_roots(a, b, c).roots) {
      Surd value = Surd(a) * x * x + Surd(b) * x + Surd(c);
      EXPECT_EQ(value.sign(), 0);
      ++checked;
    }
  }
  EXPECT_GT(checked, 500);
}

TEST(SurdProperty, RationalComparisonAgrees) {
  Gen g(12);
  for (int i = 0; i < 10000; ++i) {
    Rational p = g.rational(20), q = g.rational(20);
    EXPECT_EQ(surd_cmp(Surd(p), Surd(q)), p <=> q);
  }
}

TEST(SurdProperty, TotalOrderOnTriples) {
  Gen g(13);
  auto draw = [&] { return Surd(g.rational(6), g.rational(3), 7); };
  for (int i = 0; i < 10000; ++i) {
    Surd x = draw(), y = draw(), z = draw();
    EXPECT_EQ(surd_cmp(x, y), 0 <=> surd_cmp(y, x));
    if (x <= y && y <= z) EXPECT_LE(x, z);
    // agrees with a long double evaluation away from ties
    long double dx = x.to_double(), dy = y.to_double();
    if (std::fabs(static_cast<double>(dx - dy)) > 1e-9) EXPECT_EQ(x < y, dx < dy);
  }
}

TEST(SurdProperty, RationalBetweenIsStrict) {
  Gen g(14);
  for (int i = 0; i < 3000; ++i) {
    Surd x(g.rational(5), g.rational(2), 3), y(g.rational(5), g.rational(2), 3);
    if (x == y) continue;
    Surd lo = min(x, y), hi = max(x, y);
    Rational q = rational_between(lo, hi);
    EXPECT_LT(lo, Surd(q));
    EXPECT_LT(Surd(q), hi);
  }
}

TEST(SurdProperty, RationalBracketsAreTight) {
  Gen g(15);
  for (int i = 0; i < 2000; ++i) {
    Surd x(g.rational(50), g.rational(9), 11);
    Rational lo = rational_lower(x, 30), hi = rational_upper(x, 30);
    EXPECT_LE(Surd(lo), x);
    EXPECT_GE(Surd(hi), x);
    EXPECT_LE(hi - lo, Rational(1, 1 << 29));
  }
}

TEST(Sqrt, Brackets) {
  Rational lo = sqrt_lower(2, 20), hi = sqrt_upper(2, 20);
  EXPECT_LE(lo * lo, Rational(2));
  EXPECT_GE(hi * hi, Rational(2));
  EXPECT_LE(hi - lo, Rational(1, 1 << 19));
  EXPECT_EQ(sqrt_lower(Rational(9, 4), 8), Rational(3, 2));
  EXPECT_EQ(isqrt(Integer(99)), 9);
}

}  // namespace
}  // namespace wallcross

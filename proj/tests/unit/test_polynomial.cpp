#include <gtest/gtest.h>

#include "opoly/errors.hpp"
#include "opoly/polynomial.hpp"

using opoly::Polynomial;
using opoly::Rational;

TEST(Polynomial, ArithmeticAndEvaluation) {
  const Polynomial p{1, -3, 2};  // 2x^2 - 3x + 1
  const Polynomial q{Rational(1, 2), 1};
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p(Rational(1, 2)), 0);
  EXPECT_EQ((p * q)(3), p(3) * q(3));
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.derivative(), (Polynomial{-3, 4}));
  EXPECT_EQ(q.pow(3)(2), Rational(125, 8));
}

TEST(Polynomial, TrailingZerosStripped) {
  const Polynomial p(std::vector<Rational>{1, 0, 0});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(p, Polynomial::constant(1));
}

TEST(Polynomial, ExactDivisionRoundTrip) {
  const Polynomial p{3, 0, -1, 2};
  const Rational c(2, 5);
  const Polynomial lin = Polynomial::linear(c);
  EXPECT_EQ((p * lin * lin).divide_exact(c, 2), p);
  EXPECT_THROW(p.divide_exact(c), opoly::Error);
}

TEST(Polynomial, DerivativeValues) {
  const auto t = opoly::poly_eval_derivatives(Polynomial::monomial(3), 2, 4);
  const std::vector<Rational> expected{8, 12, 12, 6, 0};
  EXPECT_EQ(t, expected);
}

TEST(Polynomial, WronskianMatchesDefinition) {
  const Polynomial p{1, 2, 3}, q{-1, 0, 0, 1};
  const Rational c(-1, 3);
  EXPECT_EQ(opoly::wronskian(p, q, c), p(c) * q.derivative()(c) - p.derivative()(c) * q(c));
}

TEST(Polynomial, Printing) {
  EXPECT_EQ(opoly::to_string(Polynomial{-3, 1}), "x - 3");
  EXPECT_EQ(opoly::to_string(Polynomial{}), "0");
}

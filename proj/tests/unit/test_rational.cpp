#include <gtest/gtest.h>

#include "opoly/errors.hpp"
#include "opoly/rational.hpp"

using opoly::Error;
using opoly::ErrorKind;
using opoly::parse_rational;
using opoly::Rational;

TEST(Rational, ParsesToCanonicalForm) {
  const Rational r = parse_rational("-3/4");
  EXPECT_EQ(r.get_num(), -3);
  EXPECT_EQ(r.get_den(), 4);
}

TEST(Rational, UnicodeMinus) {
  const Rational r = parse_rational("−3/4");
  EXPECT_EQ(r, Rational(-3, 4));
}

TEST(Rational, ReducesFractions) {
  const Rational r = parse_rational("6/8");
  EXPECT_EQ(r.get_num(), 3);
  EXPECT_EQ(r.get_den(), 4);
  EXPECT_EQ(opoly::to_string(parse_rational("-10/5")), "-2");
}

TEST(Rational, RejectsZeroDenominator) {
  try {
    parse_rational("1/0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
  }
}

TEST(Rational, RejectsGarbage) {
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "a", "1/2/3", "--1"}) {
    EXPECT_THROW(parse_rational(bad), Error) << bad;
  }
}

TEST(Rational, PowAndPochhammer) {
  EXPECT_EQ(opoly::pow(Rational(-2, 3), 3), Rational(-8, 27));
  EXPECT_EQ(opoly::pow(Rational(5), 0), 1);
  EXPECT_EQ(opoly::pochhammer(Rational(1), 5), 120);
  EXPECT_EQ(opoly::pochhammer(Rational(1, 2), 3), Rational(15, 8));
  EXPECT_EQ(opoly::pochhammer(Rational(-2), 3), 0);
}

#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "opoly/band_matrix.hpp"

using opoly::BandMatrix;
using opoly::Rational;

namespace {

BandMatrix random_band(oracle::RandomRationals& rng, std::size_t n, int lo, int up) {
  BandMatrix m(n, lo, up);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long d = static_cast<long>(j) - static_cast<long>(i);
      if (d >= -lo && d <= up) m.set(i, j, rng.any());
    }
  return m;
}

BandMatrix leading(const BandMatrix& m, std::size_t n) {
  BandMatrix out(n, m.lower_bandwidth(), m.upper_bandwidth());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const long d = static_cast<long>(j) - static_cast<long>(i);
      if (d >= -m.lower_bandwidth() && d <= m.upper_bandwidth()) out.set(i, j, m(i, j));
    }
  return out;
}

oracle::Dense dense(const BandMatrix& m) {
  oracle::Dense d = oracle::zeros(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m(i, j);
  return d;
}

}  // namespace

TEST(BandMatrix, ProductMatchesDenseOnReliableBlock) {
  oracle::RandomRationals rng(7);
  const std::size_t n = 9;
  for (int lo = 0; lo <= 2; ++lo)
    for (int up = 0; up <= 2; ++up) {
      // Truncations of larger matrices stand in for the semi-infinite ones.
      const BandMatrix big_a = random_band(rng, n + 3, lo, up);
      const BandMatrix big_b = random_band(rng, n + 3, up, lo);
      const BandMatrix a = leading(big_a, n), b = leading(big_b, n);
      const BandMatrix c = opoly::band_multiply(a, b);
      EXPECT_EQ(c.lower_bandwidth(), lo + up);
      EXPECT_EQ(c.upper_bandwidth(), lo + up);
      EXPECT_EQ(c.reliable_size(), n - static_cast<std::size_t>(up));
      const oracle::Dense full = oracle::multiply(dense(big_a), dense(big_b));
      for (std::size_t i = 0; i < c.reliable_size(); ++i)
        for (std::size_t j = 0; j < c.reliable_size(); ++j) EXPECT_EQ(c(i, j), full[i][j]);
      // Outside the reliable block the truncated product can be wrong.
      const oracle::Dense trunc = oracle::multiply(dense(a), dense(b));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(c(i, j), trunc[i][j]);
    }
}

TEST(BandMatrix, ShiftsShrinkReliableBlock) {
  oracle::RandomRationals rng(3);
  const BandMatrix m = random_band(rng, 6, 1, 1);
  const BandMatrix s = opoly::shift_conjugate(m);
  EXPECT_EQ(s.size(), 5u);
  EXPECT_EQ(s(0, 0), m(1, 1));
  EXPECT_EQ(s(1, 0), m(2, 1));
  const BandMatrix r = opoly::shift_rows(m);
  EXPECT_EQ(r(0, 0), m(1, 0));
  EXPECT_EQ(r(0, 2), m(1, 2));
  const BandMatrix c = opoly::shift_columns(m);
  EXPECT_EQ(c(0, 0), m(0, 1));
  EXPECT_EQ(c(2, 0), m(2, 1));
  EXPECT_EQ(s.reliable_size(), 5u);
}

TEST(BandMatrix, IdentityAndShift) {
  const BandMatrix i = BandMatrix::identity(4);
  const BandMatrix s = opoly::add_identity(i, Rational(-3, 2));
  EXPECT_EQ(s(2, 2), Rational(-1, 2));
  EXPECT_EQ(s(2, 1), 0);
  EXPECT_FALSE(opoly::first_mismatch(i, i).has_value());
  EXPECT_EQ(opoly::first_mismatch(i, s), std::make_pair(std::size_t{0}, std::size_t{0}));
}

TEST(BandMatrix, ForwardSubstitution) {
  oracle::RandomRationals rng(11);
  const std::size_t n = 5;
  opoly::DenseMatrix l(n), x(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      x(i, j) = rng.any();
      l(i, j) = i == j ? Rational(1) : (j < i ? rng.any() : Rational(0));
    }
  EXPECT_EQ(opoly::forward_substitute_unit_lower(l, l * x), x);
}

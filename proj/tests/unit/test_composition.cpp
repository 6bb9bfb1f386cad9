#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "opoly/composition.hpp"
#include "opoly/errors.hpp"
#include "opoly/families.hpp"
#include "opoly/orthopoly.hpp"

using opoly::MomentFunctional;
using opoly::Polynomial;
using opoly::Rational;

namespace {

// Co-recursive family of the first associated recurrence, from the raw recurrence.
std::vector<Polynomial> shifted_corecursive(const opoly::RecurrenceCoefficients& rc,
                                            const Rational& alpha, std::size_t n) {
  oracle::Seq b(rc.b_values().begin() + 1, rc.b_values().end());
  oracle::Seq a(rc.a_values().begin() + 1, rc.a_values().end());
  b[0] += alpha;
  return oracle::three_term(b, a, n);
}

MomentFunctional random_u(unsigned seed) {
  oracle::RandomRationals rng(seed);
  return MomentFunctional(oracle::random_functional(rng, 20).moments);
}

}  // namespace

TEST(Composition, LaguerreRAtZero) {
  const auto u = opoly::laguerre(0, 12);
  const auto r = opoly::christoffel_assoc_R(u, 0, 3);
  EXPECT_EQ(r[1], (Polynomial{-3, 1}));
  EXPECT_EQ(r[2], (Polynomial{12, -9, 1}));
  EXPECT_EQ(opoly::christoffel_assoc_alpha(u, 0), -1);
}

TEST(Composition, RIsCorecursiveOfAssociated) {
  for (const auto& [u, c] : {std::pair{opoly::chebyshev_u(20), Rational(1)},
                             std::pair{opoly::laguerre(0, 20), Rational(0)},
                             std::pair{random_u(3), Rational(1, 3)}}) {
    const auto rc = opoly::smop_from_moments(u, 9).rc;
    const auto r = opoly::christoffel_assoc_R(u, c, 7);
    EXPECT_EQ(r, shifted_corecursive(rc, opoly::christoffel_assoc_alpha(u, c), 7));
    EXPECT_TRUE(opoly::verify_R_corecursive(u, c, 7).passed);
    EXPECT_TRUE(opoly::christoffel_assoc_connection(u, c, 7).passed);
    EXPECT_TRUE(opoly::coro1_check(u, c).passed);
    EXPECT_TRUE(opoly::shifted_lu_check(u, c, 8).passed);
  }
}

TEST(Composition, GeronimusSideIsCorecursiveWithRatio) {
  const auto v = opoly::laguerre(0, 20);
  const Rational m0(1);
  const auto rc = opoly::smop_from_moments(v, 9).rc;
  const auto s = opoly::gero_S(v, 0, m0, 6);
  // S_n = P_n + (v_0/m0) P^(1)_{n-1}, the co-recursive family with parameter -v_0/m0.
  oracle::Seq b = rc.b_values();
  b[0] -= v[0] / m0;
  EXPECT_EQ(s, oracle::three_term(b, rc.a_values(), 6));
  EXPECT_EQ(s[1], (Polynomial{-1, 1}));
}

TEST(Composition, GeronimusChecks) {
  for (const auto& [v, c, m0] : {std::tuple{opoly::chebyshev_u(20), Rational(1), Rational(-1, 2)},
                                 std::tuple{opoly::laguerre(0, 20), Rational(0), Rational(1)},
                                 std::tuple{random_u(4), Rational(1, 3), Rational(2, 5)}}) {
    EXPECT_TRUE(opoly::verify_S_corecursive(v, c, m0, 8).passed);
    EXPECT_TRUE(opoly::gero1_check(v, c, m0, 8).passed);
    EXPECT_TRUE(opoly::gero2_check(v, c, m0, 8).passed);
    EXPECT_TRUE(opoly::pro6_check(v, c, m0, 8).passed);
  }
}

TEST(Composition, Chains) {
  const auto u = opoly::chebyshev_u(20);
  const auto ch = opoly::christoffel_chain(u, 1, 8);
  EXPECT_TRUE(ch.passed());
  EXPECT_FALSE(ch.checks.empty());
  EXPECT_TRUE(opoly::geronimus_chain(u, 1, Rational(-1, 2), 8).passed());
}

TEST(Composition, DegenerateShift) {
  // <u, x - c> = 0 for c = u_1 / u_0
  const auto u = opoly::laguerre(0, 12);
  EXPECT_THROW(opoly::christoffel_assoc_R(u, 2, 3), opoly::Error);
  EXPECT_THROW(opoly::gero_S(u, 0, 0, 3), opoly::Error);
}

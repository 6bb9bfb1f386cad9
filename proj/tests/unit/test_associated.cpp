#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "opoly/associated.hpp"
#include "opoly/errors.hpp"
#include "opoly/families.hpp"
#include "opoly/orthopoly.hpp"

using opoly::MomentFunctional;
using opoly::Polynomial;
using opoly::Rational;

namespace {

oracle::RandomFunctional sample(unsigned seed, std::size_t order = 16) {
  oracle::RandomRationals rng(seed);
  return oracle::random_functional(rng, order);
}

}  // namespace

TEST(Associated, ShiftedRecurrence) {
  const auto f = sample(2);
  const auto rc = opoly::smop_from_moments(MomentFunctional(f.moments), 8).rc;
  for (std::size_t k = 1; k <= 3; ++k) {
    const auto polys = opoly::associated_polys(rc, k, 8 - k);
    const oracle::Seq b(f.b.begin() + static_cast<long>(k), f.b.end());
    const oracle::Seq a(f.a.begin() + static_cast<long>(k), f.a.end());
    EXPECT_EQ(polys, oracle::three_term(b, a, 8 - k));
  }
}

TEST(Associated, DividedDifferenceRepresentation) {
  const auto f = sample(4);
  const MomentFunctional u(f.moments);
  const auto s = opoly::smop_from_moments(u, 7);
  const auto p1 = opoly::associated_polys(s.rc, 1, 6);
  for (std::size_t m = 1; m <= 7; ++m) {
    EXPECT_EQ(opoly::divided_difference_apply(u, s.system.polys[m]) * (1 / u[0]), p1[m - 1]);
  }
  EXPECT_TRUE(opoly::verify_assoc_representation(u, 2, 4).passed);
  EXPECT_TRUE(opoly::assoc_linear_combination_check(s.rc, 3, 7).passed);
}

TEST(Associated, FunctionalHasShiftedRecurrence) {
  const auto f = sample(5);
  const auto rc = opoly::smop_from_moments(MomentFunctional(f.moments), 8).rc;
  const MomentFunctional u1 = opoly::associated_functional(rc, 1, Rational(3, 2), 12);
  EXPECT_EQ(u1[0], Rational(3, 2));
  const auto s1 = opoly::smop_from_moments(u1, 6).rc;
  EXPECT_EQ(s1, opoly::associated_shift(rc, 1).truncated(6));
}

TEST(Corecursive, TwoRoutesAgree) {
  const auto f = sample(6);
  const auto rc = opoly::smop_from_moments(MomentFunctional(f.moments), 8).rc;
  const Rational alpha(-2, 5);
  const auto direct = opoly::corecursive_polys(rc, alpha, 7);
  const auto p = opoly::polys_from_recurrence(rc, 7);
  const auto p1 = opoly::associated_polys(rc, 1, 6);
  EXPECT_EQ(direct[0], p[0]);
  for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(direct[n], p[n] - alpha * p1[n - 1]);
  EXPECT_EQ(opoly::corecursive(rc, alpha).b(0), rc.b(0) + alpha);
  EXPECT_TRUE(opoly::corecursive_functional_check(MomentFunctional(f.moments), alpha).passed);
}

TEST(Inverse, DeterminantRouteMatchesMomentRoute) {
  for (unsigned seed = 10; seed < 14; ++seed) {
    const auto f = sample(seed, 20);
    const MomentFunctional u(f.moments);
    const auto inv = opoly::inverse_smop(u, 8);
    const auto ref = oracle::recurrence_by_determinants(oracle::convolution_inverse(f.moments), 9);
    const auto p = oracle::three_term(ref.b, ref.a, 8);
    for (std::size_t n = 0; n <= 8; ++n) EXPECT_EQ(inv.system.polys[n], p[n]) << n;
    const auto rc = opoly::inverse_recurrence(u, 8);
    EXPECT_EQ(rc.b_values(), oracle::Seq(ref.b.begin(), ref.b.begin() + 8));
  }
}

TEST(Inverse, SignObstruction) {
  // a^-_1 = -a_1 / u_0^2
  for (unsigned seed = 20; seed < 40; ++seed) {
    const auto f = sample(seed, 8);
    const MomentFunctional u = opoly::normalized(MomentFunctional(f.moments));
    const auto rc = opoly::smop_from_moments(u, 3).rc;
    if (rc.a(1) <= 0) continue;
    EXPECT_LT(opoly::inverse_recurrence(u, 2).a(1), 0);
  }
}

TEST(Inverse, FunctionalIdentity) {
  const auto f = sample(8, 18);
  EXPECT_TRUE(opoly::inverse_functional_identity_check(MomentFunctional(f.moments), Rational(2, 3)).passed);
}

TEST(Inverse, ChebyshevUTable) {
  const auto rc = opoly::inverse_recurrence(opoly::chebyshev_u(30), 12);
  EXPECT_EQ(rc.a(1), Rational(-1, 4));
  for (std::size_t n = 2; n <= 10; ++n) {
    const Rational expected = n % 2 == 0 ? oracle::ratio(n + 2, 4 * n) : oracle::ratio(n - 1, 4 * (n + 1));
    EXPECT_EQ(rc.a(n), expected) << n;
  }
}

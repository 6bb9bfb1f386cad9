#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "opoly/darboux.hpp"
#include "opoly/errors.hpp"
#include "opoly/families.hpp"
#include "opoly/functional.hpp"
#include "opoly/orthopoly.hpp"

using opoly::MomentFunctional;
using opoly::Polynomial;
using opoly::Rational;

namespace {

MomentFunctional sample(unsigned seed, std::size_t order = 20) {
  oracle::RandomRationals rng(seed);
  return MomentFunctional(oracle::random_functional(rng, order).moments);
}

}  // namespace

TEST(Christoffel, TransformedMatrixIsChristoffelJacobi) {
  const MomentFunctional u = sample(1);
  const Rational c(1, 3);
  const auto rc = opoly::smop_from_moments(u, 9).rc;
  const auto f = opoly::christoffel_lu(opoly::jacobi(rc), c);
  const MomentFunctional ut = opoly::multiply_poly(u, Polynomial::linear(c));
  const auto ref = oracle::recurrence_by_determinants(ut.moments(), 8);
  const auto got = f.transformed.recurrence();
  EXPECT_EQ(got.b_values(), ref.b);
  EXPECT_EQ(got.a_values(), ref.a);
}

TEST(Christoffel, ClosedFormsAndChecks) {
  const MomentFunctional u = sample(2);
  const Rational c(-1, 2);
  const auto s = opoly::smop_from_moments(u, 9);
  const auto f = opoly::christoffel_lu(opoly::jacobi(s.rc), c);
  const auto cf = opoly::christoffel_closed_forms(s.system, u, c);
  for (std::size_t n = 0; n < f.upper.diag.size(); ++n) {
    EXPECT_EQ(f.upper.diag[n], -s.system.polys[n + 1](c) / s.system.polys[n](c));
  }
  EXPECT_EQ(cf.beta, f.upper.diag);
  EXPECT_EQ(cf.ell, f.lower.sub);
  EXPECT_TRUE(opoly::christoffel_connection_check(u, c, 8).passed);
  EXPECT_TRUE(opoly::christoffel_factorization_check(u, c, 9).passed);
}

TEST(Christoffel, ZeroPivotLevel) {
  // U_1(0) = 0
  try {
    opoly::christoffel_lu(opoly::jacobi(opoly::smop_from_moments(opoly::chebyshev_u(12), 6).rc), 0);
    FAIL();
  } catch (const opoly::Error& e) {
    EXPECT_EQ(e.kind(), opoly::ErrorKind::ZeroPivot);
    EXPECT_EQ(e.level(), std::optional<std::size_t>(0));
  }
}

TEST(Geronimus, TransformedMatrixIsGeronimusJacobi) {
  const MomentFunctional v = sample(3);
  const Rational c(2), m0(-3, 4);
  const auto rc = opoly::smop_from_moments(v, 9).rc;
  const auto f = opoly::geronimus_ul(opoly::jacobi(rc), c, v[0] / m0);
  const MomentFunctional vh = opoly::geronimus_moments(v, c, m0);
  const auto ref = oracle::recurrence_by_determinants(vh.moments(), 9);
  const auto got = f.transformed.recurrence();
  EXPECT_EQ(got.b_values(), oracle::Seq(ref.b.begin(), ref.b.begin() + got.size()));
  EXPECT_TRUE(opoly::geronimus_connection_check(v, c, m0, 8).passed);
  EXPECT_TRUE(opoly::geronimus_factorization_check(v, c, m0, 9).passed);
}

TEST(Geronimus, LaguerreWeight) {
  for (const Rational alpha : {Rational(0), Rational(1, 2)}) {
    const auto rc = opoly::smop_from_moments(opoly::laguerre(alpha, 20), 10).rc;
    const auto f = opoly::geronimus_ul(opoly::jacobi(rc), 0, alpha + 1);
    for (std::size_t n = 0; n < f.upper.diag.size(); ++n) EXPECT_EQ(f.upper.diag[n], alpha + n + 1);
    for (std::size_t n = 0; n < f.lower.sub.size(); ++n) EXPECT_EQ(f.lower.sub[n], n + 1);
    const auto hat = f.transformed.recurrence();
    for (std::size_t n = 0; n + 1 < hat.size(); ++n) EXPECT_EQ(hat.b(n), 2 * n + alpha + 1);
  }
}

TEST(Geronimus, DegenerateBeta) {
  const auto rc = opoly::smop_from_moments(opoly::chebyshev_u(8), 4).rc;
  EXPECT_THROW(opoly::geronimus_ul(opoly::jacobi(rc), 1, 0), opoly::Error);
}

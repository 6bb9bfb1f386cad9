#pragma once

#include <cstddef>
#include <vector>

#include "opoly/functional.hpp"
#include "opoly/orthopoly.hpp"
#include "opoly/report.hpp"

namespace opoly {

// b'_n = b_{n+k}, a'_n = a_{n+k}; the result is k shorter.
RecurrenceCoefficients associated_shift(const RecurrenceCoefficients& rc, std::size_t k);

// P^{(k)}_0 .. P^{(k)}_n
std::vector<Polynomial> associated_polys(const RecurrenceCoefficients& rc, std::size_t k,
                                         std::size_t n);

// First n moments of u^{(k)} with (u^{(k)})_0 = norm0.
MomentFunctional associated_functional(const RecurrenceCoefficients& rc, std::size_t k,
                                       const Rational& norm0, std::size_t n);

// P^{(k)}_{m-1} = <u^{(k-1)}_y, (P^{(k-1)}_m(x) - P^{(k-1)}_m(y)) / (x - y)> / u^{(k-1)}_0
// for m = 1..n.
CheckReport verify_assoc_representation(const MomentFunctional& u, std::size_t k, std::size_t n);

// <v_y, (p(x) - p(y)) / (x - y)> as a polynomial in x.
Polynomial divided_difference_apply(const MomentFunctional& v, const Polynomial& p);

// P^{(k)}_{m-k} = A(x,k) P_m + B(x,k) P^{(1)}_{m-1} for m = k..n.
CheckReport assoc_linear_combination_check(const RecurrenceCoefficients& rc, std::size_t k,
                                           std::size_t n);

// b_0 replaced by b_0 + alpha.
RecurrenceCoefficients corecursive(const RecurrenceCoefficients& rc, const Rational& alpha);

// P_n(x; alpha) for n = 0..n_max, via the modified recurrence; throws
// IdentityViolation if P_n - alpha P^{(1)}_{n-1} disagrees.
std::vector<Polynomial> corecursive_polys(const RecurrenceCoefficients& rc, const Rational& alpha,
                                          std::size_t n_max);

// u^alpha = (u^alpha_0 / u_0) (u^{-1} + (alpha / u_0) delta'_0)^{-1}, normalized.
CheckReport corecursive_functional_check(const MomentFunctional& u, const Rational& alpha);

// u^{(1)} = -(norm1 u_0 / a_1) x^2 u^{-1}, and the explicit form of u^{-1}
// through (x)^{-2} u^{(1)}.
CheckReport inverse_functional_identity_check(const MomentFunctional& u, const Rational& norm1);

struct InverseSmop {
  OrthogonalSystem system;       // P^-_0 .. P^-_{n_max}
  std::vector<Rational> d_star;  // index n; entries 0 and 1 unused
  std::vector<Rational> alpha1;  // alpha_{n,n-1}, index n >= 1
  std::vector<Rational> alpha2;  // alpha_{n,n-2}, index n >= 2
};

// d*_n = W(P_n, P_{n-1})(0) / u_0^2 and P^-_n = P^{(1)}_n + alpha_{n,n-1} P^{(1)}_{n-1}
// + alpha_{n,n-2} P^{(1)}_{n-2}. Needs u.order() >= 2 n_max + 2.
InverseSmop inverse_smop(const MomentFunctional& u, std::size_t n_max);

// b^-_n and a^-_n from the Wronskian ratios, cross-checked against the SMOP of
// invert(u).
RecurrenceCoefficients inverse_recurrence(const MomentFunctional& u, std::size_t n_max);

}  // namespace opoly

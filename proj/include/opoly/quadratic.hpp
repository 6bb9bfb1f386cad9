#pragma once

#include <cstddef>
#include <vector>

#include "opoly/band_matrix.hpp"
#include "opoly/functional.hpp"
#include "opoly/orthopoly.hpp"
#include "opoly/report.hpp"

namespace opoly {

// Unit diagonal; sub1 = alpha_{1,0} .. alpha_{N-1,N-2}, sub2 = alpha_{2,0} .. alpha_{N-1,N-3}.
struct UnitLowerTriband {
  std::vector<Rational> sub1;
  std::vector<Rational> sub2;
  std::size_t size() const { return sub1.size() + 1; }
  BandMatrix matrix() const;
};

// diag = beta_{0,0} .. beta_{N-1,N-1}, super1 = beta_{0,1} .. beta_{N-2,N-1};
// unit second superdiagonal.
struct UpperTriband {
  std::vector<Rational> diag;
  std::vector<Rational> super1;
  std::size_t size() const { return diag.size(); }
  BandMatrix matrix() const;
};

struct TribandFactors {
  UnitLowerTriband lower;
  UpperTriband upper;
};

// S_n = (m1 - c m0) P_n + u_0 P^{(1)}_{n-1}, n = 0..n_max.
std::vector<Polynomial> quad_S(const MomentFunctional& u, const Rational& c, const Rational& m0,
                               const Rational& m1, std::size_t n_max);

struct QuadraticSmop {
  OrthogonalSystem system;       // Q_0 .. Q_{n_max}, norms against the transformed functional
  std::vector<Rational> d_star;  // index n >= 2
  std::vector<Rational> alpha1;  // alpha_{n,n-1}, index n >= 1
  std::vector<Rational> alpha2;  // alpha_{n,n-2}, index n >= 2
};

// Q_n = P_n + alpha_{n,n-1} P_{n-1} + alpha_{n,n-2} P_{n-2} from the 3 x 3
// determinant in S_n(c) and S'_n(c) + m0 P_n(c). Needs u.order() >= 2 n_max.
QuadraticSmop quadratic_geronimus_smop(const MomentFunctional& u, const Rational& c,
                                       const Rational& m0, const Rational& m1,
                                       std::size_t n_max);

// b^_n and a^_n from the alpha coefficients, cross-checked against the SMOP of
// the transformed moments.
RecurrenceCoefficients quadratic_recurrence(const MomentFunctional& u, const Rational& c,
                                            const Rational& m0, const Rational& m1,
                                            std::size_t n_max);

// L from the alpha coefficients, U from Wronskians of Q at c. Needs
// u.order() >= 2 N + 2.
TribandFactors quadratic_factorization(const MomentFunctional& u, const Rational& c,
                                       const Rational& m0, const Rational& m1, std::size_t n);

// (J - cI)^2 = UL, (J^ - cI)^2 = LU on reliable blocks, and the Fourier
// coefficients <u, Q_n P_m> / <u, P_m^2> against L.
CheckReport quadratic_factorization_check(const MomentFunctional& u, const Rational& c,
                                          const Rational& m0, const Rational& m1, std::size_t n);

// (x - c)^2 P_n = Q_{n+2} + beta_{n,n+1} Q_{n+1} + beta_{n,n} Q_n, n = 0..n_max.
CheckReport conex2_check(const MomentFunctional& u, const Rational& c, const Rational& m0,
                         const Rational& m1, std::size_t n_max);

// L from Wronskians of P at 0, U from Wronskians of P^- at 0. Needs
// u.order() >= 2 N + 4.
TribandFactors assoc_inverse_factorization(const MomentFunctional& u, std::size_t n);

// (J^{(1)})^2 = UL and (J^-)^2 = LU on reliable blocks, plus u^{-1} as the
// quadratic Geronimus transform at 0 of -(a_1 / (norm1 u_0)) u^{(1)}.
CheckReport relationlu_check(const MomentFunctional& u, const Rational& norm1, std::size_t n);

// G = L^{-1} J^- by forward substitution, then G L = J^{(1)} on the leading
// N - 2 block.
CheckReport g_matrix_check(const MomentFunctional& u, std::size_t n);

}  // namespace opoly

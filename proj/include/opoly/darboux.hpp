#pragma once

#include <cstddef>
#include <vector>

#include "opoly/band_matrix.hpp"
#include "opoly/functional.hpp"
#include "opoly/orthopoly.hpp"
#include "opoly/report.hpp"

namespace opoly {

// Unit diagonal, subdiagonal ell_1 .. ell_{N-1}.
struct UnitLowerBidiagonal {
  std::vector<Rational> sub;
  std::size_t size() const { return sub.size() + 1; }
  BandMatrix matrix() const;
};

// Diagonal beta_0 .. beta_{N-1}, unit superdiagonal.
struct UpperBidiagonal {
  std::vector<Rational> diag;
  std::size_t size() const { return diag.size(); }
  BandMatrix matrix() const;
};

struct ChristoffelLU {
  UnitLowerBidiagonal lower;
  UpperBidiagonal upper;
  JacobiMatrix transformed;  // UL + cI, size N - 1
};

// J - cI = LU by forward elimination. ZeroPivot{n} when beta_n = 0, i.e. when
// P_{n+1}(c) = 0.
ChristoffelLU christoffel_lu(const JacobiMatrix& j, const Rational& c);

struct BidiagonalSequences {
  std::vector<Rational> ell;   // ell_1 .. ell_{N-1}
  std::vector<Rational> beta;  // beta_0 .. beta_{N-1}
};

// beta_n = -P_{n+1}(c)/P_n(c), ell_n = -(P_{n-1}(c)/P_n(c)) K_n/K_{n-1}, for a
// system holding P_0 .. P_N. ZeroPivot{n} when P_n(c) = 0.
BidiagonalSequences christoffel_closed_forms(const OrthogonalSystem& sys,
                                             const MomentFunctional& u, const Rational& c);

// (x - c) P~_n = P_{n+1} - (P_{n+1}(c)/P_n(c)) P_n for n = 0..n_max, with P~
// from the moments of (x - c) u.
CheckReport christoffel_connection_check(const MomentFunctional& u, const Rational& c,
                                         std::size_t n_max);

// LU = J - cI and UL + cI = J~ on reliable blocks of size N, with J~ taken from
// the moments of (x - c) u.
CheckReport christoffel_factorization_check(const MomentFunctional& u, const Rational& c,
                                            std::size_t n);

struct GeronimusUL {
  UpperBidiagonal upper;
  UnitLowerBidiagonal lower;
  JacobiMatrix transformed;  // LU + cI, size N
};

// J - cI = UL with free parameter beta_0 = v_0 / v^_0. ZeroPivot{n} when
// ell_n = 0.
GeronimusUL geronimus_ul(const JacobiMatrix& j, const Rational& c, const Rational& beta0);

// P^_n = P_n + ell_n P_{n-1}, the closed form of ell_n, and
// (x - c) P_n = P^_{n+1} + beta_n P^_n, for n up to n_max.
CheckReport geronimus_connection_check(const MomentFunctional& v, const Rational& c,
                                       const Rational& m0, std::size_t n_max);

// UL = J - cI and LU + cI = J^ on reliable blocks of size N, with J^ taken from
// the moments of the Geronimus transform.
CheckReport geronimus_factorization_check(const MomentFunctional& v, const Rational& c,
                                          const Rational& m0, std::size_t n);

// Compares two band matrices on their common reliable block.
CheckReport compare_on_reliable_block(const std::string& identity, const BandMatrix& lhs,
                                      const BandMatrix& rhs);

}  // namespace opoly

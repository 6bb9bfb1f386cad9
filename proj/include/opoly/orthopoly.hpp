#pragma once

#include <cstddef>
#include <vector>

#include "opoly/band_matrix.hpp"
#include "opoly/functional.hpp"
#include "opoly/polynomial.hpp"
#include "opoly/rational.hpp"

namespace opoly {

// Three-term recurrence x P_n = P_{n+1} + b_n P_n + a_n P_{n-1}, truncated to
// b_0..b_{N-1} and a_1..a_{N-1}. Every a_n must be nonzero.
class RecurrenceCoefficients {
 public:
  RecurrenceCoefficients() = default;
  // `a` holds a_1, a_2, ... and must be one shorter than `b` (or both empty).
  RecurrenceCoefficients(std::vector<Rational> b, std::vector<Rational> a);

  std::size_t size() const { return b_.size(); }
  const Rational& b(std::size_t n) const;
  // 1-based: a(1) is the first subdiagonal entry.
  const Rational& a(std::size_t n) const;
  const std::vector<Rational>& b_values() const { return b_; }
  const std::vector<Rational>& a_values() const { return a_; }

  RecurrenceCoefficients truncated(std::size_t size) const;

  friend bool operator==(const RecurrenceCoefficients& x, const RecurrenceCoefficients& y) {
    return x.b_ == y.b_ && x.a_ == y.a_;
  }

 private:
  std::vector<Rational> b_;
  std::vector<Rational> a_;
};

struct OrthogonalSystem {
  std::vector<Polynomial> polys;  // P_0 .. P_n
  std::vector<Rational> norms;    // K_0 .. K_{n-1}, K_k = <u, P_k^2>
};

struct Smop {
  RecurrenceCoefficients rc;
  OrthogonalSystem system;
};

// Monic Jacobi matrix: diagonal b, subdiagonal a, superdiagonal 1.
class JacobiMatrix {
 public:
  JacobiMatrix() = default;
  explicit JacobiMatrix(BandMatrix m);

  std::size_t size() const { return m_.size(); }
  const BandMatrix& matrix() const { return m_; }
  RecurrenceCoefficients recurrence() const;

 private:
  BandMatrix m_;
};

// Gram-Schmidt on the monic basis. Needs u.order() >= 2 n_max.
Smop smop_from_moments(const MomentFunctional& u, std::size_t n_max);

// P_0 .. P_{n_max}. Needs rc.size() >= n_max.
std::vector<Polynomial> polys_from_recurrence(const RecurrenceCoefficients& rc,
                                              std::size_t n_max);

JacobiMatrix jacobi(const RecurrenceCoefficients& rc, std::size_t n);
JacobiMatrix jacobi(const RecurrenceCoefficients& rc);

// u_k = u0 (J^k)_{0,0}, k < n. An N x N truncation determines the moments
// through k = 2N - 1, so n <= 2 j.size() is required.
MomentFunctional moments_from_jacobi(const JacobiMatrix& j, const Rational& u0, std::size_t n);

// K_n = u0 a_1 ... a_n for n < rc.size().
std::vector<Rational> norms_from_recurrence(const RecurrenceCoefficients& rc, const Rational& u0);

// Fourier coefficients c_m = <u, q P_m> / <u, P_m^2>, checked by reconstruction.
std::vector<Rational> expand_in_basis(const Polynomial& q, const OrthogonalSystem& sys,
                                      const MomentFunctional& u);

}  // namespace opoly

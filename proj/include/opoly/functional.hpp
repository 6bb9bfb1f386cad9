#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opoly/polynomial.hpp"
#include "opoly/rational.hpp"

namespace opoly {

// A linear functional on polynomials, known through its first `order` moments
// u_n = <u, x^n>.
class MomentFunctional {
 public:
  MomentFunctional() = default;
  explicit MomentFunctional(std::vector<Rational> moments, std::string label = {});

  std::size_t order() const { return moments_.size(); }
  const Rational& operator[](std::size_t n) const { return moments_[n]; }
  const std::vector<Rational>& moments() const { return moments_; }
  const std::string& label() const { return label_; }

  MomentFunctional with_label(std::string label) const;
  MomentFunctional truncated(std::size_t order) const;

 private:
  std::vector<Rational> moments_;
  std::string label_;
};

// delta_c: moments 1, c, c^2, ..., c^{n-1}
MomentFunctional delta_moments(const Rational& c, std::size_t n);

// <u', p> = -<u, p'>, so (u')_n = -n u_{n-1}.
MomentFunctional derivative_functional(const MomentFunctional& u);

MomentFunctional add(const MomentFunctional& u, const MomentFunctional& v);
MomentFunctional scale(const Rational& lambda, const MomentFunctional& u);

// Cauchy product (uv)_n = sum_k u_k v_{n-k}.
MomentFunctional convolve(const MomentFunctional& u, const MomentFunctional& v);

// Convolution inverse, u u^{-1} = delta_0. Requires u_0 != 0.
MomentFunctional invert(const MomentFunctional& u);

// p(x) u, i.e. <p u, q> = <u, p q>. Loses deg(p) moments.
MomentFunctional multiply_poly(const MomentFunctional& u, const Polynomial& p);

// (x - c)^{-m} u: the Taylor part of x^n at c through order m-1 is removed and
// the rest divided exactly by (x - c)^m. Gains m moments.
MomentFunctional divide_power(const MomentFunctional& u, const Rational& c, unsigned m);

// Linear Geronimus transform: (x - c)^{-1} u + m0 delta_c. Its 0th moment is m0.
MomentFunctional geronimus_moments(const MomentFunctional& u, const Rational& c,
                                   const Rational& m0);

// Quadratic Geronimus transform with free moments m0, m1:
// (x - c)^{-2} u + m0 delta_c - (m1 - c m0) delta'_c.
MomentFunctional quadratic_geronimus_moments(const MomentFunctional& u, const Rational& c,
                                             const Rational& m0, const Rational& m1);

// <u, p>
Rational apply(const MomentFunctional& u, const Polynomial& p);

// Moments divided by the 0th moment.
MomentFunctional normalized(const MomentFunctional& u);

// Raw moments agree on the common order.
bool equal_on_the_nose(const MomentFunctional& u, const MomentFunctional& v);
// Normalized moments agree on the common order (u and v equal up to a scalar).
bool equal_as_functionals(const MomentFunctional& u, const MomentFunctional& v);

}  // namespace opoly

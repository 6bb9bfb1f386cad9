#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "opoly/rational.hpp"

namespace opoly {

// Dense univariate polynomial over the rationals; coefficient k multiplies x^k.
// Trailing zeros are stripped on construction, so the zero polynomial has no
// coefficients and degree -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);
  Polynomial(std::initializer_list<Rational> coefficients);

  static Polynomial constant(const Rational& value);
  static Polynomial monomial(std::size_t power);
  // x - root
  static Polynomial linear(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(std::size_t k) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;
  Polynomial derivative() const;
  Polynomial pow(unsigned exponent) const;

  // Exact division by (x - root)^power; throws IdentityViolation when the
  // remainder is nonzero.
  Polynomial divide_exact(const Rational& root, unsigned power = 1) const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(Polynomial p, const Rational& s) { return p *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }
  friend Polynomial operator-(Polynomial p) { return p *= Rational(-1); }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

// (p(c), p'(c), ..., p^{(k)}(c)) by repeated synthetic division.
std::vector<Rational> poly_eval_derivatives(const Polynomial& p, const Rational& c,
                                            std::size_t k);

// W(p, q)(c) = p(c) q'(c) - p'(c) q(c)
Rational wronskian(const Polynomial& p, const Polynomial& q, const Rational& c);

std::string to_string(const Polynomial& p);

}  // namespace opoly

#include "opoly/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "opoly/errors.hpp"

namespace opoly {

Polynomial::Polynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial::Polynomial(std::initializer_list<Rational> coefficients)
    : coeffs_(coefficients) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

Polynomial Polynomial::constant(const Rational& value) { return Polynomial({value}); }

Polynomial Polynomial::monomial(std::size_t power) {
  std::vector<Rational> c(power + 1);
  c[power] = 1;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear(const Rational& root) { return Polynomial({-root, 1}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * k;
  return Polynomial(std::move(d));
}

Polynomial Polynomial::pow(unsigned exponent) const {
  Polynomial result = constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * *this;
  return result;
}

Polynomial Polynomial::divide_exact(const Rational& root, unsigned power) const {
  std::vector<Rational> work = coeffs_;
  for (unsigned step = 0; step < power; ++step) {
    if (work.empty()) break;
    // synthetic division: work = (x - root) q + r
    std::vector<Rational> q(work.size() - 1);
    Rational carry = 0;
    for (std::size_t k = work.size(); k-- > 0;) {
      carry = carry * root + work[k];
      if (k > 0) q[k - 1] = carry;
    }
    if (carry != 0) {
      throw Error(ErrorKind::IdentityViolation,
                  "polynomial not divisible by (x - " + to_string(root) + ")");
    }
    work = std::move(q);
  }
  return Polynomial(std::move(work));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
  }
  return Polynomial(std::move(out));
}

std::vector<Rational> poly_eval_derivatives(const Polynomial& p, const Rational& c,
                                            std::size_t k) {
  // Taylor coefficients at c via repeated synthetic division, then scale by j!.
  std::vector<Rational> work = p.coefficients();
  std::vector<Rational> out(k + 1);
  Rational factorial = 1;
  for (std::size_t j = 0; j <= k; ++j) {
    if (j > 0) factorial *= j;
    if (work.empty()) break;
    Rational carry = 0;
    std::vector<Rational> q(work.size() - 1);
    for (std::size_t i = work.size(); i-- > 0;) {
      carry = carry * c + work[i];
      if (i > 0) q[i - 1] = carry;
    }
    out[j] = carry * factorial;
    work = std::move(q);
  }
  return out;
}

Rational wronskian(const Polynomial& p, const Polynomial& q, const Rational& c) {
  const auto pv = poly_eval_derivatives(p, c, 1);
  const auto qv = poly_eval_derivatives(q, c, 1);
  return pv[0] * qv[1] - pv[1] * qv[0];
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  const auto& c = p.coefficients();
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!first) os << (c[k] < 0 ? " - " : " + ");
    else if (c[k] < 0) os << "-";
    first = false;
    const Rational mag = abs(c[k]);
    if (k == 0 || mag != 1) os << to_string(mag);
    if (k >= 1) os << "x";
    if (k >= 2) os << "^" << k;
  }
  return os.str();
}

}  // namespace opoly

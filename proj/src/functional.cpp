#include "opoly/functional.hpp"

#include <algorithm>

#include "opoly/errors.hpp"

namespace opoly {

MomentFunctional::MomentFunctional(std::vector<Rational> moments, std::string label)
    : moments_(std::move(moments)), label_(std::move(label)) {
  for (auto& m : moments_) m.canonicalize();
}

MomentFunctional MomentFunctional::with_label(std::string label) const {
  return MomentFunctional(moments_, std::move(label));
}

MomentFunctional MomentFunctional::truncated(std::size_t order) const {
  if (order > moments_.size()) {
    throw Error(ErrorKind::TruncationExhausted,
                "cannot truncate order " + std::to_string(moments_.size()) + " functional to " +
                    std::to_string(order));
  }
  return MomentFunctional(std::vector<Rational>(moments_.begin(), moments_.begin() + order),
                          label_);
}

MomentFunctional delta_moments(const Rational& c, std::size_t n) {
  std::vector<Rational> m(n);
  Rational power = 1;
  for (std::size_t k = 0; k < n; ++k) {
    m[k] = power;
    power *= c;
  }
  return MomentFunctional(std::move(m), "delta");
}

MomentFunctional derivative_functional(const MomentFunctional& u) {
  if (u.order() < 2) {
    throw Error(ErrorKind::TruncationExhausted, "derivative needs at least two moments");
  }
  std::vector<Rational> m(u.order());
  for (std::size_t n = 1; n < u.order(); ++n) m[n] = -Rational(n) * u[n - 1];
  return MomentFunctional(std::move(m));
}

MomentFunctional add(const MomentFunctional& u, const MomentFunctional& v) {
  const std::size_t n = std::min(u.order(), v.order());
  std::vector<Rational> m(n);
  for (std::size_t k = 0; k < n; ++k) m[k] = u[k] + v[k];
  return MomentFunctional(std::move(m));
}

MomentFunctional scale(const Rational& lambda, const MomentFunctional& u) {
  std::vector<Rational> m = u.moments();
  for (auto& x : m) x *= lambda;
  return MomentFunctional(std::move(m), u.label());
}

MomentFunctional convolve(const MomentFunctional& u, const MomentFunctional& v) {
  const std::size_t n = std::min(u.order(), v.order());
  std::vector<Rational> m(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j <= k; ++j) m[k] += u[j] * v[k - j];
  }
  return MomentFunctional(std::move(m));
}

MomentFunctional invert(const MomentFunctional& u) {
  if (u.order() == 0 || u[0] == 0) {
    throw Error(ErrorKind::ZeroFirstMoment, "inverse functional needs u_0 != 0");
  }
  std::vector<Rational> inv(u.order());
  const Rational inv0 = 1 / u[0];
  inv[0] = inv0;
  for (std::size_t n = 1; n < u.order(); ++n) {
    Rational acc = 0;
    for (std::size_t k = 0; k < n; ++k) acc += u[n - k] * inv[k];
    inv[n] = -inv0 * acc;
  }
  return MomentFunctional(std::move(inv));
}

MomentFunctional multiply_poly(const MomentFunctional& u, const Polynomial& p) {
  const int deg = std::max(p.degree(), 0);
  if (u.order() <= static_cast<std::size_t>(deg)) {
    throw Error(ErrorKind::TruncationExhausted,
                "multiply_poly: order " + std::to_string(u.order()) +
                    " does not exceed degree " + std::to_string(deg));
  }
  const std::size_t out_order = u.order() - static_cast<std::size_t>(deg);
  std::vector<Rational> m(out_order);
  const auto& c = p.coefficients();
  for (std::size_t n = 0; n < out_order; ++n) {
    for (std::size_t k = 0; k < c.size(); ++k) m[n] += c[k] * u[n + k];
  }
  return MomentFunctional(std::move(m));
}

MomentFunctional divide_power(const MomentFunctional& u, const Rational& c, unsigned m) {
  if (m == 0) return u;
  const std::size_t out_order = u.order() + m;
  std::vector<Rational> out(out_order);
  for (std::size_t n = 0; n < out_order; ++n) {
    if (n < m) continue;  // x^n equals its own Taylor polynomial of order m-1
    const Polynomial xn = Polynomial::monomial(n);
    const auto taylor = poly_eval_derivatives(xn, c, m - 1);
    Polynomial head;
    Rational factorial = 1;
    for (unsigned k = 0; k < m; ++k) {
      if (k > 0) factorial *= k;
      head += (taylor[k] / factorial) * Polynomial::linear(c).pow(k);
    }
    out[n] = apply(u, (xn - head).divide_exact(c, m));
  }
  return MomentFunctional(std::move(out));
}

MomentFunctional geronimus_moments(const MomentFunctional& u, const Rational& c,
                                   const Rational& m0) {
  const MomentFunctional divided = divide_power(u, c, 1);
  return add(divided, scale(m0, delta_moments(c, divided.order())));
}

MomentFunctional quadratic_geronimus_moments(const MomentFunctional& u, const Rational& c,
                                             const Rational& m0, const Rational& m1) {
  const MomentFunctional divided = divide_power(u, c, 2);
  const MomentFunctional delta = delta_moments(c, divided.order());
  const MomentFunctional delta_prime = derivative_functional(delta);
  return add(add(divided, scale(m0, delta)), scale(-(m1 - c * m0), delta_prime));
}

Rational apply(const MomentFunctional& u, const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() > u.order()) {
    throw Error(ErrorKind::TruncationExhausted,
                "apply: degree " + std::to_string(p.degree()) + " needs " +
                    std::to_string(c.size()) + " moments, have " + std::to_string(u.order()));
  }
  Rational acc = 0;
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k] * u[k];
  return acc;
}

MomentFunctional normalized(const MomentFunctional& u) {
  if (u.order() == 0 || u[0] == 0) {
    throw Error(ErrorKind::ZeroFirstMoment, "cannot normalize a functional with u_0 = 0");
  }
  return scale(1 / u[0], u);
}

bool equal_on_the_nose(const MomentFunctional& u, const MomentFunctional& v) {
  const std::size_t n = std::min(u.order(), v.order());
  for (std::size_t k = 0; k < n; ++k) {
    if (u[k] != v[k]) return false;
  }
  return true;
}

bool equal_as_functionals(const MomentFunctional& u, const MomentFunctional& v) {
  return equal_on_the_nose(normalized(u), normalized(v));
}

}  // namespace opoly

#pragma once

// Randomized exact properties shared by the property suite and the acceptance
// binary.

#include <string>

#include "oracles.hpp"
#include "opoly/associated.hpp"
#include "opoly/errors.hpp"
#include "opoly/functional.hpp"
#include "opoly/orthopoly.hpp"

namespace props {

using opoly::MomentFunctional;
using opoly::Polynomial;
using opoly::Rational;

struct Outcome {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::size_t sign_cases = 0;  // cases where a_1 > 0
  std::string first;

  void fail(std::size_t index, const std::string& what) {
    if (failures++ == 0) first = "case " + std::to_string(index) + ": " + what;
  }
};

struct Case {
  oracle::RandomFunctional f;
  MomentFunctional u;
  Rational c;
  Rational alpha;
  unsigned m;
};

inline Case make_case(oracle::RandomRationals& rng) {
  Case k;
  k.f = oracle::random_functional(rng, 16);
  k.u = MomentFunctional(k.f.moments);
  k.c = rng.any(3, 3);
  k.alpha = rng.nonzero(4, 3);
  k.m = 1 + static_cast<unsigned>(rng.engine()() % 3);
  return k;
}

// Empty on success, otherwise the name of the first property that broke.
inline std::string check_case(const Case& k, bool& sign_applicable) {
  const MomentFunctional& u = k.u;
  const std::size_t order = u.order();

  // convolution inverse round trip
  const MomentFunctional inv = opoly::invert(u);
  if (inv.moments() != oracle::convolution_inverse(u.moments())) return "inverse vs dense solve";
  if (opoly::invert(inv).moments() != u.moments()) return "inverse round trip";
  if (opoly::convolve(u, inv).moments() != opoly::delta_moments(0, order).moments()) {
    return "u u^{-1} = delta_0";
  }

  // divide / multiply round trips
  const Polynomial lin = Polynomial::linear(k.c);
  if (opoly::multiply_poly(opoly::divide_power(u, k.c, k.m), lin.pow(k.m)).moments() != u.moments()) {
    return "(x-c)^m (x-c)^{-m} u = u";
  }
  const MomentFunctional back = opoly::divide_power(opoly::multiply_poly(u, lin), k.c, 1);
  for (std::size_t n = 0; n < back.order(); ++n) {
    if (back[n] - u[n] != (back[0] - u[0]) * opoly::pow(k.c, n)) return "(x-c)^{-1} (x-c) u = u + l delta_c";
  }

  // Favard round trip
  const std::size_t size = order / 2;
  const opoly::RecurrenceCoefficients rc(
      oracle::Seq(k.f.b.begin(), k.f.b.begin() + static_cast<long>(size)),
      oracle::Seq(k.f.a.begin(), k.f.a.begin() + static_cast<long>(size) - 1));
  const MomentFunctional rebuilt = opoly::moments_from_jacobi(opoly::jacobi(rc), u[0], order);
  if (rebuilt.moments() != u.moments()) return "moments from Jacobi matrix";
  if (!(opoly::smop_from_moments(rebuilt, size).rc == rc)) return "recurrence from moments";

  // co-recursive, two routes
  oracle::Seq b = rc.b_values();
  b[0] += k.alpha;
  const auto direct = opoly::corecursive_polys(rc, k.alpha, size);
  if (direct != oracle::three_term(b, rc.a_values(), size)) return "co-recursive recurrence";
  const auto p = opoly::polys_from_recurrence(rc, size);
  const auto p1 = opoly::associated_polys(rc, 1, size - 1);
  for (std::size_t n = 1; n <= size; ++n) {
    if (!(direct[n] == p[n] - k.alpha * p1[n - 1])) return "P_n(x; alpha) = P_n - alpha P^(1)_{n-1}";
  }

  // sign obstruction
  const MomentFunctional un = opoly::normalized(u);
  sign_applicable = rc.a(1) > 0;
  if (sign_applicable && !(opoly::inverse_recurrence(un, 2).a(1) < 0)) return "a^-_1 < 0 when a_1 > 0";

  // normalized co-recursive functional
  if (!opoly::corecursive_functional_check(u, k.alpha).passed) return "co-recursive functional";
  return {};
}

inline Outcome run(unsigned seed, std::size_t cases) {
  oracle::RandomRationals rng(seed);
  Outcome out;
  for (std::size_t i = 0; i < cases; ++i) {
    const Case k = make_case(rng);
    ++out.cases;
    bool sign = false;
    try {
      const std::string broken = check_case(k, sign);
      if (!broken.empty()) out.fail(i, broken);
    } catch (const opoly::Error& e) {
      out.fail(i, std::string(opoly::to_string(e.kind())) + ": " + e.what());
    }
    if (sign) ++out.sign_cases;
  }
  return out;
}

}  // namespace props

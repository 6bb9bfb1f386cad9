#include "opoly/families.hpp"

#include "opoly/errors.hpp"

namespace opoly {

namespace {

Rational sign(std::size_t n) { return n % 2 == 0 ? Rational(1) : Rational(-1); }

Rational power_of_two(long e) {
  return e >= 0 ? pow(Rational(2), static_cast<unsigned long>(e))
                : Rational(1) / pow(Rational(2), static_cast<unsigned long>(-e));
}

Rational factorial(std::size_t n) { return pochhammer(Rational(1), n); }

}  // namespace

std::string_view family_name(Family f) {
  switch (f) {
    case Family::ChebyshevU: return "chebyshev-u";
    case Family::ChebyshevT: return "chebyshev-t";
    case Family::Laguerre: return "laguerre";
  }
  return "";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : {Family::ChebyshevU, Family::ChebyshevT, Family::Laguerre}) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

MomentFunctional chebyshev_u(std::size_t n) {
  // m_{2k} = C_k / 4^k
  std::vector<Rational> m(n, Rational(0));
  Rational catalan = 1;
  for (std::size_t k = 0; 2 * k < n; ++k) {
    m[2 * k] = catalan / pow(Rational(4), k);
    catalan = catalan * Rational(2 * (2 * k + 1)) / Rational(k + 2);
  }
  return MomentFunctional(std::move(m), "chebyshev-u");
}

MomentFunctional chebyshev_t(std::size_t n) {
  // m_{2k} = binom(2k, k) / 4^k
  std::vector<Rational> m(n, Rational(0));
  Rational central = 1;
  for (std::size_t k = 0; 2 * k < n; ++k) {
    m[2 * k] = central / pow(Rational(4), k);
    central = central * Rational(2 * (2 * k + 1)) / Rational(k + 1);
  }
  return MomentFunctional(std::move(m), "chebyshev-t");
}

MomentFunctional laguerre(const Rational& alpha, std::size_t n) {
  std::vector<Rational> m;
  for (std::size_t k = 0; k < n; ++k) m.push_back(pochhammer(alpha + 2, k));
  return MomentFunctional(std::move(m), "laguerre(" + to_string(alpha) + ")");
}

MomentFunctional laguerre_weight(const Rational& gamma, std::size_t n) {
  std::vector<Rational> m;
  for (std::size_t k = 0; k < n; ++k) m.push_back(pochhammer(gamma + 1, k));
  return MomentFunctional(std::move(m), "laguerre-weight(" + to_string(gamma) + ")");
}

MomentFunctional family_moments(Family f, const Rational& alpha, std::size_t n) {
  switch (f) {
    case Family::ChebyshevU: return chebyshev_u(n);
    case Family::ChebyshevT: return chebyshev_t(n);
    case Family::Laguerre: return laguerre(alpha, n);
  }
  return {};
}

Rational laguerre_assoc_zero_value(const Rational& alpha, std::size_t n) {
  if (alpha == -1) throw Error(ErrorKind::DegenerateParameter, "alpha = -1");
  return sign(n) / (alpha + 1) * (pochhammer(alpha + 2, n + 1) - factorial(n + 1));
}

ExpectedTables expected_tables(Family f, const Rational& alpha, std::size_t n) {
  ExpectedTables t;
  for (std::size_t k = 0; k < n; ++k) {
    const Rational kk(k);
    const bool even = k % 2 == 0;
    switch (f) {
      case Family::ChebyshevU:
        t.b.push_back(0);
        if (k >= 1) t.a.push_back(Rational(1, 4));
        t.values_at_zero.push_back(even ? sign(k / 2) * power_of_two(-static_cast<long>(k))
                                        : Rational(0));
        t.b_minus.push_back(0);
        if (k == 1) t.a_minus.push_back(Rational(-1, 4));
        if (k >= 2) {
          t.a_minus.push_back(even ? Rational((kk + 2) / (4 * kk)) : Rational((kk - 1) / (4 * (kk + 1))));
          t.alpha2.push_back(even ? Rational((kk + 2) / (4 * kk)) : Rational(1, 4));
          t.d_star.push_back(-(even ? kk : Rational(kk + 1)) * power_of_two(1 - 2 * static_cast<long>(k)));
        }
        if (k >= 1) t.alpha1.push_back(0);
        break;
      case Family::ChebyshevT:
        t.b.push_back(0);
        if (k >= 1) t.a.push_back(k == 1 ? Rational(1, 2) : Rational(1, 4));
        if (k == 0) {
          t.values_at_zero.push_back(1);
        } else {
          t.values_at_zero.push_back(
              even ? sign(k / 2) * power_of_two(1 - static_cast<long>(k)) : Rational(0));
        }
        t.b_minus.push_back(0);
        if (k == 1) t.a_minus.push_back(Rational(-1, 2));
        if (k >= 2) {
          t.a_minus.push_back(even ? Rational((kk + 1) / (4 * (kk - 1))) : Rational((kk - 2) / (4 * kk)));
          t.alpha2.push_back(even ? Rational((kk + 1) / (4 * (kk - 1))) : Rational(1, 4));
          t.d_star.push_back(power_of_two(3 - 2 * static_cast<long>(k)) *
                             (even ? Rational(1 - kk) : Rational(-kk)));
        }
        if (k >= 1) t.alpha1.push_back(0);
        break;
      case Family::Laguerre:
        t.b.push_back(2 * kk + alpha + 2);
        if (k >= 1) t.a.push_back(kk * (kk + alpha + 1));
        t.values_at_zero.push_back(sign(k) * pochhammer(alpha + 2, k));
        // The n = 0 entry follows from (L^{alpha+1}_1)^- = x + alpha + 2.
        t.b_minus.push_back(k == 0 ? Rational(-(alpha + 2)) : Rational(2 * kk + alpha + 2));
        if (k == 1) t.a_minus.push_back(-(alpha + 2) * (alpha + 3));
        if (k >= 2) t.a_minus.push_back((kk - 1) * (kk + alpha + 2));
        if (k >= 1) t.alpha1.push_back(2 * (kk + alpha + 2));
        if (k >= 2) t.alpha2.push_back((kk + alpha + 1) * (kk + alpha + 2));
        if (k >= 1) t.ell.push_back(kk);
        t.beta.push_back(alpha + kk + 1);
        t.hat_b.push_back(2 * kk + alpha + 1);
        if (k >= 1) t.hat_a.push_back(kk * (kk + alpha));
        t.assoc_zero.push_back(laguerre_assoc_zero_value(alpha, k));
        break;
    }
  }
  return t;
}

}  // namespace opoly

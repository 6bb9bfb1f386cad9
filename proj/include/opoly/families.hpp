#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opoly/functional.hpp"
#include "opoly/rational.hpp"

namespace opoly {

enum class Family { ChebyshevU, ChebyshevT, Laguerre };

std::string_view family_name(Family f);
std::optional<Family> parse_family(std::string_view name);

// Normalized moments (u_0 = 1), first n of them.
MomentFunctional chebyshev_u(std::size_t n);
MomentFunctional chebyshev_t(std::size_t n);
// Weight x^{alpha+1} e^{-x}: moments (alpha + 2)_k.
MomentFunctional laguerre(const Rational& alpha, std::size_t n);
// Weight x^gamma e^{-x}: moments (gamma + 1)_k.
MomentFunctional laguerre_weight(const Rational& gamma, std::size_t n);

MomentFunctional family_moments(Family f, const Rational& alpha, std::size_t n);

// Closed forms for the first n indices of each sequence. Empty where the family
// has no closed form. All values in the u_0 = 1 convention.
struct ExpectedTables {
  std::vector<Rational> b;               // b_0 ..
  std::vector<Rational> a;               // a_1 ..
  std::vector<Rational> values_at_zero;  // P_n(0), n = 0 ..
  std::vector<Rational> b_minus;         // b^-_0 ..
  std::vector<Rational> a_minus;         // a^-_1 ..
  std::vector<Rational> alpha1;          // alpha_{n,n-1}, n = 1 ..
  std::vector<Rational> alpha2;          // alpha_{n,n-2}, n = 2 ..
  std::vector<Rational> d_star;          // d*_n, n = 2 ..
  // Laguerre only: Geronimus step at c = 0 with v^_0 / v_0 = 1 / (alpha + 1).
  std::vector<Rational> ell;             // ell_1 ..
  std::vector<Rational> beta;            // beta_0 ..
  std::vector<Rational> hat_b;           // b^_0 ..
  std::vector<Rational> hat_a;           // a^_1 ..
  std::vector<Rational> assoc_zero;      // P^{(1)}_n(0), n = 0 ..
};

ExpectedTables expected_tables(Family f, const Rational& alpha, std::size_t n);

// ((-1)^n / (alpha + 1)) [(alpha + 2)_{n+1} - (n + 1)!]
Rational laguerre_assoc_zero_value(const Rational& alpha, std::size_t n);

}  // namespace opoly

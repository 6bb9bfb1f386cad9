#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "opoly/functional.hpp"
#include "opoly/orthopoly.hpp"
#include "opoly/report.hpp"

namespace opoly {

// Christoffel side. u~ = (x - c) u.

// R_n = (u_0 / u~_0) [(x - c) P^{(1)}_n - P_{n+1}], n = 0..n_max.
// DegenerateParameter if u~_0 = <u, x - c> = 0. Needs u.order() >= 2 n_max + 2.
std::vector<Polynomial> christoffel_assoc_R(const MomentFunctional& u, const Rational& c,
                                            std::size_t n_max);

// -a_1 u_0 / u~_0
Rational christoffel_assoc_alpha(const MomentFunctional& u, const Rational& c);

// R_n equals the co-recursive family of the shifted recurrence.
CheckReport verify_R_corecursive(const MomentFunctional& u, const Rational& c, std::size_t n_max);

// (x - c) P~^{(1)}_{n-1} = R_n - (P_{n+1}(c) / P_n(c)) R_{n-1}, n = 1..n_max.
CheckReport christoffel_assoc_connection(const MomentFunctional& u, const Rational& c,
                                         std::size_t n_max);

// Normalized u~^{(1)} against normalized (x - c) u^alpha, on every moment both
// sides determine.
CheckReport coro1_check(const MomentFunctional& u, const Rational& c);

// L_1 U_1 = J_alpha - cI and U_1 L_1 = J~^{(1)} - cI.
CheckReport shifted_lu_check(const MomentFunctional& u, const Rational& c, std::size_t n);

// Geronimus side. (x - c) v^ = v with v^_0 = m0.

// S_n = P_n + (v_0 / m0) P^{(1)}_{n-1}, n = 0..n_max.
std::vector<Polynomial> gero_S(const MomentFunctional& v, const Rational& c, const Rational& m0,
                               std::size_t n_max);

CheckReport verify_S_corecursive(const MomentFunctional& v, const Rational& c,
                                 const Rational& m0, std::size_t n_max);
// (x - c) P^^{(1)}_{n-1} = S_n + ell_n S_{n-1}
CheckReport gero1_check(const MomentFunctional& v, const Rational& c, const Rational& m0,
                        std::size_t n_max);
// S_n = P^^{(1)}_n + beta_n P^^{(1)}_{n-1}
CheckReport gero2_check(const MomentFunctional& v, const Rational& c, const Rational& m0,
                        std::size_t n_max);
CheckReport verify_S_corecursive_and_connections(const MomentFunctional& v, const Rational& c,
                                                 const Rational& m0, std::size_t n_max);

// (i) v^^{(1)} = (x - c) v^alpha, normalized; (ii) J_alpha - cI = L^ U^;
// (iii) J^^{(1)} - cI = U^ L^; with L^ = U Lambda^T, U^ = Lambda L.
CheckReport pro6_check(const MomentFunctional& v, const Rational& c, const Rational& m0,
                       std::size_t n);

struct ChainReport {
  std::string chain;  // "christoffel+assoc" or "geronimus+assoc"
  Rational c;
  std::vector<std::pair<std::string, Rational>> params;
  std::vector<CheckReport> checks;
  bool passed() const;
};

ChainReport christoffel_chain(const MomentFunctional& u, const Rational& c, std::size_t n_max);
ChainReport geronimus_chain(const MomentFunctional& v, const Rational& c, const Rational& m0,
                            std::size_t n_max);

}  // namespace opoly

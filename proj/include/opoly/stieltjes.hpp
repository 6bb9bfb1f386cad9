#pragma once

#include <cstddef>

#include "opoly/functional.hpp"
#include "opoly/laurent_series.hpp"
#include "opoly/report.hpp"

namespace opoly {

// S_u(z) = sum u_n z^{-(n+1)}, known on z^{-1} .. z^{-order}.
TruncatedLaurentSeries series_from_functional(const MomentFunctional& u);

// (z - b_0) S_u - (a_1 / norm1) S_{u^{(1)}} S_u = u_0, with u^{(1)}_0 = norm1.
CheckReport cf_step_check(const MomentFunctional& u, const Rational& norm1);

// S_u S_{u^{-1}} = z^{-2}.
CheckReport inverse_series_check(const MomentFunctional& u);

// E(z) = S_u P_n - u_0 P^{(1)}_{n-1}. Checks that z^{n-1} .. z^{-n} vanish and
// returns k such that z^{-k} carries the first nonzero coefficient (always
// n + 1, with coefficient K_n). Needs u.order() >= 2 n + 1.
int pade_residual(const MomentFunctional& u, std::size_t n);

// pade_residual for n = 0..n_max as a report.
CheckReport pade_check(const MomentFunctional& u, std::size_t n_max);

// S_{u^{(1)}} = -(u_0 norm1 / a_1) z^2 S_{u^{-1}} + (norm1 / a_1)(z - b_0).
CheckReport relationS_check(const MomentFunctional& u, const Rational& norm1);

}  // namespace opoly

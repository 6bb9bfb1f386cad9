#include "opoly/stieltjes.hpp"

#include <algorithm>
#include <string>

#include "opoly/associated.hpp"
#include "opoly/errors.hpp"
#include "opoly/orthopoly.hpp"

namespace opoly {

namespace {

// Depth is the lowest power compared, as a positive count below z^0.
CheckReport series_report(const std::string& identity, const TruncatedLaurentSeries& lhs,
                          const TruncatedLaurentSeries& rhs) {
  int lo = std::min(lhs.min_power(), rhs.min_power());
  if (!lhs.exact() && !rhs.exact()) lo = std::max(lhs.min_power(), rhs.min_power());
  else if (!lhs.exact()) lo = lhs.min_power();
  else if (!rhs.exact()) lo = rhs.min_power();
  CheckReport report{identity, static_cast<std::size_t>(lo < 0 ? -lo : 0)};
  if (auto p = series_first_mismatch(lhs, rhs)) {
    report.fail(static_cast<std::size_t>(*p < 0 ? -*p : 0),
                "coefficient of z^" + std::to_string(*p) + ": " + to_string(lhs.coefficient(*p)) +
                    " vs " + to_string(rhs.coefficient(*p)));
  }
  return report;
}

struct LevelOne {
  RecurrenceCoefficients rc;
  MomentFunctional assoc;
};

LevelOne level_one(const MomentFunctional& u, const Rational& norm1) {
  if (norm1 == 0) throw Error(ErrorKind::ZeroFirstMoment, "u^(1)_0 must be nonzero");
  const std::size_t n = u.order() / 2;
  if (n < 2) {
    throw Error(ErrorKind::TruncationExhausted, "b_0 and a_1 need 4 moments, have " +
                                                    std::to_string(u.order()));
  }
  const RecurrenceCoefficients rc = smop_from_moments(u, n).rc;
  return {rc, associated_functional(rc, 1, norm1, 2 * (n - 1))};
}

TruncatedLaurentSeries residual_series(const MomentFunctional& u, const Smop& base,
                                       std::size_t n) {
  const Polynomial& pn = base.system.polys[n];
  const Polynomial num = n > 0 ? u[0] * associated_polys(base.rc, 1, n - 1)[n - 1] : Polynomial();
  return series_add(
      series_multiply(series_from_functional(u), TruncatedLaurentSeries::from_polynomial(pn)),
      series_scale(-1, TruncatedLaurentSeries::from_polynomial(num)));
}

}  // namespace

TruncatedLaurentSeries series_from_functional(const MomentFunctional& u) {
  const int order = static_cast<int>(u.order());
  return TruncatedLaurentSeries(-1, -order, u.moments());
}

CheckReport cf_step_check(const MomentFunctional& u, const Rational& norm1) {
  const LevelOne one = level_one(u, norm1);
  const TruncatedLaurentSeries s = series_from_functional(u);
  const TruncatedLaurentSeries s1 = series_from_functional(one.assoc);
  const auto zb = TruncatedLaurentSeries::from_polynomial(Polynomial::linear(one.rc.b(0)));
  const auto lhs = series_add(series_multiply(zb, s),
                              series_scale(-one.rc.a(1) / norm1, series_multiply(s1, s)));
  return series_report("stieltjes", lhs, TruncatedLaurentSeries::monomial(0, u[0]));
}

CheckReport inverse_series_check(const MomentFunctional& u) {
  const MomentFunctional inv = invert(u);
  const auto lhs = series_multiply(series_from_functional(u), series_from_functional(inv));
  return series_report("identidad", lhs, TruncatedLaurentSeries::monomial(-2));
}

int pade_residual(const MomentFunctional& u, std::size_t n) {
  if (u.order() < 2 * n + 1) {
    throw Error(ErrorKind::TruncationExhausted, "Pade residual at n = " + std::to_string(n) +
                                                    " needs " + std::to_string(2 * n + 1) +
                                                    " moments");
  }
  const auto e = residual_series(u, smop_from_moments(u, n), n);
  const int top = static_cast<int>(n) - 1;
  for (int p = top; p >= -static_cast<int>(n); --p) {
    if (e.coefficient(p) != 0) {
      throw Error(ErrorKind::IdentityViolation,
                  "residual coefficient of z^" + std::to_string(p) + " is " +
                      to_string(e.coefficient(p)),
                  static_cast<std::size_t>(top - p));
    }
  }
  const int first = -static_cast<int>(n) - 1;
  if (e.coefficient(first) == 0) {
    throw Error(ErrorKind::IdentityViolation,
                "residual vanishes at z^" + std::to_string(first) + " as well", n + 1);
  }
  return -first;
}

CheckReport pade_check(const MomentFunctional& u, std::size_t n_max) {
  CheckReport report{"pade", n_max};
  const Smop base = smop_from_moments(u, n_max);
  for (std::size_t n = 0; n <= n_max; ++n) {
    int depth = 0;
    try {
      depth = pade_residual(u, n);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IdentityViolation) throw;
      report.fail(n, e.what());
      break;
    }
    if (depth != static_cast<int>(n) + 1) {
      report.fail(n, "first nonzero residual at z^-" + std::to_string(depth));
      break;
    }
    const auto e = residual_series(u, base, n);
    const Polynomial& pn = base.system.polys[n];
    const Rational kn = apply(u, pn * pn);
    if (e.coefficient(-depth) != kn) {
      report.fail(n, "leading residual " + to_string(e.coefficient(-depth)) + " but K_n = " +
                         to_string(kn));
      break;
    }
  }
  return report;
}

CheckReport relationS_check(const MomentFunctional& u, const Rational& norm1) {
  const LevelOne one = level_one(u, norm1);
  const Rational a1 = one.rc.a(1);
  const auto z2 = TruncatedLaurentSeries::monomial(2);
  const auto rhs = series_add(
      series_scale(-u[0] * norm1 / a1,
                   series_multiply(z2, series_from_functional(invert(u)))),
      TruncatedLaurentSeries::from_polynomial((norm1 / a1) * Polynomial::linear(one.rc.b(0))));
  return series_report("relationS", series_from_functional(one.assoc), rhs);
}

}  // namespace opoly

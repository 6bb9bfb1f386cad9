#include "opoly/associated.hpp"

#include <string>

#include "opoly/errors.hpp"

namespace opoly {

RecurrenceCoefficients associated_shift(const RecurrenceCoefficients& rc, std::size_t k) {
  if (k == 0) return rc;
  if (rc.size() < k) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "shift by " + std::to_string(k) + " of a recurrence of size " +
                    std::to_string(rc.size()));
  }
  const auto& b = rc.b_values();
  const auto& a = rc.a_values();
  std::vector<Rational> nb(b.begin() + static_cast<long>(k), b.end());
  std::vector<Rational> na;
  if (!nb.empty()) na.assign(a.begin() + static_cast<long>(k), a.end());
  return RecurrenceCoefficients(std::move(nb), std::move(na));
}

std::vector<Polynomial> associated_polys(const RecurrenceCoefficients& rc, std::size_t k,
                                         std::size_t n) {
  return polys_from_recurrence(associated_shift(rc, k), n);
}

MomentFunctional associated_functional(const RecurrenceCoefficients& rc, std::size_t k,
                                       const Rational& norm0, std::size_t n) {
  if (norm0 == 0) throw Error(ErrorKind::ZeroFirstMoment, "associated functional with norm 0");
  return moments_from_jacobi(jacobi(associated_shift(rc, k)), norm0, n);
}

Polynomial divided_difference_apply(const MomentFunctional& v, const Polynomial& p) {
  const auto& c = p.coefficients();
  if (c.size() <= 1) return {};
  // (x^j - y^j) / (x - y) = sum_{i<j} x^i y^{j-1-i}
  std::vector<Rational> out(c.size() - 1);
  if (v.order() + 1 < c.size()) {
    throw Error(ErrorKind::TruncationExhausted,
                "divided difference of degree " + std::to_string(p.degree()) + " needs " +
                    std::to_string(c.size() - 1) + " moments");
  }
  for (std::size_t j = 1; j < c.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) out[i] += c[j] * v[j - 1 - i];
  }
  return Polynomial(std::move(out));
}

CheckReport verify_assoc_representation(const MomentFunctional& u, std::size_t k, std::size_t n) {
  if (k == 0) throw Error(ErrorKind::DegenerateParameter, "associated kind must be >= 1");
  CheckReport report{"asociadosrepr", n};
  const RecurrenceCoefficients rc = smop_from_moments(u, k + n - 1).rc;
  const auto lower = associated_polys(rc, k - 1, n);
  const auto upper = associated_polys(rc, k, n - 1);
  const MomentFunctional v = k == 1 ? u : associated_functional(rc, k - 1, 1, n);
  for (std::size_t m = 1; m <= n; ++m) {
    const Polynomial rhs = divided_difference_apply(v, lower[m]) * (1 / v[0]);
    if (!(rhs == upper[m - 1])) {
      report.fail(m, "P^(" + std::to_string(k) + ")_" + std::to_string(m - 1) + " = " +
                         to_string(upper[m - 1]) + " but the representation gives " +
                         to_string(rhs));
    }
  }
  return report;
}

CheckReport assoc_linear_combination_check(const RecurrenceCoefficients& rc, std::size_t k,
                                           std::size_t n) {
  if (k == 0 || n < k) {
    throw Error(ErrorKind::DegenerateParameter, "linear combination needs 1 <= k <= n");
  }
  CheckReport report{"linearcombination", n};
  const auto p = polys_from_recurrence(rc, n);
  const auto p1 = associated_polys(rc, 1, n - 1);
  const auto pk = associated_polys(rc, k, n - k);
  Rational prod = 1;
  for (std::size_t m = 1; m < k; ++m) prod *= rc.a(m);
  const Polynomial a_coef = k >= 2 ? p1[k - 2] * Rational(-1 / prod) : Polynomial();
  const Polynomial b_coef = p[k - 1] * Rational(1 / prod);
  for (std::size_t m = k; m <= n; ++m) {
    const Polynomial rhs = a_coef * p[m] + b_coef * p1[m - 1];
    if (!(rhs == pk[m - k])) {
      report.fail(m, "A P_" + std::to_string(m) + " + B P^(1)_" + std::to_string(m - 1) +
                         " = " + to_string(rhs) + ", expected " + to_string(pk[m - k]));
    }
  }
  return report;
}

RecurrenceCoefficients corecursive(const RecurrenceCoefficients& rc, const Rational& alpha) {
  if (rc.size() == 0) {
    throw Error(ErrorKind::InsufficientCoefficients, "co-recursive needs b_0");
  }
  std::vector<Rational> b = rc.b_values();
  b[0] += alpha;
  return RecurrenceCoefficients(std::move(b), rc.a_values());
}

std::vector<Polynomial> corecursive_polys(const RecurrenceCoefficients& rc, const Rational& alpha,
                                          std::size_t n_max) {
  auto polys = polys_from_recurrence(corecursive(rc, alpha), n_max);
  const auto p = polys_from_recurrence(rc, n_max);
  const auto p1 = n_max > 0 ? associated_polys(rc, 1, n_max - 1) : std::vector<Polynomial>{};
  for (std::size_t n = 1; n <= n_max; ++n) {
    if (!(polys[n] == p[n] - alpha * p1[n - 1])) {
      throw Error(ErrorKind::IdentityViolation,
                  "co-recursive recurrence and subtraction formula disagree at degree " +
                      std::to_string(n),
                  n);
    }
  }
  return polys;
}

namespace {

std::optional<std::size_t> first_moment_mismatch(const MomentFunctional& x,
                                                 const MomentFunctional& y) {
  const std::size_t n = std::min(x.order(), y.order());
  for (std::size_t k = 0; k < n; ++k) {
    if (x[k] != y[k]) return k;
  }
  return std::nullopt;
}

}  // namespace

CheckReport corecursive_functional_check(const MomentFunctional& u, const Rational& alpha) {
  if (u.order() == 0 || u[0] == 0) {
    throw Error(ErrorKind::ZeroFirstMoment, "co-recursive functional needs u_0 != 0");
  }
  const std::size_t levels = u.order() / 2;
  const std::size_t order = 2 * levels;
  CheckReport report{"funccorre", order};
  const RecurrenceCoefficients rc = smop_from_moments(u, levels).rc;
  const MomentFunctional lhs = moments_from_jacobi(jacobi(corecursive(rc, alpha)), u[0], order);

  const MomentFunctional delta_prime = derivative_functional(delta_moments(0, order));
  const MomentFunctional inner = add(invert(u.truncated(order)), scale(alpha / u[0], delta_prime));
  const MomentFunctional rhs = invert(inner);

  if (auto k = first_moment_mismatch(normalized(lhs), normalized(rhs))) {
    report.fail(*k, "normalized moment " + std::to_string(*k) + ": " + to_string(lhs[*k]) +
                        " vs " + to_string(rhs[*k]));
  }
  return report;
}

CheckReport inverse_functional_identity_check(const MomentFunctional& u, const Rational& norm1) {
  if (u.order() == 0 || u[0] == 0) {
    throw Error(ErrorKind::ZeroFirstMoment, "inverse functional needs u_0 != 0");
  }
  const std::size_t levels = u.order() / 2;
  const std::size_t order = 2 * levels;
  if (levels < 2) {
    throw Error(ErrorKind::TruncationExhausted, "identity needs a_1, i.e. at least 4 moments");
  }
  CheckReport report{"fu1", order};
  const RecurrenceCoefficients rc = smop_from_moments(u, levels).rc;
  const Rational& a1 = rc.a(1);
  const MomentFunctional u1 = associated_functional(rc, 1, norm1, order - 2);
  const MomentFunctional uinv = invert(u.truncated(order));

  const Rational factor = -(norm1 * u[0] / a1);
  for (std::size_t n = 0; n + 2 < order; ++n) {
    if (u1[n] != factor * uinv[n + 2]) {
      report.fail(n, "u^(1)_" + std::to_string(n) + " = " + to_string(u1[n]) + " but scaled " +
                         "x^2 u^-1 gives " + to_string(factor * uinv[n + 2]));
      break;
    }
  }

  const MomentFunctional delta = delta_moments(0, order);
  const MomentFunctional explicit_inv =
      add(add(scale(-a1 / (norm1 * u[0]), divide_power(u1, 0, 2)), scale(1 / u[0], delta)),
          scale(u[1] / (u[0] * u[0]), derivative_functional(delta)));
  if (auto k = first_moment_mismatch(explicit_inv, uinv)) {
    report.fail(*k, "explicit u^-1 moment " + std::to_string(*k) + ": " +
                        to_string(explicit_inv[*k]) + " vs " + to_string(uinv[*k]));
  }
  return report;
}

namespace {

// Values and first derivatives of P_0..P_m at 0.
struct ZeroJets {
  std::vector<Rational> value, slope;
  explicit ZeroJets(const std::vector<Polynomial>& polys) {
    for (const auto& p : polys) {
      const auto d = poly_eval_derivatives(p, 0, 1);
      value.push_back(d[0]);
      slope.push_back(d[1]);
    }
  }
  Rational w(std::size_t i, std::size_t j) const {
    return value[i] * slope[j] - slope[i] * value[j];
  }
};

}  // namespace

InverseSmop inverse_smop(const MomentFunctional& u, std::size_t n_max) {
  if (u.order() == 0 || u[0] == 0) {
    throw Error(ErrorKind::ZeroFirstMoment, "inverse functional needs u_0 != 0");
  }
  if (u.order() < 2 * n_max + 2) {
    throw Error(ErrorKind::TruncationExhausted,
                "inverse SMOP to degree " + std::to_string(n_max) + " needs " +
                    std::to_string(2 * n_max + 2) + " moments");
  }
  const Smop base = smop_from_moments(u, n_max + 1);
  const RecurrenceCoefficients& rc = base.rc;
  const ZeroJets jets(base.system.polys);
  const auto p1 = associated_polys(rc, 1, n_max);
  const Rational u0sq = u[0] * u[0];

  InverseSmop out;
  out.d_star.assign(n_max + 1, Rational(0));
  out.alpha1.assign(n_max + 1, Rational(0));
  out.alpha2.assign(n_max + 1, Rational(0));
  auto& polys = out.system.polys;
  polys.push_back(Polynomial::constant(1));
  if (n_max >= 1) {
    polys.push_back(Polynomial{rc.b(0), Rational(1)});
    out.alpha1[1] = rc.b(0) + rc.b(1);
  }
  for (std::size_t n = 2; n <= n_max; ++n) {
    const Rational w = jets.w(n, n - 1);
    out.d_star[n] = w / u0sq;
    if (w == 0) {
      throw Error(ErrorKind::NotQuasiDefinite,
                  "d*_" + std::to_string(n) + " = 0: the inverse functional is not quasi-definite",
                  n);
    }
    out.alpha1[n] = -jets.w(n + 1, n - 1) / w;
    out.alpha2[n] = jets.w(n + 1, n) / w;
    polys.push_back(p1[n] + out.alpha1[n] * p1[n - 1] + out.alpha2[n] * p1[n - 2]);
  }

  const MomentFunctional uinv = invert(u);
  for (std::size_t k = 0; k < n_max; ++k) {
    const Rational norm = apply(uinv, polys[k] * polys[k]);
    if (norm == 0) {
      throw Error(ErrorKind::NotQuasiDefinite, "K^-_" + std::to_string(k) + " = 0", k);
    }
    out.system.norms.push_back(norm);
  }
  return out;
}

RecurrenceCoefficients inverse_recurrence(const MomentFunctional& u, std::size_t n_max) {
  const InverseSmop inv = inverse_smop(u, n_max);
  if (n_max == 0) return {};
  const Smop base = smop_from_moments(u, n_max + 1);
  const RecurrenceCoefficients& rc = base.rc;
  const ZeroJets jets(base.system.polys);

  std::vector<Rational> b(n_max), a;
  for (std::size_t n = 0; n < n_max; ++n) {
    const Rational prev = n == 0 ? Rational(0) : inv.alpha1[n];
    b[n] = rc.b(n + 1) + prev - inv.alpha1[n + 1];
  }
  for (std::size_t n = 1; n < n_max; ++n) {
    if (n == 1) {
      a.push_back(-(rc.b(0) * rc.b(0) + rc.a(1)));
    } else {
      const Rational w = jets.w(n, n - 1);
      a.push_back(jets.w(n + 1, n) * jets.w(n - 1, n - 2) / (w * w) * rc.a(n - 1));
    }
  }
  RecurrenceCoefficients out(std::move(b), std::move(a));

  const RecurrenceCoefficients oracle = smop_from_moments(invert(u), n_max).rc;
  if (!(out == oracle)) {
    throw Error(ErrorKind::IdentityViolation,
                "Wronskian recurrence for the inverse functional disagrees with its SMOP");
  }
  return out;
}

}  // namespace opoly

#include "opoly/composition.hpp"

#include <algorithm>
#include <string>

#include "opoly/associated.hpp"
#include "opoly/darboux.hpp"
#include "opoly/errors.hpp"

namespace opoly {

namespace {

void compare_polys(CheckReport& report, const std::vector<Polynomial>& lhs,
                   const std::vector<Polynomial>& rhs, std::size_t from, const std::string& what) {
  for (std::size_t n = from; n < lhs.size() && n < rhs.size(); ++n) {
    if (!(lhs[n] == rhs[n])) {
      report.fail(n, what + " at degree " + std::to_string(n) + ": " + to_string(lhs[n]) +
                         " vs " + to_string(rhs[n]));
      return;
    }
  }
}

void compare_moments(CheckReport& report, const MomentFunctional& lhs,
                     const MomentFunctional& rhs, std::size_t count) {
  const MomentFunctional l = normalized(lhs.truncated(count));
  const MomentFunctional r = normalized(rhs.truncated(count));
  for (std::size_t k = 0; k < count; ++k) {
    if (l[k] != r[k]) {
      report.fail(k, "normalized moment " + std::to_string(k) + ": " + to_string(l[k]) +
                         " vs " + to_string(r[k]));
      return;
    }
  }
}

JacobiMatrix shifted_jacobi_from_moments(const MomentFunctional& u, std::size_t size) {
  return jacobi(associated_shift(smop_from_moments(u, size + 1).rc, 1));
}

Rational geronimus_alpha(const MomentFunctional& v, const Rational& m0) {
  if (m0 == 0) throw Error(ErrorKind::DegenerateParameter, "v^_0 must be nonzero");
  if (v.order() == 0) throw Error(ErrorKind::TruncationExhausted, "v has no moments");
  return -v[0] / m0;
}

std::vector<Polynomial> hat_associated(const MomentFunctional& v, const Rational& c,
                                       const Rational& m0, std::size_t n_max) {
  const MomentFunctional vh = geronimus_moments(v, c, m0);
  return associated_polys(smop_from_moments(vh, n_max + 1).rc, 1, n_max);
}

}  // namespace

Rational christoffel_assoc_alpha(const MomentFunctional& u, const Rational& c) {
  const Rational ut0 = apply(u, Polynomial::linear(c));
  if (ut0 == 0) throw Error(ErrorKind::DegenerateParameter, "<u, x - c> = 0");
  return -smop_from_moments(u, 2).rc.a(1) * u[0] / ut0;
}

std::vector<Polynomial> christoffel_assoc_R(const MomentFunctional& u, const Rational& c,
                                            std::size_t n_max) {
  const Polynomial xc = Polynomial::linear(c);
  const Rational ut0 = apply(u, xc);
  if (ut0 == 0) throw Error(ErrorKind::DegenerateParameter, "<u, x - c> = 0");
  const Smop base = smop_from_moments(u, n_max + 1);
  const auto& p = base.system.polys;
  const auto p1 = associated_polys(base.rc, 1, n_max);
  std::vector<Polynomial> r;
  for (std::size_t n = 0; n <= n_max; ++n) {
    r.push_back((u[0] / ut0) * (xc * p1[n] - p[n + 1]));
    if (r.back().degree() != static_cast<int>(n) || !r.back().is_monic()) {
      throw Error(ErrorKind::IdentityViolation,
                  "R_" + std::to_string(n) + " = " + to_string(r.back()) + " is not monic of degree n",
                  n);
    }
  }
  return r;
}

CheckReport verify_R_corecursive(const MomentFunctional& u, const Rational& c, std::size_t n_max) {
  CheckReport report{"pro5", n_max};
  const auto r = christoffel_assoc_R(u, c, n_max);
  const Rational alpha = christoffel_assoc_alpha(u, c);
  const auto rc = smop_from_moments(u, n_max + 1).rc;
  compare_polys(report, r, corecursive_polys(associated_shift(rc, 1), alpha, n_max), 0,
                "R_n vs co-recursive of u^(1)");
  return report;
}

CheckReport christoffel_assoc_connection(const MomentFunctional& u, const Rational& c,
                                         std::size_t n_max) {
  CheckReport report{"christoffel-assoc", n_max};
  const Polynomial xc = Polynomial::linear(c);
  const auto r = christoffel_assoc_R(u, c, n_max);
  const auto p = smop_from_moments(u, n_max + 1).system.polys;
  const MomentFunctional ut = multiply_poly(u, xc);
  const auto pt1 =
      n_max > 0 ? associated_polys(smop_from_moments(ut, n_max).rc, 1, n_max - 1)
                : std::vector<Polynomial>{};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Rational den = p[n](c);
    if (den == 0) throw Error(ErrorKind::ZeroPivot, "P_" + std::to_string(n) + "(c) = 0", n);
    const Polynomial rhs = r[n] - (p[n + 1](c) / den) * r[n - 1];
    if (!(xc * pt1[n - 1] == rhs)) {
      report.fail(n, "(x-c) P~^(1)_" + std::to_string(n - 1) + " = " + to_string(xc * pt1[n - 1]) +
                         ", right side " + to_string(rhs));
    }
  }
  return report;
}

CheckReport coro1_check(const MomentFunctional& u, const Rational& c) {
  const std::size_t n = u.order() / 2;
  if (n < 3) throw Error(ErrorKind::TruncationExhausted, "coro1 needs at least 6 moments");
  const Smop base = smop_from_moments(u, n);
  const ChristoffelLU f = christoffel_lu(jacobi(base.rc), c);
  const JacobiMatrix jt1(shift_conjugate(f.transformed.matrix()));
  const MomentFunctional left = moments_from_jacobi(jt1, 1, 2 * jt1.size());

  const Rational alpha = christoffel_assoc_alpha(u, c);
  const JacobiMatrix ja = jacobi(corecursive(associated_shift(base.rc, 1), alpha));
  const MomentFunctional right =
      multiply_poly(moments_from_jacobi(ja, 1, 2 * ja.size()), Polynomial::linear(c));

  const std::size_t count = std::min(left.order(), right.order());
  CheckReport report{"coro1", count - 1};
  compare_moments(report, left, right, count);
  return report;
}

CheckReport shifted_lu_check(const MomentFunctional& u, const Rational& c, std::size_t n) {
  if (n < 2) throw Error(ErrorKind::SizeMismatch, "shifted factorization needs N >= 2");
  const Smop base = smop_from_moments(u, n + 1);
  const ChristoffelLU f = christoffel_lu(jacobi(base.rc), c);
  const BandMatrix l1 = shift_conjugate(f.lower.matrix());
  const BandMatrix u1 = shift_conjugate(f.upper.matrix());

  const Rational alpha = christoffel_assoc_alpha(u, c);
  const JacobiMatrix ja = jacobi(corecursive(associated_shift(base.rc, 1), alpha));
  CheckReport report =
      compare_on_reliable_block("L1 U1", band_multiply(l1, u1), add_identity(ja.matrix(), -c));

  const MomentFunctional ut = multiply_poly(u, Polynomial::linear(c));
  const JacobiMatrix jt1 = shifted_jacobi_from_moments(ut, n - 1);
  report.merge(compare_on_reliable_block("U1 L1", band_multiply(u1, l1),
                                         add_identity(jt1.matrix(), -c)));
  report.identity = "shifted-lu";
  return report;
}

std::vector<Polynomial> gero_S(const MomentFunctional& v, const Rational& /*c*/,
                               const Rational& m0, std::size_t n_max) {
  const Rational ratio = -geronimus_alpha(v, m0);
  const Smop base = smop_from_moments(v, n_max);
  const auto& p = base.system.polys;
  const auto p1 =
      n_max > 0 ? associated_polys(base.rc, 1, n_max - 1) : std::vector<Polynomial>{};
  std::vector<Polynomial> s{p[0]};
  for (std::size_t n = 1; n <= n_max; ++n) s.push_back(p[n] + ratio * p1[n - 1]);
  return s;
}

CheckReport verify_S_corecursive(const MomentFunctional& v, const Rational& c,
                                 const Rational& m0, std::size_t n_max) {
  CheckReport report{"corecursive-S", n_max};
  const auto s = gero_S(v, c, m0, n_max);
  const auto rc = smop_from_moments(v, n_max).rc;
  compare_polys(report, s, corecursive_polys(rc, geronimus_alpha(v, m0), n_max), 0,
                "S_n vs co-recursive of v");
  return report;
}

CheckReport gero1_check(const MomentFunctional& v, const Rational& c, const Rational& m0,
                        std::size_t n_max) {
  CheckReport report{"gero1", n_max};
  const auto s = gero_S(v, c, m0, n_max);
  const auto ph1 = hat_associated(v, c, m0, n_max);
  const GeronimusUL f = geronimus_ul(jacobi(smop_from_moments(v, n_max + 1).rc), c, v[0] / m0);
  const auto& ell = f.lower.sub;
  const Polynomial xc = Polynomial::linear(c);
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Polynomial rhs = s[n] + ell[n - 1] * s[n - 1];
    if (!(xc * ph1[n - 1] == rhs)) {
      report.fail(n, "(x-c) P^^(1)_" + std::to_string(n - 1) + " = " +
                         to_string(xc * ph1[n - 1]) + ", S_n + ell_n S_{n-1} = " + to_string(rhs));
    }
  }
  return report;
}

CheckReport gero2_check(const MomentFunctional& v, const Rational& c, const Rational& m0,
                        std::size_t n_max) {
  CheckReport report{"gero2", n_max};
  const auto s = gero_S(v, c, m0, n_max);
  const auto ph1 = hat_associated(v, c, m0, n_max);
  const GeronimusUL f = geronimus_ul(jacobi(smop_from_moments(v, n_max + 1).rc), c, v[0] / m0);
  const auto& beta = f.upper.diag;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const Polynomial rhs = ph1[n] + beta[n] * ph1[n - 1];
    if (!(s[n] == rhs)) {
      report.fail(n, "S_" + std::to_string(n) + " = " + to_string(s[n]) +
                         ", P^^(1)_n + beta_n P^^(1)_{n-1} = " + to_string(rhs));
    }
  }
  return report;
}

CheckReport verify_S_corecursive_and_connections(const MomentFunctional& v, const Rational& c,
                                                 const Rational& m0, std::size_t n_max) {
  CheckReport report = verify_S_corecursive(v, c, m0, n_max);
  report.merge(gero1_check(v, c, m0, n_max));
  report.merge(gero2_check(v, c, m0, n_max));
  report.identity = "gero-S";
  return report;
}

CheckReport pro6_check(const MomentFunctional& v, const Rational& c, const Rational& m0,
                       std::size_t n) {
  if (n < 2) throw Error(ErrorKind::SizeMismatch, "pro6 needs N >= 2");
  const Rational alpha = geronimus_alpha(v, m0);
  const Smop base = smop_from_moments(v, n + 1);
  const GeronimusUL f = geronimus_ul(jacobi(base.rc), c, v[0] / m0);
  const BandMatrix l_hat = shift_columns(f.upper.matrix());
  const BandMatrix u_hat = shift_rows(f.lower.matrix());
  const RecurrenceCoefficients co = corecursive(base.rc, alpha);

  const MomentFunctional vh = geronimus_moments(v, c, m0);
  const JacobiMatrix jh1 = shifted_jacobi_from_moments(vh, n);
  const MomentFunctional left = moments_from_jacobi(jh1, 1, 2 * n);
  const MomentFunctional right =
      multiply_poly(moments_from_jacobi(jacobi(co), 1, 2 * (n + 1)), Polynomial::linear(c));
  CheckReport report{"pro6", 2 * n - 1};
  compare_moments(report, left, right, 2 * n);

  report.merge(compare_on_reliable_block("L^ U^", band_multiply(l_hat, u_hat),
                                         add_identity(jacobi(co, n).matrix(), -c)));
  report.merge(compare_on_reliable_block("U^ L^", band_multiply(u_hat, l_hat),
                                         add_identity(jh1.matrix(), -c)));
  report.identity = "pro6";
  return report;
}

bool ChainReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& r) { return r.passed; });
}

ChainReport christoffel_chain(const MomentFunctional& u, const Rational& c, std::size_t n_max) {
  ChainReport out{"christoffel+assoc", c, {{"alpha", christoffel_assoc_alpha(u, c)}}, {}};
  out.checks.push_back(verify_R_corecursive(u, c, n_max));
  out.checks.push_back(christoffel_assoc_connection(u, c, n_max));
  out.checks.push_back(coro1_check(u, c));
  out.checks.push_back(shifted_lu_check(u, c, n_max));
  return out;
}

ChainReport geronimus_chain(const MomentFunctional& v, const Rational& c, const Rational& m0,
                            std::size_t n_max) {
  ChainReport out{"geronimus+assoc", c, {{"m0", m0}, {"alpha", geronimus_alpha(v, m0)}}, {}};
  out.checks.push_back(verify_S_corecursive(v, c, m0, n_max));
  out.checks.push_back(gero1_check(v, c, m0, n_max));
  out.checks.push_back(gero2_check(v, c, m0, n_max));
  out.checks.push_back(pro6_check(v, c, m0, n_max));
  return out;
}

}  // namespace opoly

#include "opoly/darboux.hpp"

#include <string>

#include "opoly/associated.hpp"
#include "opoly/errors.hpp"

namespace opoly {

BandMatrix UnitLowerBidiagonal::matrix() const {
  BandMatrix m(size(), 1, 0);
  m.set_diagonal(0, std::vector<Rational>(size(), Rational(1)));
  m.set_diagonal(-1, sub);
  return m;
}

BandMatrix UpperBidiagonal::matrix() const {
  BandMatrix m(size(), 0, 1);
  m.set_diagonal(0, diag);
  if (size() > 0) m.set_diagonal(1, std::vector<Rational>(size() - 1, Rational(1)));
  return m;
}

namespace {

JacobiMatrix jacobi_from(std::vector<Rational> b, std::vector<Rational> a) {
  const RecurrenceCoefficients rc(std::move(b), std::move(a));
  return jacobi(rc);
}

Rational pivot_ratio(const Rational& num, const Rational& den, std::size_t level) {
  if (den == 0) {
    throw Error(ErrorKind::ZeroPivot, "P_" + std::to_string(level) + "(c) = 0", level);
  }
  return num / den;
}

}  // namespace

ChristoffelLU christoffel_lu(const JacobiMatrix& j, const Rational& c) {
  const RecurrenceCoefficients rc = j.recurrence();
  const std::size_t n = rc.size();
  if (n == 0) throw Error(ErrorKind::SizeMismatch, "empty Jacobi matrix");
  std::vector<Rational> beta(n), ell(n - 1);
  beta[0] = rc.b(0) - c;
  for (std::size_t k = 1; k < n; ++k) {
    if (beta[k - 1] == 0) {
      throw Error(ErrorKind::ZeroPivot, "beta_" + std::to_string(k - 1) + " = 0", k - 1);
    }
    ell[k - 1] = rc.a(k) / beta[k - 1];
    beta[k] = rc.b(k) - c - ell[k - 1];
  }
  if (beta[n - 1] == 0) {
    throw Error(ErrorKind::ZeroPivot, "beta_" + std::to_string(n - 1) + " = 0", n - 1);
  }
  std::vector<Rational> tb, ta;
  for (std::size_t k = 0; k + 1 < n; ++k) tb.push_back(beta[k] + ell[k] + c);
  for (std::size_t k = 1; k + 1 < n; ++k) ta.push_back(beta[k] * ell[k - 1]);
  ChristoffelLU out{UnitLowerBidiagonal{std::move(ell)}, UpperBidiagonal{std::move(beta)}, {}};
  if (n > 1) out.transformed = jacobi_from(std::move(tb), std::move(ta));
  return out;
}

BidiagonalSequences christoffel_closed_forms(const OrthogonalSystem& sys,
                                             const MomentFunctional& u, const Rational& c) {
  if (sys.polys.size() < 2) {
    throw Error(ErrorKind::InsufficientCoefficients, "closed forms need P_0 and P_1");
  }
  const std::size_t n = sys.polys.size() - 1;
  std::vector<Rational> at_c;
  for (const auto& p : sys.polys) at_c.push_back(p(c));
  auto norm = [&](std::size_t k) {
    return k < sys.norms.size() ? sys.norms[k] : apply(u, sys.polys[k] * sys.polys[k]);
  };
  BidiagonalSequences out;
  for (std::size_t k = 0; k < n; ++k) {
    out.beta.push_back(-pivot_ratio(at_c[k + 1], at_c[k], k));
    if (at_c[k + 1] == 0) {
      throw Error(ErrorKind::ZeroPivot, "P_" + std::to_string(k + 1) + "(c) = 0", k + 1);
    }
  }
  for (std::size_t k = 1; k < n; ++k) {
    out.ell.push_back(-pivot_ratio(at_c[k - 1], at_c[k], k) * norm(k) / norm(k - 1));
  }
  return out;
}

CheckReport christoffel_connection_check(const MomentFunctional& u, const Rational& c,
                                         std::size_t n_max) {
  CheckReport report{"repChris", n_max};
  const auto p = smop_from_moments(u, n_max + 1).system.polys;
  const MomentFunctional ut = multiply_poly(u, Polynomial::linear(c));
  const auto pt = smop_from_moments(ut, n_max).system.polys;
  const Polynomial xc = Polynomial::linear(c);
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Rational ratio = pivot_ratio(p[n + 1](c), p[n](c), n);
    const Polynomial rhs = p[n + 1] - ratio * p[n];
    if (!(xc * pt[n] == rhs)) {
      report.fail(n, "(x-c) P~_" + std::to_string(n) + " = " + to_string(xc * pt[n]) +
                         ", right side " + to_string(rhs));
    }
  }
  return report;
}

CheckReport compare_on_reliable_block(const std::string& identity, const BandMatrix& lhs,
                                      const BandMatrix& rhs) {
  CheckReport report{identity, std::min(lhs.reliable_size(), rhs.reliable_size())};
  if (auto at = first_mismatch(lhs, rhs)) {
    report.fail(std::min(at->first, at->second),
                "entry (" + std::to_string(at->first) + "," + std::to_string(at->second) +
                    "): " + to_string(lhs(at->first, at->second)) + " vs " +
                    to_string(rhs(at->first, at->second)));
  }
  return report;
}

CheckReport christoffel_factorization_check(const MomentFunctional& u, const Rational& c,
                                            std::size_t n) {
  const JacobiMatrix j = jacobi(smop_from_moments(u, n).rc);
  const ChristoffelLU f = christoffel_lu(j, c);
  const BandMatrix lu = band_multiply(f.lower.matrix(), f.upper.matrix());
  CheckReport report = compare_on_reliable_block("LU", lu, add_identity(j.matrix(), -c));

  const MomentFunctional ut = multiply_poly(u, Polynomial::linear(c));
  const JacobiMatrix jt = jacobi(smop_from_moments(ut, n - 1).rc);
  const BandMatrix ul = add_identity(band_multiply(f.upper.matrix(), f.lower.matrix()), c);
  CheckReport second = compare_on_reliable_block("UL", ul, jt.matrix());
  report.merge(second);
  report.identity = "christoffel-lu";
  return report;
}

GeronimusUL geronimus_ul(const JacobiMatrix& j, const Rational& c, const Rational& beta0) {
  if (beta0 == 0) throw Error(ErrorKind::DegenerateParameter, "beta_0 must be nonzero");
  const RecurrenceCoefficients rc = j.recurrence();
  const std::size_t n = rc.size();
  if (n == 0) throw Error(ErrorKind::SizeMismatch, "empty Jacobi matrix");
  std::vector<Rational> beta(n), ell(n - 1);
  beta[0] = beta0;
  for (std::size_t k = 1; k < n; ++k) {
    ell[k - 1] = rc.b(k - 1) - c - beta[k - 1];
    if (ell[k - 1] == 0) {
      throw Error(ErrorKind::ZeroPivot, "ell_" + std::to_string(k) + " = 0", k);
    }
    beta[k] = rc.a(k) / ell[k - 1];
  }
  std::vector<Rational> hb, ha;
  for (std::size_t k = 0; k < n; ++k) hb.push_back(beta[k] + (k > 0 ? ell[k - 1] : Rational(0)) + c);
  for (std::size_t k = 1; k < n; ++k) ha.push_back(ell[k - 1] * beta[k - 1]);
  GeronimusUL out{UpperBidiagonal{std::move(beta)}, UnitLowerBidiagonal{std::move(ell)}, {}};
  out.transformed = jacobi_from(std::move(hb), std::move(ha));
  return out;
}

CheckReport geronimus_connection_check(const MomentFunctional& v, const Rational& c,
                                       const Rational& m0, std::size_t n_max) {
  if (m0 == 0) throw Error(ErrorKind::DegenerateParameter, "v^_0 must be nonzero");
  if (v.order() == 0 || v[0] == 0) throw Error(ErrorKind::ZeroFirstMoment, "v_0 = 0");
  CheckReport report{"geronimus-connection", n_max};
  const Smop base = smop_from_moments(v, n_max + 1);
  const auto& p = base.system.polys;
  const auto p1 = associated_polys(base.rc, 1, n_max);
  const auto ph = smop_from_moments(geronimus_moments(v, c, m0), n_max + 1).system.polys;
  const GeronimusUL f = geronimus_ul(jacobi(base.rc), c, v[0] / m0);
  const auto& ell = f.lower.sub;
  const auto& beta = f.upper.diag;

  for (std::size_t n = 1; n <= n_max; ++n) {
    if (!(ph[n] == p[n] + ell[n - 1] * p[n - 1])) {
      report.fail(n, "P^_" + std::to_string(n) + " != P_n + ell_n P_{n-1}");
    }
    const Rational num = v[0] * p1[n - 1](c) + m0 * p[n](c);
    const Rational den = v[0] * (n >= 2 ? p1[n - 2](c) : Rational(0)) + m0 * p[n - 1](c);
    if (den == 0 || -num / den != ell[n - 1]) {
      report.fail(n, "closed form of ell_" + std::to_string(n) + " disagrees with elimination");
    }
  }
  const Polynomial xc = Polynomial::linear(c);
  for (std::size_t n = 0; n <= n_max && n < beta.size(); ++n) {
    const Rational closed = -pivot_ratio(ph[n + 1](c), ph[n](c), n);
    if (closed != beta[n]) {
      report.fail(n, "beta_" + std::to_string(n) + " = " + to_string(beta[n]) +
                         " but -P^_{n+1}(c)/P^_n(c) = " + to_string(closed));
    }
    if (!(xc * p[n] == ph[n + 1] + beta[n] * ph[n])) {
      report.fail(n, "(x-c) P_" + std::to_string(n) + " != P^_{n+1} + beta_n P^_n");
    }
  }
  return report;
}

CheckReport geronimus_factorization_check(const MomentFunctional& v, const Rational& c,
                                          const Rational& m0, std::size_t n) {
  if (m0 == 0) throw Error(ErrorKind::DegenerateParameter, "v^_0 must be nonzero");
  const JacobiMatrix j = jacobi(smop_from_moments(v, n).rc);
  const GeronimusUL f = geronimus_ul(j, c, v[0] / m0);
  const BandMatrix ul = band_multiply(f.upper.matrix(), f.lower.matrix());
  CheckReport report = compare_on_reliable_block("UL", ul, add_identity(j.matrix(), -c));

  const JacobiMatrix jh = jacobi(smop_from_moments(geronimus_moments(v, c, m0), n).rc);
  const BandMatrix lu = add_identity(band_multiply(f.lower.matrix(), f.upper.matrix()), c);
  report.merge(compare_on_reliable_block("LU", lu, jh.matrix()));
  report.identity = "geronimus-ul";
  return report;
}

}  // namespace opoly

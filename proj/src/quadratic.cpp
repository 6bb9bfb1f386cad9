#include "opoly/quadratic.hpp"

#include <algorithm>
#include <string>

#include "opoly/associated.hpp"
#include "opoly/darboux.hpp"
#include "opoly/errors.hpp"

namespace opoly {

BandMatrix UnitLowerTriband::matrix() const {
  const std::size_t n = size();
  BandMatrix m(n, 2, 0);
  m.set_diagonal(0, std::vector<Rational>(n, Rational(1)));
  m.set_diagonal(-1, sub1);
  if (n >= 2) m.set_diagonal(-2, sub2);
  return m;
}

BandMatrix UpperTriband::matrix() const {
  const std::size_t n = size();
  BandMatrix m(n, 0, 2);
  m.set_diagonal(0, diag);
  if (n >= 1) m.set_diagonal(1, super1);
  if (n >= 2) m.set_diagonal(2, std::vector<Rational>(n - 2, Rational(1)));
  return m;
}

namespace {

// Values and first derivatives of a polynomial family at one point.
struct Jets {
  std::vector<Rational> value, slope;
  Jets(const std::vector<Polynomial>& polys, const Rational& c) {
    for (const auto& p : polys) {
      const auto d = poly_eval_derivatives(p, c, 1);
      value.push_back(d[0]);
      slope.push_back(d[1]);
    }
  }
  Rational w(std::size_t i, std::size_t j) const {
    return value[i] * slope[j] - slope[i] * value[j];
  }
};

TribandFactors factors_from(const std::vector<Rational>& alpha1,
                            const std::vector<Rational>& alpha2,
                            const std::vector<Polynomial>& q, const Rational& c, std::size_t n) {
  TribandFactors f;
  for (std::size_t k = 1; k < n; ++k) f.lower.sub1.push_back(alpha1[k]);
  for (std::size_t k = 2; k < n; ++k) f.lower.sub2.push_back(alpha2[k]);
  const Jets jets(q, c);
  for (std::size_t k = 0; k < n; ++k) {
    const Rational w = jets.w(k, k + 1);
    if (w == 0) {
      throw Error(ErrorKind::NotQuasiDefinite,
                  "W(Q_" + std::to_string(k + 1) + ", Q_" + std::to_string(k) + ")(c) = 0", k);
    }
    f.upper.diag.push_back(jets.w(k + 1, k + 2) / w);
    if (k + 1 < n) f.upper.super1.push_back(-jets.w(k, k + 2) / w);
  }
  return f;
}

BandMatrix squared_shifted(const JacobiMatrix& j, const Rational& c) {
  const BandMatrix m = add_identity(j.matrix(), -c);
  return band_multiply(m, m);
}

}  // namespace

std::vector<Polynomial> quad_S(const MomentFunctional& u, const Rational& c, const Rational& m0,
                               const Rational& m1, std::size_t n_max) {
  const Smop base = smop_from_moments(u, n_max);
  const auto p1 = n_max > 0 ? associated_polys(base.rc, 1, n_max - 1) : std::vector<Polynomial>{};
  const Rational shift = m1 - c * m0;
  std::vector<Polynomial> s;
  for (std::size_t n = 0; n <= n_max; ++n) {
    Polynomial sn = shift * base.system.polys[n];
    if (n > 0) sn += u[0] * p1[n - 1];
    s.push_back(std::move(sn));
  }
  return s;
}

QuadraticSmop quadratic_geronimus_smop(const MomentFunctional& u, const Rational& c,
                                       const Rational& m0, const Rational& m1,
                                       std::size_t n_max) {
  if (m0 == 0) throw Error(ErrorKind::DegenerateParameter, "u^_0 must be nonzero");
  if (u.order() == 0 || u[0] == 0) throw Error(ErrorKind::ZeroFirstMoment, "u_0 = 0");
  const Smop base = smop_from_moments(u, n_max);
  const auto& p = base.system.polys;
  const auto s_polys = quad_S(u, c, m0, m1, n_max);
  const MomentFunctional uhat = quadratic_geronimus_moments(u, c, m0, m1);
  const MomentFunctional divided = divide_power(u, c, 2);
  const auto p1 = n_max > 0 ? associated_polys(base.rc, 1, n_max - 1) : std::vector<Polynomial>{};
  const Polynomial xc = Polynomial::linear(c);

  // s_n = <u^, (x - c) P_n>, t_n = <u^, P_n>
  std::vector<Rational> s, t;
  for (std::size_t n = 0; n <= n_max; ++n) {
    const auto sd = poly_eval_derivatives(s_polys[n], c, 1);
    s.push_back(sd[0]);
    t.push_back(sd[1] + m0 * p[n](c));
    if (s[n] != apply(uhat, xc * p[n]) || t[n] != apply(uhat, p[n])) {
      throw Error(ErrorKind::IdentityViolation,
                  "S_" + std::to_string(n) + " values disagree with the transformed moments", n);
    }
    if (n > 0) {
      const Rational slope = poly_eval_derivatives(p1[n - 1], c, 1)[1];
      if (u[0] * slope != apply(divided, p[n])) {
        throw Error(ErrorKind::IdentityViolation,
                    "derivative of P^(1)_" + std::to_string(n - 1) +
                        " at c disagrees with <(x-c)^-2 u, P_n>",
                    n);
      }
    }
  }

  QuadraticSmop out;
  out.d_star.assign(n_max + 1, Rational(0));
  out.alpha1.assign(n_max + 1, Rational(0));
  out.alpha2.assign(n_max + 1, Rational(0));
  auto& q = out.system.polys;
  q.push_back(Polynomial::constant(1));
  if (n_max >= 1) {
    q.push_back(Polynomial{-m1 / m0, Rational(1)});
    out.alpha1[1] = base.rc.b(0) - m1 / m0;
  }
  for (std::size_t n = 2; n <= n_max; ++n) {
    const Rational d = s[n - 2] * t[n - 1] - s[n - 1] * t[n - 2];
    out.d_star[n] = d;
    if (d == 0) {
      throw Error(ErrorKind::NotQuasiDefinite, "d*_" + std::to_string(n) + " = 0", n);
    }
    out.alpha1[n] = -(t[n] * s[n - 2] - t[n - 2] * s[n]) / d;
    out.alpha2[n] = (t[n] * s[n - 1] - t[n - 1] * s[n]) / d;
    q.push_back(p[n] + out.alpha1[n] * p[n - 1] + out.alpha2[n] * p[n - 2]);
  }
  for (std::size_t k = 0; k < n_max; ++k) {
    const Rational norm = apply(uhat, q[k] * q[k]);
    if (norm == 0) throw Error(ErrorKind::NotQuasiDefinite, "<u^, Q_k^2> = 0", k);
    out.system.norms.push_back(norm);
  }
  return out;
}

RecurrenceCoefficients quadratic_recurrence(const MomentFunctional& u, const Rational& c,
                                            const Rational& m0, const Rational& m1,
                                            std::size_t n_max) {
  const QuadraticSmop q = quadratic_geronimus_smop(u, c, m0, m1, n_max);
  if (n_max == 0) return {};
  const RecurrenceCoefficients rc = smop_from_moments(u, n_max).rc;
  const Rational shift = m1 - c * m0;
  const Rational gap = u[0] * m0 - shift * shift;

  std::vector<Rational> b, a;
  for (std::size_t n = 0; n < n_max; ++n) {
    b.push_back(rc.b(n) + (n > 0 ? q.alpha1[n] : Rational(0)) - q.alpha1[n + 1]);
  }
  for (std::size_t n = 1; n < n_max; ++n) {
    if (n == 1) {
      a.push_back(gap / (m0 * m0));
    } else if (n == 2) {
      a.push_back(u[0] * m0 * q.alpha2[2] / gap);
    } else {
      a.push_back(q.alpha2[n] / q.alpha2[n - 1] * rc.a(n - 2));
    }
  }
  RecurrenceCoefficients out(std::move(b), std::move(a));
  const RecurrenceCoefficients oracle =
      smop_from_moments(quadratic_geronimus_moments(u, c, m0, m1), n_max).rc;
  if (!(out == oracle)) {
    throw Error(ErrorKind::IdentityViolation,
                "quadratic Geronimus recurrence disagrees with the SMOP of its moments");
  }
  return out;
}

TribandFactors quadratic_factorization(const MomentFunctional& u, const Rational& c,
                                       const Rational& m0, const Rational& m1, std::size_t n) {
  const QuadraticSmop q = quadratic_geronimus_smop(u, c, m0, m1, n + 1);
  return factors_from(q.alpha1, q.alpha2, q.system.polys, c, n);
}

CheckReport quadratic_factorization_check(const MomentFunctional& u, const Rational& c,
                                          const Rational& m0, const Rational& m1, std::size_t n) {
  const TribandFactors f = quadratic_factorization(u, c, m0, m1, n);
  const Smop base = smop_from_moments(u, n);
  const JacobiMatrix j = jacobi(base.rc);
  const JacobiMatrix jh = jacobi(smop_from_moments(quadratic_geronimus_moments(u, c, m0, m1), n).rc);
  const BandMatrix lm = f.lower.matrix();
  const BandMatrix um = f.upper.matrix();

  CheckReport report =
      compare_on_reliable_block("(J-cI)^2 = UL", band_multiply(um, lm), squared_shifted(j, c));
  report.merge(
      compare_on_reliable_block("(J^-cI)^2 = LU", band_multiply(lm, um), squared_shifted(jh, c)));
  report.identity = "propLUinversa";

  // Fourier route: alpha_{k,m} = <u, Q_k P_m> / <u, P_m^2>.
  const QuadraticSmop q = quadratic_geronimus_smop(u, c, m0, m1, n > 0 ? n - 1 : 0);
  for (std::size_t k = 1; k < q.system.polys.size(); ++k) {
    const auto coeffs = expand_in_basis(q.system.polys[k], base.system, u);
    for (std::size_t m = 0; m + 3 <= k; ++m) {
      if (coeffs[m] != 0) report.fail(k, "Fourier coefficient below alpha_{n,n-2} is nonzero");
    }
    if (coeffs[k - 1] != lm(k, k - 1) || (k >= 2 && coeffs[k - 2] != lm(k, k - 2))) {
      report.fail(k, "Fourier coefficients of Q_" + std::to_string(k) + " disagree with L");
    }
  }
  return report;
}

CheckReport conex2_check(const MomentFunctional& u, const Rational& c, const Rational& m0,
                         const Rational& m1, std::size_t n_max) {
  CheckReport report{"conex2", n_max};
  const QuadraticSmop q = quadratic_geronimus_smop(u, c, m0, m1, n_max + 2);
  const auto& qs = q.system.polys;
  const Jets jets(qs, c);
  const auto p = smop_from_moments(u, n_max).system.polys;
  const Polynomial sq = Polynomial::linear(c).pow(2);
  for (std::size_t k = 0; k <= n_max; ++k) {
    const Rational w = jets.w(k, k + 1);
    if (w == 0) {
      throw Error(ErrorKind::NotQuasiDefinite,
                  "W(Q_" + std::to_string(k + 1) + ", Q_" + std::to_string(k) + ")(c) = 0", k);
    }
    const Rational beta_diag = jets.w(k + 1, k + 2) / w;
    const Rational beta_super = -jets.w(k, k + 2) / w;
    const Polynomial rhs = qs[k + 2] + beta_super * qs[k + 1] + beta_diag * qs[k];
    if (!(sq * p[k] == rhs)) {
      report.fail(k, "(x-c)^2 P_" + std::to_string(k) + " = " + to_string(sq * p[k]) +
                         ", right side " + to_string(rhs));
    }
  }
  return report;
}

TribandFactors assoc_inverse_factorization(const MomentFunctional& u, std::size_t n) {
  const InverseSmop inv = inverse_smop(u, n + 1);
  return factors_from(inv.alpha1, inv.alpha2, inv.system.polys, 0, n);
}

CheckReport relationlu_check(const MomentFunctional& u, const Rational& norm1, std::size_t n) {
  const TribandFactors f = assoc_inverse_factorization(u, n);
  const RecurrenceCoefficients rc = smop_from_moments(u, n + 1).rc;
  const JacobiMatrix j1 = jacobi(associated_shift(rc, 1));
  const MomentFunctional uinv = invert(u);
  const JacobiMatrix jm = jacobi(smop_from_moments(uinv, n).rc);
  const BandMatrix lm = f.lower.matrix();
  const BandMatrix um = f.upper.matrix();

  CheckReport report =
      compare_on_reliable_block("(J1)^2 = UL", band_multiply(um, lm), squared_shifted(j1, 0));
  report.merge(
      compare_on_reliable_block("(J-)^2 = LU", band_multiply(lm, um), squared_shifted(jm, 0)));
  report.identity = "relationlu";

  // u^{-1} is the quadratic Geronimus transform at 0 of -(a_1 / (norm1 u_0)) u^{(1)}.
  const std::size_t order = u.order() - (u.order() % 2);
  const MomentFunctional u1 = associated_functional(rc, 1, norm1, 2 * (rc.size() - 1));
  const MomentFunctional v = scale(-rc.a(1) / (norm1 * u[0]), u1);
  const MomentFunctional rebuilt =
      quadratic_geronimus_moments(v, 0, 1 / u[0], -u[1] / (u[0] * u[0]));
  const std::size_t common = std::min({order, rebuilt.order(), uinv.order()});
  for (std::size_t k = 0; k < common; ++k) {
    if (rebuilt[k] != uinv[k]) {
      report.fail(k, "u^-1 moment " + std::to_string(k) + " is not the quadratic Geronimus " +
                         "transform of the scaled associated functional");
      break;
    }
  }
  return report;
}

CheckReport g_matrix_check(const MomentFunctional& u, std::size_t n) {
  const std::size_t reliable = n >= 2 ? n - 2 : 0;
  CheckReport report{"g-matrix", reliable};
  const TribandFactors f = assoc_inverse_factorization(u, n);
  const RecurrenceCoefficients rc = smop_from_moments(u, n + 1).rc;
  const DenseMatrix j1 = jacobi(associated_shift(rc, 1)).matrix().to_dense();
  const DenseMatrix jm = jacobi(smop_from_moments(invert(u), n).rc).matrix().to_dense();
  const DenseMatrix l = f.lower.matrix().to_dense();

  const DenseMatrix g = forward_substitute_unit_lower(l, jm);
  if (!(l * g == jm)) {
    report.fail(0, "forward substitution did not solve L G = J-");
    return report;
  }
  const DenseMatrix gl = g * l;
  for (std::size_t i = 0; i < reliable; ++i) {
    for (std::size_t k = 0; k < reliable; ++k) {
      if (gl(i, k) != j1(i, k)) {
        report.fail(std::min(i, k), "(GL)(" + std::to_string(i) + "," + std::to_string(k) +
                                        ") = " + to_string(gl(i, k)) + ", J1 entry " +
                                        to_string(j1(i, k)));
        return report;
      }
    }
  }
  return report;
}

}  // namespace opoly

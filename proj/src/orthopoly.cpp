#include "opoly/orthopoly.hpp"

#include <string>

#include "opoly/errors.hpp"

namespace opoly {

RecurrenceCoefficients::RecurrenceCoefficients(std::vector<Rational> b, std::vector<Rational> a)
    : b_(std::move(b)), a_(std::move(a)) {
  for (auto& x : b_) x.canonicalize();
  for (auto& x : a_) x.canonicalize();
  const std::size_t want = b_.empty() ? 0 : b_.size() - 1;
  if (a_.size() != want) {
    throw Error(ErrorKind::SizeMismatch, "recurrence needs " + std::to_string(want) +
                                             " a-coefficients, got " +
                                             std::to_string(a_.size()));
  }
  for (std::size_t k = 0; k < a_.size(); ++k) {
    if (a_[k] == 0) {
      throw Error(ErrorKind::NotQuasiDefinite, "a_" + std::to_string(k + 1) + " = 0", k + 1);
    }
  }
}

const Rational& RecurrenceCoefficients::b(std::size_t n) const {
  if (n >= b_.size()) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "b_" + std::to_string(n) + " not available (size " + std::to_string(size()) +
                    ")");
  }
  return b_[n];
}

const Rational& RecurrenceCoefficients::a(std::size_t n) const {
  if (n == 0 || n > a_.size()) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "a_" + std::to_string(n) + " not available (size " + std::to_string(size()) +
                    ")");
  }
  return a_[n - 1];
}

RecurrenceCoefficients RecurrenceCoefficients::truncated(std::size_t size) const {
  if (size > b_.size()) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "cannot truncate recurrence of size " + std::to_string(b_.size()) + " to " +
                    std::to_string(size));
  }
  if (size == 0) return {};
  return RecurrenceCoefficients(std::vector<Rational>(b_.begin(), b_.begin() + size),
                                std::vector<Rational>(a_.begin(), a_.begin() + (size - 1)));
}

JacobiMatrix::JacobiMatrix(BandMatrix m) : m_(std::move(m)) {
  if (m_.lower_bandwidth() > 1 || m_.upper_bandwidth() > 1) {
    throw Error(ErrorKind::SizeMismatch, "Jacobi matrix must be tridiagonal");
  }
  for (std::size_t i = 0; i + 1 < m_.size(); ++i) {
    if (m_(i, i + 1) != 1) {
      throw Error(ErrorKind::SizeMismatch,
                  "Jacobi superdiagonal entry " + std::to_string(i) + " is not 1");
    }
  }
}

RecurrenceCoefficients JacobiMatrix::recurrence() const {
  std::vector<Rational> b(m_.size());
  std::vector<Rational> a(m_.size() == 0 ? 0 : m_.size() - 1);
  for (std::size_t i = 0; i < m_.size(); ++i) b[i] = m_(i, i);
  for (std::size_t i = 1; i < m_.size(); ++i) a[i - 1] = m_(i, i - 1);
  return RecurrenceCoefficients(std::move(b), std::move(a));
}

Smop smop_from_moments(const MomentFunctional& u, std::size_t n_max) {
  if (u.order() < 2 * n_max) {
    throw Error(ErrorKind::TruncationExhausted,
                "SMOP to degree " + std::to_string(n_max) + " needs " +
                    std::to_string(2 * n_max) + " moments, have " + std::to_string(u.order()));
  }
  std::vector<Polynomial> polys{Polynomial::constant(1)};
  std::vector<Rational> norms, b, a;
  const Polynomial x = Polynomial::monomial(1);
  for (std::size_t k = 0; k < n_max; ++k) {
    const Polynomial sq = polys[k] * polys[k];
    const Rational norm = apply(u, sq);
    if (norm == 0) {
      throw Error(ErrorKind::NotQuasiDefinite, "K_" + std::to_string(k) + " = 0", k);
    }
    norms.push_back(norm);
    b.push_back(apply(u, x * sq) / norm);
    Polynomial next = (x - Polynomial::constant(b[k])) * polys[k];
    if (k > 0) {
      a.push_back(norm / norms[k - 1]);
      next -= a.back() * polys[k - 1];
    }
    polys.push_back(std::move(next));
  }
  return Smop{RecurrenceCoefficients(std::move(b), std::move(a)),
              OrthogonalSystem{std::move(polys), std::move(norms)}};
}

std::vector<Polynomial> polys_from_recurrence(const RecurrenceCoefficients& rc,
                                              std::size_t n_max) {
  if (rc.size() < n_max) {
    throw Error(ErrorKind::InsufficientCoefficients,
                "degree " + std::to_string(n_max) + " needs " + std::to_string(n_max) +
                    " recurrence coefficients, have " + std::to_string(rc.size()));
  }
  std::vector<Polynomial> polys{Polynomial::constant(1)};
  const Polynomial x = Polynomial::monomial(1);
  for (std::size_t k = 0; k < n_max; ++k) {
    Polynomial next = (x - Polynomial::constant(rc.b(k))) * polys[k];
    if (k > 0) next -= rc.a(k) * polys[k - 1];
    polys.push_back(std::move(next));
  }
  return polys;
}

JacobiMatrix jacobi(const RecurrenceCoefficients& rc, std::size_t n) {
  const RecurrenceCoefficients t = rc.truncated(n);
  BandMatrix m(n, 1, 1);
  if (n > 0) {
    m.set_diagonal(0, t.b_values());
    m.set_diagonal(-1, t.a_values());
    m.set_diagonal(1, std::vector<Rational>(n - 1, Rational(1)));
  }
  return JacobiMatrix(std::move(m));
}

JacobiMatrix jacobi(const RecurrenceCoefficients& rc) { return jacobi(rc, rc.size()); }

MomentFunctional moments_from_jacobi(const JacobiMatrix& j, const Rational& u0, std::size_t n) {
  const std::size_t size = j.size();
  if (n > 2 * size) {
    throw Error(ErrorKind::TruncationExhausted,
                std::to_string(n) + " moments need a Jacobi truncation of size " +
                    std::to_string((n + 1) / 2) + ", have " + std::to_string(size));
  }
  const BandMatrix& m = j.matrix();
  std::vector<Rational> out(n);
  // w = J^k e_0; only rows reachable within the remaining steps matter.
  std::vector<Rational> w(size);
  if (size > 0) w[0] = 1;
  for (std::size_t k = 0; k < n; ++k) {
    out[k] = u0 * w[0];
    std::vector<Rational> next(size);
    for (std::size_t i = 0; i < size; ++i) {
      Rational acc = m(i, i) * w[i];
      if (i > 0) acc += m(i, i - 1) * w[i - 1];
      if (i + 1 < size) acc += m(i, i + 1) * w[i + 1];
      next[i] = acc;
    }
    w = std::move(next);
  }
  return MomentFunctional(std::move(out));
}

std::vector<Rational> norms_from_recurrence(const RecurrenceCoefficients& rc,
                                            const Rational& u0) {
  std::vector<Rational> norms;
  Rational k = u0;
  for (std::size_t n = 0; n < rc.size(); ++n) {
    if (n > 0) k *= rc.a(n);
    norms.push_back(k);
  }
  return norms;
}

std::vector<Rational> expand_in_basis(const Polynomial& q, const OrthogonalSystem& sys,
                                      const MomentFunctional& u) {
  if (q.is_zero()) return {};
  const std::size_t deg = static_cast<std::size_t>(q.degree());
  if (deg >= sys.polys.size()) {
    throw Error(ErrorKind::TruncationExhausted,
                "degree " + std::to_string(deg) + " exceeds the basis");
  }
  std::vector<Rational> coeffs(deg + 1);
  Polynomial rebuilt;
  for (std::size_t m = 0; m <= deg; ++m) {
    const Polynomial& p = sys.polys[m];
    const Rational norm = m < sys.norms.size() ? sys.norms[m] : apply(u, p * p);
    if (norm == 0) throw Error(ErrorKind::NotQuasiDefinite, "K_" + std::to_string(m) + " = 0", m);
    coeffs[m] = apply(u, q * p) / norm;
    rebuilt += coeffs[m] * p;
  }
  if (!(rebuilt == q)) {
    throw Error(ErrorKind::IdentityViolation,
                "Fourier expansion does not reconstruct " + to_string(q));
  }
  return coeffs;
}

}  // namespace opoly

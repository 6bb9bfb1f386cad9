#pragma once

// Independent brute-force references. Nothing here calls the library beyond
// Rational and Polynomial value types.

#include <cstddef>
#include <random>
#include <vector>

#include "opoly/polynomial.hpp"
#include "opoly/rational.hpp"

namespace oracle {

using opoly::Polynomial;
using opoly::Rational;
using Dense = std::vector<std::vector<Rational>>;
using Seq = std::vector<Rational>;

// p / q in lowest terms.
inline Rational ratio(long p, long q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline Dense zeros(std::size_t n) { return Dense(n, std::vector<Rational>(n, Rational(0))); }

inline Dense identity(std::size_t n) {
  Dense m = zeros(n);
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Dense multiply(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Gaussian elimination with row pivoting.
inline Rational det(Dense m) {
  const std::size_t n = m.size();
  Rational d = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  return d;
}

// Solves m x = rhs for square nonsingular m.
inline Seq solve(Dense m, Seq rhs) {
  const std::size_t n = m.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (m[piv][col] == 0) ++piv;
    std::swap(m[piv], m[col]);
    std::swap(rhs[piv], rhs[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      const Rational f = m[r][col] / m[col][col];
      for (std::size_t j = col; j < n; ++j) m[r][j] -= f * m[col][j];
      rhs[r] -= f * rhs[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) rhs[i] /= m[i][i];
  return rhs;
}

// det [u_{i+j}]_{i,j<n}
inline Rational hankel(const Seq& u, std::size_t n) {
  Dense h = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = u[i + j];
  return n == 0 ? Rational(1) : det(h);
}

// Hankel matrix of order n with its last column shifted by one.
inline Rational hankel_shifted(const Seq& u, std::size_t n) {
  if (n == 0) return 0;
  Dense h = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h[i][j] = u[i + j + (j + 1 == n ? 1 : 0)];
  return det(h);
}

struct Recurrence {
  Seq b;  // b_0 .. b_{n-1}
  Seq a;  // a_1 .. a_{n-1}
};

// b_n = D'_{n+1}/D_{n+1} - D'_n/D_n, a_n = D_{n-1} D_{n+1} / D_n^2
inline Recurrence recurrence_by_determinants(const Seq& u, std::size_t n) {
  Recurrence r;
  std::vector<Rational> d, ds;
  for (std::size_t k = 0; k <= n; ++k) {
    d.push_back(hankel(u, k));
    ds.push_back(hankel_shifted(u, k));
  }
  for (std::size_t k = 0; k < n; ++k) {
    r.b.push_back(ds[k + 1] / d[k + 1] - (k == 0 ? Rational(0) : Rational(ds[k] / d[k])));
    if (k >= 1) r.a.push_back(d[k - 1] * d[k + 1] / (d[k] * d[k]));
  }
  return r;
}

// Monic P_n from det [[u_{i+j}] ; 1 x .. x^n] / D_n, via the orthogonality system.
inline Polynomial monic_op(const Seq& u, std::size_t n) {
  if (n == 0) return Polynomial::constant(1);
  Dense h = zeros(n);
  Seq rhs(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h[i][j] = u[i + j];
    rhs[i] = -u[i + n];
  }
  Seq c = solve(h, rhs);
  c.push_back(1);
  return Polynomial(c);
}

inline Rational apply(const Seq& u, const Polynomial& p) {
  Rational s = 0;
  const auto& c = p.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) s += c[k] * u.at(k);
  return s;
}

// Convolution inverse by solving the lower-triangular Toeplitz system densely.
inline Seq convolution_inverse(const Seq& u) {
  const std::size_t n = u.size();
  Dense t = zeros(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) t[i][j] = u[i - j];
  Seq rhs(n, Rational(0));
  rhs[0] = 1;
  return solve(t, rhs);
}

inline Seq convolve(const Seq& u, const Seq& v) {
  const std::size_t n = std::min(u.size(), v.size());
  Seq w(n, Rational(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j <= k; ++j) w[k] += u[j] * v[k - j];
  return w;
}

// Dense monic Jacobi matrix: diag b, sub a, super 1.
inline Dense jacobi(const Seq& b, const Seq& a, std::size_t n) {
  Dense j = zeros(n);
  for (std::size_t i = 0; i < n; ++i) {
    j[i][i] = b[i];
    if (i + 1 < n) {
      j[i][i + 1] = 1;
      j[i + 1][i] = a[i];
    }
  }
  return j;
}

// u_k = u_0 (J^k)_{00}, exact for k < 2 size.
inline Seq moments_by_matrix_powers(const Seq& b, const Seq& a, const Rational& u0, std::size_t n) {
  const std::size_t size = b.size();
  const Dense j = jacobi(b, a, size);
  Dense p = identity(size);
  Seq out;
  for (std::size_t k = 0; k < n; ++k) {
    out.push_back(u0 * p[0][0]);
    p = multiply(p, j);
  }
  return out;
}

// P_{n+1} = (x - b_n) P_n - a_n P_{n-1}, a indexed from a_1.
inline std::vector<Polynomial> three_term(const Seq& b, const Seq& a, std::size_t n) {
  std::vector<Polynomial> p{Polynomial::constant(1)};
  if (n == 0) return p;
  const Polynomial x = Polynomial::monomial(1);
  p.push_back(x - Polynomial::constant(b[0]));
  for (std::size_t k = 1; k < n; ++k) p.push_back((x - Polynomial::constant(b[k])) * p[k] - a[k - 1] * p[k - 1]);
  return p;
}

// Rationals p/q with |p| <= span, 1 <= q <= den.
class RandomRationals {
 public:
  explicit RandomRationals(unsigned seed) : gen_(seed) {}
  Rational any(int span = 5, int den = 4) {
    std::uniform_int_distribution<int> pd(-span, span), qd(1, den);
    Rational r(pd(gen_), qd(gen_));
    r.canonicalize();
    return r;
  }
  Rational nonzero(int span = 5, int den = 4) {
    for (;;) {
      Rational r = any(span, den);
      if (r != 0) return r;
    }
  }
  std::mt19937& engine() { return gen_; }

 private:
  std::mt19937 gen_;
};

// A random quasi-definite functional: random recurrence with nonzero a_n,
// moments via matrix powers.
struct RandomFunctional {
  Seq b, a, moments;
};

inline RandomFunctional random_functional(RandomRationals& rng, std::size_t order) {
  RandomFunctional f;
  const std::size_t size = (order + 1) / 2 + 1;
  for (std::size_t k = 0; k < size; ++k) {
    f.b.push_back(rng.any());
    f.a.push_back(rng.nonzero());
  }
  f.moments = moments_by_matrix_powers(f.b, f.a, rng.nonzero(3, 3), order);
  return f;
}

}  // namespace oracle

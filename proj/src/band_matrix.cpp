#include "opoly/band_matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "opoly/errors.hpp"

namespace opoly {

namespace {

std::size_t saturating_sub(std::size_t a, std::size_t b) { return a > b ? a - b : 0; }

}  // namespace

BandMatrix::BandMatrix(std::size_t size, int lower_bandwidth, int upper_bandwidth)
    : size_(size),
      lower_(std::max(lower_bandwidth, 0)),
      upper_(std::max(upper_bandwidth, 0)),
      reliable_(size) {
  diagonals_.resize(static_cast<std::size_t>(lower_ + upper_ + 1));
  for (int d = -lower_; d <= upper_; ++d) {
    const std::size_t len = saturating_sub(size_, static_cast<std::size_t>(std::abs(d)));
    diagonals_[static_cast<std::size_t>(d + lower_)].assign(len, Rational(0));
  }
}

BandMatrix BandMatrix::identity(std::size_t size) {
  BandMatrix m(size, 0, 0);
  m.diagonals_[0].assign(size, Rational(1));
  return m;
}

const std::vector<Rational>& BandMatrix::diagonal(int offset) const {
  static const std::vector<Rational> empty;
  if (offset < -lower_ || offset > upper_) return empty;
  return diagonals_[static_cast<std::size_t>(offset + lower_)];
}

bool BandMatrix::in_band(std::size_t i, std::size_t j) const {
  const long d = static_cast<long>(j) - static_cast<long>(i);
  return d >= -lower_ && d <= upper_;
}

Rational BandMatrix::operator()(std::size_t i, std::size_t j) const {
  if (i >= size_ || j >= size_ || !in_band(i, j)) return 0;
  const long d = static_cast<long>(j) - static_cast<long>(i);
  return diagonals_[static_cast<std::size_t>(d + lower_)][std::min(i, j)];
}

void BandMatrix::set(std::size_t i, std::size_t j, const Rational& value) {
  if (i >= size_ || j >= size_ || !in_band(i, j)) {
    throw Error(ErrorKind::SizeMismatch, "entry (" + std::to_string(i) + "," +
                                             std::to_string(j) + ") outside band");
  }
  const long d = static_cast<long>(j) - static_cast<long>(i);
  diagonals_[static_cast<std::size_t>(d + lower_)][std::min(i, j)] = value;
}

void BandMatrix::set_diagonal(int offset, std::vector<Rational> values) {
  if (offset < -lower_ || offset > upper_) {
    throw Error(ErrorKind::SizeMismatch, "diagonal offset outside band");
  }
  auto& diag = diagonals_[static_cast<std::size_t>(offset + lower_)];
  if (values.size() != diag.size()) {
    throw Error(ErrorKind::SizeMismatch, "diagonal at offset " + std::to_string(offset) +
                                             " needs " + std::to_string(diag.size()) +
                                             " entries, got " + std::to_string(values.size()));
  }
  diag = std::move(values);
}

BandMatrix BandMatrix::with_reliable_size(std::size_t reliable) const {
  BandMatrix copy = *this;
  copy.reliable_ = std::min(reliable, size_);
  return copy;
}

DenseMatrix BandMatrix::to_dense() const {
  DenseMatrix out(size_);
  for (std::size_t i = 0; i < size_; ++i) {
    for (std::size_t j = 0; j < size_; ++j) {
      if (in_band(i, j)) out(i, j) = (*this)(i, j);
    }
  }
  return out;
}

BandMatrix band_multiply(const BandMatrix& a, const BandMatrix& b) {
  if (a.size() != b.size()) {
    throw Error(ErrorKind::SizeMismatch, "band_multiply: sizes " + std::to_string(a.size()) +
                                             " and " + std::to_string(b.size()));
  }
  const std::size_t n = a.size();
  BandMatrix out(n, a.lower_bandwidth() + b.lower_bandwidth(),
                 a.upper_bandwidth() + b.upper_bandwidth());
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k_lo = saturating_sub(i, static_cast<std::size_t>(a.lower_bandwidth()));
    const std::size_t k_hi =
        std::min(n - 1, i + static_cast<std::size_t>(a.upper_bandwidth()));
    const std::size_t j_lo = saturating_sub(i, static_cast<std::size_t>(out.lower_bandwidth()));
    const std::size_t j_hi =
        std::min(n - 1, i + static_cast<std::size_t>(out.upper_bandwidth()));
    for (std::size_t j = j_lo; j <= j_hi; ++j) {
      Rational acc = 0;
      for (std::size_t k = k_lo; k <= k_hi; ++k) {
        const Rational bkj = b(k, j);
        if (bkj != 0) acc += a(i, k) * bkj;
      }
      out.set(i, j, acc);
    }
  }
  // Entry (i, j) sums over k <= min(i + upper(a), j + lower(b)).
  const std::size_t reach =
      static_cast<std::size_t>(std::min(a.upper_bandwidth(), b.lower_bandwidth()));
  return out.with_reliable_size(
      saturating_sub(std::min(a.reliable_size(), b.reliable_size()), reach));
}

BandMatrix add_identity(const BandMatrix& m, const Rational& shift) {
  BandMatrix out = m;
  auto diag = m.diagonal(0);
  for (auto& x : diag) x += shift;
  out.set_diagonal(0, std::move(diag));
  return out;
}

BandMatrix shift_conjugate(const BandMatrix& m) {
  if (m.size() < 2) {
    throw Error(ErrorKind::SizeMismatch, "shift_conjugate needs size >= 2");
  }
  BandMatrix out(m.size() - 1, m.lower_bandwidth(), m.upper_bandwidth());
  for (int d = -m.lower_bandwidth(); d <= m.upper_bandwidth(); ++d) {
    const auto& src = m.diagonal(d);
    if (src.empty()) continue;
    out.set_diagonal(d, std::vector<Rational>(src.begin() + 1, src.end()));
  }
  return out.with_reliable_size(saturating_sub(m.reliable_size(), 1));
}

BandMatrix shift_rows(const BandMatrix& m) {
  if (m.size() < 2) throw Error(ErrorKind::SizeMismatch, "shift_rows needs size >= 2");
  const std::size_t n = m.size() - 1;
  BandMatrix out(n, std::max(m.lower_bandwidth() - 1, 0), m.upper_bandwidth() + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = m(i + 1, j);
      if (v != 0) out.set(i, j, v);
    }
  }
  return out.with_reliable_size(saturating_sub(m.reliable_size(), 1));
}

BandMatrix shift_columns(const BandMatrix& m) {
  if (m.size() < 2) throw Error(ErrorKind::SizeMismatch, "shift_columns needs size >= 2");
  const std::size_t n = m.size() - 1;
  BandMatrix out(n, m.lower_bandwidth() + 1, std::max(m.upper_bandwidth() - 1, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Rational v = m(i, j + 1);
      if (v != 0) out.set(i, j, v);
    }
  }
  return out.with_reliable_size(saturating_sub(m.reliable_size(), 1));
}

std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const BandMatrix& a,
                                                                  const BandMatrix& b) {
  const std::size_t n = std::min(a.reliable_size(), b.reliable_size());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) != b(i, j)) return std::make_pair(i, j);
    }
  }
  return std::nullopt;
}

DenseMatrix::DenseMatrix(std::size_t size) : size_(size), entries_(size * size) {}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::SizeMismatch, "dense product size mismatch");
  const std::size_t n = a.size();
  DenseMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  }
  return out;
}

DenseMatrix forward_substitute_unit_lower(const DenseMatrix& lower, const DenseMatrix& rhs) {
  if (lower.size() != rhs.size()) {
    throw Error(ErrorKind::SizeMismatch, "forward substitution size mismatch");
  }
  const std::size_t n = lower.size();
  DenseMatrix x(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      Rational acc = rhs(i, j);
      for (std::size_t k = 0; k < i; ++k) acc -= lower(i, k) * x(k, j);
      x(i, j) = acc;
    }
  }
  return x;
}

}  // namespace opoly

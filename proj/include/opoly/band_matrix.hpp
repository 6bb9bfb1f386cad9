#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "opoly/rational.hpp"

namespace opoly {

class DenseMatrix;

// Leading N x N truncation of a semi-infinite banded matrix.
//
// The diagonal at offset d (d > 0 above the main diagonal) holds N - |d|
// entries. `reliable_size` is the size of the leading block whose entries are
// known to agree with the semi-infinite matrix; a matrix assembled from exact
// data has reliable_size == size, while truncated products lose rows and
// columns near the edge.
class BandMatrix {
 public:
  BandMatrix() = default;
  BandMatrix(std::size_t size, int lower_bandwidth, int upper_bandwidth);

  static BandMatrix identity(std::size_t size);

  std::size_t size() const { return size_; }
  int lower_bandwidth() const { return lower_; }
  int upper_bandwidth() const { return upper_; }
  std::size_t reliable_size() const { return reliable_; }

  const std::vector<Rational>& diagonal(int offset) const;
  Rational operator()(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const Rational& value);
  void set_diagonal(int offset, std::vector<Rational> values);

  BandMatrix with_reliable_size(std::size_t reliable) const;
  DenseMatrix to_dense() const;

 private:
  bool in_band(std::size_t i, std::size_t j) const;

  std::size_t size_ = 0;
  int lower_ = 0;
  int upper_ = 0;
  std::size_t reliable_ = 0;
  std::vector<std::vector<Rational>> diagonals_;  // index offset + lower_
};

// Exact product of truncations. Bandwidths add; the reliable block shrinks by
// min(upper_bandwidth(a), lower_bandwidth(b)), the number of trailing rows and
// columns whose entries need a dropped summation index.
BandMatrix band_multiply(const BandMatrix& a, const BandMatrix& b);

// m + shift * I
BandMatrix add_identity(const BandMatrix& m, const Rational& shift);

// Lambda m Lambda^T: deletes the first row and column.
BandMatrix shift_conjugate(const BandMatrix& m);
// Lambda m: (Lambda m)_{i,j} = m_{i+1,j}, truncated to size N - 1.
BandMatrix shift_rows(const BandMatrix& m);
// m Lambda^T: (m Lambda^T)_{i,j} = m_{i,j+1}, truncated to size N - 1.
BandMatrix shift_columns(const BandMatrix& m);

// First (i, j) inside the common reliable block where a and b differ.
std::optional<std::pair<std::size_t, std::size_t>> first_mismatch(const BandMatrix& a,
                                                                  const BandMatrix& b);

class DenseMatrix {
 public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t size);

  std::size_t size() const { return size_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const {
    return entries_[i * size_ + j];
  }

  friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<Rational> entries_;
};

// Solves L X = B for unit lower-triangular L by forward substitution.
DenseMatrix forward_substitute_unit_lower(const DenseMatrix& lower, const DenseMatrix& rhs);

}  // namespace opoly

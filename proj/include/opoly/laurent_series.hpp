#pragma once

#include <optional>
#include <vector>

#include "opoly/polynomial.hpp"
#include "opoly/rational.hpp"

namespace opoly {

// Finite window z^{max_power} ... z^{min_power} of a formal Laurent series in
// 1/z. Coefficients above max_power are zero. Coefficients below min_power
// are unknown unless the series is `exact` (a Laurent polynomial), in which
// case they are zero as well.
class TruncatedLaurentSeries {
 public:
  TruncatedLaurentSeries(int max_power, int min_power, std::vector<Rational> coeffs,
                         bool exact = false);

  static TruncatedLaurentSeries from_polynomial(const Polynomial& p);
  static TruncatedLaurentSeries monomial(int power, const Rational& coeff = 1);

  int max_power() const { return max_; }
  int min_power() const { return min_; }
  bool exact() const { return exact_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  // Coefficient of z^power. Must be inside the known window.
  Rational coefficient(int power) const;
  bool known(int power) const { return power > max_ || power >= min_ || exact_; }

 private:
  int max_;
  int min_;
  bool exact_;
  std::vector<Rational> coeffs_;  // coeffs_[k] multiplies z^{max_ - k}
};

TruncatedLaurentSeries series_add(const TruncatedLaurentSeries& s,
                                  const TruncatedLaurentSeries& t);
TruncatedLaurentSeries series_scale(const Rational& lambda, const TruncatedLaurentSeries& s);
TruncatedLaurentSeries series_multiply(const TruncatedLaurentSeries& s,
                                       const TruncatedLaurentSeries& t);

// Highest power (within the common window) where s and t differ.
std::optional<int> series_first_mismatch(const TruncatedLaurentSeries& s,
                                         const TruncatedLaurentSeries& t);

}  // namespace opoly

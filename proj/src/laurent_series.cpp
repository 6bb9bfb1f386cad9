#include "opoly/laurent_series.hpp"

#include <algorithm>
#include <climits>
#include <string>

#include "opoly/errors.hpp"

namespace opoly {

TruncatedLaurentSeries::TruncatedLaurentSeries(int max_power, int min_power,
                                               std::vector<Rational> coeffs, bool exact)
    : max_(max_power), min_(min_power), exact_(exact), coeffs_(std::move(coeffs)) {
  if (min_ > max_ + 1 ||
      coeffs_.size() != static_cast<std::size_t>(max_ - min_ + 1)) {
    throw Error(ErrorKind::SizeMismatch,
                "series window [" + std::to_string(min_) + ", " + std::to_string(max_) +
                    "] does not match " + std::to_string(coeffs_.size()) + " coefficients");
  }
}

TruncatedLaurentSeries TruncatedLaurentSeries::from_polynomial(const Polynomial& p) {
  if (p.is_zero()) return TruncatedLaurentSeries(0, 0, {Rational(0)}, true);
  const auto& c = p.coefficients();
  return TruncatedLaurentSeries(p.degree(), 0, std::vector<Rational>(c.rbegin(), c.rend()),
                                true);
}

TruncatedLaurentSeries TruncatedLaurentSeries::monomial(int power, const Rational& coeff) {
  return TruncatedLaurentSeries(power, power, {coeff}, true);
}

Rational TruncatedLaurentSeries::coefficient(int power) const {
  if (power > max_) return 0;
  if (power < min_) {
    if (exact_) return 0;
    throw Error(ErrorKind::TruncationExhausted,
                "coefficient of z^" + std::to_string(power) + " is below the known window");
  }
  return coeffs_[static_cast<std::size_t>(max_ - power)];
}

namespace {

// Lowest power known from truncation alone; exact series impose no bound.
int truncation_floor(const TruncatedLaurentSeries& s) {
  return s.exact() ? INT_MIN : s.min_power();
}

TruncatedLaurentSeries build(int hi, int lo, bool exact,
                             const std::vector<Rational>& by_power_desc) {
  return TruncatedLaurentSeries(hi, lo, by_power_desc, exact);
}

}  // namespace

TruncatedLaurentSeries series_add(const TruncatedLaurentSeries& s,
                                  const TruncatedLaurentSeries& t) {
  const bool exact = s.exact() && t.exact();
  const int hi = std::max(s.max_power(), t.max_power());
  const int lo = exact ? std::min(s.min_power(), t.min_power())
                       : std::max(truncation_floor(s), truncation_floor(t));
  std::vector<Rational> out;
  for (int p = hi; p >= lo; --p) out.push_back(s.coefficient(p) + t.coefficient(p));
  return build(hi, std::min(lo, hi + 1), exact, out);
}

TruncatedLaurentSeries series_scale(const Rational& lambda, const TruncatedLaurentSeries& s) {
  std::vector<Rational> out = s.coefficients();
  for (auto& c : out) c *= lambda;
  return TruncatedLaurentSeries(s.max_power(), s.min_power(), std::move(out), s.exact());
}

TruncatedLaurentSeries series_multiply(const TruncatedLaurentSeries& s,
                                       const TruncatedLaurentSeries& t) {
  const int hi = s.max_power() + t.max_power();
  int lo;
  const bool exact = s.exact() && t.exact();
  if (exact) {
    lo = s.min_power() + t.min_power();
  } else if (s.exact()) {
    lo = s.max_power() + t.min_power();
  } else if (t.exact()) {
    lo = t.max_power() + s.min_power();
  } else {
    lo = std::max(s.max_power() + t.min_power(), t.max_power() + s.min_power());
  }
  lo = std::min(lo, hi + 1);
  std::vector<Rational> out;
  for (int p = hi; p >= lo; --p) {
    Rational acc = 0;
    for (int q = s.min_power(); q <= s.max_power(); ++q) {
      const int r = p - q;
      if (r > t.max_power()) continue;
      if (r < t.min_power()) break;
      acc += s.coefficient(q) * t.coefficient(r);
    }
    out.push_back(acc);
  }
  return build(hi, lo, exact, out);
}

std::optional<int> series_first_mismatch(const TruncatedLaurentSeries& s,
                                         const TruncatedLaurentSeries& t) {
  const int hi = std::max(s.max_power(), t.max_power());
  const int lo = (s.exact() && t.exact())
                     ? std::min(s.min_power(), t.min_power())
                     : std::max(truncation_floor(s), truncation_floor(t));
  for (int p = hi; p >= lo; --p) {
    if (s.coefficient(p) != t.coefficient(p)) return p;
  }
  return std::nullopt;
}

}  // namespace opoly

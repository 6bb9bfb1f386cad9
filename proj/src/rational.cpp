#include "opoly/rational.hpp"

#include <cctype>

#include "opoly/errors.hpp"

namespace opoly {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ZeroFirstMoment: return "ZeroFirstMoment";
    case ErrorKind::TruncationExhausted: return "TruncationExhausted";
    case ErrorKind::NotQuasiDefinite: return "NotQuasiDefinite";
    case ErrorKind::ZeroPivot: return "ZeroPivot";
    case ErrorKind::DegenerateParameter: return "DegenerateParameter";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::InsufficientCoefficients: return "InsufficientCoefficients";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IdentityViolation: return "IdentityViolation";
  }
  return "Unknown";
}

std::string to_string(const Rational& x) { return x.get_str(10); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  constexpr std::string_view kMinusSign = "\u2212";
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  } else if (body.starts_with(kMinusSign)) {
    negative = true;
    body.remove_prefix(kMinusSign.size());
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::ParseError,
                "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::ParseError,
                "zero denominator in '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational pow(const Rational& base, unsigned long exponent) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pochhammer(const Rational& a, unsigned long n) {
  Rational r = 1;
  for (unsigned long k = 0; k < n; ++k) r *= a + k;
  return r;
}

std::vector<std::string> to_strings(const std::vector<Rational>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

}  // namespace opoly

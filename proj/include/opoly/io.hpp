#pragma once

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "opoly/composition.hpp"
#include "opoly/darboux.hpp"
#include "opoly/errors.hpp"
#include "opoly/examples.hpp"
#include "opoly/functional.hpp"
#include "opoly/laurent_series.hpp"
#include "opoly/orthopoly.hpp"
#include "opoly/quadratic.hpp"
#include "opoly/report.hpp"

namespace opoly::io {

using json = nlohmann::ordered_json;

inline constexpr std::string_view kVersion = "opoly 1.0.0";

json rational_to_json(const Rational& x);
json rationals_to_json(const std::vector<Rational>& xs);
// `field` names the location in error messages.
Rational rational_from_json(const json& j, const std::string& field);
std::vector<Rational> rationals_from_json(const json& j, const std::string& field);

// {"label", "order", "moments"}
json moments_to_json(const MomentFunctional& u);
MomentFunctional moments_from_json(const json& j);

// {"n", "b", "a", "norms"}
json recurrence_to_json(const RecurrenceCoefficients& rc, const std::vector<Rational>& norms);
RecurrenceCoefficients recurrence_from_json(const json& j);

// {"identity", "max_level", "status", "first_failure", "detail"}
json report_to_json(const CheckReport& r);
CheckReport report_from_json(const json& j);

// {"c", "beta", "ell", "transformed_b", "transformed_a"}
json factor_to_json(const Rational& c, const std::vector<Rational>& beta,
                    const std::vector<Rational>& ell, const RecurrenceCoefficients& transformed);
json factor_to_json(const Rational& c, const ChristoffelLU& f);
json factor_to_json(const Rational& c, const GeronimusUL& f);

// {"sub1", "sub2", "diag", "super1"}
json triband_to_json(const TribandFactors& f);
TribandFactors triband_from_json(const json& j);

// {"max_power", "min_power", "coeffs"}
json series_to_json(const TruncatedLaurentSeries& s);
TruncatedLaurentSeries series_from_json(const json& j);

// {"chain", "c", "params", "checks"}
json chain_to_json(const ChainReport& c);

json family_report_to_json(const FamilyReport& r);

// {"error", "level", "message"}
json error_to_json(const Error& e);

// Parses text, reporting the byte offset of a syntax error.
json parse(std::string_view text);

// Adds the "version" header field.
json with_version(json body);

}  // namespace opoly::io

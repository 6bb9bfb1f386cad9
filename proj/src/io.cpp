#include "opoly/io.hpp"

#include <algorithm>

namespace opoly::io {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::ParseError, field + ": " + why);
}

const json& require(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) bad(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) bad(where, std::string("missing field \"") + key + "\"");
  return *it;
}

int int_from_json(const json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return j.get<int>();
}

}  // namespace

json rational_to_json(const Rational& x) { return to_string(x); }

json rationals_to_json(const std::vector<Rational>& xs) {
  json out = json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Rational rational_from_json(const json& j, const std::string& field) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad(field, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const Error& e) {
    bad(field, e.what());
  }
}

std::vector<Rational> rationals_from_json(const json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array");
  std::vector<Rational> out;
  for (std::size_t k = 0; k < j.size(); ++k) {
    out.push_back(rational_from_json(j[k], field + "[" + std::to_string(k) + "]"));
  }
  return out;
}

json moments_to_json(const MomentFunctional& u) {
  return json{{"label", u.label()}, {"order", u.order()}, {"moments", rationals_to_json(u.moments())}};
}

MomentFunctional moments_from_json(const json& j) {
  auto moments = rationals_from_json(require(j, "moments", "moment record"), "moments");
  if (j.contains("order") && int_from_json(j["order"], "order") != static_cast<int>(moments.size())) {
    bad("order", "does not match the number of moments");
  }
  std::string label;
  if (j.contains("label")) {
    if (!j["label"].is_string()) bad("label", "expected a string");
    label = j["label"].get<std::string>();
  }
  return MomentFunctional(std::move(moments), std::move(label));
}

json recurrence_to_json(const RecurrenceCoefficients& rc, const std::vector<Rational>& norms) {
  return json{{"n", rc.size()},
              {"b", rationals_to_json(rc.b_values())},
              {"a", rationals_to_json(rc.a_values())},
              {"norms", rationals_to_json(norms)}};
}

RecurrenceCoefficients recurrence_from_json(const json& j) {
  auto b = rationals_from_json(require(j, "b", "recurrence record"), "b");
  auto a = rationals_from_json(require(j, "a", "recurrence record"), "a");
  if (j.contains("n") && int_from_json(j["n"], "n") != static_cast<int>(b.size())) {
    bad("n", "does not match the length of b");
  }
  return RecurrenceCoefficients(std::move(b), std::move(a));
}

json report_to_json(const CheckReport& r) {
  json out{{"identity", r.identity},
           {"max_level", r.max_level},
           {"status", r.passed ? "pass" : "fail"},
           {"first_failure", nullptr}};
  if (r.first_failure) out["first_failure"] = *r.first_failure;
  if (!r.detail.empty()) out["detail"] = r.detail;
  return out;
}

CheckReport report_from_json(const json& j) {
  const json& identity = require(j, "identity", "report record");
  if (!identity.is_string()) bad("identity", "expected a string");
  CheckReport r{identity.get<std::string>(),
                static_cast<std::size_t>(int_from_json(require(j, "max_level", "report record"),
                                                       "max_level"))};
  const json& status = require(j, "status", "report record");
  if (status != "pass" && status != "fail") bad("status", "expected \"pass\" or \"fail\"");
  const std::string detail = j.contains("detail") ? j["detail"].get<std::string>() : "";
  if (status == "fail") {
    const json& at = require(j, "first_failure", "report record");
    r.fail(static_cast<std::size_t>(int_from_json(at, "first_failure")), detail);
  } else {
    r.detail = detail;
  }
  return r;
}

json factor_to_json(const Rational& c, const std::vector<Rational>& beta,
                    const std::vector<Rational>& ell, const RecurrenceCoefficients& transformed) {
  return json{{"c", rational_to_json(c)},
              {"beta", rationals_to_json(beta)},
              {"ell", rationals_to_json(ell)},
              {"transformed_b", rationals_to_json(transformed.b_values())},
              {"transformed_a", rationals_to_json(transformed.a_values())}};
}

json factor_to_json(const Rational& c, const ChristoffelLU& f) {
  return factor_to_json(c, f.upper.diag, f.lower.sub, f.transformed.recurrence());
}

json factor_to_json(const Rational& c, const GeronimusUL& f) {
  return factor_to_json(c, f.upper.diag, f.lower.sub, f.transformed.recurrence());
}

json triband_to_json(const TribandFactors& f) {
  return json{{"sub1", rationals_to_json(f.lower.sub1)},
              {"sub2", rationals_to_json(f.lower.sub2)},
              {"diag", rationals_to_json(f.upper.diag)},
              {"super1", rationals_to_json(f.upper.super1)}};
}

TribandFactors triband_from_json(const json& j) {
  TribandFactors f;
  f.lower.sub1 = rationals_from_json(require(j, "sub1", "triband record"), "sub1");
  f.lower.sub2 = rationals_from_json(require(j, "sub2", "triband record"), "sub2");
  f.upper.diag = rationals_from_json(require(j, "diag", "triband record"), "diag");
  f.upper.super1 = rationals_from_json(require(j, "super1", "triband record"), "super1");
  const std::size_t n = f.upper.diag.size();
  if (f.lower.sub1.size() + 1 != n || f.upper.super1.size() + 1 != n ||
      f.lower.sub2.size() + 2 != n) {
    bad("triband record", "band lengths do not fit one matrix size");
  }
  return f;
}

json series_to_json(const TruncatedLaurentSeries& s) {
  json out{{"max_power", s.max_power()},
           {"min_power", s.min_power()},
           {"coeffs", rationals_to_json(s.coefficients())}};
  if (s.exact()) out["exact"] = true;
  return out;
}

TruncatedLaurentSeries series_from_json(const json& j) {
  const int hi = int_from_json(require(j, "max_power", "series record"), "max_power");
  const int lo = int_from_json(require(j, "min_power", "series record"), "min_power");
  auto coeffs = rationals_from_json(require(j, "coeffs", "series record"), "coeffs");
  const bool exact = j.contains("exact") && j["exact"].is_boolean() && j["exact"].get<bool>();
  try {
    return TruncatedLaurentSeries(hi, lo, std::move(coeffs), exact);
  } catch (const Error& e) {
    bad("series record", e.what());
  }
}

json chain_to_json(const ChainReport& c) {
  json params = json::object();
  for (const auto& [name, value] : c.params) params[name] = rational_to_json(value);
  json checks = json::array();
  for (const auto& r : c.checks) checks.push_back(report_to_json(r));
  return json{{"chain", c.chain},
              {"c", rational_to_json(c.c)},
              {"params", params},
              {"checks", checks},
              {"status", c.passed() ? "pass" : "fail"}};
}

json family_report_to_json(const FamilyReport& r) {
  json out{{"family", std::string(family_name(r.family))},
           {"alpha", rational_to_json(r.alpha)},
           {"order", r.order},
           {"n", r.n}};
  json expected = json::object();
  json tables = json::array();
  for (const auto& t : r.tables) {
    out[t.quantity] = rationals_to_json(t.computed);
    if (!t.expected.empty()) expected[t.quantity] = rationals_to_json(t.expected);
    tables.push_back(report_to_json(t.report));
  }
  out["expected"] = expected;
  out["tables"] = tables;
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(report_to_json(c));
  out["checks"] = checks;
  json chains = json::array();
  for (const auto& c : r.chains) chains.push_back(chain_to_json(c));
  out["chains"] = chains;
  out["status"] = r.passed() ? "pass" : "fail";
  return out;
}

json error_to_json(const Error& e) {
  json out{{"error", std::string(to_string(e.kind()))}};
  if (e.level()) out["level"] = *e.level();
  out["message"] = e.what();
  return out;
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(upto), '\n');
    throw Error(ErrorKind::ParseError, "malformed JSON at line " + std::to_string(line) +
                                           ", byte " + std::to_string(e.byte));
  }
}

json with_version(json body) {
  json out{{"version", std::string(kVersion)}};
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

}  // namespace opoly::io

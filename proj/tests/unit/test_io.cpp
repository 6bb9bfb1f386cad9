#include <gtest/gtest.h>

#include "opoly/families.hpp"
#include "opoly/io.hpp"
#include "opoly/stieltjes.hpp"

using opoly::Error;
using opoly::ErrorKind;
using opoly::Rational;
namespace io = opoly::io;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::IdentityViolation;
}

}  // namespace

TEST(Io, MomentRoundTrip) {
  const auto u = opoly::laguerre(Rational(1, 3), 10).with_label("laguerre");
  const auto text = io::moments_to_json(u).dump();
  const auto back = io::moments_from_json(io::parse(text));
  EXPECT_EQ(back.moments(), u.moments());
  EXPECT_EQ(back.label(), "laguerre");
  EXPECT_EQ(io::moments_to_json(back).dump(), text);
}

TEST(Io, RationalsAreStrings) {
  EXPECT_EQ(io::rational_to_json(Rational(-3, 4)).dump(), "\"-3/4\"");
  EXPECT_EQ(io::rational_from_json(io::json("−3/4"), "x"), Rational(-3, 4));
  EXPECT_EQ(io::rational_from_json(io::json(7), "x"), 7);
  EXPECT_EQ(kind_of([] { io::rational_from_json(io::json("1/0"), "x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::rational_from_json(io::json(0.5), "x"); }), ErrorKind::ParseError);
}

TEST(Io, RecurrenceAndReportRoundTrip) {
  const opoly::RecurrenceCoefficients rc({1, Rational(1, 2)}, {Rational(-2, 3)});
  EXPECT_EQ(io::recurrence_from_json(io::recurrence_to_json(rc, {1, 2})), rc);
  opoly::CheckReport r{"pade", 4};
  r.fail(2, "mismatch");
  const auto back = io::report_from_json(io::report_to_json(r));
  EXPECT_EQ(back.identity, "pade");
  EXPECT_FALSE(back.passed);
  EXPECT_EQ(back.first_failure, std::optional<std::size_t>(2));
  EXPECT_EQ(back.detail, "mismatch");
  const opoly::CheckReport ok{"identidad", 3};
  EXPECT_EQ(io::report_to_json(io::report_from_json(io::report_to_json(ok))), io::report_to_json(ok));
}

TEST(Io, SeriesAndTribandRoundTrip) {
  const auto s = opoly::series_from_functional(opoly::chebyshev_u(6));
  const auto back = io::series_from_json(io::series_to_json(s));
  EXPECT_EQ(back.coefficients(), s.coefficients());
  EXPECT_EQ(back.min_power(), s.min_power());
  opoly::TribandFactors f;
  f.lower.sub1 = {1, 2};
  f.lower.sub2 = {3};
  f.upper.diag = {4, 5, 6};
  f.upper.super1 = {7, 8};
  const auto g = io::triband_from_json(io::triband_to_json(f));
  EXPECT_EQ(g.lower.sub2, f.lower.sub2);
  EXPECT_EQ(g.upper.super1, f.upper.super1);
  f.lower.sub2.clear();
  EXPECT_EQ(kind_of([&] { io::triband_from_json(io::triband_to_json(f)); }), ErrorKind::ParseError);
}

TEST(Io, MalformedInputNamesLocation) {
  try {
    io::parse("{\n  \"moments\": [1,\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
  }
  try {
    io::moments_from_json(io::parse(R"({"moments": ["1", "x"]})"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("moments[1]"), std::string::npos) << e.what();
  }
  EXPECT_EQ(kind_of([] { io::moments_from_json(io::parse(R"({"order": 2})")); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { io::moments_from_json(io::parse(R"({"order": 3, "moments": [1]})")); }),
            ErrorKind::ParseError);
}

TEST(Io, ErrorRecordAndVersion) {
  const auto j = io::error_to_json(Error(ErrorKind::ZeroPivot, "beta_0 = 0", 0));
  EXPECT_EQ(j["error"], "ZeroPivot");
  EXPECT_EQ(j["level"], 0);
  const auto v = io::with_version(io::json{{"a", 1}});
  EXPECT_EQ(v.begin().key(), "version");
  EXPECT_EQ(v["version"], std::string(io::kVersion));
}

TEST(Io, Deterministic) {
  const auto a = io::family_report_to_json(opoly::reproduce_family(opoly::Family::ChebyshevT, 0, 16)).dump();
  const auto b = io::family_report_to_json(opoly::reproduce_family(opoly::Family::ChebyshevT, 0, 16)).dump();
  EXPECT_EQ(a, b);
}

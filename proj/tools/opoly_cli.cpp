#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "opoly/associated.hpp"
#include "opoly/darboux.hpp"
#include "opoly/families.hpp"
#include "opoly/identities.hpp"
#include "opoly/io.hpp"
#include "opoly/orthopoly.hpp"
#include "opoly/quadratic.hpp"

namespace {

using opoly::Error;
using opoly::ErrorKind;
using opoly::MomentFunctional;
using opoly::Rational;
using opoly::io::json;

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kParse = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::size_t max_order() {
  const char* env = std::getenv("OPOLY_MAX_ORDER");
  if (env == nullptr || *env == '\0') return 64;
  try {
    return std::stoul(env);
  } catch (const std::exception&) {
    throw UsageError("OPOLY_MAX_ORDER must be a positive integer");
  }
}

void check_order(std::size_t order) {
  const std::size_t cap = max_order();
  if (order > cap) {
    throw UsageError("order " + std::to_string(order) + " exceeds OPOLY_MAX_ORDER=" +
                     std::to_string(cap));
  }
}

Rational flag_rational(const std::string& text, const char* flag) {
  try {
    return opoly::parse_rational(text);
  } catch (const Error& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

std::optional<Rational> optional_rational(const std::string& text, const char* flag) {
  if (text.empty()) return std::nullopt;
  return flag_rational(text, flag);
}

// A moment record object or a bare array of moments.
MomentFunctional moments_from_text(const std::string& text) {
  const json j = opoly::io::parse(text);
  MomentFunctional u = j.is_array()
                           ? MomentFunctional(opoly::io::rationals_from_json(j, "moments"))
                           : opoly::io::moments_from_json(j);
  check_order(u.order());
  return u;
}

MomentFunctional read_stdin_moments() {
  std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
  return moments_from_text(text);
}

void emit(const json& body) { std::cout << opoly::io::with_version(body).dump(2) << '\n'; }

MomentFunctional moments_from_jacobi_of(const opoly::RecurrenceCoefficients& rc,
                                        const Rational& u0) {
  return opoly::moments_from_jacobi(opoly::jacobi(rc), u0, 2 * rc.size());
}

struct Options {
  std::string source;
  std::string alpha = "0";
  std::size_t order = 24;
  std::optional<std::size_t> n;
  bool csv = false;
  std::string kind;
  std::string c, m0, m1, norm, corec_alpha;
  std::size_t k = 1;
  std::string identity;
  bool list = false;
};

int cmd_moments(const Options& o) {
  check_order(o.order);
  MomentFunctional u;
  if (auto f = opoly::parse_family(o.source)) {
    u = opoly::family_moments(*f, flag_rational(o.alpha, "--alpha"), o.order);
  } else {
    std::ifstream in(o.source);
    if (!in) throw UsageError("'" + o.source + "' is neither a family nor a readable file");
    std::stringstream buf;
    buf << in.rdbuf();
    u = moments_from_text(buf.str());
    if (o.order < u.order()) u = u.truncated(o.order);
  }
  emit(opoly::io::moments_to_json(u));
  return kOk;
}

int cmd_smop(const Options& o) {
  const MomentFunctional u = read_stdin_moments();
  const std::size_t n = o.n.value_or(u.order() / 2);
  const opoly::Smop s = opoly::smop_from_moments(u, n);
  if (o.csv) {
    std::cout << "n,b,a,norm\n";
    for (std::size_t k = 0; k < s.rc.size(); ++k) {
      std::cout << k << ',' << opoly::to_string(s.rc.b(k)) << ','
                << (k == 0 ? std::string() : opoly::to_string(s.rc.a(k))) << ','
                << opoly::to_string(s.system.norms[k]) << '\n';
    }
    return kOk;
  }
  json body = opoly::io::recurrence_to_json(s.rc, s.system.norms);
  json polys = json::array();
  for (const auto& p : s.system.polys) polys.push_back(opoly::io::rationals_to_json(p.coefficients()));
  body["polys"] = polys;
  emit(body);
  return kOk;
}

int cmd_transform(const Options& o) {
  const MomentFunctional u = read_stdin_moments();
  MomentFunctional out;
  std::string label;
  auto need = [](const std::string& v, const char* flag) {
    if (v.empty()) throw UsageError(std::string(flag) + " is required");
    return flag_rational(v, flag);
  };
  if (o.kind == "christoffel") {
    const Rational c = need(o.c, "--c");
    out = opoly::multiply_poly(u, opoly::Polynomial::linear(c));
    label = "christoffel c=" + opoly::to_string(c);
  } else if (o.kind == "geronimus") {
    const Rational c = need(o.c, "--c"), m0 = need(o.m0, "--m0");
    out = opoly::geronimus_moments(u, c, m0);
    label = "geronimus c=" + opoly::to_string(c) + " m0=" + opoly::to_string(m0);
  } else if (o.kind == "quadratic-geronimus") {
    const Rational c = need(o.c, "--c"), m0 = need(o.m0, "--m0"), m1 = need(o.m1, "--m1");
    out = opoly::quadratic_geronimus_moments(u, c, m0, m1);
    label = "quadratic-geronimus c=" + opoly::to_string(c) + " m0=" + opoly::to_string(m0) +
            " m1=" + opoly::to_string(m1);
  } else if (o.kind == "associated") {
    const Rational norm = optional_rational(o.norm, "--norm").value_or(Rational(1));
    const auto rc = opoly::smop_from_moments(u, u.order() / 2).rc;
    if (o.k == 0 || o.k >= rc.size()) throw UsageError("--k must lie in [1, n)");
    out = opoly::associated_functional(rc, o.k, norm, 2 * (rc.size() - o.k));
    label = "associated k=" + std::to_string(o.k);
  } else if (o.kind == "corecursive") {
    const Rational alpha = need(o.corec_alpha, "--alpha");
    if (u.order() == 0) throw Error(ErrorKind::ZeroFirstMoment, "no moments");
    const auto rc = opoly::smop_from_moments(u, u.order() / 2).rc;
    out = moments_from_jacobi_of(opoly::corecursive(rc, alpha), u[0]);
    label = "corecursive alpha=" + opoly::to_string(alpha);
  } else if (o.kind == "inverse") {
    out = opoly::invert(u);
    label = "inverse";
  } else {
    throw UsageError("unknown transform '" + o.kind + "'");
  }
  emit(opoly::io::moments_to_json(out.with_label(label)));
  return kOk;
}

int cmd_factorize(const Options& o) {
  const MomentFunctional u = read_stdin_moments();
  if (o.c.empty()) throw UsageError("--c is required");
  const Rational c = flag_rational(o.c, "--c");
  if (o.kind == "lu") {
    const std::size_t n = o.n.value_or(u.order() / 2);
    const auto j = opoly::jacobi(opoly::smop_from_moments(u, n).rc);
    emit(json{{"factorization", "lu"}, {"result", opoly::io::factor_to_json(c, opoly::christoffel_lu(j, c))}});
  } else if (o.kind == "ul") {
    if (o.m0.empty()) throw UsageError("--m0 is required");
    const Rational m0 = flag_rational(o.m0, "--m0");
    if (m0 == 0) throw Error(ErrorKind::DegenerateParameter, "m0 must be nonzero");
    if (u.order() == 0 || u[0] == 0) throw Error(ErrorKind::ZeroFirstMoment, "u_0 = 0");
    const std::size_t n = o.n.value_or(u.order() / 2);
    const auto j = opoly::jacobi(opoly::smop_from_moments(u, n).rc);
    emit(json{{"factorization", "ul"},
              {"result", opoly::io::factor_to_json(c, opoly::geronimus_ul(j, c, u[0] / m0))}});
  } else if (o.kind == "quadratic") {
    if (o.m0.empty() || o.m1.empty()) throw UsageError("--m0 and --m1 are required");
    const Rational m0 = flag_rational(o.m0, "--m0"), m1 = flag_rational(o.m1, "--m1");
    const std::size_t n = o.n.value_or(u.order() >= 8 ? (u.order() - 4) / 2 : 1);
    const auto f = opoly::quadratic_factorization(u, c, m0, m1, n);
    json body{{"factorization", "quadratic"}, {"c", opoly::to_string(c)}};
    body["result"] = opoly::io::triband_to_json(f);
    emit(body);
  } else {
    throw UsageError("unknown factorization '" + o.kind + "'");
  }
  return kOk;
}

int cmd_verify(const Options& o) {
  if (o.list) {
    json list = json::array();
    for (const auto& e : opoly::identity_registry()) {
      list.push_back(json{{"name", e.name}, {"statement", e.statement}, {"parameters", e.parameters}});
    }
    emit(json{{"identities", list}});
    return kOk;
  }
  if (o.identity.empty()) throw UsageError("verify needs an identity name or --list");
  const auto* entry = opoly::find_identity(o.identity);
  if (entry == nullptr) throw UsageError("unknown identity '" + o.identity + "'");
  opoly::IdentityInput in;
  in.u = read_stdin_moments();
  if (auto v = optional_rational(o.c, "--c")) in.c = *v;
  if (auto v = optional_rational(o.m0, "--m0")) in.m0 = *v;
  if (auto v = optional_rational(o.m1, "--m1")) in.m1 = *v;
  if (auto v = optional_rational(o.norm, "--norm")) in.norm1 = *v;
  if (auto v = optional_rational(o.corec_alpha, "--alpha")) in.alpha = *v;
  in.n = o.n;
  in.k = o.k;
  const opoly::CheckReport r = entry->run(in);
  emit(opoly::io::report_to_json(r));
  return r.passed ? kOk : kCheckFailed;
}

int cmd_example(const Options& o) {
  check_order(o.order);
  const auto f = opoly::parse_family(o.source);
  if (!f) throw UsageError("unknown family '" + o.source + "'");
  const auto report = opoly::reproduce_family(*f, flag_rational(o.alpha, "--alpha"), o.order);
  emit(opoly::io::family_report_to_json(report));
  return report.passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact moment functionals, orthogonal polynomials and Darboux transformations"};
  app.set_version_flag("--version", std::string(opoly::io::kVersion));
  app.require_subcommand(1);
  Options o;

  auto* moments = app.add_subcommand("moments", "Emit the moments of a family or a JSON file");
  moments->add_option("source", o.source, "chebyshev-u, chebyshev-t, laguerre or a file")->required();
  moments->add_option("--alpha", o.alpha, "Laguerre parameter");
  moments->add_option("--order", o.order, "number of moments");

  auto* smop = app.add_subcommand("smop", "Recurrence, norms and polynomials from moments on stdin");
  smop->add_option("--n", o.n, "highest degree");
  smop->add_flag("--csv", o.csv, "coefficient table as CSV");

  auto* transform = app.add_subcommand("transform", "Transform the functional on stdin");
  transform->add_option("kind", o.kind,
                        "christoffel, geronimus, quadratic-geronimus, associated, corecursive, inverse")
      ->required();
  transform->add_option("--c", o.c);
  transform->add_option("--m0", o.m0);
  transform->add_option("--m1", o.m1);
  transform->add_option("--k", o.k, "kind of the associated functional");
  transform->add_option("--norm", o.norm, "first moment of the associated functional");
  transform->add_option("--alpha", o.corec_alpha, "co-recursive parameter");

  auto* factorize = app.add_subcommand("factorize", "Factor the shifted Jacobi matrix of stdin");
  factorize->add_option("kind", o.kind, "lu, ul or quadratic")->required();
  factorize->add_option("--c", o.c);
  factorize->add_option("--m0", o.m0);
  factorize->add_option("--m1", o.m1);
  factorize->add_option("--n", o.n, "matrix size");

  auto* verify = app.add_subcommand("verify", "Check one identity on the functional on stdin");
  verify->add_option("identity", o.identity);
  verify->add_flag("--list", o.list, "list the identities");
  verify->add_option("--c", o.c);
  verify->add_option("--m0", o.m0);
  verify->add_option("--m1", o.m1);
  verify->add_option("--norm", o.norm);
  verify->add_option("--alpha", o.corec_alpha);
  verify->add_option("--n", o.n);
  verify->add_option("--k", o.k);

  auto* example = app.add_subcommand("example", "Reproduce every table for a classical family");
  example->add_option("family", o.source, "chebyshev-u, chebyshev-t or laguerre")->required();
  example->add_option("--alpha", o.alpha, "Laguerre parameter");
  example->add_option("--order", o.order, "number of moments");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*moments) return cmd_moments(o);
    if (*smop) return cmd_smop(o);
    if (*transform) return cmd_transform(o);
    if (*factorize) return cmd_factorize(o);
    if (*verify) return cmd_verify(o);
    if (*example) return cmd_example(o);
  } catch (const UsageError& e) {
    std::cerr << "opoly: " << e.what() << '\n';
    return kUsage;
  } catch (const Error& e) {
    std::cout << opoly::io::error_to_json(e).dump(2) << '\n';
    return e.kind() == ErrorKind::ParseError ? kParse : kCheckFailed;
  }
  return kUsage;
}

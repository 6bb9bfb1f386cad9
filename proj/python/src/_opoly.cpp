#include <optional>
#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "opoly/associated.hpp"
#include "opoly/darboux.hpp"
#include "opoly/families.hpp"
#include "opoly/identities.hpp"
#include "opoly/io.hpp"
#include "opoly/orthopoly.hpp"
#include "opoly/quadratic.hpp"

namespace py = pybind11;
using opoly::MomentFunctional;
using opoly::Rational;
using opoly::io::json;

// Rationals cross the boundary as "p/q" strings.
namespace {

using Strings = std::vector<std::string>;

Rational r(const std::string& s) { return opoly::parse_rational(s); }

MomentFunctional mf(const Strings& xs) {
  std::vector<Rational> m;
  m.reserve(xs.size());
  for (const auto& x : xs) m.push_back(r(x));
  return MomentFunctional(std::move(m));
}

Strings out(const MomentFunctional& u) { return opoly::to_strings(u.moments()); }

std::string smop_json(const Strings& moments, std::optional<std::size_t> n) {
  const MomentFunctional u = mf(moments);
  const auto s = opoly::smop_from_moments(u, n.value_or(u.order() / 2));
  json body = opoly::io::recurrence_to_json(s.rc, s.system.norms);
  json polys = json::array();
  for (const auto& p : s.system.polys) polys.push_back(opoly::io::rationals_to_json(p.coefficients()));
  body["polys"] = polys;
  return body.dump();
}

opoly::JacobiMatrix jacobi_of(const MomentFunctional& u, std::optional<std::size_t> n) {
  return opoly::jacobi(opoly::smop_from_moments(u, n.value_or(u.order() / 2)).rc);
}

}  // namespace

PYBIND11_MODULE(_opoly, m) {
  m.doc() = "Exact moment functionals and Darboux transformations";
  static PyObject* error = py::exception<opoly::Error>(m, "Error").release().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const opoly::Error& e) {
      PyErr_SetString(error, opoly::io::error_to_json(e).dump().c_str());
    }
  });

  m.attr("version") = std::string(opoly::io::kVersion);

  m.def("canonical", [](const std::string& s) { return opoly::to_string(r(s)); });
  m.def("family_moments", [](const std::string& family, const std::string& alpha, std::size_t order) {
    const auto f = opoly::parse_family(family);
    if (!f) throw opoly::Error(opoly::ErrorKind::ParseError, "unknown family '" + family + "'");
    return out(opoly::family_moments(*f, r(alpha), order));
  });
  m.def("smop", &smop_json, py::arg("moments"), py::arg("n") = py::none());
  m.def("invert", [](const Strings& u) { return out(opoly::invert(mf(u))); });
  m.def("christoffel", [](const Strings& u, const std::string& c) {
    return out(opoly::multiply_poly(mf(u), opoly::Polynomial::linear(r(c))));
  });
  m.def("geronimus", [](const Strings& u, const std::string& c, const std::string& m0) {
    return out(opoly::geronimus_moments(mf(u), r(c), r(m0)));
  });
  m.def("quadratic_geronimus", [](const Strings& u, const std::string& c, const std::string& m0,
                                  const std::string& m1) {
    return out(opoly::quadratic_geronimus_moments(mf(u), r(c), r(m0), r(m1)));
  });
  m.def("associated", [](const Strings& u, std::size_t k, const std::string& norm) {
    const MomentFunctional v = mf(u);
    const auto rc = opoly::smop_from_moments(v, v.order() / 2).rc;
    if (k == 0 || k >= rc.size()) {
      throw opoly::Error(opoly::ErrorKind::DegenerateParameter, "k must lie in [1, n)");
    }
    return out(opoly::associated_functional(rc, k, r(norm), 2 * (rc.size() - k)));
  });
  m.def("corecursive", [](const Strings& u, const std::string& alpha) {
    const MomentFunctional v = mf(u);
    if (v.order() == 0) throw opoly::Error(opoly::ErrorKind::ZeroFirstMoment, "no moments");
    const auto rc = opoly::corecursive(opoly::smop_from_moments(v, v.order() / 2).rc, r(alpha));
    return out(opoly::moments_from_jacobi(opoly::jacobi(rc), v[0], 2 * rc.size()));
  });
  m.def("christoffel_lu", [](const Strings& u, const std::string& c, std::optional<std::size_t> n) {
    return opoly::io::factor_to_json(r(c), opoly::christoffel_lu(jacobi_of(mf(u), n), r(c))).dump();
  }, py::arg("moments"), py::arg("c"), py::arg("n") = py::none());
  m.def("geronimus_ul", [](const Strings& u, const std::string& c, const std::string& m0,
                           std::optional<std::size_t> n) {
    const MomentFunctional v = mf(u);
    if (v.order() == 0 || v[0] == 0) throw opoly::Error(opoly::ErrorKind::ZeroFirstMoment, "u_0 = 0");
    if (r(m0) == 0) throw opoly::Error(opoly::ErrorKind::DegenerateParameter, "m0 must be nonzero");
    const auto f = opoly::geronimus_ul(jacobi_of(v, n), r(c), v[0] / r(m0));
    return opoly::io::factor_to_json(r(c), f).dump();
  }, py::arg("moments"), py::arg("c"), py::arg("m0"), py::arg("n") = py::none());
  m.def("quadratic_factorization", [](const Strings& u, const std::string& c, const std::string& m0,
                                      const std::string& m1, std::size_t n) {
    return opoly::io::triband_to_json(opoly::quadratic_factorization(mf(u), r(c), r(m0), r(m1), n)).dump();
  });
  m.def("identities", [] {
    std::vector<std::string> names;
    for (const auto& e : opoly::identity_registry()) names.push_back(e.name);
    return names;
  });
  m.def("verify", [](const std::string& name, const Strings& u, const std::string& c,
                     const std::string& m0, const std::string& m1, const std::string& norm1,
                     const std::string& alpha, std::optional<std::size_t> n, std::size_t k) {
    const auto* entry = opoly::find_identity(name);
    if (entry == nullptr) throw opoly::Error(opoly::ErrorKind::ParseError, "unknown identity '" + name + "'");
    opoly::IdentityInput in{mf(u), r(c), r(m0), r(m1), r(norm1), r(alpha), n, k};
    return opoly::io::report_to_json(entry->run(in)).dump();
  });
  m.def("example", [](const std::string& family, const std::string& alpha, std::size_t order) {
    const auto f = opoly::parse_family(family);
    if (!f) throw opoly::Error(opoly::ErrorKind::ParseError, "unknown family '" + family + "'");
    return opoly::io::family_report_to_json(opoly::reproduce_family(*f, r(alpha), order)).dump();
  });
}

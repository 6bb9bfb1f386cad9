#include "opoly/examples.hpp"

#include <algorithm>

#include "opoly/associated.hpp"
#include "opoly/darboux.hpp"
#include "opoly/errors.hpp"
#include "opoly/orthopoly.hpp"
#include "opoly/quadratic.hpp"
#include "opoly/stieltjes.hpp"

namespace opoly {

namespace {

std::vector<Rational> slice(const std::vector<Rational>& v, std::size_t from, std::size_t count) {
  if (from >= v.size()) return {};
  const std::size_t end = std::min(v.size(), from + count);
  return std::vector<Rational>(v.begin() + static_cast<long>(from),
                               v.begin() + static_cast<long>(end));
}

std::vector<Rational> values_at(const std::vector<Polynomial>& polys, std::size_t count,
                                const Rational& x) {
  std::vector<Rational> out;
  for (std::size_t k = 0; k < count && k < polys.size(); ++k) out.push_back(polys[k](x));
  return out;
}

CheckReport same_polys(const std::string& identity, const std::vector<Polynomial>& lhs,
                       const std::vector<Polynomial>& rhs) {
  const std::size_t count = std::min(lhs.size(), rhs.size());
  CheckReport report{identity, count == 0 ? 0 : count - 1};
  for (std::size_t k = 0; k < count; ++k) {
    if (!(lhs[k] == rhs[k])) {
      report.fail(k, "degree " + std::to_string(k) + ": " + to_string(lhs[k]) + " vs " +
                         to_string(rhs[k]));
      break;
    }
  }
  return report;
}

CheckReport same_normalized(const std::string& identity, const MomentFunctional& lhs,
                            const MomentFunctional& rhs) {
  const std::size_t count = std::min(lhs.order(), rhs.order());
  const MomentFunctional l = normalized(lhs.truncated(count));
  const MomentFunctional r = normalized(rhs.truncated(count));
  CheckReport report{identity, count == 0 ? 0 : count - 1};
  for (std::size_t k = 0; k < count; ++k) {
    if (l[k] != r[k]) {
      report.fail(k, "moment " + std::to_string(k) + ": " + to_string(l[k]) + " vs " +
                         to_string(r[k]));
      break;
    }
  }
  return report;
}

}  // namespace

SequenceComparison compare_sequence(std::string quantity, std::vector<Rational> computed,
                                    std::vector<Rational> expected) {
  SequenceComparison out{quantity, std::move(computed), std::move(expected), {quantity, 0}};
  if (out.expected.empty()) {
    out.report.detail = "no closed form";
    return out;
  }
  const std::size_t count = std::min(out.computed.size(), out.expected.size());
  out.report.max_level = count == 0 ? 0 : count - 1;
  if (out.computed.size() != out.expected.size()) {
    out.report.fail(count, "lengths " + std::to_string(out.computed.size()) + " and " +
                               std::to_string(out.expected.size()));
  }
  for (std::size_t k = 0; k < count; ++k) {
    if (out.computed[k] != out.expected[k]) {
      out.report.fail(k, "entry " + std::to_string(k) + ": " + to_string(out.computed[k]) +
                             " vs " + to_string(out.expected[k]));
      break;
    }
  }
  return out;
}

bool FamilyReport::passed() const {
  return std::all_of(tables.begin(), tables.end(),
                     [](const SequenceComparison& t) { return t.report.passed; }) &&
         std::all_of(checks.begin(), checks.end(),
                     [](const CheckReport& r) { return r.passed; }) &&
         std::all_of(chains.begin(), chains.end(),
                     [](const ChainReport& c) { return c.passed(); });
}

const SequenceComparison* FamilyReport::table(const std::string& quantity) const {
  for (const auto& t : tables) {
    if (t.quantity == quantity) return &t;
  }
  return nullptr;
}

FamilyReport reproduce_family(Family f, const Rational& alpha, std::size_t order) {
  if (order < 8) throw Error(ErrorKind::TruncationExhausted, "family reproduction needs order >= 8");
  const std::size_t n = (order - 4) / 2;
  const MomentFunctional u = family_moments(f, alpha, order);
  const ExpectedTables t = expected_tables(f, alpha, n + 1);
  const Smop base = smop_from_moments(u, n + 1);
  const RecurrenceCoefficients& rc = base.rc;

  FamilyReport out{f, alpha, order, n, {}, {}, {}};
  auto add = [&](std::string name, std::vector<Rational> computed, std::vector<Rational> expected) {
    out.tables.push_back(compare_sequence(std::move(name), std::move(computed), std::move(expected)));
  };
  add("b", slice(rc.b_values(), 0, n), slice(t.b, 0, n));
  add("a", slice(rc.a_values(), 0, n - 1), slice(t.a, 0, n - 1));
  add("values_at_zero", values_at(base.system.polys, n, 0), slice(t.values_at_zero, 0, n));

  const RecurrenceCoefficients inv = inverse_recurrence(u, n);
  add("b_minus", slice(inv.b_values(), 0, n), slice(t.b_minus, 0, n));
  add("a_minus", slice(inv.a_values(), 0, n - 1), slice(t.a_minus, 0, n - 1));
  const InverseSmop is = inverse_smop(u, n);
  add("alpha1", slice(is.alpha1, 1, n), slice(t.alpha1, 0, n));
  add("alpha2", slice(is.alpha2, 2, n - 1), slice(t.alpha2, 0, n - 1));
  add("d_star", slice(is.d_star, 2, n - 1), slice(t.d_star, 0, n - 1));

  Rational c_christoffel = 1, c_geronimus = 1, m0 = Rational(-1, 2);
  if (f == Family::Laguerre) {
    c_christoffel = 0;
    c_geronimus = 0;
    m0 = 1 / (alpha + 1);
    const GeronimusUL g = geronimus_ul(jacobi(rc), 0, alpha + 1);
    const RecurrenceCoefficients hat = g.transformed.recurrence();
    add("ell", slice(g.lower.sub, 0, n), slice(t.ell, 0, n));
    add("beta", slice(g.upper.diag, 0, n), slice(t.beta, 0, n));
    add("hat_b", slice(hat.b_values(), 0, n), slice(t.hat_b, 0, n));
    add("hat_a", slice(hat.a_values(), 0, n - 1), slice(t.hat_a, 0, n - 1));
    add("assoc_zero", values_at(associated_polys(rc, 1, n - 1), n, 0), slice(t.assoc_zero, 0, n));
    out.checks.push_back(same_normalized("geronimus-is-laguerre-weight",
                                         geronimus_moments(u, 0, m0),
                                         laguerre_weight(alpha, order)));
  }
  if (f == Family::ChebyshevT) {
    const auto u_polys = smop_from_moments(chebyshev_u(2 * n), n - 1).system.polys;
    out.checks.push_back(same_polys("t1-is-u", associated_polys(rc, 1, n - 1), u_polys));
  }

  out.checks.push_back(inverse_series_check(u));
  out.checks.push_back(cf_step_check(u, 1));
  out.checks.push_back(relationS_check(u, 1));
  out.checks.push_back(pade_check(u, std::min<std::size_t>(4, n)));
  out.checks.push_back(inverse_functional_identity_check(u, 1));
  out.checks.push_back(corecursive_functional_check(u, 1));
  out.checks.push_back(verify_assoc_representation(u, 2, n));
  out.checks.push_back(assoc_linear_combination_check(rc, 2, n));
  out.checks.push_back(christoffel_connection_check(u, c_christoffel, n));
  out.checks.push_back(christoffel_factorization_check(u, c_christoffel, n));
  out.checks.push_back(geronimus_connection_check(u, c_geronimus, m0, n));
  out.checks.push_back(geronimus_factorization_check(u, c_geronimus, m0, n));
  out.checks.push_back(conex2_check(u, -1, 1, 1, n));
  out.checks.push_back(quadratic_factorization_check(u, -1, 1, 1, n));
  out.checks.push_back(relationlu_check(u, 1, n));
  out.checks.push_back(g_matrix_check(u, n));

  const std::size_t chain_n = std::min<std::size_t>(8, n);
  out.chains.push_back(christoffel_chain(u, c_christoffel, chain_n));
  out.chains.push_back(geronimus_chain(u, c_geronimus, m0, chain_n));
  return out;
}

}  // namespace opoly

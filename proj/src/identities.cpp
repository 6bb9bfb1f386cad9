#include "opoly/identities.hpp"

#include <algorithm>

#include "opoly/associated.hpp"
#include "opoly/composition.hpp"
#include "opoly/darboux.hpp"
#include "opoly/orthopoly.hpp"
#include "opoly/quadratic.hpp"
#include "opoly/stieltjes.hpp"

namespace opoly {

std::size_t default_level(const MomentFunctional& u) {
  return u.order() >= 6 ? (u.order() - 4) / 2 : 1;
}

namespace {

std::size_t level(const IdentityInput& in) { return in.n.value_or(default_level(in.u)); }

std::vector<IdentityEntry> build_registry() {
  using In = IdentityInput;
  return {
      {"repChris", "(x-c) P~_n = P_{n+1} - (P_{n+1}(c)/P_n(c)) P_n", "c, n",
       [](const In& in) { return christoffel_connection_check(in.u, in.c, level(in)); }},
      {"christoffel-lu", "J - cI = LU, J~ - cI = UL", "c, n",
       [](const In& in) { return christoffel_factorization_check(in.u, in.c, level(in)); }},
      {"geronimus-connection",
       "P^_n = P_n + ell_n P_{n-1}, (x-c) P_n = P^_{n+1} + beta_n P^_n", "c, m0, n",
       [](const In& in) { return geronimus_connection_check(in.u, in.c, in.m0, level(in)); }},
      {"geronimus-ul", "J - cI = UL, J^ - cI = LU", "c, m0, n",
       [](const In& in) { return geronimus_factorization_check(in.u, in.c, in.m0, level(in)); }},
      {"fu1", "u^(1) = -(u^(1)_0 u_0 / a_1) x^2 u^{-1}, u^{-1} from x^{-2} u^(1)", "norm1",
       [](const In& in) { return inverse_functional_identity_check(in.u, in.norm1); }},
      {"identidad", "S_u(z) S_{u^{-1}}(z) = 1/z^2", "",
       [](const In& in) { return inverse_series_check(in.u); }},
      {"stieltjes", "(z - b_0) S_u - (a_1/u^(1)_0) S_{u^(1)} S_u = u_0", "norm1",
       [](const In& in) { return cf_step_check(in.u, in.norm1); }},
      {"relationS",
       "S_{u^(1)} = -(u_0 u^(1)_0/a_1) z^2 S_{u^{-1}} + (u^(1)_0/a_1)(z - b_0)", "norm1",
       [](const In& in) { return relationS_check(in.u, in.norm1); }},
      {"pade", "S_u P_n - u_0 P^(1)_{n-1} = K_n z^{-(n+1)} + ...", "n",
       [](const In& in) {
         const std::size_t cap = in.u.order() >= 1 ? (in.u.order() - 1) / 2 : 0;
         return pade_check(in.u, std::min(level(in), cap));
       }},
      {"funccorre", "u^alpha = (u_0^alpha/u_0)(u^{-1} + (alpha/u_0) delta'_0)^{-1}", "alpha",
       [](const In& in) { return corecursive_functional_check(in.u, in.alpha); }},
      {"asociadosrepr", "P^(k)_{m-1}(x) = <u^(k-1)_y, (P^(k-1)_m(x) - P^(k-1)_m(y))/(x-y)> / u^(k-1)_0",
       "k, n",
       [](const In& in) {
         const std::size_t half = in.u.order() / 2;
         const std::size_t cap = half > in.k ? half - in.k + 1 : 1;
         return verify_assoc_representation(in.u, in.k, in.n.value_or(std::min(cap, level(in))));
       }},
      {"linearcombination", "P^(k)_{m-k} = A(x,k) P_m + B(x,k) P^(1)_{m-1}", "k, n",
       [](const In& in) {
         const auto rc = smop_from_moments(in.u, in.u.order() / 2).rc;
         return assoc_linear_combination_check(rc, in.k, in.n.value_or(rc.size()));
       }},
      {"conex2", "(x-c)^2 P_n = Q_{n+2} + beta_{n,n+1} Q_{n+1} + beta_{n,n} Q_n", "c, m0, m1, n",
       [](const In& in) { return conex2_check(in.u, in.c, in.m0, in.m1, level(in)); }},
      {"propLUinversa", "(J - cI)^2 = UL, (J^ - cI)^2 = LU", "c, m0, m1, n",
       [](const In& in) {
         return quadratic_factorization_check(in.u, in.c, in.m0, in.m1, level(in));
       }},
      {"relationlu", "(J^(1))^2 = UL, (J^-)^2 = LU", "norm1, n",
       [](const In& in) { return relationlu_check(in.u, in.norm1, level(in)); }},
      {"g-matrix", "G = L^{-1} J^-, G L = J^(1)", "n",
       [](const In& in) { return g_matrix_check(in.u, level(in)); }},
      {"pro5", "R_n is the co-recursive family of u^(1) with parameter -a_1 u_0/u~_0", "c, n",
       [](const In& in) { return verify_R_corecursive(in.u, in.c, level(in)); }},
      {"christoffel-assoc", "(x-c) P~^(1)_{n-1} = R_n - (P_{n+1}(c)/P_n(c)) R_{n-1}", "c, n",
       [](const In& in) { return christoffel_assoc_connection(in.u, in.c, level(in)); }},
      {"coro1", "u~^(1) = (x-c) u^alpha up to normalization", "c",
       [](const In& in) { return coro1_check(in.u, in.c); }},
      {"shifted-lu", "J_alpha - cI = L_1 U_1, J~^(1) - cI = U_1 L_1", "c, n",
       [](const In& in) { return shifted_lu_check(in.u, in.c, level(in)); }},
      {"corecursive-S", "S_n is the co-recursive family of v with parameter -v_0/v^_0",
       "c, m0, n",
       [](const In& in) { return verify_S_corecursive(in.u, in.c, in.m0, level(in)); }},
      {"gero1", "(x-c) P^^(1)_{n-1} = S_n + ell_n S_{n-1}", "c, m0, n",
       [](const In& in) { return gero1_check(in.u, in.c, in.m0, level(in)); }},
      {"gero2", "S_n = P^^(1)_n + beta_n P^^(1)_{n-1}", "c, m0, n",
       [](const In& in) { return gero2_check(in.u, in.c, in.m0, level(in)); }},
      {"pro6", "v^^(1) = (x-c) v^alpha, J_alpha - cI = L^ U^, J^^(1) - cI = U^ L^", "c, m0, n",
       [](const In& in) { return pro6_check(in.u, in.c, in.m0, level(in)); }},
  };
}

}  // namespace

const std::vector<IdentityEntry>& identity_registry() {
  static const std::vector<IdentityEntry> registry = build_registry();
  return registry;
}

const IdentityEntry* find_identity(std::string_view name) {
  for (const auto& e : identity_registry()) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

}  // namespace opoly

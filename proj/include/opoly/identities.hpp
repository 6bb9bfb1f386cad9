#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "opoly/functional.hpp"
#include "opoly/report.hpp"

namespace opoly {

// Parameters shared by every named check. Unused fields are ignored.
struct IdentityInput {
  MomentFunctional u;
  Rational c = 1;
  Rational m0 = 1;
  Rational m1 = 0;
  Rational norm1 = 1;
  Rational alpha = 1;
  std::optional<std::size_t> n;  // defaults to the largest size the moments support
  std::size_t k = 1;
};

struct IdentityEntry {
  std::string name;
  std::string statement;   // the identity being checked
  std::string parameters;  // which IdentityInput fields it reads
  std::function<CheckReport(const IdentityInput&)> run;
};

const std::vector<IdentityEntry>& identity_registry();
const IdentityEntry* find_identity(std::string_view name);

// (order - 4) / 2, at least 1.
std::size_t default_level(const MomentFunctional& u);

}  // namespace opoly

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opoly/composition.hpp"
#include "opoly/families.hpp"
#include "opoly/report.hpp"

namespace opoly {

// A computed sequence next to its closed form. `expected` is empty when the
// family has no closed form for it.
struct SequenceComparison {
  std::string quantity;
  std::vector<Rational> computed;
  std::vector<Rational> expected;
  CheckReport report;
};

struct FamilyReport {
  Family family;
  Rational alpha;
  std::size_t order = 0;
  std::size_t n = 0;
  std::vector<SequenceComparison> tables;
  std::vector<CheckReport> checks;
  std::vector<ChainReport> chains;

  bool passed() const;
  const SequenceComparison* table(const std::string& quantity) const;
};

// Runs every table and identity for one family from `order` moments. Tables
// run to n = (order - 4) / 2.
FamilyReport reproduce_family(Family f, const Rational& alpha, std::size_t order);

SequenceComparison compare_sequence(std::string quantity, std::vector<Rational> computed,
                                    std::vector<Rational> expected);

}  // namespace opoly

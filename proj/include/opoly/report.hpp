#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>

namespace opoly {

// Outcome of an identity check. `max_level` is the highest index (degree,
// matrix row, or series power depth) that was compared; `first_failure` is the
// first index where the two sides differ.
struct CheckReport {
  std::string identity;
  std::size_t max_level = 0;
  bool passed = true;
  std::optional<std::size_t> first_failure;
  std::string detail;

  CheckReport() = default;
  CheckReport(std::string name, std::size_t level) : identity(std::move(name)), max_level(level) {}

  void fail(std::size_t level, std::string why) {
    if (passed) {
      passed = false;
      first_failure = level;
      detail = std::move(why);
    }
  }
  // Folds another report into this one; the first failure wins.
  void merge(const CheckReport& other) {
    if (other.max_level > max_level) max_level = other.max_level;
    if (!other.passed) fail(other.first_failure.value_or(0), other.identity + ": " + other.detail);
  }
};

}  // namespace opoly

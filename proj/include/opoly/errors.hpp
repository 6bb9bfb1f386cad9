#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace opoly {

enum class ErrorKind {
  ZeroFirstMoment,
  TruncationExhausted,
  NotQuasiDefinite,
  ZeroPivot,
  DegenerateParameter,
  SizeMismatch,
  InsufficientCoefficients,
  ParseError,
  IdentityViolation,
};

std::string_view to_string(ErrorKind kind);

// Every failure raised by the library. `level` carries the index at which a
// level-wise condition (pivot, norm, minor) first failed, when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what,
        std::optional<std::size_t> level = std::nullopt)
      : std::runtime_error(what), kind_(kind), level_(level) {}

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> level() const noexcept { return level_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> level_;
};

}  // namespace opoly

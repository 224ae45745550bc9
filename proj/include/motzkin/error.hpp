#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace motzkin {

enum class ErrorKind {
  UnbalancedParentheses,
  IllegalCharacter,
  NegativePrefix,
  NotClosed,
  EmptyTree,
  ProductMismatch,
  InvalidPolynomial,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

/// Error raised by every fallible operation in the library. Parse errors carry
/// the zero-based offset of the offending character.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string detail,
        std::optional<std::size_t> position = std::nullopt);

  ErrorKind kind() const noexcept { return kind_; }
  std::optional<std::size_t> position() const noexcept { return position_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> position_;
};

}  // namespace motzkin

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace picwalk {

enum class ErrorKind {
  Format,
  Alphabet,
  Degenerate,
  OutOfFrame,
  Shape,
  Precondition,
  Validation,
  Composition,
  UnsupportedRotation,
  Parse,
  Mode,
  Parameter,
  Argument,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to a diagnostic without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace picwalk

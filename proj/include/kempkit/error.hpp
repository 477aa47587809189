#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kempkit {

enum class ErrorKind {
  InvalidSpec,
  CapExceeded,
  GroupMismatch,
  UndefinedPeriod,
  Precondition,
  NotGenerating,
  UndefinedConnectivity,
  InternalInvariant,
  TheoremFalsified,
  Parse,
  Io,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` lets callers (and the CLI
/// exit-code mapping) distinguish usage errors from theorem alarms.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace kempkit

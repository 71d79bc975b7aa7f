#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rpart {

enum class ErrorKind {
  InvalidPart,
  NotSubMultiset,
  Empty,
  TooSmall,
  NotCoprime,
  NotRegular,
  InvalidTriple,
  JOutOfRange,
  NonInvertible,
  Overflow,
};

std::string_view to_string(ErrorKind kind) noexcept;

// All library failures are reported through this exception; kind() names the
// violated rule so front ends can print it verbatim.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &detail)
      : std::runtime_error(std::string(to_string(kind)) + ": " + detail),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

} // namespace rpart

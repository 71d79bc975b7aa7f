#include "rpart/error.hpp"

namespace rpart {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
  case ErrorKind::InvalidPart: return "InvalidPart";
  case ErrorKind::NotSubMultiset: return "NotSubMultiset";
  case ErrorKind::Empty: return "Empty";
  case ErrorKind::TooSmall: return "TooSmall";
  case ErrorKind::NotCoprime: return "NotCoprime";
  case ErrorKind::NotRegular: return "NotRegular";
  case ErrorKind::InvalidTriple: return "InvalidTriple";
  case ErrorKind::JOutOfRange: return "JOutOfRange";
  case ErrorKind::NonInvertible: return "NonInvertible";
  case ErrorKind::Overflow: return "Overflow";
  }
  return "Unknown";
}

} // namespace rpart

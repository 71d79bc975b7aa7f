#pragma once

#include <cstdint>
#include <string>

#include "rpart/error.hpp"

namespace rpart::checked {

inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_add_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, std::to_string(a) + " + " + std::to_string(b));
  return out;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_sub_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, std::to_string(a) + " - " + std::to_string(b));
  return out;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out;
  if (__builtin_mul_overflow(a, b, &out))
    throw Error(ErrorKind::Overflow, std::to_string(a) + " * " + std::to_string(b));
  return out;
}

} // namespace rpart::checked

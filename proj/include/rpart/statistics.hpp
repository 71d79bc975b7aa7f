#pragma once

#include <cstdint>
#include <vector>

#include "rpart/enumeration.hpp"
#include "rpart/partition.hpp"

namespace rpart {

/// Number of parts (with multiplicity) congruent to j mod r. Requires
/// 1 <= j <= r - 1, otherwise throws Error(JOutOfRange).
std::int64_t x_stat(const Partition &lambda, std::int64_t r, std::int64_t j);

/// Number of distinct part sizes whose multiplicity is at least j. Same
/// range rule for j as x_stat.
std::int64_t y_stat(const Partition &mu, std::int64_t r, std::int64_t j);

struct XYRow {
  std::int64_t j = 0;
  std::int64_t x = 0;
  std::int64_t y = 0;

  std::int64_t diff() const noexcept { return x - y; }
  friend bool operator==(const XYRow &, const XYRow &) = default;
};

struct XYCReport {
  ModulusTuple moduli = ModulusTuple::single(2);
  std::int64_t n = 0;
  std::vector<XYRow> per_j; // j = 1 .. r_1 - 1
  std::int64_t c = 0;
  std::int64_t inferior_count = 0;
  bool hypothesis_holds = true;

  friend bool operator==(const XYCReport &, const XYCReport &) = default;
};

/// X and Y per j, the Glaisher operation total c and the inferior-class
/// count, all by enumeration. Runs on the parallel kernel.
XYCReport aggregate(const ModulusTuple &r, std::int64_t n);

struct XYCVerdict {
  std::int64_t j = 0;
  bool pass = false;            // X - Y == c
  bool inferior_matches = false; // X == Y + #R'P
  std::int64_t x = 0, y = 0, c = 0, inferior = 0;
};

struct XYCVerification {
  XYCReport report;
  std::vector<XYCVerdict> verdicts;
  // c summed from traces agrees with the inferior-class count.
  bool c_matches_inferior = false;

  /// Failures only count when the congruence hypothesis holds.
  bool genuine_failure() const noexcept;
  bool all_pass() const noexcept;
};

XYCVerification verify_xyc(const ModulusTuple &r, std::int64_t n);

struct LengthVerdict {
  ModulusTuple moduli = ModulusTuple::single(2);
  std::int64_t n = 0;
  std::int64_t class_regular_length = 0; // sum of lengths over CP(n)
  std::int64_t regular_length = 0;       // sum of lengths over RP(n)
  std::int64_t c = 0;
  bool pass = false; // difference == (r_1 - 1) * c
};

LengthVerdict verify_length_identity(const ModulusTuple &r, std::int64_t n);
inline LengthVerdict verify_length_identity(std::int64_t r, std::int64_t n) {
  return verify_length_identity(ModulusTuple::single(r), n);
}

} // namespace rpart

#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rpart {

using Part = std::int64_t;

// One run of equal parts: `size` repeated `count` times.
struct Block {
  Part size = 0;
  std::int64_t count = 0;

  friend bool operator==(const Block &, const Block &) = default;
};

/// An integer partition held as its multiplicity table.
///
/// Blocks are stored in strictly decreasing order of part size and every
/// stored count is at least one, so two partitions are equal exactly when
/// they are equal as multisets. The weakly decreasing part sequence is
/// derived on demand by parts().
class Partition {
public:
  Partition() = default;

  /// Canonicalizes an arbitrary-order list of parts. Throws
  /// Error(InvalidPart) on entries below one.
  static Partition from_parts(std::span<const Part> parts);
  static Partition from_parts(std::initializer_list<Part> parts) {
    return from_parts(std::span<const Part>(parts.begin(), parts.size()));
  }

  /// Builds from (size, count) pairs in any order; repeated sizes are merged
  /// and zero counts dropped.
  static Partition from_blocks(std::span<const Block> blocks);

  /// Adopts blocks that are already canonical (strictly decreasing sizes,
  /// positive counts). Used by generators on hot paths.
  static Partition from_canonical_blocks(std::vector<Block> blocks) {
    Partition p;
    p.blocks_ = std::move(blocks);
    return p;
  }

  const std::vector<Block> &blocks() const noexcept { return blocks_; }
  std::vector<Part> parts() const;

  std::int64_t size() const;
  std::int64_t length() const;
  bool empty() const noexcept { return blocks_.empty(); }
  std::int64_t distinct_parts() const noexcept {
    return static_cast<std::int64_t>(blocks_.size());
  }

  std::int64_t multiplicity(Part i) const;

  /// True when the internal table obeys the canonical-form rules.
  bool is_canonical() const;

  friend bool operator==(const Partition &, const Partition &) = default;

  // Lexicographic order on the decreasing part sequences. Canonical listings
  // run in descending order, e.g. (5,2) before (5,1,1).
  friend std::strong_ordering operator<=>(const Partition &a, const Partition &b);

private:
  std::vector<Block> blocks_;
};

Partition make_partition(std::span<const Part> parts);

struct Measure {
  std::int64_t size = 0;
  std::int64_t length = 0;

  friend bool operator==(const Measure &, const Measure &) = default;
};

Measure measure(const Partition &lambda);

inline std::int64_t multiplicity(const Partition &lambda, Part i) {
  return lambda.multiplicity(i);
}

Partition multiset_union(const Partition &lambda, const Partition &mu);

/// Throws Error(NotSubMultiset) when mu is not contained in lambda.
Partition multiset_difference(const Partition &lambda, const Partition &mu);

/// Array encoding used in structured output, e.g. "[4,2]" and "[]".
std::string to_array_string(const Partition &lambda);

/// Exponent notation, e.g. "(2^2,1^2)"; the empty partition is "()".
std::string to_exponent_string(const Partition &lambda);

} // namespace rpart

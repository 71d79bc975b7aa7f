#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "rpart/partition.hpp"

namespace rpart {

/// Pairwise-coprime moduli (r_1, ..., r_m), each at least two. The first
/// modulus is distinguished: regular-type classes bound multiplicities by
/// it, while the tail only forbids divisible part sizes.
class ModulusTuple {
public:
  /// Throws Error(Empty | TooSmall | NotCoprime).
  static ModulusTuple validate(std::span<const std::int64_t> moduli);
  static ModulusTuple validate(std::initializer_list<std::int64_t> moduli) {
    return validate(std::span<const std::int64_t>(moduli.begin(), moduli.size()));
  }
  static ModulusTuple single(std::int64_t r) { return validate({r}); }

  std::int64_t first() const noexcept { return moduli_.front(); }
  std::span<const std::int64_t> all() const noexcept { return moduli_; }
  /// (r_2, ..., r_m); empty for a single modulus.
  std::span<const std::int64_t> tail() const noexcept {
    return std::span<const std::int64_t>(moduli_).subspan(1);
  }
  std::size_t arity() const noexcept { return moduli_.size(); }

  /// Every tail modulus is congruent to 1 modulo the first (vacuous for m = 1).
  bool tail_congruent_to_one() const noexcept;

  /// Comma-separated, e.g. "3,5".
  std::string to_string() const;

  friend bool operator==(const ModulusTuple &, const ModulusTuple &) = default;

private:
  std::vector<std::int64_t> moduli_;
};

inline ModulusTuple validate_tuple(std::span<const std::int64_t> moduli) {
  return ModulusTuple::validate(moduli);
}

enum class ClassKind { All, Regular, ClassRegular, InferiorRegular };

std::string_view to_string(ClassKind kind) noexcept;

struct PartitionClass {
  ClassKind kind = ClassKind::All;
  // Ignored for ClassKind::All.
  ModulusTuple moduli = ModulusTuple::single(2);

  static PartitionClass all() { return {}; }
  static PartitionClass regular(ModulusTuple r) { return {ClassKind::Regular, std::move(r)}; }
  static PartitionClass class_regular(ModulusTuple r) {
    return {ClassKind::ClassRegular, std::move(r)};
  }
  static PartitionClass inferior(ModulusTuple r) {
    return {ClassKind::InferiorRegular, std::move(r)};
  }
};

bool is_member(const Partition &lambda, const PartitionClass &c);

using PartitionVisitor = std::function<void(const Partition &)>;

/// Visits every partition of n in the class exactly once, descending
/// lexicographic order of part sequences.
void for_each_in_class(const PartitionClass &c, std::int64_t n, const PartitionVisitor &visit);

std::vector<Partition> enumerate_class(const PartitionClass &c, std::int64_t n);

std::int64_t count_class(const PartitionClass &c, std::int64_t n);

/// Slow reference: filters every partition of n through is_member.
std::vector<Partition> enumerate_class_by_filter(const PartitionClass &c, std::int64_t n);

/// The first run (largest part size and its multiplicity) of a partition.
/// Enumerations split on it so that independent branches can be walked
/// concurrently; concatenating the branches in the returned order
/// reproduces the canonical listing.
struct Branch {
  Part size = 0;
  std::int64_t count = 0;
};

std::vector<Branch> top_branches(const PartitionClass &c, std::int64_t n);

void for_each_in_branch(const PartitionClass &c, std::int64_t n, Branch branch,
                        const PartitionVisitor &visit);

} // namespace rpart

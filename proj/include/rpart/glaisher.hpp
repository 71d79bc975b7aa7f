#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "rpart/enumeration.hpp"
#include "rpart/partition.hpp"

namespace rpart {

enum class StepDirection { Merge, Split };

// A merge replaces k^r by the single part r*k; a split is the reverse.
struct GlaisherStep {
  Part k = 0;
  StepDirection direction = StepDirection::Merge;

  friend bool operator==(const GlaisherStep &, const GlaisherStep &) = default;
};

struct GlaisherTrace {
  std::int64_t r = 2;
  Partition start;
  Partition end;
  std::vector<GlaisherStep> steps;

  std::int64_t count() const noexcept { return static_cast<std::int64_t>(steps.size()); }

  /// Replays the steps from start: start, after step 1, ..., end.
  std::vector<Partition> states() const;
};

/// Applies one step to a partition. Throws NotSubMultiset when the parts the
/// step consumes are missing.
Partition apply_step(const Partition &lambda, std::int64_t r, GlaisherStep step);

/// Picks which eligible part size to merge next; receives the sizes k with
/// m_k >= r in increasing order and returns an index into that list.
using MergeSelector = std::function<std::size_t(std::span<const Part>)>;

/// The Glaisher map g_r with its full step list. Defined on every
/// partition; merges the smallest eligible part size first.
GlaisherTrace glaisher_forward(const Partition &lambda, std::int64_t r);

/// Same map with a caller-chosen merge order. Any order reaches the same end
/// partition after the same number of merges.
GlaisherTrace glaisher_forward(const Partition &lambda, std::int64_t r,
                               const MergeSelector &select);

/// g_r^{-1} on an r-regular partition: splits the smallest part divisible by
/// r until none remains. Throws Error(NotRegular) when mu has a
/// multiplicity of r or more.
GlaisherTrace glaisher_inverse(const Partition &mu, std::int64_t r);

/// g_r(lambda) and c_r(lambda) without recording a trace.
struct GlaisherImage {
  Partition image;
  std::int64_t count = 0;
};

GlaisherImage glaisher_image(const Partition &lambda, std::int64_t r);

/// c_r(lambda) alone, using a caller-owned scratch table indexed by part
/// size (resized as needed). Hot path for aggregation kernels.
std::int64_t glaisher_count(const Partition &lambda, std::int64_t r,
                            std::vector<std::int64_t> &scratch);

struct SFactorization {
  std::int64_t s_part = 1;
  std::int64_t s_prime_part = 1;

  friend bool operator==(const SFactorization &, const SFactorization &) = default;
};

/// Splits ell into its largest divisor built from the given moduli and the
/// cofactor that none of them divides.
SFactorization s_factorize(std::int64_t ell, std::span<const std::int64_t> s);

/// An element (lambda; k, ell) of the domain of phi: lambda class-regular,
/// k congruent to j mod r_1, and 1 <= ell <= m_k(lambda).
struct BijectionTriple {
  Partition lambda;
  Part k = 0;
  std::int64_t ell = 0;

  friend bool operator==(const BijectionTriple &, const BijectionTriple &) = default;
  friend auto operator<=>(const BijectionTriple &a, const BijectionTriple &b) {
    if (auto c = a.lambda <=> b.lambda; c != 0)
      return c;
    if (auto c = a.k <=> b.k; c != 0)
      return c;
    return a.ell <=> b.ell;
  }
};

/// Throws Error(JOutOfRange) unless 1 <= j <= r_1 - 1.
void check_j(const ModulusTuple &r, std::int64_t j);

bool is_valid_triple(const ModulusTuple &r, std::int64_t j, const BijectionTriple &t);

/// mu = g_{r_1}(lambda \ k^ell) joined with ((ell)_{s'}) repeated k*(ell)_s
/// times. Throws Error(JOutOfRange) or Error(InvalidTriple).
Partition phi(const ModulusTuple &r, std::int64_t j, const BijectionTriple &t);

/// Every triple that phi sends to mu, sorted. Candidates are rebuilt from
/// each run of equal parts in mu and confirmed by applying phi.
std::vector<BijectionTriple> phi_preimages(const ModulusTuple &r, std::int64_t j, std::int64_t n,
                                           const Partition &mu);

/// The whole domain A_{r,j,n} listed by brute force.
std::vector<BijectionTriple> bijection_domain(const ModulusTuple &r, std::int64_t j,
                                              std::int64_t n);

} // namespace rpart

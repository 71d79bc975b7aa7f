#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rpart/enumeration.hpp"

namespace rpart {

/// A formal power series in q known modulo q^{N+1}, with exact 64-bit
/// coefficients. Every arithmetic step is overflow-checked and throws
/// Error(Overflow) rather than wrapping.
class TruncatedSeries {
public:
  /// The zero series truncated at degree N.
  explicit TruncatedSeries(std::size_t N) : coeffs_(N + 1, 0) {}
  /// Coefficients beyond degree N are dropped; missing ones are zero.
  TruncatedSeries(std::vector<std::int64_t> coeffs, std::size_t N);

  static TruncatedSeries one(std::size_t N);
  /// sign * q^d, or zero when d > N.
  static TruncatedSeries monomial(std::size_t d, std::size_t N, std::int64_t sign = 1);

  std::size_t truncation() const noexcept { return coeffs_.size() - 1; }
  std::int64_t operator[](std::size_t d) const { return coeffs_.at(d); }
  std::span<const std::int64_t> coeffs() const noexcept { return coeffs_; }

  /// Copy cut down to a smaller truncation degree.
  TruncatedSeries truncated(std::size_t N) const;

  friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

private:
  std::vector<std::int64_t> coeffs_;
};

// Binary operations on series of different truncation reduce to the smaller.
TruncatedSeries add(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries sub(const TruncatedSeries &f, const TruncatedSeries &g);
TruncatedSeries negate(const TruncatedSeries &f);
TruncatedSeries scale(const TruncatedSeries &f, std::int64_t c);
TruncatedSeries mul(const TruncatedSeries &f, const TruncatedSeries &g);
/// Serial product kept as the reference for mul.
TruncatedSeries mul_serial(const TruncatedSeries &f, const TruncatedSeries &g);
/// Multiplicative inverse; throws Error(NonInvertible) unless c_0 = +-1.
TruncatedSeries invert(const TruncatedSeries &f);
/// f^e for any integer e (negative powers go through invert).
TruncatedSeries power(const TruncatedSeries &f, std::int64_t e);

/// (q^a; q^a)_inf = prod_{k >= 1} (1 - q^{ak}).
TruncatedSeries euler_product(std::int64_t a, std::size_t N);

/// q^a / (1 - q^a) = sum_{m >= 1} q^{ma}.
TruncatedSeries geometric_tail(std::int64_t a, std::size_t N);

/// prod over subsets A of the moduli (empty A included, with product 1) of
/// (q^{prod A}; q^{prod A})_inf raised to (-1)^{|A|+1}. Generating function
/// of both the class-regular and the regular partitions of a tuple.
TruncatedSeries regular_product(const ModulusTuple &r, std::size_t N);

/// sum_{k >= 1} q^{rk} / (1 - q^{rk}).
TruncatedSeries tail_sum(std::int64_t r, std::size_t N);

/// The same sum regrouped by the exact power of r in the merged part:
/// sum_{i >= 1} sum_{k, r does not divide k} q^{r^i k} / (1 - q^{r^i k}).
TruncatedSeries tail_sum_by_powers(std::int64_t r, std::size_t N);

/// sum over subsets A containing r_1 of sum_{k >= 1}
/// (-1)^{|A|+1} q^{k prod A} / (1 - q^{k prod A}).
TruncatedSeries tail_sum_inclusion_exclusion(const ModulusTuple &r, std::size_t N);

/// sum over k >= 1 with no tail modulus dividing k of
/// q^{r_1 k} / (1 - q^{r_1 k}).
TruncatedSeries tail_sum_restricted(const ModulusTuple &r, std::size_t N);

/// regular_product times tail_sum_inclusion_exclusion: counts the inferior
/// regular partitions of a tuple and, equally, the Glaisher operations over
/// its class-regular partitions.
TruncatedSeries gf_tuple_inferior(const ModulusTuple &r, std::size_t N);

/// Closed-form generating function of a class.
TruncatedSeries gf_class(const PartitionClass &c, std::size_t N);

struct SeriesDegreeCheck {
  std::size_t degree = 0;
  std::int64_t coefficient = 0;
  std::int64_t count = 0;                    // members of the class at this size
  std::optional<std::int64_t> glaisher_ops;  // inferior classes: sum of c_{r_1} over CP
  std::optional<std::int64_t> regular_count; // inferior classes: #RP at this size
  bool pass = false;
};

struct SeriesVerification {
  PartitionClass cls;
  std::size_t truncation = 0;
  std::vector<SeriesDegreeCheck> degrees;
  std::optional<std::size_t> first_mismatch;
  /// Inferior classes only: first degree where the coefficient differs from
  /// the regular-partition count, showing the series does not count RP.
  std::optional<std::size_t> regular_reading_mismatch;

  bool pass() const noexcept { return !first_mismatch.has_value(); }
};

SeriesVerification verify_series_vs_enumeration(const PartitionClass &c, std::size_t N);

} // namespace rpart

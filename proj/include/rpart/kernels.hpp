#pragma once

// Data-parallel kernels. Each has a serial twin with identical results; the
// serial versions stay as test references and benchmark baselines.

#include <cstdint>
#include <vector>

#include "rpart/enumeration.hpp"

namespace rpart::kernels {

// Sums over one partition class at size n, indexed by j = 1 .. r_1 - 1 at
// position j - 1.
struct ClassSums {
  std::int64_t members = 0;
  std::int64_t total_length = 0;
  std::vector<std::int64_t> x; // sum of x_{r_1,j}
  std::vector<std::int64_t> y; // sum of y_{r_1,j}
  std::int64_t glaisher_ops = 0; // sum of c_{r_1}

  friend bool operator==(const ClassSums &, const ClassSums &) = default;
};

ClassSums class_sums_serial(const PartitionClass &c, std::int64_t n);
ClassSums class_sums_parallel(const PartitionClass &c, std::int64_t n);

// Coefficients d = 0..N of the product of two series truncated at N.
std::vector<std::int64_t> series_mul_serial(const std::vector<std::int64_t> &f,
                                            const std::vector<std::int64_t> &g, std::size_t N);
std::vector<std::int64_t> series_mul_parallel(const std::vector<std::int64_t> &f,
                                              const std::vector<std::int64_t> &g, std::size_t N);

} // namespace rpart::kernels

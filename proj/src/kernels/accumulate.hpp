#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "rpart/checked.hpp"
#include "rpart/glaisher.hpp"
#include "rpart/kernels.hpp"

namespace rpart::kernels::detail {

inline ClassSums empty_sums(const PartitionClass &c) {
  const auto width = static_cast<std::size_t>(c.moduli.first() - 1);
  return {0, 0, std::vector<std::int64_t>(width, 0), std::vector<std::int64_t>(width, 0), 0};
}

// Folds one partition into the running sums. `scratch` backs glaisher_count.
inline void accumulate(ClassSums &acc, const Partition &lambda, std::int64_t r1,
                       std::vector<std::int64_t> &scratch) {
  acc.members = checked::add(acc.members, 1);
  for (const Block &b : lambda.blocks()) {
    acc.total_length = checked::add(acc.total_length, b.count);
    const std::int64_t residue = b.size % r1;
    if (residue != 0)
      acc.x[static_cast<std::size_t>(residue - 1)] =
          checked::add(acc.x[static_cast<std::size_t>(residue - 1)], b.count);
    // b contributes to y_j for every j <= its multiplicity.
    const std::int64_t top = std::min(b.count, r1 - 1);
    for (std::int64_t j = 1; j <= top; ++j)
      acc.y[static_cast<std::size_t>(j - 1)] = checked::add(acc.y[static_cast<std::size_t>(j - 1)], 1);
  }
  acc.glaisher_ops = checked::add(acc.glaisher_ops, glaisher_count(lambda, r1, scratch));
}

inline void merge_into(ClassSums &dst, const ClassSums &src) {
  dst.members = checked::add(dst.members, src.members);
  dst.total_length = checked::add(dst.total_length, src.total_length);
  for (std::size_t i = 0; i < dst.x.size(); ++i) {
    dst.x[i] = checked::add(dst.x[i], src.x[i]);
    dst.y[i] = checked::add(dst.y[i], src.y[i]);
  }
  dst.glaisher_ops = checked::add(dst.glaisher_ops, src.glaisher_ops);
}

inline void check_truncation(const std::vector<std::int64_t> &f, const std::vector<std::int64_t> &g,
                             std::size_t N) {
  if (f.size() < N + 1 || g.size() < N + 1)
    throw Error(ErrorKind::InvalidPart, "series shorter than the requested truncation");
}

} // namespace rpart::kernels::detail

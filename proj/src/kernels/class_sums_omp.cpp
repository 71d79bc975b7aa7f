#include <exception>

#include "accumulate.hpp"

namespace rpart::kernels {

ClassSums class_sums_parallel(const PartitionClass &c, std::int64_t n) {
  if (n <= 0)
    return class_sums_serial(c, n);
  const std::vector<Branch> branches = top_branches(c, n);
  const std::int64_t r1 = c.moduli.first();
  const auto count = static_cast<std::int64_t>(branches.size());
  ClassSums total = detail::empty_sums(c);
  std::exception_ptr failure;

#pragma omp parallel
  {
    ClassSums local = detail::empty_sums(c);
    std::vector<std::int64_t> scratch;
#pragma omp for schedule(dynamic, 1) nowait
    for (std::int64_t b = 0; b < count; ++b) {
      try {
        for_each_in_branch(c, n, branches[static_cast<std::size_t>(b)], [&](const Partition &lambda) {
          detail::accumulate(local, lambda, r1, scratch);
        });
      } catch (...) {
#pragma omp critical(rpart_class_sums_error)
        failure = std::current_exception();
      }
    }
#pragma omp critical(rpart_class_sums_merge)
    {
      try {
        detail::merge_into(total, local);
      } catch (...) {
        failure = std::current_exception();
      }
    }
  }
  if (failure)
    std::rethrow_exception(failure);
  return total;
}

std::vector<std::int64_t> series_mul_parallel(const std::vector<std::int64_t> &f,
                                              const std::vector<std::int64_t> &g, std::size_t N) {
  detail::check_truncation(f, g, N);
  std::vector<std::int64_t> out(N + 1, 0);
  const auto top = static_cast<std::int64_t>(N);
  bool overflow = false;

#pragma omp parallel for schedule(dynamic, 8) reduction(|| : overflow)
  for (std::int64_t d = 0; d <= top; ++d) {
    std::int64_t acc = 0;
    for (std::int64_t i = 0; i <= d; ++i) {
      std::int64_t term;
      if (__builtin_mul_overflow(f[static_cast<std::size_t>(i)], g[static_cast<std::size_t>(d - i)], &term) ||
          __builtin_add_overflow(acc, term, &acc)) {
        overflow = true;
        break;
      }
    }
    out[static_cast<std::size_t>(d)] = acc;
  }
  if (overflow)
    throw Error(ErrorKind::Overflow, "series product coefficient exceeds 64 bits");
  return out;
}

} // namespace rpart::kernels

#include "accumulate.hpp"

namespace rpart::kernels {

ClassSums class_sums_serial(const PartitionClass &c, std::int64_t n) {
  ClassSums acc = detail::empty_sums(c);
  std::vector<std::int64_t> scratch;
  const std::int64_t r1 = c.moduli.first();
  for_each_in_class(c, n, [&](const Partition &lambda) { detail::accumulate(acc, lambda, r1, scratch); });
  return acc;
}

std::vector<std::int64_t> series_mul_serial(const std::vector<std::int64_t> &f,
                                            const std::vector<std::int64_t> &g, std::size_t N) {
  detail::check_truncation(f, g, N);
  std::vector<std::int64_t> out(N + 1, 0);
  for (std::size_t i = 0; i <= N; ++i) {
    if (f[i] == 0)
      continue;
    for (std::size_t k = 0; i + k <= N; ++k)
      out[i + k] = checked::add(out[i + k], checked::mul(f[i], g[k]));
  }
  return out;
}

} // namespace rpart::kernels

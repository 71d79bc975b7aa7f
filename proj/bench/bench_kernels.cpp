// Times each parallel kernel against its serial twin.
//   bench_kernels [n] [truncation] [repeats]

#include <chrono>
#include <cstdio>
#include <algorithm>
#include <cstdlib>

#include <omp.h>

#include "rpart/kernels.hpp"

using namespace rpart;

namespace {

template <class F>
double best_of(int repeats, F &&f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const double dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    best = std::min(best, dt);
  }
  return best;
}

void row(const char *name, double serial, double parallel, bool same) {
  std::printf("%-28s serial %9.2f ms   parallel %9.2f ms   speedup %5.2fx   %s\n", name, serial,
              parallel, serial / parallel, same ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char **argv) {
  const std::int64_t n = argc > 1 ? std::atoll(argv[1]) : 60;
  const std::size_t trunc = argc > 2 ? static_cast<std::size_t>(std::atoll(argv[2])) : 4000;
  const int repeats = argc > 3 ? std::atoi(argv[3]) : 3;
  std::printf("threads=%d n=%lld truncation=%zu repeats=%d\n", omp_get_max_threads(),
              static_cast<long long>(n), trunc, repeats);

  const ModulusTuple r3 = ModulusTuple::single(3);
  const ModulusTuple r237 = ModulusTuple::validate({2, 3, 7});
  const struct {
    const char *name;
    PartitionClass cls;
  } cases[] = {{"class sums all", PartitionClass::all()},
               {"class sums cp 3", PartitionClass::class_regular(r3)},
               {"class sums rp 2,3,7", PartitionClass::regular(r237)}};
  for (const auto &c : cases) {
    kernels::ClassSums a, b;
    const double s = best_of(repeats, [&] { a = kernels::class_sums_serial(c.cls, n); });
    const double p = best_of(repeats, [&] { b = kernels::class_sums_parallel(c.cls, n); });
    row(c.name, s, p, a == b);
  }

  std::vector<std::int64_t> x(trunc + 1), y(trunc + 1);
  for (std::size_t i = 0; i <= trunc; ++i) {
    x[i] = static_cast<std::int64_t>(i % 17) - 8;
    y[i] = static_cast<std::int64_t>(i % 11) - 5;
  }
  std::vector<std::int64_t> a, b;
  const double s = best_of(repeats, [&] { a = kernels::series_mul_serial(x, y, trunc); });
  const double p = best_of(repeats, [&] { b = kernels::series_mul_parallel(x, y, trunc); });
  row("series product", s, p, a == b);
  return 0;
}

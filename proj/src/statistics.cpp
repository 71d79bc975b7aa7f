#include "rpart/statistics.hpp"

#include <algorithm>

#include "rpart/checked.hpp"
#include "rpart/error.hpp"
#include "rpart/kernels.hpp"

namespace rpart {

namespace {

void check_stat_args(std::int64_t r, std::int64_t j) {
  if (r < 2)
    throw Error(ErrorKind::TooSmall, "modulus " + std::to_string(r) + " is below 2");
  if (j < 1 || j > r - 1)
    throw Error(ErrorKind::JOutOfRange,
                "j = " + std::to_string(j) + " outside 1.." + std::to_string(r - 1));
}

} // namespace

std::int64_t x_stat(const Partition &lambda, std::int64_t r, std::int64_t j) {
  check_stat_args(r, j);
  std::int64_t total = 0;
  for (const Block &b : lambda.blocks())
    if (b.size % r == j)
      total = checked::add(total, b.count);
  return total;
}

std::int64_t y_stat(const Partition &mu, std::int64_t r, std::int64_t j) {
  check_stat_args(r, j);
  return std::count_if(mu.blocks().begin(), mu.blocks().end(),
                       [j](const Block &b) { return b.count >= j; });
}

XYCReport aggregate(const ModulusTuple &r, std::int64_t n) {
  const auto cp = kernels::class_sums_parallel(PartitionClass::class_regular(r), n);
  const auto rp = kernels::class_sums_parallel(PartitionClass::regular(r), n);
  const std::int64_t inferior = count_class(PartitionClass::inferior(r), n);

  XYCReport report{r, n, {}, cp.glaisher_ops, inferior, r.tail_congruent_to_one()};
  for (std::int64_t j = 1; j < r.first(); ++j) {
    const auto idx = static_cast<std::size_t>(j - 1);
    report.per_j.push_back({j, cp.x[idx], rp.y[idx]});
  }
  return report;
}

bool XYCVerification::genuine_failure() const noexcept {
  if (!report.hypothesis_holds)
    return false;
  return !all_pass();
}

bool XYCVerification::all_pass() const noexcept {
  return c_matches_inferior && std::all_of(verdicts.begin(), verdicts.end(), [](const XYCVerdict &v) {
           return v.pass && v.inferior_matches;
         });
}

XYCVerification verify_xyc(const ModulusTuple &r, std::int64_t n) {
  XYCVerification out{aggregate(r, n), {}, false};
  const auto &rep = out.report;
  out.c_matches_inferior = rep.c == rep.inferior_count;
  for (const XYRow &row : rep.per_j) {
    out.verdicts.push_back({row.j, row.diff() == rep.c, row.x == row.y + rep.inferior_count, row.x,
                            row.y, rep.c, rep.inferior_count});
  }
  return out;
}

LengthVerdict verify_length_identity(const ModulusTuple &r, std::int64_t n) {
  const auto cp = kernels::class_sums_parallel(PartitionClass::class_regular(r), n);
  const auto rp = kernels::class_sums_parallel(PartitionClass::regular(r), n);
  LengthVerdict v{r, n, cp.total_length, rp.total_length, cp.glaisher_ops, false};
  v.pass = v.class_regular_length - v.regular_length == checked::mul(r.first() - 1, v.c);
  return v;
}

} // namespace rpart

#include "rpart/qseries.hpp"

#include <algorithm>
#include <bit>

#include "rpart/checked.hpp"
#include "rpart/error.hpp"
#include "rpart/kernels.hpp"

namespace rpart {

TruncatedSeries::TruncatedSeries(std::vector<std::int64_t> coeffs, std::size_t N)
    : coeffs_(std::move(coeffs)) {
  coeffs_.resize(N + 1, 0);
}

TruncatedSeries TruncatedSeries::one(std::size_t N) { return monomial(0, N); }

TruncatedSeries TruncatedSeries::monomial(std::size_t d, std::size_t N, std::int64_t sign) {
  TruncatedSeries s(N);
  if (d <= N)
    s.coeffs_[d] = sign;
  return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t N) const {
  return TruncatedSeries({coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(
                                                                std::min(N, truncation()) + 1)},
                         N);
}

namespace {

std::size_t common_truncation(const TruncatedSeries &f, const TruncatedSeries &g) {
  return std::min(f.truncation(), g.truncation());
}

std::vector<std::int64_t> copy_coeffs(const TruncatedSeries &f, std::size_t N) {
  auto c = f.coeffs();
  return {c.begin(), c.begin() + static_cast<std::ptrdiff_t>(N + 1)};
}

void check_step(std::int64_t a) {
  if (a < 1)
    throw Error(ErrorKind::TooSmall, "series step " + std::to_string(a) + " is below 1");
}

// Multiplies f in place by (1 - q^a).
void mul_one_minus(std::vector<std::int64_t> &f, std::size_t a) {
  for (std::size_t d = f.size() - 1; d >= a; --d) {
    f[d] = checked::sub(f[d], f[d - a]);
    if (d == a)
      break;
  }
}

// Calls f(mask, product, size) for every subset of the moduli whose product
// stays within N; larger products contribute nothing below q^{N+1}.
template <class F>
void for_each_subset(std::span<const std::int64_t> moduli, std::size_t N, F &&f) {
  const std::uint64_t subsets = std::uint64_t{1} << moduli.size();
  for (std::uint64_t mask = 0; mask < subsets; ++mask) {
    std::int64_t product = 1;
    bool within = true;
    for (std::size_t i = 0; i < moduli.size() && within; ++i) {
      if (mask & (std::uint64_t{1} << i)) {
        product = checked::mul(product, moduli[i]);
        within = product <= static_cast<std::int64_t>(N);
      }
    }
    f(mask, product, within, std::popcount(mask));
  }
}

} // namespace

TruncatedSeries add(const TruncatedSeries &f, const TruncatedSeries &g) {
  const std::size_t N = common_truncation(f, g);
  auto out = copy_coeffs(f, N);
  for (std::size_t d = 0; d <= N; ++d)
    out[d] = checked::add(out[d], g[d]);
  return {std::move(out), N};
}

TruncatedSeries sub(const TruncatedSeries &f, const TruncatedSeries &g) {
  return add(f, negate(g));
}

TruncatedSeries negate(const TruncatedSeries &f) { return scale(f, -1); }

TruncatedSeries scale(const TruncatedSeries &f, std::int64_t c) {
  auto out = copy_coeffs(f, f.truncation());
  for (auto &v : out)
    v = checked::mul(v, c);
  return {std::move(out), f.truncation()};
}

TruncatedSeries mul(const TruncatedSeries &f, const TruncatedSeries &g) {
  const std::size_t N = common_truncation(f, g);
  return {kernels::series_mul_parallel(copy_coeffs(f, N), copy_coeffs(g, N), N), N};
}

TruncatedSeries mul_serial(const TruncatedSeries &f, const TruncatedSeries &g) {
  const std::size_t N = common_truncation(f, g);
  return {kernels::series_mul_serial(copy_coeffs(f, N), copy_coeffs(g, N), N), N};
}

TruncatedSeries invert(const TruncatedSeries &f) {
  const std::int64_t c0 = f[0];
  if (c0 != 1 && c0 != -1)
    throw Error(ErrorKind::NonInvertible,
                "constant term " + std::to_string(c0) + " is not a unit");
  const std::size_t N = f.truncation();
  std::vector<std::int64_t> g(N + 1, 0);
  g[0] = c0;
  for (std::size_t d = 1; d <= N; ++d) {
    std::int64_t acc = 0;
    for (std::size_t i = 1; i <= d; ++i)
      if (f[i] != 0)
        acc = checked::add(acc, checked::mul(f[i], g[d - i]));
    g[d] = checked::mul(-c0, acc);
  }
  return {std::move(g), N};
}

TruncatedSeries power(const TruncatedSeries &f, std::int64_t e) {
  TruncatedSeries base = e < 0 ? invert(f) : f;
  TruncatedSeries out = TruncatedSeries::one(f.truncation());
  for (std::int64_t k = e < 0 ? -e : e; k > 0; --k)
    out = mul(out, base);
  return out;
}

TruncatedSeries euler_product(std::int64_t a, std::size_t N) {
  check_step(a);
  std::vector<std::int64_t> c(N + 1, 0);
  c[0] = 1;
  const auto step = static_cast<std::size_t>(a);
  for (std::size_t m = step; m <= N; m += step)
    mul_one_minus(c, m);
  return {std::move(c), N};
}

TruncatedSeries geometric_tail(std::int64_t a, std::size_t N) {
  check_step(a);
  std::vector<std::int64_t> c(N + 1, 0);
  const auto step = static_cast<std::size_t>(a);
  for (std::size_t d = step; d <= N; d += step)
    c[d] = 1;
  return {std::move(c), N};
}

TruncatedSeries regular_product(const ModulusTuple &r, std::size_t N) {
  TruncatedSeries out = TruncatedSeries::one(N);
  for_each_subset(r.all(), N, [&](std::uint64_t, std::int64_t product, bool within, int size) {
    if (!within)
      return;
    const TruncatedSeries factor = euler_product(product, N);
    out = mul(out, size % 2 == 1 ? factor : invert(factor));
  });
  return out;
}

TruncatedSeries tail_sum(std::int64_t r, std::size_t N) {
  check_step(r);
  TruncatedSeries out(N);
  for (std::int64_t a = r; a <= static_cast<std::int64_t>(N); a += r)
    out = add(out, geometric_tail(a, N));
  return out;
}

TruncatedSeries tail_sum_by_powers(std::int64_t r, std::size_t N) {
  if (r < 2)
    throw Error(ErrorKind::TooSmall, "modulus " + std::to_string(r) + " is below 2");
  const auto top = static_cast<std::int64_t>(N);
  TruncatedSeries out(N);
  for (std::int64_t power = r; power <= top; power = checked::mul(power, r)) {
    for (std::int64_t k = 1; power * k <= top; ++k)
      if (k % r != 0)
        out = add(out, geometric_tail(power * k, N));
    if (power > top / r)
      break;
  }
  return out;
}

TruncatedSeries tail_sum_inclusion_exclusion(const ModulusTuple &r, std::size_t N) {
  TruncatedSeries out(N);
  const auto top = static_cast<std::int64_t>(N);
  for_each_subset(r.all(), N, [&](std::uint64_t mask, std::int64_t product, bool within, int size) {
    if (!(mask & 1) || !within)
      return;
    const std::int64_t sign = size % 2 == 1 ? 1 : -1;
    for (std::int64_t k = 1; k * product <= top; ++k)
      out = add(out, scale(geometric_tail(k * product, N), sign));
  });
  return out;
}

TruncatedSeries tail_sum_restricted(const ModulusTuple &r, std::size_t N) {
  TruncatedSeries out(N);
  const auto tail = r.tail();
  for (std::int64_t k = 1; r.first() * k <= static_cast<std::int64_t>(N); ++k) {
    if (std::any_of(tail.begin(), tail.end(), [k](std::int64_t s) { return k % s == 0; }))
      continue;
    out = add(out, geometric_tail(r.first() * k, N));
  }
  return out;
}

TruncatedSeries gf_tuple_inferior(const ModulusTuple &r, std::size_t N) {
  return mul(regular_product(r, N), tail_sum_inclusion_exclusion(r, N));
}

TruncatedSeries gf_class(const PartitionClass &c, std::size_t N) {
  switch (c.kind) {
  case ClassKind::All:
    return invert(euler_product(1, N));
  case ClassKind::Regular:
  case ClassKind::ClassRegular:
    return regular_product(c.moduli, N);
  case ClassKind::InferiorRegular:
    if (c.moduli.arity() == 1)
      return mul(regular_product(c.moduli, N), tail_sum(c.moduli.first(), N));
    return gf_tuple_inferior(c.moduli, N);
  }
  return TruncatedSeries(N);
}

SeriesVerification verify_series_vs_enumeration(const PartitionClass &c, std::size_t N) {
  const TruncatedSeries series = gf_class(c, N);
  const bool inferior = c.kind == ClassKind::InferiorRegular;
  SeriesVerification out{c, N, {}, std::nullopt, std::nullopt};
  for (std::size_t d = 0; d <= N; ++d) {
    const auto n = static_cast<std::int64_t>(d);
    SeriesDegreeCheck row{d, series[d], kernels::class_sums_parallel(c, n).members, {}, {}, false};
    row.pass = row.coefficient == row.count;
    if (inferior) {
      row.glaisher_ops =
          kernels::class_sums_parallel(PartitionClass::class_regular(c.moduli), n).glaisher_ops;
      row.regular_count = count_class(PartitionClass::regular(c.moduli), n);
      row.pass = row.pass && *row.glaisher_ops == row.coefficient;
      if (!out.regular_reading_mismatch && *row.regular_count != row.coefficient)
        out.regular_reading_mismatch = d;
    }
    if (!row.pass && !out.first_mismatch)
      out.first_mismatch = d;
    out.degrees.push_back(row);
  }
  return out;
}

} // namespace rpart

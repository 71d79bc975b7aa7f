#include "rpart/glaisher.hpp"

#include <algorithm>
#include <map>

#include "rpart/checked.hpp"
#include "rpart/error.hpp"

namespace rpart {

namespace {

using Table = std::map<Part, std::int64_t>;

Table to_table(const Partition &lambda) {
  Table t;
  for (const Block &b : lambda.blocks())
    t.emplace(b.size, b.count);
  return t;
}

Partition from_table(const Table &t) {
  std::vector<Block> blocks;
  blocks.reserve(t.size());
  for (auto it = t.rbegin(); it != t.rend(); ++it)
    if (it->second > 0)
      blocks.push_back({it->first, it->second});
  return Partition::from_canonical_blocks(std::move(blocks));
}

void take(Table &t, Part k, std::int64_t count) {
  auto it = t.find(k);
  it->second -= count;
  if (it->second == 0)
    t.erase(it);
}

bool is_regular(const Partition &mu, std::int64_t r) {
  return std::all_of(mu.blocks().begin(), mu.blocks().end(),
                     [r](const Block &b) { return b.count < r; });
}

void check_r(std::int64_t r) {
  if (r < 2)
    throw Error(ErrorKind::TooSmall, "modulus " + std::to_string(r) + " is below 2");
}

} // namespace

std::vector<Partition> GlaisherTrace::states() const {
  std::vector<Partition> out{start};
  out.reserve(steps.size() + 1);
  for (const GlaisherStep &s : steps)
    out.push_back(apply_step(out.back(), r, s));
  return out;
}

Partition apply_step(const Partition &lambda, std::int64_t r, GlaisherStep step) {
  const Block small{step.k, r};
  const Block big{checked::mul(step.k, r), 1};
  const Block &removed = step.direction == StepDirection::Merge ? small : big;
  const Block &added = step.direction == StepDirection::Merge ? big : small;
  return multiset_union(multiset_difference(lambda, Partition::from_blocks({&removed, 1})),
                        Partition::from_blocks({&added, 1}));
}

GlaisherTrace glaisher_forward(const Partition &lambda, std::int64_t r) {
  return glaisher_forward(lambda, r, [](std::span<const Part>) { return std::size_t{0}; });
}

GlaisherTrace glaisher_forward(const Partition &lambda, std::int64_t r,
                               const MergeSelector &select) {
  check_r(r);
  GlaisherTrace trace{r, lambda, {}, {}};
  Table t = to_table(lambda);
  std::vector<Part> eligible;
  for (;;) {
    eligible.clear();
    for (const auto &[k, m] : t)
      if (m >= r)
        eligible.push_back(k);
    if (eligible.empty())
      break;
    const Part k = eligible.at(select(eligible));
    take(t, k, r);
    t[checked::mul(r, k)] += 1;
    trace.steps.push_back({k, StepDirection::Merge});
  }
  trace.end = from_table(t);
  return trace;
}

GlaisherTrace glaisher_inverse(const Partition &mu, std::int64_t r) {
  check_r(r);
  if (!is_regular(mu, r))
    throw Error(ErrorKind::NotRegular,
                to_array_string(mu) + " has a part repeated " + std::to_string(r) + " or more times");
  GlaisherTrace trace{r, mu, {}, {}};
  Table t = to_table(mu);
  for (;;) {
    auto it = std::find_if(t.begin(), t.end(), [r](const auto &e) { return e.first % r == 0; });
    if (it == t.end())
      break;
    const Part k = it->first / r;
    take(t, it->first, 1);
    t[k] = checked::add(t[k], r);
    trace.steps.push_back({k, StepDirection::Split});
  }
  trace.end = from_table(t);
  return trace;
}

GlaisherImage glaisher_image(const Partition &lambda, std::int64_t r) {
  check_r(r);
  Table t = to_table(lambda);
  std::int64_t count = 0;
  // Merges only ever create larger sizes, so one ascending sweep settles
  // every size before anything can be carried into it again.
  for (auto it = t.begin(); it != t.end(); ++it) {
    const std::int64_t q = it->second / r;
    if (q == 0)
      continue;
    it->second %= r;
    count = checked::add(count, q);
    auto &dst = t[checked::mul(r, it->first)];
    dst = checked::add(dst, q);
  }
  return {from_table(t), count};
}

std::int64_t glaisher_count(const Partition &lambda, std::int64_t r,
                            std::vector<std::int64_t> &scratch) {
  const auto n = static_cast<std::size_t>(lambda.size());
  if (scratch.size() < n + 1)
    scratch.assign(n + 1, 0);
  for (const Block &b : lambda.blocks())
    scratch[static_cast<std::size_t>(b.size)] = b.count;
  const auto ru = static_cast<std::size_t>(r);
  std::int64_t count = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const std::int64_t m = scratch[k];
    if (m == 0)
      continue;
    scratch[k] = 0;
    const std::int64_t q = m / r;
    if (q > 0) {
      count += q;
      scratch[ru * k] += q; // q * r * k <= n
    }
  }
  return count;
}

SFactorization s_factorize(std::int64_t ell, std::span<const std::int64_t> s) {
  if (ell < 1)
    throw Error(ErrorKind::InvalidPart, "cannot factor " + std::to_string(ell));
  SFactorization f{1, ell};
  for (std::int64_t r : s) {
    while (f.s_prime_part % r == 0) {
      f.s_prime_part /= r;
      f.s_part *= r;
    }
  }
  return f;
}

void check_j(const ModulusTuple &r, std::int64_t j) {
  if (j < 1 || j > r.first() - 1)
    throw Error(ErrorKind::JOutOfRange, "j = " + std::to_string(j) + " outside 1.." +
                                            std::to_string(r.first() - 1));
}

bool is_valid_triple(const ModulusTuple &r, std::int64_t j, const BijectionTriple &t) {
  const std::int64_t r1 = r.first();
  return t.k >= 1 && t.k % r1 == j % r1 && t.ell >= 1 && t.ell <= t.lambda.multiplicity(t.k) &&
         is_member(t.lambda, PartitionClass::class_regular(r));
}

Partition phi(const ModulusTuple &r, std::int64_t j, const BijectionTriple &t) {
  check_j(r, j);
  if (!is_valid_triple(r, j, t))
    throw Error(ErrorKind::InvalidTriple, "(" + to_array_string(t.lambda) + "; " +
                                              std::to_string(t.k) + ", " + std::to_string(t.ell) +
                                              ") is outside the domain");
  const Block removed{t.k, t.ell};
  const Partition rest = multiset_difference(t.lambda, Partition::from_blocks({&removed, 1}));
  const SFactorization f = s_factorize(t.ell, r.tail());
  const Block appended{f.s_prime_part, checked::mul(t.k, f.s_part)};
  return multiset_union(glaisher_image(rest, r.first()).image,
                        Partition::from_blocks({&appended, 1}));
}

std::vector<BijectionTriple> phi_preimages(const ModulusTuple &r, std::int64_t j, std::int64_t n,
                                           const Partition &mu) {
  check_j(r, j);
  std::vector<BijectionTriple> out;
  if (mu.size() != n)
    return out;
  const std::int64_t r1 = r.first();
  const auto tail = r.tail();
  for (const Block &run : mu.blocks()) {
    // run.size plays (ell)_{s'}, and a block of b copies splits as
    // b = k * (ell)_s.
    const Part a = run.size;
    if (s_factorize(a, tail).s_part != 1)
      continue;
    for (std::int64_t b = 1; b <= run.count; ++b) {
      const Block block{a, b};
      const Partition rest = multiset_difference(mu, Partition::from_blocks({&block, 1}));
      if (!is_regular(rest, r1))
        continue;
      const Partition base = glaisher_inverse(rest, r1).end;
      for (std::int64_t s_part = 1; s_part <= b; ++s_part) {
        if (b % s_part != 0 || s_factorize(s_part, tail).s_prime_part != 1)
          continue;
        const Part k = b / s_part;
        if (k % r1 != j)
          continue;
        const std::int64_t ell = checked::mul(a, s_part);
        if (s_factorize(ell, tail) != SFactorization{s_part, a})
          continue;
        const Block kl{k, ell};
        BijectionTriple t{multiset_union(base, Partition::from_blocks({&kl, 1})), k, ell};
        if (is_valid_triple(r, j, t) && phi(r, j, t) == mu)
          out.push_back(std::move(t));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BijectionTriple> bijection_domain(const ModulusTuple &r, std::int64_t j,
                                              std::int64_t n) {
  check_j(r, j);
  std::vector<BijectionTriple> out;
  for_each_in_class(PartitionClass::class_regular(r), n, [&](const Partition &lambda) {
    for (const Block &b : lambda.blocks())
      if (b.size % r.first() == j)
        for (std::int64_t ell = 1; ell <= b.count; ++ell)
          out.push_back({lambda, b.size, ell});
  });
  return out;
}

} // namespace rpart

#include "rpart/enumeration.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "rpart/error.hpp"

namespace rpart {

ModulusTuple ModulusTuple::validate(std::span<const std::int64_t> moduli) {
  if (moduli.empty())
    throw Error(ErrorKind::Empty, "modulus tuple has no entries");
  for (std::int64_t r : moduli)
    if (r < 2)
      throw Error(ErrorKind::TooSmall, "modulus " + std::to_string(r) + " is below 2");
  for (std::size_t i = 0; i < moduli.size(); ++i)
    for (std::size_t j = i + 1; j < moduli.size(); ++j)
      if (std::gcd(moduli[i], moduli[j]) != 1)
        throw Error(ErrorKind::NotCoprime, "moduli " + std::to_string(moduli[i]) + " and " +
                                               std::to_string(moduli[j]) + " share a factor");
  ModulusTuple t;
  t.moduli_.assign(moduli.begin(), moduli.end());
  return t;
}

bool ModulusTuple::tail_congruent_to_one() const noexcept {
  return std::all_of(tail().begin(), tail().end(),
                     [r1 = first()](std::int64_t r) { return r % r1 == 1; });
}

std::string ModulusTuple::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < moduli_.size(); ++i) {
    if (i)
      out += ',';
    out += std::to_string(moduli_[i]);
  }
  return out;
}

std::string_view to_string(ClassKind kind) noexcept {
  switch (kind) {
  case ClassKind::All: return "all";
  case ClassKind::Regular: return "rp";
  case ClassKind::ClassRegular: return "cp";
  case ClassKind::InferiorRegular: return "irp";
  }
  return "?";
}

namespace {

constexpr std::int64_t kUnbounded = std::numeric_limits<std::int64_t>::max();

bool divisible_by_any(Part p, std::span<const std::int64_t> moduli) {
  return std::any_of(moduli.begin(), moduli.end(), [p](std::int64_t r) { return p % r == 0; });
}

// Per-class generation rules: forbidden divisors, a multiplicity cap, and
// whether exactly one part size must break the cap.
struct Rules {
  std::span<const std::int64_t> forbidden;
  std::int64_t cap = kUnbounded;
  bool exactly_one_over = false;

  static Rules of(const PartitionClass &c) {
    switch (c.kind) {
    case ClassKind::All: return {};
    case ClassKind::ClassRegular: return {c.moduli.all(), kUnbounded, false};
    case ClassKind::Regular: return {c.moduli.tail(), c.moduli.first() - 1, false};
    case ClassKind::InferiorRegular: return {c.moduli.tail(), c.moduli.first() - 1, true};
    }
    return {};
  }

  // Multiplicities allowed for part size p with `room` copies fitting,
  // largest first.
  template <class F>
  void for_each_count(std::int64_t room, bool over_used, F &&f) const {
    if (exactly_one_over && !over_used)
      for (std::int64_t m = room; m > cap; --m)
        f(m, true);
    for (std::int64_t m = std::min(room, cap); m >= 1; --m)
      f(m, false);
  }
};

class Walker {
public:
  Walker(const Rules &rules, const PartitionVisitor &visit) : rules_(rules), visit_(visit) {}

  void walk(std::int64_t remaining, Part max_part, bool over_used) {
    if (remaining == 0) {
      if (!rules_.exactly_one_over || over_used)
        visit_(Partition::from_canonical_blocks(blocks_));
      return;
    }
    for (Part p = std::min(remaining, max_part); p >= 1; --p) {
      if (divisible_by_any(p, rules_.forbidden))
        continue;
      rules_.for_each_count(remaining / p, over_used, [&](std::int64_t m, bool over) {
        blocks_.push_back({p, m});
        walk(remaining - p * m, p - 1, over_used || over);
        blocks_.pop_back();
      });
    }
  }

  void walk_branch(std::int64_t n, Branch b) {
    blocks_.push_back({b.size, b.count});
    walk(n - b.size * b.count, b.size - 1, b.count > rules_.cap);
    blocks_.pop_back();
  }

private:
  const Rules &rules_;
  const PartitionVisitor &visit_;
  std::vector<Block> blocks_;
};

bool admits_empty(const PartitionClass &c) { return c.kind != ClassKind::InferiorRegular; }

} // namespace

bool is_member(const Partition &lambda, const PartitionClass &c) {
  const Rules rules = Rules::of(c);
  std::int64_t over = 0;
  for (const Block &b : lambda.blocks()) {
    if (divisible_by_any(b.size, rules.forbidden))
      return false;
    if (b.count > rules.cap)
      ++over;
  }
  return rules.exactly_one_over ? over == 1 : over == 0;
}

void for_each_in_class(const PartitionClass &c, std::int64_t n, const PartitionVisitor &visit) {
  if (n < 0)
    return;
  if (n == 0) {
    if (admits_empty(c))
      visit(Partition{});
    return;
  }
  const Rules rules = Rules::of(c);
  Walker(rules, visit).walk(n, n, false);
}

std::vector<Partition> enumerate_class(const PartitionClass &c, std::int64_t n) {
  std::vector<Partition> out;
  for_each_in_class(c, n, [&](const Partition &p) { out.push_back(p); });
  return out;
}

std::int64_t count_class(const PartitionClass &c, std::int64_t n) {
  std::int64_t count = 0;
  for_each_in_class(c, n, [&](const Partition &) { ++count; });
  return count;
}

std::vector<Partition> enumerate_class_by_filter(const PartitionClass &c, std::int64_t n) {
  std::vector<Partition> out;
  for_each_in_class(PartitionClass::all(), n, [&](const Partition &p) {
    if (is_member(p, c))
      out.push_back(p);
  });
  return out;
}

std::vector<Branch> top_branches(const PartitionClass &c, std::int64_t n) {
  std::vector<Branch> out;
  if (n <= 0)
    return out;
  const Rules rules = Rules::of(c);
  for (Part p = n; p >= 1; --p) {
    if (divisible_by_any(p, rules.forbidden))
      continue;
    rules.for_each_count(n / p, false, [&](std::int64_t m, bool) { out.push_back({p, m}); });
  }
  return out;
}

void for_each_in_branch(const PartitionClass &c, std::int64_t n, Branch branch,
                        const PartitionVisitor &visit) {
  const Rules rules = Rules::of(c);
  Walker(rules, visit).walk_branch(n, branch);
}

} // namespace rpart

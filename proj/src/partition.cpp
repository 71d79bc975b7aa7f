#include "rpart/partition.hpp"

#include <algorithm>
#include <map>

#include "rpart/checked.hpp"
#include "rpart/error.hpp"

namespace rpart {

namespace {

Partition from_table(const std::map<Part, std::int64_t, std::greater<>> &table) {
  std::vector<Block> blocks;
  blocks.reserve(table.size());
  for (const auto &[size, count] : table)
    if (count > 0)
      blocks.push_back({size, count});
  return Partition::from_canonical_blocks(std::move(blocks));
}

} // namespace

Partition Partition::from_parts(std::span<const Part> parts) {
  std::map<Part, std::int64_t, std::greater<>> table;
  for (Part p : parts) {
    if (p < 1)
      throw Error(ErrorKind::InvalidPart, "part " + std::to_string(p) + " is not positive");
    ++table[p];
  }
  return from_table(table);
}

Partition Partition::from_blocks(std::span<const Block> blocks) {
  std::map<Part, std::int64_t, std::greater<>> table;
  for (const Block &b : blocks) {
    if (b.size < 1)
      throw Error(ErrorKind::InvalidPart, "part " + std::to_string(b.size) + " is not positive");
    if (b.count < 0)
      throw Error(ErrorKind::InvalidPart, "negative multiplicity for part " + std::to_string(b.size));
    table[b.size] = checked::add(table[b.size], b.count);
  }
  return from_table(table);
}

std::vector<Part> Partition::parts() const {
  std::vector<Part> out;
  out.reserve(static_cast<std::size_t>(length()));
  for (const Block &b : blocks_)
    out.insert(out.end(), static_cast<std::size_t>(b.count), b.size);
  return out;
}

std::int64_t Partition::size() const {
  std::int64_t total = 0;
  for (const Block &b : blocks_)
    total = checked::add(total, checked::mul(b.size, b.count));
  return total;
}

std::int64_t Partition::length() const {
  std::int64_t total = 0;
  for (const Block &b : blocks_)
    total = checked::add(total, b.count);
  return total;
}

std::int64_t Partition::multiplicity(Part i) const {
  auto it = std::lower_bound(blocks_.begin(), blocks_.end(), i,
                             [](const Block &b, Part v) { return b.size > v; });
  return (it != blocks_.end() && it->size == i) ? it->count : 0;
}

bool Partition::is_canonical() const {
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    if (blocks_[i].size < 1 || blocks_[i].count < 1)
      return false;
    if (i > 0 && blocks_[i - 1].size <= blocks_[i].size)
      return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Partition &a, const Partition &b) {
  const auto &x = a.blocks_;
  const auto &y = b.blocks_;
  std::size_t i = 0;
  for (; i < x.size() && i < y.size(); ++i) {
    if (x[i].size != y[i].size)
      return x[i].size <=> y[i].size;
    if (x[i].count != y[i].count) {
      // The longer run keeps the larger part where the shorter run has
      // already moved on to something smaller (or ended).
      return x[i].count <=> y[i].count;
    }
  }
  return x.size() <=> y.size();
}

Partition make_partition(std::span<const Part> parts) {
  return Partition::from_parts(parts);
}

Measure measure(const Partition &lambda) {
  return {lambda.size(), lambda.length()};
}

Partition multiset_union(const Partition &lambda, const Partition &mu) {
  std::vector<Block> out;
  out.reserve(lambda.blocks().size() + mu.blocks().size());
  const auto &x = lambda.blocks();
  const auto &y = mu.blocks();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].size > y[j].size)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].size > x[i].size) {
      out.push_back(y[j++]);
    } else {
      out.push_back({x[i].size, checked::add(x[i].count, y[j].count)});
      ++i;
      ++j;
    }
  }
  return Partition::from_canonical_blocks(std::move(out));
}

Partition multiset_difference(const Partition &lambda, const Partition &mu) {
  std::vector<Block> out;
  out.reserve(lambda.blocks().size());
  const auto &x = lambda.blocks();
  const auto &y = mu.blocks();
  std::size_t j = 0;
  for (const Block &b : x) {
    if (j < y.size() && y[j].size > b.size)
      break;
    if (j < y.size() && y[j].size == b.size) {
      if (y[j].count > b.count)
        break;
      if (y[j].count < b.count)
        out.push_back({b.size, b.count - y[j].count});
      ++j;
    } else {
      out.push_back(b);
    }
  }
  if (j != y.size())
    throw Error(ErrorKind::NotSubMultiset,
                to_array_string(mu) + " is not contained in " + to_array_string(lambda));
  return Partition::from_canonical_blocks(std::move(out));
}

std::string to_array_string(const Partition &lambda) {
  std::string out = "[";
  bool first = true;
  for (const Block &b : lambda.blocks()) {
    for (std::int64_t c = 0; c < b.count; ++c) {
      if (!first)
        out += ',';
      out += std::to_string(b.size);
      first = false;
    }
  }
  out += ']';
  return out;
}

std::string to_exponent_string(const Partition &lambda) {
  std::string out = "(";
  bool first = true;
  for (const Block &b : lambda.blocks()) {
    if (!first)
      out += ',';
    out += std::to_string(b.size);
    if (b.count > 1)
      out += '^' + std::to_string(b.count);
    first = false;
  }
  out += ')';
  return out;
}

} // namespace rpart

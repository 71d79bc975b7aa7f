#include <doctest.h>

#include <random>

#include "rpart/error.hpp"
#include "rpart/partition.hpp"

using namespace rpart;

namespace {

std::vector<Part> random_parts(std::mt19937 &rng, int max_len, Part max_part) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<Part> part(1, max_part);
  std::vector<Part> out(static_cast<std::size_t>(len(rng)));
  for (auto &p : out)
    p = part(rng);
  return out;
}

} // namespace

TEST_CASE("make_partition sorts and builds the multiplicity table") {
  const Partition p = Partition::from_parts({1, 2, 1});
  CHECK(p.parts() == std::vector<Part>{2, 1, 1});
  CHECK(p.blocks() == std::vector<Block>{{2, 1}, {1, 2}});
  CHECK(p.multiplicity(1) == 2);
  CHECK(p.multiplicity(2) == 1);
  CHECK(p.is_canonical());
}

TEST_CASE("empty partition") {
  const Partition p = Partition::from_parts({});
  CHECK(p.empty());
  CHECK(measure(p) == Measure{0, 0});
  CHECK(to_array_string(p) == "[]");
  CHECK(to_exponent_string(p) == "()");
}

TEST_CASE("measure") {
  CHECK(measure(Partition::from_parts({1, 1, 1, 1, 1, 1})) == Measure{6, 6});
  CHECK(measure(Partition::from_parts({4, 2})) == Measure{6, 2});
}

TEST_CASE("multiplicity lookups") {
  const Partition p = Partition::from_parts({2, 2, 1});
  CHECK(multiplicity(p, 2) == 2);
  CHECK(multiplicity(p, 3) == 0);
  CHECK(multiplicity(Partition::from_parts({1, 1, 1, 1, 1, 1}), 1) == 6);
}

TEST_CASE("invalid parts are rejected") {
  const std::vector<Part> zero{3, 0};
  const std::vector<Part> negative{-1};
  CHECK_THROWS_AS(make_partition(zero), Error);
  try {
    make_partition(negative);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::InvalidPart);
  }
}

TEST_CASE("multiset union") {
  CHECK(multiset_union(Partition::from_parts({2}), Partition::from_parts({1})) ==
        Partition::from_parts({2, 1}));
  const Partition lambda = Partition::from_parts({5, 3, 3});
  CHECK(multiset_union(lambda, Partition{}) == lambda);
  CHECK(multiset_union(Partition::from_parts({2, 2}), Partition::from_parts({2, 1, 1})) ==
        Partition::from_parts({2, 2, 2, 1, 1}));
}

TEST_CASE("multiset difference") {
  CHECK(multiset_difference(Partition::from_parts({2, 2, 1}), Partition::from_parts({2})) ==
        Partition::from_parts({2, 1}));
  const Partition lambda = Partition::from_parts({4, 4, 1});
  CHECK(multiset_difference(lambda, lambda).empty());
  try {
    multiset_difference(Partition::from_parts({1, 1}), Partition::from_parts({2}));
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.kind() == ErrorKind::NotSubMultiset);
  }
  CHECK_THROWS_AS(multiset_difference(Partition::from_parts({3, 1}), Partition::from_parts({3, 3})),
                  Error);
}

TEST_CASE("exponent notation") {
  CHECK(to_exponent_string(Partition::from_parts({2, 2, 1, 1})) == "(2^2,1^2)");
  CHECK(to_exponent_string(Partition::from_parts({4, 2})) == "(4,2)");
}

TEST_CASE("ordering is lexicographic on part sequences") {
  CHECK(Partition::from_parts({5, 2}) > Partition::from_parts({5, 1, 1}));
  CHECK(Partition::from_parts({2, 2, 2, 1}) > Partition::from_parts({2, 2, 1, 1, 1}));
  CHECK(Partition::from_parts({3}) > Partition::from_parts({2, 1}));
  CHECK(Partition::from_parts({2, 1}) > Partition::from_parts({2}));
}

TEST_CASE("property: round trip, union/difference inverse, additivity") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    const Partition lambda = make_partition(random_parts(rng, 10, 8));
    const Partition mu = make_partition(random_parts(rng, 10, 8));

    CHECK(make_partition(lambda.parts()) == lambda);
    const Partition u = multiset_union(lambda, mu);
    CHECK(u.is_canonical());
    CHECK(multiset_difference(u, mu) == lambda);
    CHECK(u.size() == lambda.size() + mu.size());
    CHECK(u.length() == lambda.length() + mu.length());
    for (Part i = 1; i <= 8; ++i)
      CHECK(u.multiplicity(i) == lambda.multiplicity(i) + mu.multiplicity(i));

    // dual-view consistency
    const auto parts = u.parts();
    CHECK(std::is_sorted(parts.rbegin(), parts.rend()));
    for (Part i = 1; i <= 8; ++i)
      CHECK(u.multiplicity(i) == std::count(parts.begin(), parts.end(), i));
  }
}

#include <doctest.h>

#include "oracles.hpp"
#include "rpart/error.hpp"
#include "rpart/statistics.hpp"

using namespace rpart;

namespace {

Partition P(std::initializer_list<Part> parts) { return Partition::from_parts(parts); }

} // namespace

TEST_CASE("x_stat") {
  CHECK(x_stat(P({1, 1, 1, 1, 1, 1, 1}), 3, 1) == 7);
  CHECK(x_stat(P({5, 2}), 3, 2) == 2);
  CHECK(x_stat(Partition{}, 4, 3) == 0);
  CHECK_THROWS_AS(x_stat(P({1}), 3, 0), Error);
  CHECK_THROWS_AS(x_stat(P({1}), 3, 3), Error);
}

TEST_CASE("y_stat") {
  CHECK(y_stat(P({3, 2, 1, 1}), 3, 1) == 3);
  CHECK(y_stat(P({3, 2, 1, 1}), 3, 2) == 1);
  CHECK(y_stat(P({4, 2, 1}), 3, 1) == 3);
  CHECK_THROWS_AS(y_stat(P({1}), 2, 2), Error);
}

TEST_CASE("y_stat is weakly decreasing in j") {
  for (const auto &mu : enumerate_class(PartitionClass::all(), 14))
    for (std::int64_t j = 2; j <= 5; ++j)
      CHECK(y_stat(mu, 6, j) <= y_stat(mu, 6, j - 1));
}

TEST_CASE("aggregate r = 3, n = 7") {
  const XYCReport rep = aggregate(ModulusTuple::single(3), 7);
  CHECK(rep.per_j == std::vector<XYRow>{{1, 25, 19}, {2, 10, 4}});
  CHECK(rep.c == 6);
  CHECK(rep.inferior_count == 6);
  CHECK(rep.hypothesis_holds);
}

TEST_CASE("aggregate (3,5), n = 5") {
  const XYCReport rep = aggregate(ModulusTuple::validate({3, 5}), 5);
  CHECK(rep.per_j == std::vector<XYRow>{{1, 11, 8}, {2, 3, 2}});
  CHECK(rep.c == 2);
  CHECK(rep.inferior_count == 2);
  CHECK_FALSE(rep.hypothesis_holds);
}

TEST_CASE("aggregate agrees with the oracle") {
  const std::vector<std::vector<std::int64_t>> tuples = {{2}, {3}, {5}, {2, 3}, {3, 5}, {3, 4}};
  for (const auto &mod : tuples) {
    const ModulusTuple t = ModulusTuple::validate(mod);
    for (std::int64_t n = 0; n <= 14; ++n) {
      const auto cp = oracle::filter(n, [&](const auto &p) { return oracle::in_cp(p, mod); });
      const auto rp = oracle::filter(n, [&](const auto &p) { return oracle::in_rp(p, mod); });
      const auto irp = oracle::filter(n, [&](const auto &p) { return oracle::in_irp(p, mod); });
      const XYCReport rep = aggregate(t, n);
      std::int64_t c = 0;
      for (const auto &p : cp)
        c += oracle::glaisher(p, mod[0]).second;
      CHECK(rep.c == c);
      CHECK(rep.inferior_count == static_cast<std::int64_t>(irp.size()));
      for (const XYRow &row : rep.per_j) {
        std::int64_t x = 0, y = 0;
        for (const auto &p : cp)
          x += oracle::x_stat(p, mod[0], row.j);
        for (const auto &p : rp)
          y += oracle::y_stat(p, row.j);
        CHECK(row.x == x);
        CHECK(row.y == y);
      }
    }
  }
}

TEST_CASE("verify_xyc") {
  const XYCVerification ok = verify_xyc(ModulusTuple::single(3), 7);
  REQUIRE(ok.verdicts.size() == 2);
  CHECK(ok.verdicts[0].pass);
  CHECK(ok.verdicts[1].pass);
  CHECK(ok.all_pass());
  CHECK_FALSE(ok.genuine_failure());

  const XYCVerification neg = verify_xyc(ModulusTuple::validate({3, 5}), 5);
  CHECK_FALSE(neg.verdicts[0].pass); // 3 != 2
  CHECK_FALSE(neg.verdicts[1].pass); // 1 != 2
  CHECK_FALSE(neg.genuine_failure());

  // 3 = 1 mod 2; by brute force X = 8, Y = 4, c = 4.
  const XYCVerification tuple = verify_xyc(ModulusTuple::validate({2, 3}), 6);
  REQUIRE(tuple.verdicts.size() == 1);
  CHECK(tuple.verdicts[0].x == 8);
  CHECK(tuple.verdicts[0].y == 4);
  CHECK(tuple.verdicts[0].c == 4);
  CHECK(tuple.verdicts[0].pass);
}

TEST_CASE("verify_length_identity") {
  const LengthVerdict a = verify_length_identity(3, 7);
  CHECK(a.class_regular_length == 35);
  CHECK(a.regular_length == 23);
  CHECK(a.c == 6);
  CHECK(a.pass);

  const LengthVerdict b = verify_length_identity(2, 3);
  CHECK(b.class_regular_length == 4);
  CHECK(b.regular_length == 3);
  CHECK(b.c == 1);
  CHECK(b.pass);

  const LengthVerdict z = verify_length_identity(4, 0);
  CHECK(z.class_regular_length == 0);
  CHECK(z.regular_length == 0);
  CHECK(z.pass);
}

TEST_CASE("refinement: sums over j recover total lengths") {
  for (std::int64_t r = 2; r <= 5; ++r) {
    const ModulusTuple t = ModulusTuple::single(r);
    for (std::int64_t n = 0; n <= 18; ++n) {
      const XYCReport rep = aggregate(t, n);
      const LengthVerdict len = verify_length_identity(t, n);
      std::int64_t sx = 0, sy = 0;
      for (const XYRow &row : rep.per_j) {
        sx += row.x;
        sy += row.y;
        CHECK(row.diff() == rep.per_j.front().diff()); // independent of j
      }
      CHECK(sx == len.class_regular_length);
      CHECK(sy == len.regular_length);
    }
  }
}

#include <doctest.h>

#include <array>

#include "mrigid/errors.hpp"
#include "mrigid/polygon.hpp"
#include "oracle.hpp"

using namespace mrigid;

TEST_CASE("context sizes and validation") {
  CHECK(PolygonContext(3, 2).vertex_count() == 10);
  CHECK(PolygonContext(3, 1).vertex_count() == 6);
  CHECK(PolygonContext(8, 2).vertex_count() == 25);
  CHECK_THROWS_AS(PolygonContext(1, 1), InputError);
  CHECK_THROWS_AS(PolygonContext(3, 0), InputError);
  const PolygonContext ctx(3, 2);
  CHECK(ctx.wrap(0) == 10);
  CHECK(ctx.wrap(11) == 1);
  CHECK(ctx.wrap(-10) == 10);
  CHECK_THROWS_AS(ctx.check_vertex(11), InputError);
}

TEST_CASE("arc_count") {
  const PolygonContext ctx(3, 2);
  CHECK(arc_count(ctx, 1, 3) == 3);
  CHECK(arc_count(ctx, 9, 1) == 3);
  CHECK(arc_count(ctx, 1, 1) == 1);
  CHECK_THROWS_AS(arc_count(ctx, 0, 3), InputError);
}

TEST_CASE("clockwise_order") {
  const PolygonContext ctx(3, 2);
  const std::array<int, 3> a{1, 4, 9};
  const std::array<int, 3> b{4, 1, 9};
  const std::array<int, 3> c{9, 1, 4};
  CHECK(clockwise_order(ctx, a));
  CHECK_FALSE(clockwise_order(ctx, b));
  CHECK(clockwise_order(ctx, c));
  const std::array<int, 3> dup{1, 1, 4};
  CHECK_THROWS_AS(clockwise_order(ctx, dup), InputError);
}

TEST_CASE("diagonals match the vertex-count oracle") {
  CHECK(is_diagonal(PolygonContext(3, 2), 1, 6));
  CHECK_FALSE(is_diagonal(PolygonContext(3, 2), 1, 4));
  CHECK(is_diagonal(PolygonContext(2, 1), 1, 2));
  for (int m = 1; m <= 3; ++m) {
    for (int n = 2; n <= 6; ++n) {
      const PolygonContext ctx(n, m);
      const int big = ctx.vertex_count();
      int count = 0;
      for (int i = 1; i <= big; ++i) {
        for (int j = i + 1; j <= big; ++j) {
          CHECK(is_diagonal(ctx, i, j) == oracle::is_diagonal(big, m, i, j));
          count += oracle::is_diagonal(big, m, i, j);
        }
      }
      CHECK(all_diagonals(ctx).size() == static_cast<std::size_t>(count));
      CHECK(count * 2 == n * big);
    }
  }
  CHECK_THROWS_AS(make_diagonal(PolygonContext(3, 2), 1, 4), InputError);
}

TEST_CASE("short diagonals") {
  const PolygonContext ctx(3, 2);
  CHECK(is_short(ctx, {1, 3}));
  CHECK(is_short(ctx, {1, 9}));
  CHECK_FALSE(is_short(ctx, {1, 6}));
  CHECK(short_start(ctx, {1, 9}) == 9);
  CHECK(short_start(ctx, {1, 3}) == 1);
  CHECK_THROWS_AS(short_start(ctx, {1, 6}), PreconditionError);
}

TEST_CASE("crossing") {
  CHECK(crosses({1, 6}, {4, 9}));
  CHECK_FALSE(crosses({1, 6}, {1, 9}));
  CHECK_FALSE(crosses({1, 3}, {4, 9}));
  CHECK_FALSE(crosses({1, 9}, {3, 6}));
}

TEST_CASE("k-neighbours") {
  const PolygonContext ctx(3, 1);
  CHECK_FALSE(k_neighbours(ctx, {1, 4}, {2, 5}, 1));
  CHECK(k_neighbours(ctx, {1, 4}, {2, 3}, 1));
  CHECK_FALSE(k_neighbours(ctx, {1, 4}, {1, 2}, 1));
  CHECK_THROWS_AS(k_neighbours(ctx, {1, 4}, {2, 3}, 2), InputError);
}

TEST_CASE("all_diagonals listings") {
  CHECK(all_diagonals(PolygonContext(3, 2)).size() == 15);
  const auto square = all_diagonals(PolygonContext(2, 1));
  CHECK(square == std::vector<Diagonal>{{1, 2}, {1, 4}, {2, 3}, {3, 4}});
  const auto hexagon = all_diagonals(PolygonContext(3, 1));
  CHECK(hexagon.size() == 9);
  int shorts = 0;
  for (const auto& d : hexagon) shorts += is_short(PolygonContext(3, 1), d);
  CHECK(shorts == 6);
}

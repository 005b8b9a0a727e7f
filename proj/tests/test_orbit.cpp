#include <doctest.h>

#include "mrigid/errors.hpp"
#include "mrigid/orbit.hpp"

using namespace mrigid;

TEST_CASE("shift and tau") {
  const PolygonContext ctx(3, 2);
  CHECK(shift(ctx, {1, 6}, 1) == Diagonal(2, 7));
  CHECK(shift(ctx, {1, 6}, 0) == Diagonal(1, 6));
  CHECK(shift(ctx, {8, 10}, 3) == Diagonal(1, 3));
  CHECK(tau(ctx, {4, 9}, 1) == Diagonal(1, 6));
  CHECK(tau(ctx, {1, 6}, -1) == Diagonal(4, 9));
  CHECK(tau(ctx, {1, 6}, 0) == Diagonal(1, 6));
  for (const auto& d : all_diagonals(ctx)) {
    CHECK(tau(ctx, tau(ctx, d, 1), -1) == d);
    CHECK(is_diagonal(ctx, shift(ctx, d, 1).lo, shift(ctx, d, 1).hi));
    CHECK(shift(ctx, d, ctx.vertex_count()) == d);
  }
}

TEST_CASE("ext examples") {
  const PolygonContext ctx(3, 2);
  CHECK(ext_nonzero(ctx, {2, 7}, {1, 6}, 1));
  for (int k = 1; k <= 2; ++k) CHECK_FALSE(ext_nonzero(ctx, {1, 6}, {1, 6}, k));
  CHECK(ext_nonzero(ctx, {4, 9}, {1, 6}, 1));
  CHECK_THROWS_AS(ext_nonzero(ctx, {4, 9}, {1, 6}, 3), InputError);
  CHECK_THROWS_AS(ext_nonzero(ctx, {4, 9}, {1, 6}, 0), InputError);
}

TEST_CASE("Ext is invariant under the suspension") {
  for (auto [n, m] : {std::pair{3, 1}, {4, 1}, {3, 2}, {4, 2}, {3, 3}}) {
    const PolygonContext ctx(n, m);
    const auto ds = all_diagonals(ctx);
    for (const auto& a : ds) {
      for (const auto& b : ds) {
        for (int k = 1; k <= m; ++k) {
          CHECK(ext_nonzero(ctx, b, a, k) == ext_nonzero(ctx, shift(ctx, b, 1), shift(ctx, a, 1), k));
        }
      }
    }
  }
}

TEST_CASE("AR quiver of the (3,2) orbit category") {
  const PolygonContext ctx(3, 2);
  const ARQuiver q = ar_quiver(ctx);
  CHECK(q.vertices.size() == 15);
  CHECK(q.has_arrow({1, 3}, {1, 6}));
  CHECK(q.has_arrow({1, 6}, {1, 9}));
  CHECK(q.has_arrow({1, 6}, {4, 6}));
  CHECK(q.translation.at(Diagonal(4, 9)) == Diagonal(1, 6));
  CHECK_FALSE(q.has_arrow({1, 6}, {1, 3}));
  // Every vertex has at most two arrows out, and mesh arrows close up:
  // X -> Y implies Y -> tau^{-1} X.
  for (const auto& [from, to] : q.arrows) {
    CHECK(q.has_arrow(to, tau(ctx, from, -1)));
  }
  for (const auto& v : q.vertices) {
    int out = 0;
    for (const auto& [from, to] : q.arrows) out += from == v;
    CHECK(out <= 2);
    CHECK(out >= 1);
  }
}

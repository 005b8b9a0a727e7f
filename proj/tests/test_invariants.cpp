#include <doctest.h>

#include <random>

#include "mrigid/errors.hpp"
#include "mrigid/invariants.hpp"
#include "mrigid/reconstruct.hpp"
#include "mrigid/rigid.hpp"
#include "oracle.hpp"

using namespace mrigid;

namespace {

Quiver fan() { return Quiver(3, {{1, 1, 2}, {2, 3, 2}}, {}); }
Quiver square() {
  return Quiver(4, {{1, 1, 2}, {2, 2, 3}, {3, 3, 4}, {4, 4, 1}}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
}
using Pairs = std::vector<std::pair<int, int>>;

}  // namespace

TEST_CASE("AG-invariant examples") {
  CHECK(ag_invariant(fan()).pairs == Pairs{{4, 2}});
  CHECK(ag_invariant(square()).pairs == Pairs{{0, 4}, {4, 0}});
  CHECK(ag_invariant(Quiver(1, {}, {})).pairs == Pairs{{2, 0}});
  CHECK(ag_invariant(Quiver(2, {{1, 1, 2}}, {})).pairs == Pairs{{3, 1}});
  CHECK(to_string(ag_invariant(square())) == "(0,4) (4,0)");

  const ArcCollection hex(PolygonContext(3, 1), {{1, 4}, {1, 2}, {4, 5}});
  CHECK(ag_from_tiles(hex).pairs == Pairs{{4, 2}});
  CHECK(ag_from_tiles(AbstractTiling{4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}}).pairs == Pairs{{0, 4}, {4, 0}});
  CHECK(ag_from_tiles(AbstractTiling{2, {{1, 2}}}).pairs == Pairs{{2, 0}});
  CHECK_THROWS_AS(ag_from_tiles(AbstractTiling{5, {}}), PreconditionError);
  CHECK_THROWS_AS(ag_from_tiles(AbstractTiling{6, {{1, 2}, {4, 5}}}), PreconditionError);
  CHECK_THROWS_AS(ag_invariant(Quiver(3, {{1, 1, 2}, {2, 2, 3}, {3, 1, 3}}, {})), PreconditionError);
}

TEST_CASE("AG-invariant on random tilings") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int points = 2 + trial % 12;
    const auto t = oracle::random_connected_tiling(rng, points, 1 + trial % std::max(1, 2 * points - 3));
    const Quiver q = oracle::shuffled(rng, tiling_algebra(t));
    const AGInvariant ag = ag_invariant(q);
    CHECK(ag == ag_from_tiles(t));
    int positive = 0;
    int sum_a = 0;
    int sum_b = 0;
    for (auto [a, b] : ag.pairs) {
      positive += a > 0;
      sum_a += a;
      sum_b += b;
    }
    CHECK(positive == 1);
    CHECK(sum_a == static_cast<int>(permitted_threads(q).size()));
    CHECK(sum_b == static_cast<int>(q.arrows().size()));
    for (std::size_t start = 1; start < permitted_threads(q).size(); ++start) {
      CHECK(ag_invariant(q, start) == ag);
    }
  }
}

TEST_CASE("Gorenstein dimension") {
  CHECK(gorenstein_dimension(fan()) == GorensteinResult::exact(1));
  CHECK(gorenstein_dimension(square()) == GorensteinResult::at_most_one());
  CHECK(gorenstein_dimension(Quiver(1, {}, {})) == GorensteinResult::at_most_one());
  CHECK(gorenstein_endomorphism(Quiver(1, {}, {})) == GorensteinResult::exact(0));
  CHECK(gorenstein_endomorphism(fan()) == GorensteinResult::exact(1));
  const ArcCollection hex(PolygonContext(3, 1), {{1, 4}, {1, 2}, {4, 5}});
  CHECK(gorenstein_from_tiles(hex) == GorensteinResult::exact(1));
  CHECK(to_string(GorensteinResult::exact(3)) == "3");
  CHECK(to_string(GorensteinResult::at_most_one()) == "at most 1");
  // A linear A_3 with one relation: the gentle arrow starts a forbidden path
  // of length 2.
  CHECK(gorenstein_dimension(Quiver(3, {{1, 1, 2}, {2, 2, 3}}, {{1, 2}})) == GorensteinResult::exact(2));
  CHECK_THROWS_AS(gorenstein_dimension(Quiver(4, {{1, 1, 2}, {2, 1, 3}, {3, 1, 4}}, {})),
                  PreconditionError);
}

TEST_CASE("Gorenstein dimension from tiles matches the algebra") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int points = 3 + trial % 10;
    const auto t = oracle::random_connected_tiling(rng, points, 2 + trial % std::max(1, 2 * points - 4));
    const Quiver q = tiling_algebra(t);
    const auto from_tiles = gorenstein_from_tiles(t);
    if (from_tiles.kind == GorensteinResult::Kind::kExact) CHECK(gorenstein_dimension(q) == from_tiles);
  }
}

TEST_CASE("endomorphism algebra criterion") {
  CHECK(is_end_algebra(fan(), 1));
  const Quiver linear(3, {{1, 1, 2}, {2, 2, 3}}, {});
  const auto r = end_algebra_report(linear, 1);
  CHECK_FALSE(r.no_short_to_short_thread);
  CHECK_FALSE(r.ok());
  // A bare relation-full 4-cycle: its vertices carry relations but no
  // permitted thread reaches a valency-one vertex.
  CHECK_FALSE(end_algebra_report(square(), 1).relation_vertices_flanked);
  CHECK(end_algebra_report(square(), 1).cycles_have_length);
  CHECK_FALSE(end_algebra_report(square(), 2).cycles_have_length);
  CHECK_THROWS_AS(is_end_algebra(fan(), 0), InputError);
  for (auto [n, m] : {std::pair{3, 1}, {4, 1}, {5, 1}, {3, 2}, {4, 2}, {3, 3}}) {
    for (const auto& tc : enumerate_connected_maximal(PolygonContext(n, m))) {
      CHECK(is_end_algebra(tiling_algebra(tc), m));
    }
  }
}

TEST_CASE("cuts") {
  const Quiver cut = apply_cut(square(), {4});
  CHECK(cut.arrows().size() == 3);
  CHECK(cut.relations().size() == 2);
  CHECK(cut == Quiver(4, {{1, 1, 2}, {2, 2, 3}, {3, 3, 4}}, {{1, 2}, {2, 3}}));
  CHECK(apply_cut(square(), {}) == square());
  CHECK_THROWS_AS(apply_cut(fan(), {1}), InputError);
  CHECK(enumerate_cuts(fan()) == std::vector<CutSet>{{}});
  const auto all = enumerate_cuts(square());
  CHECK(all.size() == 16);
  CHECK(all.front().empty());
  CHECK(all.back() == CutSet{1, 2, 3, 4});
  CHECK_THROWS_AS(enumerate_cuts(square(), 3), ResourceError);
}

TEST_CASE("cluster profile of the hexagon example") {
  const ArcCollection hex(PolygonContext(3, 1), {{1, 4}, {1, 2}, {4, 5}});
  const ClusterProfile p = cluster_profile(hex);
  CHECK(p.counts[1] == 2);
  CHECK(p.counts[2] == 2);
  CHECK(p.x == 4);
  CHECK_FALSE(p.needs_cut());
  CHECK(p.rank == 3);
  CHECK(p.angulation.marked_points == 10);
  for (const auto& face : disc_faces(p.angulation.marked_points, p.angulation.arcs)) {
    CHECK(face.sides.size() == 4);
  }
}

TEST_CASE("cluster profiles of enumerated objects") {
  for (auto [n, m] : {std::pair{3, 1}, {4, 1}, {5, 1}, {6, 1}, {3, 2}, {4, 2}, {5, 2}, {3, 3}, {4, 3}}) {
    const PolygonContext ctx(n, m);
    for (const auto& tc : enumerate_connected_maximal(ctx)) {
      const ClusterProfile p = cluster_profile(tc);
      CHECK((p.x - 4) % (m + 1) == 0);
      CHECK(p.angulation.marked_points == (m + 1) * (p.rank + 1) + 2);
      for (const auto& face : disc_faces(p.angulation.marked_points, p.angulation.arcs)) {
        CHECK(face.sides.size() == static_cast<std::size_t>(m + 3));
      }
      const Quiver big = tiling_algebra(p.angulation);
      CHECK(p.cut.size() == static_cast<std::size_t>(p.counts[m + 3]));
      CHECK(quiver_isomorphic(apply_cut(big, p.cut), tiling_algebra(tc)));
    }
  }
}

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <set>

#include "mrigid/errors.hpp"
#include "mrigid/rigid.hpp"
#include "oracle.hpp"

using namespace mrigid;

namespace {

ArcCollection make(int n, int m, std::vector<Diagonal> ds) { return {PolygonContext(n, m), std::move(ds)}; }

// Maximal rigid sets by checking every subset.
std::vector<ArcCollection> brute_maximal(const PolygonContext& ctx) {
  const auto ds = all_diagonals(ctx);
  const std::size_t n = ds.size();
  std::vector<ArcCollection> rigid_sets;
  std::set<std::vector<Diagonal>> rigid_keys;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<Diagonal> pick;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1U) pick.push_back(ds[i]);
    }
    ArcCollection tc(ctx, pick);
    if (is_m_rigid_via_ext(tc)) rigid_keys.insert(pick);
  }
  std::vector<ArcCollection> out;
  for (const auto& key : rigid_keys) {
    bool maximal = true;
    for (const auto& d : ds) {
      if (std::find(key.begin(), key.end(), d) != key.end()) continue;
      auto bigger = key;
      bigger.push_back(d);
      std::sort(bigger.begin(), bigger.end());
      if (rigid_keys.count(bigger)) maximal = false;
    }
    if (maximal) out.emplace_back(ctx, key);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("rigidity examples") {
  CHECK_FALSE(is_m_rigid(make(3, 2, {{1, 3}, {3, 5}})));
  CHECK(is_m_rigid(make(2, 1, {{1, 2}})));
  CHECK_FALSE(is_m_rigid(make(3, 1, {{1, 4}, {2, 5}})));
  CHECK_FALSE(is_m_rigid_via_ext(make(3, 2, {{1, 3}, {3, 5}})));
  CHECK(is_m_rigid_via_ext(make(3, 1, {{1, 4}, {1, 2}, {4, 5}})));
  CHECK_FALSE(is_m_rigid_via_ext(make(2, 1, {{1, 2}, {3, 4}})));
  CHECK(is_m_rigid(ArcCollection(PolygonContext(3, 1))));
}

TEST_CASE("collections reject bad input") {
  CHECK_THROWS_AS(make(3, 2, {{1, 4}}), InputError);
  CHECK_THROWS_AS(make(3, 1, {{1, 4}, {4, 1}}), InputError);
}

TEST_CASE("maximality") {
  CHECK_FALSE(is_maximal(make(3, 1, {{1, 4}})));
  CHECK(is_maximal(make(3, 1, {{1, 4}, {1, 2}, {4, 5}})));
  CHECK(is_maximal(make(2, 1, {{1, 2}})));
  CHECK_FALSE(is_maximal(ArcCollection(PolygonContext(2, 1))));
  CHECK_THROWS_AS(is_maximal(make(3, 1, {{1, 4}, {2, 5}})), PreconditionError);
}

TEST_CASE("connectedness") {
  CHECK(is_connected(make(3, 1, {{1, 4}, {1, 2}, {4, 5}})));
  CHECK(is_connected(make(2, 1, {{1, 2}})));
  CHECK_FALSE(is_connected(make(3, 1, {{1, 2}, {4, 5}})));
  CHECK_FALSE(is_connected(ArcCollection(PolygonContext(3, 1))));
  // A short arc crossing a long one never leaves the collection connected.
  const PolygonContext ctx(8, 2);
  for (const auto& shrt : all_diagonals(ctx)) {
    if (!is_short(ctx, shrt)) continue;
    for (const auto& lng : all_diagonals(ctx)) {
      if (is_short(ctx, lng) || !crosses(shrt, lng)) continue;
      CHECK_FALSE(is_connected(ArcCollection(ctx, {shrt, lng})));
    }
  }
}

TEST_CASE("tiles of small collections") {
  const auto hex = make(3, 1, {{1, 4}, {1, 2}, {4, 5}});
  const auto tiles = extract_tiles(hex);
  REQUIRE(tiles.size() == 4);
  std::multiset<std::pair<int, int>> shapes;
  for (const auto& t : tiles) shapes.insert({t.length, t.open_length});
  CHECK(shapes == std::multiset<std::pair<int, int>>{{1, 1}, {1, 1}, {2, 2}, {2, 2}});

  const auto empty = extract_tiles(ArcCollection(PolygonContext(4, 2)));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].length == 0);

  const auto single = extract_tiles(make(3, 1, {{1, 4}}));
  REQUIRE(single.size() == 2);
  for (const auto& t : single) {
    CHECK(t.length == 1);
    CHECK(t.open_length == 3);
    CHECK(t.isolated_vertices.size() == 2);
  }
  CHECK_THROWS_AS(extract_tiles(make(3, 1, {{1, 4}, {2, 5}})), PreconditionError);
}

TEST_CASE("tile classification") {
  const PolygonContext ctx(3, 1);
  Tile t;
  t.length = 1;
  t.open_length = 3;
  t.bounding_arcs = {{1, 4}};
  t.runs = {{4, 1, 3}};
  CHECK(classify_tile(ctx, t).tag == TileClass::kT1Prime);
  CHECK(to_string(classify_tile(ctx, t)) == "T'1");

  const PolygonContext wide(6, 1);
  Tile closed;
  closed.length = 4;
  closed.bounding_arcs = {{1, 4}, {4, 7}, {7, 10}, {1, 10}};
  CHECK(classify_tile(wide, closed).tag == TileClass::kTm3Prime);
  CHECK(to_string(classify_tile(wide, closed)) == "T'4");
  // Short sides on a cycle put the other two sides next to each other.
  closed.bounding_arcs = {{1, 2}, {2, 3}, {3, 4}, {1, 4}};
  CHECK_FALSE(classify_tile(ctx, closed).classified());

  Tile two;
  two.length = 2;
  two.open_length = 2;
  two.bounding_arcs = {{1, 4}, {1, 2}};
  two.runs = {{2, 4, 2}};
  const TileType type = classify_tile(ctx, two);
  CHECK(type.tag == TileClass::kT);
  CHECK(type.k == 2);
  CHECK(to_string(type) == "T2");

  Tile odd = two;
  odd.open_length = 5;
  CHECK_FALSE(classify_tile(ctx, odd).classified());
}

TEST_CASE("tile criterion examples") {
  CHECK_FALSE(satisfies_theorem(make(3, 1, {{1, 4}})));
  CHECK(satisfies_theorem(make(3, 1, {{1, 4}, {1, 2}, {4, 5}})));
  CHECK_THROWS_AS(satisfies_theorem(make(3, 1, {{1, 2}, {4, 5}})), PreconditionError);
}

TEST_CASE("short sides are only allowed as outer diagonals") {
  // A quadrilateral with two short sides: {2,5} and {1,6} are 1-neighbours.
  const auto square = make(4, 1, {{1, 2}, {1, 6}, {2, 5}, {5, 6}});
  CHECK_FALSE(is_m_rigid(square));
  CHECK_FALSE(satisfies_theorem(square));
  // The short {6,8} sits inside the tile 1-6-8-13, so {1,6} and {8,13} are 2-neighbours.
  const auto inner = make(5, 2, {{1, 3}, {1, 6}, {6, 8}, {8, 13}, {11, 13}});
  CHECK_FALSE(is_m_rigid(inner));
  CHECK_FALSE(satisfies_theorem(inner));
}

TEST_CASE("a 25-gon object failing only the isolated-stretch condition") {
  // m = 2, n = 8. Vertex 12 has three isolated vertices on each side, and the
  // short arc {11,13} can still be added.
  const auto tc = make(8, 2, {{1, 6}, {6, 8}, {1, 12}, {1, 18}, {16, 18}, {1, 21}, {1, 24}});
  REQUIRE(is_connected(tc));
  CHECK(is_m_rigid(tc));
  const TheoremReport r = theorem_report(tc);
  CHECK(r.tiles_classified);
  CHECK(r.flanking_shorts);
  CHECK(r.no_adjacent_shorts);
  CHECK_FALSE(r.no_isolated_stretch);
  CHECK_FALSE(satisfies_theorem(tc));
  CHECK_FALSE(is_maximal(tc));
  CHECK(is_m_rigid(tc.with({11, 13})));
}

TEST_CASE("enumeration agrees with the subset oracle") {
  for (auto [n, m] : {std::pair{2, 1}, {3, 1}, {2, 2}, {4, 1}, {3, 2}}) {
    const PolygonContext ctx(n, m);
    if (all_diagonals(ctx).size() > 16) continue;
    CHECK(enumerate_maximal(ctx) == brute_maximal(ctx));
  }
}

TEST_CASE("connected enumeration examples") {
  const auto two = enumerate_connected_maximal(PolygonContext(2, 1));
  CHECK(two.size() == 4);
  for (const auto& tc : two) {
    CHECK(tc.size() == 1);
    CHECK(is_short(tc.context(), tc.arcs()[0]));
  }
  const auto three = enumerate_connected_maximal(PolygonContext(3, 1));
  CHECK(three.size() == 6);
  for (const auto& tc : three) CHECK(tc.size() == 3);
}

TEST_CASE("threaded enumeration matches the serial one") {
  const PolygonContext ctx(5, 2);
  EnumerationOptions serial;
  EnumerationOptions parallel;
  parallel.threads = 4;
  CHECK(enumerate_maximal(ctx, serial) == enumerate_maximal(ctx, parallel));
}

TEST_CASE("enumeration refuses large contexts") {
  EnumerationOptions opts;
  opts.max_diagonals = 10;
  CHECK_THROWS_AS(enumerate_maximal(PolygonContext(3, 2), opts), ResourceError);
}

TEST_CASE("rotation orbits and simple cycles") {
  const auto a = make(3, 1, {{1, 4}, {1, 2}, {4, 5}});
  const auto b = make(3, 1, {{2, 5}, {2, 3}, {5, 6}});
  CHECK(canonical_rotation(a) == canonical_rotation(b));
  CHECK(simple_cycles(a).empty());
  const auto square = make(2, 1, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(simple_cycles(square).empty());
  const auto closed = make(2, 1, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  REQUIRE(simple_cycles(closed).size() == 1);
  CHECK(simple_cycles(closed)[0].size() == 4);
}

TEST_CASE("tile criterion matches enumeration past the small grid") {
  for (auto [n, m] : {std::pair{5, 1}, {5, 2}, {4, 3}}) {
    const PolygonContext ctx(n, m);
    const auto ds = all_diagonals(ctx);
    std::vector<ArcCollection> accepted;
    std::vector<Diagonal> pick;
    std::function<void(std::size_t)> go = [&](std::size_t i) {
      if (i == ds.size()) {
        if (pick.empty()) return;
        const ArcCollection tc(ctx, pick);
        if (is_connected(tc) && satisfies_theorem(tc)) accepted.push_back(tc);
        return;
      }
      go(i + 1);
      if (std::none_of(pick.begin(), pick.end(), [&](const Diagonal& d) { return crosses(d, ds[i]); })) {
        pick.push_back(ds[i]);
        go(i + 1);
        pick.pop_back();
      }
    };
    go(0);
    std::sort(accepted.begin(), accepted.end());
    CHECK(accepted == enumerate_connected_maximal(ctx));
  }
}

#include "mrigid/disc.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <string>

#include "mrigid/errors.hpp"

namespace mrigid {

int disc_arc_count(int points, int i, int j) { return ((j - i) % points + points) % points + 1; }

bool disc_arcs_cross(std::pair<int, int> a, std::pair<int, int> b) {
  auto [a1, a2] = std::minmax(a.first, a.second);
  auto [b1, b2] = std::minmax(b.first, b.second);
  if (a1 == b1 || a1 == b2 || a2 == b1 || a2 == b2) return false;
  const bool in1 = a1 < b1 && b1 < a2;
  const bool in2 = a1 < b2 && b2 < a2;
  return in1 != in2;
}

void AbstractTiling::normalize() {
  if (marked_points < 2) throw InputError("a tiling needs at least two marked points");
  for (auto& [i, j] : arcs) {
    if (i < 1 || i > marked_points || j < 1 || j > marked_points || i == j) {
      throw InputError("bad arc {" + std::to_string(i) + "," + std::to_string(j) + "}");
    }
    if (i > j) std::swap(i, j);
  }
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
    throw InputError("duplicate arc in tiling");
  }
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      if (disc_arcs_cross(arcs[x], arcs[y])) throw InputError("crossing arcs in tiling");
    }
  }
}

namespace {

struct Walker {
  int points;
  const std::vector<std::pair<int, int>>& arcs;
  // rotation[w]: edge ids around point w, from the boundary edge towards w+1,
  // through arcs by increasing clockwise distance, to the boundary edge
  // towards w-1.
  std::vector<std::vector<int>> rotation;
  std::vector<std::map<int, int>> position;

  Walker(int p, const std::vector<std::pair<int, int>>& a) : points(p), arcs(a) {
    rotation.resize(points + 1);
    position.resize(points + 1);
    std::vector<std::vector<std::pair<int, int>>> keyed(points + 1);
    for (int w = 1; w <= points; ++w) {
      keyed[w].emplace_back(-1, boundary_id(w));
      keyed[w].emplace_back(INT_MAX, boundary_id(w == 1 ? points : w - 1));
    }
    for (int a_idx = 0; a_idx < static_cast<int>(arcs.size()); ++a_idx) {
      auto [u, v] = arcs[a_idx];
      keyed[u].emplace_back(disc_arc_count(points, u, v), points + a_idx);
      keyed[v].emplace_back(disc_arc_count(points, v, u), points + a_idx);
    }
    for (int w = 1; w <= points; ++w) {
      std::sort(keyed[w].begin(), keyed[w].end());
      for (auto [key, id] : keyed[w]) {
        position[w][id] = static_cast<int>(rotation[w].size());
        rotation[w].push_back(id);
      }
    }
  }

  int boundary_id(int from) const { return from - 1; }

  std::pair<int, int> endpoints(int id) const {
    if (id < points) return {id + 1, id + 1 == points ? 1 : id + 2};
    return arcs[id - points];
  }

  int other(int id, int w) const {
    auto [u, v] = endpoints(id);
    return w == u ? v : u;
  }

  // Arrived at w along edge id; leave along the preceding edge in w's rotation.
  std::pair<int, int> step(int id, int w) const {
    const auto& rot = rotation[w];
    const int idx = position[w].at(id);
    const int next = rot[(idx + static_cast<int>(rot.size()) - 1) % rot.size()];
    return {next, other(next, w)};
  }
};

}  // namespace

std::vector<DiscFace> disc_faces(int points, const std::vector<std::pair<int, int>>& arcs) {
  if (points < 2) throw PreconditionError("a marked disc needs at least two points");
  for (std::size_t x = 0; x < arcs.size(); ++x) {
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      if (disc_arcs_cross(arcs[x], arcs[y])) {
        throw PreconditionError("arcs must be pairwise non-crossing to extract faces");
      }
    }
  }
  Walker walker(points, arcs);
  std::set<std::pair<int, int>> visited;  // (edge id, arrival point)

  auto trace = [&](int id, int w) {
    std::vector<std::pair<int, int>> seq;
    int cur = id;
    int at = w;
    while (visited.insert({cur, at}).second) {
      seq.emplace_back(cur, at);
      std::tie(cur, at) = walker.step(cur, at);
    }
    return seq;
  };

  // The outer face runs the boundary anticlockwise; it contains 2 -> 1.
  trace(walker.boundary_id(1), 1);

  std::vector<DiscFace> faces;
  const int edge_count = points + static_cast<int>(arcs.size());
  for (int id = 0; id < edge_count; ++id) {
    auto [u, v] = walker.endpoints(id);
    for (int arrive : {v, u}) {
      if (visited.count({id, arrive})) continue;
      auto seq = trace(id, arrive);
      DiscFace face;
      for (auto [edge, at] : seq) {
        FaceSide side;
        side.is_arc = edge >= points;
        side.arc = side.is_arc ? edge - points : -1;
        side.from = walker.other(edge, at);
        side.to = at;
        face.sides.push_back(side);
      }
      const auto n_sides = face.sides.size();
      // Canonical start: first arc after a boundary run, or the smallest arc
      // of a closed face, or point 1 on the arc-free disc.
      std::size_t start = 0;
      bool found = false;
      for (std::size_t i = 0; i < n_sides && !found; ++i) {
        const auto& prev = face.sides[(i + n_sides - 1) % n_sides];
        if (face.sides[i].is_arc && !prev.is_arc) {
          start = i;
          found = true;
        }
      }
      if (!found) {
        int best = INT_MAX;
        for (std::size_t i = 0; i < n_sides; ++i) {
          const auto& s = face.sides[i];
          const int key = s.is_arc ? s.arc : -INT_MAX + s.from;
          if (key < best) {
            best = key;
            start = i;
          }
        }
      }
      std::rotate(face.sides.begin(), face.sides.begin() + static_cast<long>(start),
                  face.sides.end());
      for (std::size_t i = 0; i < n_sides; ++i) {
        const auto& s = face.sides[i];
        if (s.is_arc) {
          face.arcs.push_back(s.arc);
          continue;
        }
        if (i > 0 && !face.sides[i - 1].is_arc) {
          face.runs.back().end = s.to;
          ++face.runs.back().edges;
        } else {
          face.runs.push_back({s.from, s.to, 1});
        }
      }
      faces.push_back(std::move(face));
    }
  }
  return faces;
}

}  // namespace mrigid

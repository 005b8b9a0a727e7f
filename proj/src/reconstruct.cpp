#include "mrigid/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <tuple>

#include "mrigid/errors.hpp"

namespace mrigid {

namespace {

// A tile side: either a boundary stretch or the arc of a quiver vertex.
struct Side {
  bool boundary = false;
  int vertex = 0;
};

// Clockwise sides of the tile of a forbidden thread x_0 -> ... -> x_k:
// the arcs in reverse order, then the boundary. A closed thread has no
// boundary; a trivial one is its arc and the boundary.
std::vector<Side> tile_sides(const Quiver& q, const Thread& t) {
  std::vector<Side> sides;
  const auto vs = thread_vertices(q, t);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) sides.push_back({false, *it});
  if (!t.closed) sides.push_back({true, 0});
  return sides;
}

}  // namespace

AbstractTiling tiling_from_gentle(const Quiver& q, const ReconstructOptions& opts) {
  if (q.vertex_count() == 0) throw PreconditionError("cannot reconstruct from an empty quiver");
  if (!q.connected()) throw PreconditionError("reconstruction requires a connected quiver");
  if (opts.m && *opts.m < 1) throw InputError("m must be at least 1");
  const ThreadSet set = choose_thread_set(q);
  const auto& members = set.members;
  if (opts.root >= members.size()) throw InputError("root index is out of range");

  std::vector<std::vector<std::size_t>> incident(static_cast<std::size_t>(q.vertex_count()) + 1);
  for (int v = 1; v <= q.vertex_count(); ++v) {
    incident[v] = set.incident(q, v);
    if (incident[v].size() != 2) {
      throw PreconditionError("vertex " + std::to_string(v) + " is not on exactly two forbidden threads");
    }
  }
  std::vector<std::vector<Side>> sides;
  for (const Thread& t : members) sides.push_back(tile_sides(q, t));

  // Isolated points to add on the boundary stretch of each open tile.
  auto padding = [&](std::size_t member) {
    if (!opts.m) return 0;
    const int m = *opts.m;
    const int k = static_cast<int>(sides[member].size()) - 1;
    if (k >= 2 && k <= m + 2) return m + k - 2;
    if (k == m + 3) return m;
    if (k == 1) {
      const int v = sides[member][0].vertex;
      const int val = q.valency(v);
      if (val == 1) return m - 1;
      if (val == 2) return 2 * m;
      return member == incident[v][0] ? m - 1 : 2 * m;
    }
    throw PreconditionError("open tile of length " + std::to_string(k) + " exceeds m+3");
  };

  std::vector<bool> visited(members.size(), false);
  std::vector<std::pair<int, int>> arcs;
  int point = 1;
  // Walk the tile clockwise from just after side `entry`, descending into the
  // neighbouring tile across each arc before moving on.
  std::function<void(std::size_t, std::size_t, bool)> visit = [&](std::size_t member,
                                                                   std::size_t entry, bool root) {
    if (visited[member]) throw PreconditionError("forbidden thread reached twice");
    visited[member] = true;
    const auto& ss = sides[member];
    const std::size_t n = ss.size();
    const std::size_t steps = root ? n : n - 1;
    for (std::size_t i = 0; i < steps; ++i) {
      const Side& s = ss[(entry + i + (root ? 0 : 1)) % n];
      if (s.boundary) {
        point += 1 + padding(member);
        continue;
      }
      const auto& pair = incident[s.vertex];
      const std::size_t other = pair[0] == member ? pair[1] : pair[0];
      const auto& os = sides[other];
      std::size_t at = 0;
      while (at < os.size() && (os[at].boundary || os[at].vertex != s.vertex)) ++at;
      const int start = point;
      visit(other, at, false);
      arcs.emplace_back(start, point);
    }
  };
  visit(opts.root, 0, true);
  if (std::find(visited.begin(), visited.end(), false) != visited.end()) {
    throw PreconditionError("some forbidden thread was never reached");
  }

  AbstractTiling out;
  out.marked_points = point - 1;
  for (auto& [a, b] : arcs) {
    if (b > out.marked_points) b -= out.marked_points;
    out.arcs.emplace_back(a, b);
  }
  out.normalize();
  return out;
}

std::optional<ArcCollection> as_polygon_collection(const AbstractTiling& tiling, int m) {
  if (m < 1 || (tiling.marked_points + 2) % (m + 1) != 0) return std::nullopt;
  const int n = (tiling.marked_points + 2) / (m + 1) - 1;
  if (n < 2) return std::nullopt;
  const PolygonContext ctx(n, m);
  std::vector<Diagonal> ds;
  for (auto [i, j] : tiling.arcs) {
    if (!is_diagonal(ctx, i, j)) return std::nullopt;
    ds.emplace_back(i, j);
  }
  return ArcCollection(ctx, std::move(ds));
}

bool quiver_isomorphic(const Quiver& a, const Quiver& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.arrows().size() != b.arrows().size() ||
      a.relations().size() != b.relations().size()) {
    return false;
  }
  auto signature = [](const Quiver& q, int v) {
    int through = 0;
    for (int x : q.incoming(v)) {
      for (int y : q.outgoing(v)) through += q.is_relation(x, y);
    }
    return std::make_tuple(q.incoming(v).size(), q.outgoing(v).size(), through);
  };
  auto counts = [n](const Quiver& q) {
    std::vector<std::vector<int>> c(n + 1, std::vector<int>(n + 1, 0));
    for (const Arrow& x : q.arrows()) ++c[x.source][x.target];
    return c;
  };
  const auto ca = counts(a);
  const auto cb = counts(b);
  std::vector<decltype(signature(a, 1))> sa(n + 1), sb(n + 1);
  for (int v = 1; v <= n; ++v) {
    sa[v] = signature(a, v);
    sb[v] = signature(b, v);
  }
  {
    auto x = std::vector(sa.begin() + 1, sa.end());
    auto y = std::vector(sb.begin() + 1, sb.end());
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    if (x != y) return false;
  }

  // Visit a's vertices so that each one after the first in its component
  // has an already-placed neighbour.
  std::vector<int> order;
  std::vector<bool> seen(n + 1, false);
  for (int r = 1; r <= n; ++r) {
    if (seen[r]) continue;
    seen[r] = true;
    const std::size_t head = order.size();
    order.push_back(r);
    for (std::size_t i = head; i < order.size(); ++i) {
      const int v = order[i];
      for (int w = 1; w <= n; ++w) {
        if (!seen[w] && (ca[v][w] || ca[w][v])) {
          seen[w] = true;
          order.push_back(w);
        }
      }
    }
  }

  std::vector<int> image(n + 1, 0);
  std::vector<bool> taken(n + 1, false);

  auto match_arrows = [&]() {
    const auto& arrows = a.arrows();
    std::vector<int> target(arrows.size(), 0);
    std::vector<bool> used(b.arrows().size() + 1, false);
    std::function<bool(std::size_t)> place = [&](std::size_t i) {
      if (i == arrows.size()) return true;
      const Arrow& x = arrows[i];
      for (const Arrow& y : b.arrows()) {
        if (used[y.id] || y.source != image[x.source] || y.target != image[x.target]) continue;
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          const int xa = arrows[j].id;
          const int ya = target[j];
          ok = a.is_relation(x.id, xa) == b.is_relation(y.id, ya) &&
               a.is_relation(xa, x.id) == b.is_relation(ya, y.id);
        }
        if (!ok) continue;
        used[y.id] = true;
        target[i] = y.id;
        if (place(i + 1)) return true;
        used[y.id] = false;
      }
      return false;
    };
    return place(0);
  };

  std::function<bool(std::size_t)> assign = [&](std::size_t i) {
    if (i == order.size()) return match_arrows();
    const int v = order[i];
    for (int w = 1; w <= n; ++w) {
      if (taken[w] || sa[v] != sb[w]) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        const int u = order[j];
        ok = ca[v][u] == cb[w][image[u]] && ca[u][v] == cb[image[u]][w];
      }
      if (!ok) continue;
      image[v] = w;
      taken[w] = true;
      if (assign(i + 1)) return true;
      taken[w] = false;
      image[v] = 0;
    }
    return false;
  };
  return assign(0);
}

}  // namespace mrigid

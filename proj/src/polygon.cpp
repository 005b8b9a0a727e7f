#include "mrigid/polygon.hpp"

#include <algorithm>
#include <set>

#include "mrigid/errors.hpp"

namespace mrigid {

PolygonContext::PolygonContext(int n, int m) : n_(n), m_(m) {
  if (m < 1) throw InputError("m must be at least 1, got " + std::to_string(m));
  if (n < 2) {
    throw InputError("n must be at least 2 (no m-rigid objects exist for n = 1), got " +
                     std::to_string(n));
  }
  vertex_count_ = (m + 1) * (n + 1) - 2;
}

int PolygonContext::wrap(long long v) const {
  long long r = (v - 1) % vertex_count_;
  if (r < 0) r += vertex_count_;
  return static_cast<int>(r) + 1;
}

void PolygonContext::check_vertex(int v) const {
  if (v < 1 || v > vertex_count_) {
    throw InputError("vertex " + std::to_string(v) + " out of range 1.." +
                     std::to_string(vertex_count_));
  }
}

Diagonal::Diagonal(int i, int j) : lo(std::min(i, j)), hi(std::max(i, j)) {}

std::string to_string(const Diagonal& d) {
  return "{" + std::to_string(d.lo) + "," + std::to_string(d.hi) + "}";
}

int arc_count(const PolygonContext& ctx, int i, int j) {
  ctx.check_vertex(i);
  ctx.check_vertex(j);
  const int n = ctx.vertex_count();
  return ((j - i) % n + n) % n + 1;
}

bool clockwise_order(const PolygonContext& ctx, std::span<const int> vertices) {
  if (vertices.size() < 3) throw InputError("clockwise_order needs at least three vertices");
  std::set<int> seen;
  for (int v : vertices) {
    ctx.check_vertex(v);
    if (!seen.insert(v).second) {
      throw InputError("duplicate vertex " + std::to_string(v) + " in clockwise_order");
    }
  }
  int previous = 0;
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    const int offset = arc_count(ctx, vertices[0], vertices[i]);
    if (offset <= previous) return false;
    previous = offset;
  }
  return true;
}

bool is_diagonal(const PolygonContext& ctx, int i, int j) {
  const int count = arc_count(ctx, i, j);
  return i != j && count % (ctx.m() + 1) == 0;
}

Diagonal make_diagonal(const PolygonContext& ctx, int i, int j) {
  if (!is_diagonal(ctx, i, j)) {
    throw InputError("{" + std::to_string(i) + "," + std::to_string(j) +
                     "} is not an (m+1)-diagonal of the " +
                     std::to_string(ctx.vertex_count()) + "-gon");
  }
  return Diagonal(i, j);
}

bool is_short(const PolygonContext& ctx, const Diagonal& d) {
  const int span = ctx.m() + 1;
  return arc_count(ctx, d.lo, d.hi) == span || arc_count(ctx, d.hi, d.lo) == span;
}

int short_start(const PolygonContext& ctx, const Diagonal& d) {
  const int span = ctx.m() + 1;
  if (arc_count(ctx, d.lo, d.hi) == span) return d.lo;
  if (arc_count(ctx, d.hi, d.lo) == span) return d.hi;
  throw PreconditionError(to_string(d) + " is not a short diagonal");
}

bool crosses(const Diagonal& d1, const Diagonal& d2) {
  if (d1.incident(d2.lo) || d1.incident(d2.hi)) return false;
  const bool lo_inside = d1.lo < d2.lo && d2.lo < d1.hi;
  const bool hi_inside = d1.lo < d2.hi && d2.hi < d1.hi;
  return lo_inside != hi_inside;
}

bool k_neighbours(const PolygonContext& ctx, const Diagonal& d1, const Diagonal& d2, int k) {
  if (k < 1 || k > ctx.m()) {
    throw InputError("neighbour distance k = " + std::to_string(k) + " outside 1.." +
                     std::to_string(ctx.m()));
  }
  if (d1.incident(d2.lo) || d1.incident(d2.hi) || crosses(d1, d2)) return false;
  for (int v : {d1.lo, d1.hi}) {
    if (d2.incident(ctx.wrap(v + k)) || d2.incident(ctx.wrap(v - k))) return true;
  }
  return false;
}

std::vector<Diagonal> all_diagonals(const PolygonContext& ctx) {
  std::vector<Diagonal> out;
  const int n = ctx.vertex_count();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (is_diagonal(ctx, i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

}  // namespace mrigid

#include "mrigid/orbit.hpp"

#include <algorithm>
#include <array>

#include "mrigid/errors.hpp"

namespace mrigid {

Diagonal shift(const PolygonContext& ctx, const Diagonal& d, int k) {
  return Diagonal(ctx.wrap(static_cast<long long>(d.lo) + k),
                  ctx.wrap(static_cast<long long>(d.hi) + k));
}

Diagonal tau(const PolygonContext& ctx, const Diagonal& d, int k) {
  return shift(ctx, d, -k * (ctx.m() + 1));
}

namespace {

bool crossing_condition(const PolygonContext& ctx, const Diagonal& b, const Diagonal& a, int k) {
  if (!crosses(a, b)) return false;
  const int span = ctx.m() + 1;
  // Both labelings of b; only the one with C(a1, b1, a2, b2) can qualify.
  const std::array<std::pair<int, int>, 2> labelings{{{b.lo, b.hi}, {b.hi, b.lo}}};
  for (auto [b1, b2] : labelings) {
    const std::array<int, 4> cyc{a.lo, b1, a.hi, b2};
    if (!clockwise_order(ctx, cyc)) continue;
    const int c1 = arc_count(ctx, a.lo, b1);
    const int c2 = arc_count(ctx, a.hi, b2);
    const bool ok1 = c1 >= span + k && (c1 - k) % span == 0;
    const bool ok2 = c2 >= span + k && (c2 - k) % span == 0;
    if (ok1 && ok2) return true;
  }
  return false;
}

}  // namespace

bool ext_nonzero(const PolygonContext& ctx, const Diagonal& b, const Diagonal& a, int k) {
  if (k < 1 || k > ctx.m()) {
    throw InputError("Ext degree k = " + std::to_string(k) + " outside 1.." +
                     std::to_string(ctx.m()));
  }
  if (k_neighbours(ctx, a, b, k)) {
    if (b.incident(ctx.wrap(a.hi + k))) return true;
    if (b.incident(ctx.wrap(a.lo + k))) return true;
  }
  if (crossing_condition(ctx, b, a, k)) return true;
  return b == shift(ctx, a, k);
}

bool ARQuiver::has_arrow(const Diagonal& from, const Diagonal& to) const {
  return std::binary_search(arrows.begin(), arrows.end(), std::make_pair(from, to));
}

ARQuiver ar_quiver(const PolygonContext& ctx) {
  ARQuiver q;
  q.vertices = all_diagonals(ctx);
  const int step = ctx.m() + 1;
  const int max_count = ctx.n() * step;
  for (const Diagonal& d : q.vertices) {
    q.translation.emplace(d, tau(ctx, d, 1));
    for (int pivot : {d.lo, d.hi}) {
      const int far = d.other(pivot);
      // Rotating past the largest clockwise gap would sweep over the pivot.
      if (arc_count(ctx, pivot, far) + step > max_count) continue;
      q.arrows.emplace_back(d, Diagonal(pivot, ctx.wrap(far + step)));
    }
  }
  std::sort(q.arrows.begin(), q.arrows.end());
  return q;
}

}  // namespace mrigid

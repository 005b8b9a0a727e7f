#pragma once

// Suspension and translation on diagonals, the Ext^k non-vanishing test and
// the Auslander-Reiten quiver of the orbit category.

#include <map>
#include <utility>
#include <vector>

#include "mrigid/polygon.hpp"

namespace mrigid {

/// Suspension applied k times: {i+k, j+k}. Negative k is allowed.
Diagonal shift(const PolygonContext& ctx, const Diagonal& d, int k);

/// Translation applied k times: {i - k(m+1), j - k(m+1)}.
Diagonal tau(const PolygonContext& ctx, const Diagonal& d, int k);

/// True iff Ext^k(b, a) is non-zero, for 1 <= k <= m.
///
/// With a = {a1, a2}, a1 < a2, this holds exactly when one of:
///   1. b is a k-neighbour of a incident with a2 + k;
///   2. b is a k-neighbour of a incident with a1 + k;
///   3. b = {b1, b2} crosses a with a1, b1, a2, b2 clockwise and
///      [a_i, b_i] = x_i (m+1) + k for some x_i >= 1;
///   4. b = shift(a, k).
/// k-neighbours never share an endpoint.
bool ext_nonzero(const PolygonContext& ctx, const Diagonal& b, const Diagonal& a, int k);

struct ARQuiver {
  std::vector<Diagonal> vertices;                    // sorted
  std::vector<std::pair<Diagonal, Diagonal>> arrows;  // sorted
  std::map<Diagonal, Diagonal> translation;

  bool has_arrow(const Diagonal& from, const Diagonal& to) const;
};

/// Vertices are all diagonals; D -> D' when they share a vertex i and D' is
/// D rotated clockwise m+1 steps about i. Translation is tau.
ARQuiver ar_quiver(const PolygonContext& ctx);

}  // namespace mrigid

#pragma once

// From a gentle algebra back to a tiling of a marked disc, and isomorphism
// of quivers with relations.

#include <cstddef>
#include <optional>

#include "mrigid/disc.hpp"
#include "mrigid/quiver.hpp"
#include "mrigid/rigid.hpp"

namespace mrigid {

struct ReconstructOptions {
  /// Index into choose_thread_set(q).members of the tile to build first.
  /// The default takes the first member.
  std::size_t root = 0;
  /// When set, pad every open tile with isolated points as an endomorphism
  /// algebra of a connected maximal m-rigid object would have them.
  std::optional<int> m;
};

/// One tile per member of the thread set, glued along shared arcs. The
/// result has tiling_algebra isomorphic to q. Requires a connected gentle
/// quiver with oriented relation-full cycles and at least one vertex.
AbstractTiling tiling_from_gentle(const Quiver& q, const ReconstructOptions& opts = {});

/// Reads an abstract tiling as diagonals of the polygon for (n, m), if its
/// point count is (m+1)(n+1)-2 with n >= 2 and every arc is an
/// (m+1)-diagonal.
std::optional<ArcCollection> as_polygon_collection(const AbstractTiling& tiling, int m);

/// A bijection on vertices and arrows preserving incidence and relations.
bool quiver_isomorphic(const Quiver& a, const Quiver& b);

}  // namespace mrigid

#pragma once

// Derived-equivalence and homological invariants of tiling algebras: the
// AG-invariant, Gorenstein dimension, the endomorphism-algebra criterion,
// cuts, and the cluster-tilted profile of a connected maximal m-rigid object.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mrigid/disc.hpp"
#include "mrigid/quiver.hpp"

namespace mrigid {

class ArcCollection;

/// Multiset of (a, b) pairs, kept sorted ascending.
struct AGInvariant {
  std::vector<std::pair<int, int>> pairs;
  friend bool operator==(const AGInvariant&, const AGInvariant&) = default;
};

/// "(0,4) (4,0)"
std::string to_string(const AGInvariant& ag);

/// The alternating permitted/forbidden walk. `start_offset` rotates the order
/// in which unused permitted threads are taken as H_0; the result does not
/// depend on it. Requires a gentle quiver with oriented relation-full cycles.
AGInvariant ag_invariant(const Quiver& q, std::size_t start_offset = 0);

/// Read off the tiles directly: one (0, c) per closed tile of length c, plus
/// (open tiles, sum of open lengths minus one). Requires at least one arc and
/// a connected arc graph.
AGInvariant ag_from_tiles(const AbstractTiling& tiling);
AGInvariant ag_from_tiles(const ArcCollection& tc);

struct GorensteinResult {
  enum class Kind { kExact, kAtMostOne };
  Kind kind = Kind::kAtMostOne;
  int value = 0;  // meaningful for kExact

  static GorensteinResult exact(int d) { return {Kind::kExact, d}; }
  static GorensteinResult at_most_one() { return {Kind::kAtMostOne, 0}; }
  friend bool operator==(const GorensteinResult&, const GorensteinResult&) = default;
};

std::string to_string(const GorensteinResult& g);

/// Exact(n) where n is the longest forbidden path starting at a gentle arrow,
/// or AtMostOne when there is no gentle arrow. Requires a gentle quiver.
GorensteinResult gorenstein_dimension(const Quiver& q);

/// As gorenstein_dimension, except that the one-vertex algebra (the
/// endomorphism algebra for n = 2, which is self-injective) reports Exact(0).
GorensteinResult gorenstein_endomorphism(const Quiver& q);

/// Exact(k - 1) for the longest open tile, when it has length k >= 2.
GorensteinResult gorenstein_from_tiles(const AbstractTiling& tiling);
GorensteinResult gorenstein_from_tiles(const ArcCollection& tc);

/// Conditions (i) to (vi) of the endomorphism-algebra characterisation.
struct EndAlgebraReport {
  bool no_short_to_short_thread = false;     // (i)
  bool long_forbidden_paths_end_short = false;  // (ii)
  bool cycles_have_length = false;           // (iii)
  bool relation_vertices_flanked = false;    // (iv)
  bool companion_threads = false;            // (v)
  bool no_long_pair = false;                 // (vi)
  bool ok() const {
    return no_short_to_short_thread && long_forbidden_paths_end_short && cycles_have_length &&
           relation_vertices_flanked && companion_threads && no_long_pair;
  }
};

/// Requires a gentle quiver with oriented relation-full cycles and m >= 1.
EndAlgebraReport end_algebra_report(const Quiver& q, int m);
bool is_end_algebra(const Quiver& q, int m);

/// Arrow ids, sorted.
using CutSet = std::vector<int>;

/// Deletes the cut arrows with their relations and renumbers the rest
/// densely in the old order. InputError if an arrow is not on a cycle.
Quiver apply_cut(const Quiver& q, const CutSet& cut);

/// Every subset of the arrows lying on cycles, smallest first. ResourceError
/// if there are more than `max_cycle_arrows` such arrows.
std::vector<CutSet> enumerate_cuts(const Quiver& q, std::size_t max_cycle_arrows = 16);

struct ClusterProfile {
  int m = 0;
  int n = 0;
  std::vector<int> counts;  // counts[k] = n_k for 1 <= k <= m+3 (index 0 unused)
  int n1_prime = 0;
  int nm3_prime = 0;
  int x = 0;
  /// n' when counts[m+3] == 0, n'' otherwise.
  int rank = 0;
  bool needs_cut() const { return counts.at(static_cast<std::size_t>(m) + 3) != 0; }
  /// The (m+3)-angulation obtained by adjusting isolated vertices; each tile
  /// of type T_{m+3} is closed up by merging the ends of its open boundary.
  AbstractTiling angulation;
  /// Arrows of tiling_algebra(angulation) whose cut recovers the original
  /// algebra, one per T_{m+3} tile.
  CutSet cut;
};

/// Requires a collection whose tiles are all classified (PreconditionError
/// otherwise).
ClusterProfile cluster_profile(const ArcCollection& tc);

}  // namespace mrigid

#pragma once

// Faces of a disc with marked points on its boundary, cut by pairwise
// non-crossing arcs. Points are labelled 1..P clockwise. An arc may join
// two adjacent points; it is then an interior arc parallel to the boundary
// edge between them.

#include <optional>
#include <utility>
#include <vector>

namespace mrigid {

/// A tiling of a marked disc: point count plus arcs as label pairs.
struct AbstractTiling {
  int marked_points = 0;
  std::vector<std::pair<int, int>> arcs;  // each normalized first < second, sorted

  /// Sorts and normalizes arcs; throws InputError on bad labels, duplicates or
  /// crossings.
  void normalize();
  friend bool operator==(const AbstractTiling&, const AbstractTiling&) = default;
};

/// Inclusive clockwise count from i to j on a disc with `points` marked points.
int disc_arc_count(int points, int i, int j);

bool disc_arcs_cross(std::pair<int, int> a, std::pair<int, int> b);

/// One side of a face: either an arc (by index into the arc list) or the
/// boundary edge from point `from` to point `from + 1`.
struct FaceSide {
  bool is_arc = false;
  int arc = -1;
  int from = 0;
  int to = 0;
};

/// A maximal stretch of boundary edges on a face, clockwise from `start` to
/// `end`, covering `edges` boundary edges.
struct BoundaryRun {
  int start = 0;
  int end = 0;
  int edges = 0;
};

struct DiscFace {
  /// Sides in clockwise order (interior on the right). When the face touches
  /// the boundary the sequence starts with the first arc after a run.
  std::vector<FaceSide> sides;
  std::vector<int> arcs;  // arc indices in the order of `sides`
  std::vector<BoundaryRun> runs;
  bool closed() const { return runs.empty(); }
};

/// All interior faces. Arcs must be pairwise non-crossing (PreconditionError
/// otherwise). Points must be at least 2.
std::vector<DiscFace> disc_faces(int points, const std::vector<std::pair<int, int>>& arcs);

}  // namespace mrigid

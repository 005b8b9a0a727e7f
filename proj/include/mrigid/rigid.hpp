#pragma once

// Rigidity, maximality and connectedness of diagonal collections, tile
// extraction and classification, and exhaustive enumeration of connected
// maximal m-rigid objects.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mrigid/disc.hpp"
#include "mrigid/polygon.hpp"

namespace mrigid {

/// A set of (m+1)-diagonals, kept sorted and duplicate free.
class ArcCollection {
 public:
  explicit ArcCollection(PolygonContext ctx) : ctx_(ctx) {}
  /// Validates every arc (InputError on invalid or duplicate diagonals).
  ArcCollection(PolygonContext ctx, std::vector<Diagonal> arcs);

  const PolygonContext& context() const { return ctx_; }
  const std::vector<Diagonal>& arcs() const { return arcs_; }
  std::size_t size() const { return arcs_.size(); }
  bool empty() const { return arcs_.empty(); }
  bool contains(const Diagonal& d) const;

  /// Copy with d added (d must be a valid diagonal not already present).
  ArcCollection with(const Diagonal& d) const;

  /// Number of arcs incident with v.
  int valency(int v) const;
  bool is_isolated(int v) const { return valency(v) == 0; }
  bool has_crossing() const;

  AbstractTiling as_abstract() const;

  friend bool operator==(const ArcCollection& a, const ArcCollection& b) {
    return a.ctx_ == b.ctx_ && a.arcs_ == b.arcs_;
  }
  friend bool operator<(const ArcCollection& a, const ArcCollection& b) { return a.arcs_ < b.arcs_; }

 private:
  PolygonContext ctx_;
  std::vector<Diagonal> arcs_;
};

std::string to_string(const ArcCollection& tc);

/// One region of a non-crossing dissection.
struct Tile {
  /// Bounding arcs in clockwise order, starting with the arc that follows the
  /// open boundary (so the first and last arcs are the outer diagonals).
  std::vector<Diagonal> bounding_arcs;
  /// Clockwise (start, end) of the open boundary, if the tile touches the
  /// polygon boundary. A tile touching it in several stretches keeps the
  /// first here and all of them in `runs`.
  std::optional<std::pair<int, int>> open_boundary;
  std::vector<BoundaryRun> runs;
  std::vector<int> isolated_vertices;
  int length = 0;       // number of bounding arcs
  int open_length = 0;  // number of boundary edges on the open boundary (0 if closed)

  bool closed() const { return runs.empty(); }
};

enum class TileClass {
  kT,             // T_k, 1 <= k <= m+2: (k, m+k-1); k = m+2 needs a short outer diagonal
  kT1Prime,       // T'_1: (1, 2m+1)
  kTm3,           // T_{m+3}: (m+3, m+1), both outer diagonals short
  kTm3Prime,      // T'_{m+3}: (m+3, 0)
  kUnclassified,
};

struct TileType {
  TileClass tag = TileClass::kUnclassified;
  int k = 0;  // the index: k for T_k, 1 for T'_1, m+3 for T_{m+3} and T'_{m+3}
  /// Short-outer-diagonal witnesses (meaningful for open tiles).
  bool first_outer_short = false;
  bool last_outer_short = false;

  bool classified() const { return tag != TileClass::kUnclassified; }
  friend bool operator==(const TileType&, const TileType&) = default;
};

/// "T3", "T'1", "T'4", ... ("unclassified" otherwise).
std::string to_string(const TileType& t);

// Pairwise compatibility: no k-neighbours, not two adjacent
// short diagonals, and a crossing only between a short and a long diagonal.
bool compatible(const PolygonContext& ctx, const Diagonal& a, const Diagonal& b);

bool is_m_rigid(const ArcCollection& tc);
/// Oracle: no Ext^k in either direction for any pair and 1 <= k <= m.
bool is_m_rigid_via_ext(const ArcCollection& tc);
/// Requires an m-rigid collection (PreconditionError otherwise). The empty
/// collection is never maximal.
bool is_maximal(const ArcCollection& tc);
/// The graph on non-isolated vertices is connected; empty is disconnected.
bool is_connected(const ArcCollection& tc);

/// Regions of the dissection (PreconditionError on crossing arcs).
std::vector<Tile> extract_tiles(const ArcCollection& tc);
TileType classify_tile(const PolygonContext& ctx, const Tile& t);

/// Tile-type characterisation of connected maximal m-rigid objects: all
/// tiles classified, flanking short diagonals around every open boundary of
/// length 2m+1, no adjacent short diagonals, and no long isolated stretch
/// around a single non-isolated vertex. Requires a non-crossing, connected
/// collection (PreconditionError otherwise).
bool satisfies_theorem(const ArcCollection& tc);

/// Per-condition breakdown of satisfies_theorem.
struct TheoremReport {
  bool tiles_classified = false;
  bool flanking_shorts = false;      // condition (1)
  bool no_adjacent_shorts = false;   // condition (2)
  bool no_isolated_stretch = false;  // condition (3)
  bool ok() const {
    return tiles_classified && flanking_shorts && no_adjacent_shorts && no_isolated_stretch;
  }
};
TheoremReport theorem_report(const ArcCollection& tc);

struct EnumerationOptions {
  /// Refuse contexts with more diagonals than this (ResourceError).
  std::size_t max_diagonals = 40;
  /// Worker threads for the clique search; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// All maximal m-rigid collections (maximal cliques of the compatibility
/// graph), sorted.
std::vector<ArcCollection> enumerate_maximal(const PolygonContext& ctx,
                                             const EnumerationOptions& opts = {});
/// The connected ones among enumerate_maximal, sorted.
std::vector<ArcCollection> enumerate_connected_maximal(const PolygonContext& ctx,
                                                       const EnumerationOptions& opts = {});

/// Lexicographically minimal rotation of the collection (for reporting
/// orbits under the rotation of the polygon).
ArcCollection canonical_rotation(const ArcCollection& tc);

/// Simple cycles of the graph whose vertices are polygon vertices and whose
/// edges are the arcs, each returned once as its vertex sequence.
std::vector<std::vector<int>> simple_cycles(const ArcCollection& tc);

}  // namespace mrigid

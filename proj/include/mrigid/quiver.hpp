#pragma once

// Quivers with length-2 zero relations, the tiling algebra of a marked-disc
// tiling, gentle-algebra predicates, and permitted/forbidden threads.

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mrigid/disc.hpp"

namespace mrigid {

class ArcCollection;

struct Arrow {
  int id = 0;
  int source = 0;
  int target = 0;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/// Vertices are 1..vertex_count; arrow ids are dense from 1 and arrows()[i]
/// has id i+1. A relation (a, b) means the path a then b is zero, so
/// target(a) == source(b).
class Quiver {
 public:
  Quiver() = default;
  /// Throws InputError on out-of-range vertices, loops, 2-cycles, ids that
  /// are not dense, or non-composable relations.
  Quiver(int vertex_count, std::vector<Arrow> arrows, std::set<std::pair<int, int>> relations);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int id) const { return arrows_.at(static_cast<std::size_t>(id - 1)); }
  const std::set<std::pair<int, int>>& relations() const { return relations_; }
  bool is_relation(int a, int b) const { return relations_.count({a, b}) > 0; }

  const std::vector<int>& outgoing(int v) const { return out_.at(v); }
  const std::vector<int>& incoming(int v) const { return in_.at(v); }
  int valency(int v) const {
    return static_cast<int>(out_.at(v).size() + in_.at(v).size());
  }
  bool connected() const;

  friend bool operator==(const Quiver& a, const Quiver& b) {
    return a.vertex_count_ == b.vertex_count_ && a.arrows_ == b.arrows_ &&
           a.relations_ == b.relations_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Arrow> arrows_;
  std::set<std::pair<int, int>> relations_;
  std::vector<std::vector<int>> out_;
  std::vector<std::vector<int>> in_;
};

/// Tiling algebra: one vertex per arc (vertex i is arcs[i-1]); an arrow
/// a -> b for each tile corner where a and b meet and the minimal rotation
/// from a to b about the shared point is clockwise; relations are the
/// compositions of two successive arrows from the same tile. Arrows are
/// numbered by (source, target).
Quiver tiling_algebra(const AbstractTiling& tiling);
Quiver tiling_algebra(const ArcCollection& tc);

bool is_gentle(const Quiver& q);

/// Every cycle of the underlying graph is oriented and every pair of
/// consecutive arrows on it (wrap-around included) is a relation.
bool cycles_oriented_relation_full(const Quiver& q);

/// Arrow ids of each simple cycle of the underlying graph, in path order.
/// Meaningful on quivers whose cycles are oriented (a cactus).
std::vector<std::vector<int>> quiver_cycles(const Quiver& q);

enum class ThreadKind { kPermitted, kForbidden };

struct Thread {
  ThreadKind kind = ThreadKind::kPermitted;
  std::vector<int> arrows;  // empty for trivial threads
  int anchor = 0;           // vertex of a trivial thread
  bool closed = false;      // forbidden cycle
  int source = 0;
  int target = 0;

  bool trivial() const { return arrows.empty(); }
  int length() const { return static_cast<int>(arrows.size()); }
  friend bool operator==(const Thread&, const Thread&) = default;
};

std::string to_string(const Thread& t);

/// Maximal relation-free paths plus trivial permitted threads. A vertex
/// with no arrows carries two trivial threads (one per side of its arc).
/// Requires a gentle quiver with no relation-free oriented cycle.
std::vector<Thread> permitted_threads(const Quiver& q);

/// Maximal forbidden paths (open, plus every rotation of each relation-full
/// cycle) and trivial forbidden threads. Requires a gentle quiver whose
/// cycles are oriented and relation-full.
std::vector<Thread> forbidden_threads(const Quiver& q);

/// Open forbidden threads plus, per cycle, the closed rotation starting with
/// the smallest arrow id.
struct ThreadSet {
  std::vector<Thread> members;
  /// Members incident with vertex v (as anchor or on the path).
  std::vector<std::size_t> incident(const Quiver& q, int v) const;
};

ThreadSet choose_thread_set(const Quiver& q);

/// Vertices visited by a thread (anchor for trivial threads).
std::vector<int> thread_vertices(const Quiver& q, const Thread& t);

}  // namespace mrigid

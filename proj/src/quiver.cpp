#include "mrigid/quiver.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <tuple>

#include "mrigid/errors.hpp"
#include "mrigid/rigid.hpp"

namespace mrigid {

Quiver::Quiver(int vertex_count, std::vector<Arrow> arrows, std::set<std::pair<int, int>> relations)
    : vertex_count_(vertex_count), arrows_(std::move(arrows)), relations_(std::move(relations)) {
  if (vertex_count_ < 0) throw InputError("negative vertex count");
  out_.assign(static_cast<std::size_t>(vertex_count_) + 1, {});
  in_.assign(static_cast<std::size_t>(vertex_count_) + 1, {});
  std::set<std::pair<int, int>> pairs;
  for (std::size_t i = 0; i < arrows_.size(); ++i) {
    const Arrow& a = arrows_[i];
    if (a.id != static_cast<int>(i) + 1) throw InputError("arrow ids must be dense from 1 in order");
    if (a.source < 1 || a.source > vertex_count_ || a.target < 1 || a.target > vertex_count_) {
      throw InputError("arrow " + std::to_string(a.id) + " has an out-of-range endpoint");
    }
    if (a.source == a.target) throw InputError("arrow " + std::to_string(a.id) + " is a loop");
    if (pairs.count({a.target, a.source})) {
      throw InputError("arrow " + std::to_string(a.id) + " closes a 2-cycle");
    }
    pairs.insert({a.source, a.target});
    out_[a.source].push_back(a.id);
    in_[a.target].push_back(a.id);
  }
  const int count = static_cast<int>(arrows_.size());
  for (auto [x, y] : relations_) {
    if (x < 1 || x > count || y < 1 || y > count) throw InputError("relation names an unknown arrow");
    if (arrow(x).target != arrow(y).source) {
      throw InputError("relation (" + std::to_string(x) + "," + std::to_string(y) +
                       ") is not composable");
    }
  }
}

bool Quiver::connected() const {
  if (vertex_count_ == 0) return false;
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_) + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const Arrow& a : arrows_) parent[find(a.source)] = find(a.target);
  for (int v = 2; v <= vertex_count_; ++v) {
    if (find(v) != find(1)) return false;
  }
  return true;
}

Quiver tiling_algebra(const AbstractTiling& input) {
  AbstractTiling tiling = input;
  tiling.normalize();
  struct Raw {
    int source;
    int target;
    std::size_t face;
    std::size_t corner;
  };
  std::vector<Raw> raw;
  const auto faces = disc_faces(tiling.marked_points, tiling.arcs);
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const auto& sides = faces[f].sides;
    const std::size_t n = sides.size();
    for (std::size_t i = 0; i < n; ++i) {
      const auto& here = sides[i];
      const auto& next = sides[(i + 1) % n];
      // Leaving a corner along the preceding edge in the rotation means the
      // next arc is reached from the current one by an anticlockwise turn.
      if (here.is_arc && next.is_arc) raw.push_back({next.arc + 1, here.arc + 1, f, i});
    }
  }
  std::sort(raw.begin(), raw.end(), [](const Raw& a, const Raw& b) {
    return std::tie(a.source, a.target) < std::tie(b.source, b.target);
  });
  std::vector<Arrow> arrows;
  std::map<std::pair<std::size_t, std::size_t>, int> by_corner;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    arrows.push_back({static_cast<int>(i) + 1, raw[i].source, raw[i].target});
    by_corner[{raw[i].face, raw[i].corner}] = static_cast<int>(i) + 1;
  }
  std::set<std::pair<int, int>> relations;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    const std::size_t n = faces[f].sides.size();
    for (std::size_t i = 0; i < n; ++i) {
      auto first = by_corner.find({f, (i + 1) % n});
      auto second = by_corner.find({f, i});
      if (first != by_corner.end() && second != by_corner.end() && first != second) {
        relations.insert({first->second, second->second});
      }
    }
  }
  return Quiver(static_cast<int>(tiling.arcs.size()), std::move(arrows), std::move(relations));
}

Quiver tiling_algebra(const ArcCollection& tc) { return tiling_algebra(tc.as_abstract()); }

bool is_gentle(const Quiver& q) {
  for (int v = 1; v <= q.vertex_count(); ++v) {
    if (q.outgoing(v).size() > 2 || q.incoming(v).size() > 2) return false;
  }
  for (const Arrow& a : q.arrows()) {
    int free_after = 0;
    int zero_after = 0;
    for (int b : q.outgoing(a.target)) (q.is_relation(a.id, b) ? zero_after : free_after)++;
    int free_before = 0;
    int zero_before = 0;
    for (int c : q.incoming(a.source)) (q.is_relation(c, a.id) ? zero_before : free_before)++;
    if (free_after > 1 || zero_after > 1 || free_before > 1 || zero_before > 1) return false;
  }
  return true;
}

namespace {

// Biconnected components of the underlying multigraph, as arrow-id sets.
std::vector<std::vector<int>> blocks(const Quiver& q) {
  const int n = q.vertex_count();
  std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> low(static_cast<std::size_t>(n) + 1, 0);
  std::vector<int> edge_stack;
  std::vector<std::vector<int>> out;
  int timer = 0;
  std::function<void(int, int)> dfs = [&](int v, int via) {
    disc[v] = low[v] = ++timer;
    std::vector<int> edges = q.outgoing(v);
    edges.insert(edges.end(), q.incoming(v).begin(), q.incoming(v).end());
    for (int e : edges) {
      if (e == via) continue;
      const Arrow& a = q.arrow(e);
      const int w = a.source == v ? a.target : a.source;
      if (!disc[w]) {
        edge_stack.push_back(e);
        dfs(w, e);
        low[v] = std::min(low[v], low[w]);
        if (low[w] >= disc[v]) {
          std::vector<int> block;
          while (true) {
            const int top = edge_stack.back();
            edge_stack.pop_back();
            block.push_back(top);
            if (top == e) break;
          }
          std::sort(block.begin(), block.end());
          out.push_back(std::move(block));
        }
      } else if (disc[w] < disc[v]) {
        edge_stack.push_back(e);
        low[v] = std::min(low[v], disc[w]);
      }
    }
  };
  for (int v = 1; v <= n; ++v) {
    if (!disc[v]) dfs(v, 0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::set<int> block_vertices(const Quiver& q, const std::vector<int>& block) {
  std::set<int> vs;
  for (int e : block) {
    vs.insert(q.arrow(e).source);
    vs.insert(q.arrow(e).target);
  }
  return vs;
}

// Arrows of a cycle block in path order from the smallest id, following
// arrow direction when the cycle is oriented.
std::vector<int> order_cycle(const Quiver& q, const std::vector<int>& block) {
  std::vector<int> order{block.front()};
  std::set<int> used{block.front()};
  int at = q.arrow(block.front()).target;
  while (order.size() < block.size()) {
    int pick = 0;
    for (int e : block) {
      if (used.count(e)) continue;
      const Arrow& a = q.arrow(e);
      if (a.source == at || a.target == at) {
        if (pick == 0 || a.source == at) pick = e;
      }
    }
    if (pick == 0) break;
    used.insert(pick);
    order.push_back(pick);
    const Arrow& a = q.arrow(pick);
    at = a.source == at ? a.target : a.source;
  }
  return order;
}

}  // namespace

std::vector<std::vector<int>> quiver_cycles(const Quiver& q) {
  std::vector<std::vector<int>> out;
  for (const auto& block : blocks(q)) {
    if (block.size() < 2) continue;
    if (block_vertices(q, block).size() != block.size()) continue;
    out.push_back(order_cycle(q, block));
  }
  return out;
}

bool cycles_oriented_relation_full(const Quiver& q) {
  for (const auto& block : blocks(q)) {
    if (block.size() < 2) continue;
    // A 2-connected block that is not a single cycle contains a theta, and
    // some cycle of a theta is never oriented.
    if (block_vertices(q, block).size() != block.size()) return false;
    const auto order = order_cycle(q, block);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const int a = order[i];
      const int b = order[(i + 1) % order.size()];
      if (q.arrow(a).target != q.arrow(b).source) return false;
      if (!q.is_relation(a, b)) return false;
    }
  }
  return true;
}

std::string to_string(const Thread& t) {
  std::string out = t.kind == ThreadKind::kPermitted ? "p" : "f";
  if (t.trivial()) return out + "_" + std::to_string(t.anchor);
  out += t.closed ? "[closed:" : "[";
  for (std::size_t i = 0; i < t.arrows.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(t.arrows[i]);
  }
  return out + "]";
}

namespace {

Thread trivial_thread(ThreadKind kind, int v) {
  Thread t;
  t.kind = kind;
  t.anchor = v;
  t.source = v;
  t.target = v;
  return t;
}

Thread path_thread(const Quiver& q, ThreadKind kind, std::vector<int> arrows, bool closed) {
  Thread t;
  t.kind = kind;
  t.arrows = std::move(arrows);
  t.closed = closed;
  t.source = q.arrow(t.arrows.front()).source;
  t.target = q.arrow(t.arrows.back()).target;
  return t;
}

// Unique successor of arrow a under the given relation polarity, or 0.
int successor(const Quiver& q, int a, bool through_relation) {
  for (int b : q.outgoing(q.arrow(a).target)) {
    if (q.is_relation(a, b) == through_relation) return b;
  }
  return 0;
}

bool has_predecessor(const Quiver& q, int a, bool through_relation) {
  for (int c : q.incoming(q.arrow(a).source)) {
    if (q.is_relation(c, a) == through_relation) return true;
  }
  return false;
}

void sort_threads(std::vector<Thread>& threads) {
  std::stable_sort(threads.begin(), threads.end(), [](const Thread& a, const Thread& b) {
    if (a.trivial() != b.trivial()) return a.trivial();
    if (a.trivial()) return a.anchor < b.anchor;
    return a.arrows.front() < b.arrows.front();
  });
}

// Trivial threads: valency one, or one arrow in and one out whose composite
// is (forbidden) or is not (permitted) a relation. An arrow-free vertex gets
// two, one for each side of its arc.
void add_trivial(const Quiver& q, ThreadKind kind, std::vector<Thread>& out) {
  const bool want_relation = kind == ThreadKind::kForbidden;
  for (int v = 1; v <= q.vertex_count(); ++v) {
    const int val = q.valency(v);
    if (val == 0) {
      out.push_back(trivial_thread(kind, v));
      out.push_back(trivial_thread(kind, v));
    } else if (val == 1) {
      out.push_back(trivial_thread(kind, v));
    } else if (q.incoming(v).size() == 1 && q.outgoing(v).size() == 1) {
      if (q.is_relation(q.incoming(v)[0], q.outgoing(v)[0]) == want_relation) {
        out.push_back(trivial_thread(kind, v));
      }
    }
  }
}

}  // namespace

std::vector<Thread> permitted_threads(const Quiver& q) {
  if (!is_gentle(q)) throw PreconditionError("permitted threads require a gentle quiver");
  std::vector<Thread> out;
  std::vector<bool> covered(q.arrows().size() + 1, false);
  for (const Arrow& a : q.arrows()) {
    if (has_predecessor(q, a.id, false)) continue;
    std::vector<int> path;
    for (int cur = a.id; cur != 0; cur = successor(q, cur, false)) {
      if (covered[cur]) throw PreconditionError("permitted path revisits an arrow");
      covered[cur] = true;
      path.push_back(cur);
    }
    out.push_back(path_thread(q, ThreadKind::kPermitted, std::move(path), false));
  }
  if (std::find(covered.begin() + 1, covered.end(), false) != covered.end()) {
    throw PreconditionError("quiver has an oriented cycle without relations");
  }
  add_trivial(q, ThreadKind::kPermitted, out);
  sort_threads(out);
  return out;
}

std::vector<Thread> forbidden_threads(const Quiver& q) {
  if (!is_gentle(q)) throw PreconditionError("forbidden threads require a gentle quiver");
  if (!cycles_oriented_relation_full(q)) {
    throw PreconditionError("forbidden threads require oriented, relation-full cycles");
  }
  std::vector<Thread> out;
  std::vector<bool> covered(q.arrows().size() + 1, false);
  for (const Arrow& a : q.arrows()) {
    if (has_predecessor(q, a.id, true)) continue;
    std::vector<int> path;
    for (int cur = a.id; cur != 0; cur = successor(q, cur, true)) {
      covered[cur] = true;
      path.push_back(cur);
    }
    out.push_back(path_thread(q, ThreadKind::kForbidden, std::move(path), false));
  }
  // The remaining arrows lie on relation-full cycles; every rotation is a thread.
  for (const Arrow& a : q.arrows()) {
    if (covered[a.id]) continue;
    std::vector<int> path{a.id};
    for (int cur = successor(q, a.id, true); cur != a.id; cur = successor(q, cur, true)) {
      if (cur == 0 || path.size() > q.arrows().size()) {
        throw PreconditionError("malformed relation cycle");
      }
      path.push_back(cur);
    }
    out.push_back(path_thread(q, ThreadKind::kForbidden, std::move(path), true));
  }
  add_trivial(q, ThreadKind::kForbidden, out);
  sort_threads(out);
  return out;
}

std::vector<int> thread_vertices(const Quiver& q, const Thread& t) {
  if (t.trivial()) return {t.anchor};
  std::vector<int> vs{q.arrow(t.arrows.front()).source};
  for (int a : t.arrows) vs.push_back(q.arrow(a).target);
  if (t.closed) vs.pop_back();
  return vs;
}

ThreadSet choose_thread_set(const Quiver& q) {
  ThreadSet set;
  for (Thread& t : forbidden_threads(q)) {
    if (!t.closed) {
      set.members.push_back(std::move(t));
    } else if (t.arrows.front() == *std::min_element(t.arrows.begin(), t.arrows.end())) {
      set.members.push_back(std::move(t));
    }
  }
  return set;
}

std::vector<std::size_t> ThreadSet::incident(const Quiver& q, int v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < members.size(); ++i) {
    const auto vs = thread_vertices(q, members[i]);
    if (std::find(vs.begin(), vs.end(), v) != vs.end()) out.push_back(i);
  }
  return out;
}

}  // namespace mrigid

#include "mrigid/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "mrigid/errors.hpp"
#include "mrigid/rigid.hpp"

namespace mrigid {

std::string to_string(const AGInvariant& ag) {
  std::string out;
  for (const auto& [a, b] : ag.pairs) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  }
  return out;
}

namespace {

void require_thread_preconditions(const Quiver& q) {
  if (!is_gentle(q)) throw PreconditionError("quiver is not gentle");
  if (!cycles_oriented_relation_full(q)) {
    throw PreconditionError("quiver has a cycle that is not oriented and relation-full");
  }
}

// A thread reduced to what the walk needs. Trivial threads at an arrow-free
// vertex come in two copies, told apart by `copy`.
struct Stub {
  int source = 0;
  int target = 0;
  int first = 0;  // first arrow, 0 if trivial
  int last = 0;
  int length = 0;
  int copy = 0;
};

std::vector<Stub> stubs(const std::vector<Thread>& threads, bool open_only) {
  std::vector<Stub> out;
  std::map<int, int> copies;
  for (const Thread& t : threads) {
    if (open_only && t.closed) continue;
    Stub s{t.source, t.target, 0, 0, t.length(), 0};
    if (t.trivial()) {
      s.copy = copies[t.anchor]++;
    } else {
      s.first = t.arrows.front();
      s.last = t.arrows.back();
    }
    out.push_back(s);
  }
  return out;
}

// Among candidates meeting at a vertex, the one on the other side from
// `arrow` (0 for a trivial thread).
std::size_t opposite(const Quiver& q, const std::vector<Stub>& pool, int vertex, int arrow,
                     int copy, bool at_target) {
  std::vector<std::size_t> found;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    if ((at_target ? pool[i].target : pool[i].source) == vertex) found.push_back(i);
  }
  if (q.valency(vertex) == 0) {
    // Ending at a bare vertex keeps the copy, starting from one switches it.
    const int want = at_target ? copy : 1 - copy;
    for (std::size_t i : found) {
      if (pool[i].copy == want) return i;
    }
    throw PreconditionError("thread walk lost its way at an isolated vertex");
  }
  std::vector<std::size_t> picked;
  auto end_arrow = [&](std::size_t i) { return at_target ? pool[i].last : pool[i].first; };
  if (arrow != 0) {
    for (std::size_t i : found) {
      if (end_arrow(i) != arrow) picked.push_back(i);
    }
  } else {
    for (std::size_t i : found) {
      if (end_arrow(i) != 0) picked.push_back(i);
    }
    if (picked.empty()) picked = found;
  }
  if (picked.size() != 1) throw PreconditionError("thread walk is ambiguous");
  return picked.front();
}

}  // namespace

AGInvariant ag_invariant(const Quiver& q, std::size_t start_offset) {
  require_thread_preconditions(q);
  const auto permitted = stubs(permitted_threads(q), false);
  const auto forbidden = stubs(forbidden_threads(q), true);
  AGInvariant ag;
  std::vector<bool> used(permitted.size(), false);
  const std::size_t count = permitted.size();
  for (std::size_t step = 0; step < count; ++step) {
    const std::size_t h0 = (step + start_offset) % count;
    if (used[h0]) continue;
    int a = 0;
    int b = 0;
    std::size_t h = h0;
    do {
      if (used[h]) throw PreconditionError("thread walk is not a permutation");
      used[h] = true;
      ++a;
      const Stub& H = permitted[h];
      const std::size_t f = opposite(q, forbidden, H.target, H.last, H.copy, true);
      const Stub& F = forbidden[f];
      b += F.length;
      h = opposite(q, permitted, F.source, F.first, F.copy, false);
    } while (h != h0);
    ag.pairs.emplace_back(a, b);
  }
  for (const auto& cycle : quiver_cycles(q)) ag.pairs.emplace_back(0, static_cast<int>(cycle.size()));
  std::sort(ag.pairs.begin(), ag.pairs.end());
  return ag;
}

namespace {

std::vector<DiscFace> connected_faces(const AbstractTiling& input) {
  AbstractTiling t = input;
  t.normalize();
  if (t.arcs.empty()) throw PreconditionError("tiling has no arcs");
  auto faces = disc_faces(t.marked_points, t.arcs);
  for (const DiscFace& f : faces) {
    if (f.runs.size() > 1) throw PreconditionError("tiling arcs do not form a connected graph");
  }
  return faces;
}

AbstractTiling abstract_of(const ArcCollection& tc) { return tc.as_abstract(); }

}  // namespace

AGInvariant ag_from_tiles(const AbstractTiling& tiling) {
  AGInvariant ag;
  int a = 0;
  int b = 0;
  for (const DiscFace& f : connected_faces(tiling)) {
    const int len = static_cast<int>(f.arcs.size());
    if (f.closed()) {
      ag.pairs.emplace_back(0, len);
    } else {
      ++a;
      b += len - 1;
    }
  }
  ag.pairs.emplace_back(a, b);
  std::sort(ag.pairs.begin(), ag.pairs.end());
  return ag;
}

AGInvariant ag_from_tiles(const ArcCollection& tc) { return ag_from_tiles(abstract_of(tc)); }

std::string to_string(const GorensteinResult& g) {
  if (g.kind == GorensteinResult::Kind::kExact) return std::to_string(g.value);
  return "at most 1";
}

GorensteinResult gorenstein_dimension(const Quiver& q) {
  if (!is_gentle(q)) throw PreconditionError("quiver is not gentle");
  int best = 0;
  for (const Arrow& a : q.arrows()) {
    bool gentle = true;
    for (int c : q.incoming(a.source)) {
      if (q.is_relation(c, a.id)) gentle = false;
    }
    if (!gentle) continue;
    // Follow relations; arrows cannot repeat since a gentle arrow has no
    // relation predecessor.
    int length = 1;
    int cur = a.id;
    while (true) {
      int next = 0;
      for (int b : q.outgoing(q.arrow(cur).target)) {
        if (q.is_relation(cur, b)) next = b;
      }
      if (next == 0) break;
      cur = next;
      ++length;
    }
    best = std::max(best, length);
  }
  return best > 0 ? GorensteinResult::exact(best) : GorensteinResult::at_most_one();
}

GorensteinResult gorenstein_endomorphism(const Quiver& q) {
  if (q.vertex_count() == 1 && q.arrows().empty()) return GorensteinResult::exact(0);
  return gorenstein_dimension(q);
}

GorensteinResult gorenstein_from_tiles(const AbstractTiling& tiling) {
  int longest = 0;
  for (const DiscFace& f : connected_faces(tiling)) {
    if (!f.closed()) longest = std::max(longest, static_cast<int>(f.arcs.size()));
  }
  return longest >= 2 ? GorensteinResult::exact(longest - 1) : GorensteinResult::at_most_one();
}

GorensteinResult gorenstein_from_tiles(const ArcCollection& tc) {
  return gorenstein_from_tiles(abstract_of(tc));
}

EndAlgebraReport end_algebra_report(const Quiver& q, int m) {
  if (m < 1) throw InputError("m must be at least 1");
  require_thread_preconditions(q);
  const auto permitted = permitted_threads(q);
  const auto forbidden = forbidden_threads(q);
  auto val = [&](int v) { return q.valency(v); };
  EndAlgebraReport r;

  r.no_short_to_short_thread = std::none_of(permitted.begin(), permitted.end(), [&](const Thread& p) {
    return !p.trivial() && val(p.source) == 1 && val(p.target) == 1;
  });

  r.long_forbidden_paths_end_short = true;
  for (const Thread& f : forbidden) {
    if (f.closed || f.length() < m + 1) continue;
    for (int i = 0; i + m + 1 <= f.length(); ++i) {
      const int s = q.arrow(f.arrows[i]).source;
      const int t = q.arrow(f.arrows[i + m]).target;
      if (val(s) != 1 && val(t) != 1) r.long_forbidden_paths_end_short = false;
    }
  }

  const auto cycles = quiver_cycles(q);
  r.cycles_have_length = std::all_of(cycles.begin(), cycles.end(), [&](const auto& c) {
    return static_cast<int>(c.size()) == m + 3;
  });

  r.relation_vertices_flanked = true;
  for (int x = 1; x <= q.vertex_count(); ++x) {
    if (val(x) != 2 || q.incoming(x).size() != 1 || q.outgoing(x).size() != 1) continue;
    if (!q.is_relation(q.incoming(x)[0], q.outgoing(x)[0])) continue;
    const bool before = std::any_of(permitted.begin(), permitted.end(), [&](const Thread& p) {
      return p.target == x && val(p.source) == 1;
    });
    const bool after = std::any_of(permitted.begin(), permitted.end(), [&](const Thread& p) {
      return p.source == x && val(p.target) == 1;
    });
    if (!before || !after) r.relation_vertices_flanked = false;
  }

  r.companion_threads = true;
  for (const Thread& f : forbidden) {
    if (f.trivial() || f.length() != m + 1) continue;
    if (val(f.target) == 1) {
      const bool ok = std::any_of(permitted.begin(), permitted.end(), [&](const Thread& p) {
        return p.source == f.source && val(p.target) == 1;
      });
      if (!ok) r.companion_threads = false;
    }
    if (val(f.source) == 1) {
      const bool ok = std::any_of(permitted.begin(), permitted.end(), [&](const Thread& p) {
        return p.target == f.target && val(p.source) == 1;
      });
      if (!ok) r.companion_threads = false;
    }
  }

  r.no_long_pair = true;
  for (const Thread& p : permitted) {
    for (const Thread& f1 : forbidden) {
      if (f1.closed || f1.length() < 2 || f1.target != p.target) continue;
      for (const Thread& f2 : forbidden) {
        if (f2.closed || f2.length() < 2 || f2.source != p.source) continue;
        if (f1.length() + f2.length() >= m + 2) r.no_long_pair = false;
      }
    }
  }
  return r;
}

bool is_end_algebra(const Quiver& q, int m) { return end_algebra_report(q, m).ok(); }

namespace {

std::set<int> cycle_arrows(const Quiver& q) {
  std::set<int> out;
  for (const auto& c : quiver_cycles(q)) out.insert(c.begin(), c.end());
  return out;
}

}  // namespace

Quiver apply_cut(const Quiver& q, const CutSet& cut) {
  const auto on_cycle = cycle_arrows(q);
  std::set<int> removed;
  for (int a : cut) {
    if (!on_cycle.count(a)) throw InputError("arrow " + std::to_string(a) + " does not lie on a cycle");
    removed.insert(a);
  }
  std::map<int, int> renumber;
  std::vector<Arrow> arrows;
  for (const Arrow& a : q.arrows()) {
    if (removed.count(a.id)) continue;
    const int id = static_cast<int>(arrows.size()) + 1;
    renumber[a.id] = id;
    arrows.push_back({id, a.source, a.target});
  }
  std::set<std::pair<int, int>> relations;
  for (auto [x, y] : q.relations()) {
    if (removed.count(x) || removed.count(y)) continue;
    relations.insert({renumber.at(x), renumber.at(y)});
  }
  return Quiver(q.vertex_count(), std::move(arrows), std::move(relations));
}

std::vector<CutSet> enumerate_cuts(const Quiver& q, std::size_t max_cycle_arrows) {
  const auto on_cycle = cycle_arrows(q);
  const std::vector<int> pool(on_cycle.begin(), on_cycle.end());
  if (pool.size() > max_cycle_arrows) {
    throw ResourceError("too many cycle arrows to enumerate cuts (" + std::to_string(pool.size()) + ")");
  }
  std::vector<CutSet> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << pool.size()); ++mask) {
    CutSet c;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      if (mask >> i & 1U) c.push_back(pool[i]);
    }
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), [](const CutSet& a, const CutSet& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

ClusterProfile cluster_profile(const ArcCollection& tc) {
  const auto& ctx = tc.context();
  const int m = ctx.m();
  const int n_points = ctx.vertex_count();
  ClusterProfile prof;
  prof.m = m;
  prof.n = ctx.n();
  prof.counts.assign(static_cast<std::size_t>(m) + 4, 0);

  struct RunPlan {
    int keep = 0;
    bool merge = false;
    int end = 0;
  };
  std::map<int, RunPlan> plans;  // by run start
  std::vector<std::pair<Diagonal, Diagonal>> merged_pairs;

  for (const Tile& t : extract_tiles(tc)) {
    const TileType type = classify_tile(ctx, t);
    if (!type.classified()) throw PreconditionError("collection has an unclassified tile");
    RunPlan plan;
    switch (type.tag) {
      case TileClass::kT:
        ++prof.counts[type.k];
        plan.keep = m - type.k + 2;
        break;
      case TileClass::kT1Prime:
        ++prof.n1_prime;
        plan.keep = m + 1;
        break;
      case TileClass::kTm3:
        ++prof.counts[m + 3];
        plan.merge = true;
        merged_pairs.emplace_back(t.bounding_arcs.back(), t.bounding_arcs.front());
        break;
      case TileClass::kTm3Prime:
        ++prof.nm3_prime;
        continue;
      case TileClass::kUnclassified:
        break;
    }
    if (t.runs.size() != 1) throw PreconditionError("open tile with several boundary runs");
    plan.end = t.runs[0].end;
    plans[t.runs[0].start] = plan;
  }

  prof.x = (1 - m) * prof.n1_prime;
  for (int k = 1; k <= m + 2; ++k) prof.x -= (2 * k - 4) * prof.counts[k];
  const int shift = (prof.x - 4) / (m + 1);
  prof.rank = prof.needs_cut() ? prof.n - prof.counts[m + 3] + shift : prof.n + shift;

  // Relabel: walk the boundary from a non-isolated vertex that is not the
  // far end of a merged run, emitting the planned number of isolated points
  // after each run start.
  std::map<int, int> merge_end;
  for (const auto& [start, plan] : plans) {
    if (plan.merge) merge_end[plan.end] = start;
  }
  int origin = 0;
  for (int v = 1; v <= n_points && origin == 0; ++v) {
    if (!tc.is_isolated(v) && !merge_end.count(v)) origin = v;
  }
  if (origin == 0) throw PreconditionError("no anchor vertex for the angulation");
  std::vector<int> label(static_cast<std::size_t>(n_points) + 1, 0);
  int count = 0;
  for (int i = 0; i < n_points; ++i) {
    const int v = ctx.wrap(origin + i);
    if (tc.is_isolated(v)) continue;
    auto me = merge_end.find(v);
    label[v] = me != merge_end.end() ? label[me->second] : ++count;
    auto plan = plans.find(v);
    if (plan != plans.end()) count += plan->second.keep;
  }
  prof.angulation.marked_points = count;
  for (const Diagonal& d : tc.arcs()) prof.angulation.arcs.emplace_back(label[d.lo], label[d.hi]);
  prof.angulation.normalize();

  if (!merged_pairs.empty()) {
    const Quiver q = tiling_algebra(prof.angulation);
    const auto& arcs = prof.angulation.arcs;
    auto vertex_of = [&](const Diagonal& d) {
      std::pair<int, int> p = std::minmax(label[d.lo], label[d.hi]);
      return static_cast<int>(std::lower_bound(arcs.begin(), arcs.end(), p) - arcs.begin()) + 1;
    };
    for (const auto& [d1, d2] : merged_pairs) {
      const int u = vertex_of(d1);
      const int w = vertex_of(d2);
      int witness = 0;
      for (const Arrow& a : q.arrows()) {
        if ((a.source == u && a.target == w) || (a.source == w && a.target == u)) witness = a.id;
      }
      if (witness == 0) throw PreconditionError("merged tile produced no closing arrow");
      prof.cut.push_back(witness);
    }
    std::sort(prof.cut.begin(), prof.cut.end());
  }
  return prof;
}

}  // namespace mrigid

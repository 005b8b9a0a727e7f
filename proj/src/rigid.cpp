#include "mrigid/rigid.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "mrigid/errors.hpp"
#include "mrigid/orbit.hpp"

namespace mrigid {

ArcCollection::ArcCollection(PolygonContext ctx, std::vector<Diagonal> arcs)
    : ctx_(ctx), arcs_(std::move(arcs)) {
  for (const Diagonal& d : arcs_) make_diagonal(ctx_, d.lo, d.hi);
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw InputError("duplicate diagonal in collection");
  }
}

bool ArcCollection::contains(const Diagonal& d) const {
  return std::binary_search(arcs_.begin(), arcs_.end(), d);
}

ArcCollection ArcCollection::with(const Diagonal& d) const {
  auto arcs = arcs_;
  arcs.push_back(d);
  return ArcCollection(ctx_, std::move(arcs));
}

int ArcCollection::valency(int v) const {
  return static_cast<int>(
      std::count_if(arcs_.begin(), arcs_.end(), [v](const Diagonal& d) { return d.incident(v); }));
}

bool ArcCollection::has_crossing() const {
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs_.size(); ++j) {
      if (crosses(arcs_[i], arcs_[j])) return true;
    }
  }
  return false;
}

AbstractTiling ArcCollection::as_abstract() const {
  AbstractTiling t;
  t.marked_points = ctx_.vertex_count();
  for (const Diagonal& d : arcs_) t.arcs.emplace_back(d.lo, d.hi);
  return t;
}

std::string to_string(const ArcCollection& tc) {
  std::string out;
  for (const Diagonal& d : tc.arcs()) {
    if (!out.empty()) out += ' ';
    out += to_string(d);
  }
  return out;
}

std::string to_string(const TileType& t) {
  switch (t.tag) {
    case TileClass::kT:
      return "T" + std::to_string(t.k);
    case TileClass::kT1Prime:
      return "T'1";
    case TileClass::kTm3:
      return "T" + std::to_string(t.k);
    case TileClass::kTm3Prime:
      return "T'" + std::to_string(t.k);
    case TileClass::kUnclassified:
      break;
  }
  return "unclassified";
}

bool compatible(const PolygonContext& ctx, const Diagonal& a, const Diagonal& b) {
  if (a == b) return true;
  for (int k = 1; k <= ctx.m(); ++k) {
    if (k_neighbours(ctx, a, b, k)) return false;
  }
  const bool a_short = is_short(ctx, a);
  const bool b_short = is_short(ctx, b);
  if (a_short && b_short && (a.incident(b.lo) || a.incident(b.hi))) return false;
  if (crosses(a, b) && a_short == b_short) return false;
  return true;
}

bool is_m_rigid(const ArcCollection& tc) {
  const auto& arcs = tc.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      if (!compatible(tc.context(), arcs[i], arcs[j])) return false;
    }
  }
  return true;
}

bool is_m_rigid_via_ext(const ArcCollection& tc) {
  const auto& ctx = tc.context();
  for (const Diagonal& x : tc.arcs()) {
    for (const Diagonal& y : tc.arcs()) {
      for (int k = 1; k <= ctx.m(); ++k) {
        if (ext_nonzero(ctx, x, y, k)) return false;
      }
    }
  }
  return true;
}

bool is_maximal(const ArcCollection& tc) {
  if (!is_m_rigid(tc)) throw PreconditionError("is_maximal requires an m-rigid collection");
  const auto& ctx = tc.context();
  for (const Diagonal& d : all_diagonals(ctx)) {
    if (tc.contains(d)) continue;
    const bool addable = std::all_of(tc.arcs().begin(), tc.arcs().end(),
                                     [&](const Diagonal& e) { return compatible(ctx, d, e); });
    if (addable) return false;
  }
  return !tc.empty();
}

bool is_connected(const ArcCollection& tc) {
  if (tc.empty()) return false;
  const int n = tc.context().vertex_count();
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
  for (const Diagonal& d : tc.arcs()) parent[find(d.lo)] = find(d.hi);
  std::set<int> roots;
  for (int v = 1; v <= n; ++v) {
    if (!tc.is_isolated(v)) roots.insert(find(v));
  }
  return roots.size() == 1;
}

std::vector<Tile> extract_tiles(const ArcCollection& tc) {
  if (tc.has_crossing()) throw PreconditionError("extract_tiles requires non-crossing arcs");
  const int n = tc.context().vertex_count();
  std::vector<std::pair<int, int>> arcs;
  for (const Diagonal& d : tc.arcs()) arcs.emplace_back(d.lo, d.hi);
  std::vector<Tile> tiles;
  for (const DiscFace& face : disc_faces(n, arcs)) {
    Tile t;
    for (int a : face.arcs) t.bounding_arcs.push_back(tc.arcs()[a]);
    t.length = static_cast<int>(t.bounding_arcs.size());
    t.runs = face.runs;
    for (const BoundaryRun& run : face.runs) {
      t.open_length += run.edges;
      // Interior points of a run; the arc-free disc has every point isolated.
      const int interior = t.length == 0 ? run.edges : run.edges - 1;
      for (int i = 0; i < interior; ++i) {
        t.isolated_vertices.push_back(tc.context().wrap(run.start + 1 + i));
      }
    }
    if (!face.runs.empty()) t.open_boundary = std::make_pair(face.runs[0].start, face.runs[0].end);
    std::sort(t.isolated_vertices.begin(), t.isolated_vertices.end());
    tiles.push_back(std::move(t));
  }
  return tiles;
}

TileType classify_tile(const PolygonContext& ctx, const Tile& t) {
  const int m = ctx.m();
  const int len = t.length;
  const int b = t.open_length;
  TileType type;
  if (len == 0) return type;
  type.first_outer_short = is_short(ctx, t.bounding_arcs.front());
  type.last_outer_short = is_short(ctx, t.bounding_arcs.back());
  // A short side between two other sides of the tile would leave those two
  // as m-neighbours, so only the outer diagonals of an open tile may be short.
  const std::size_t first_inner = t.closed() ? 0 : 1;
  const std::size_t end_inner = t.closed() ? t.bounding_arcs.size() : t.bounding_arcs.size() - 1;
  for (std::size_t i = first_inner; i < end_inner; ++i) {
    if (is_short(ctx, t.bounding_arcs[i])) return type;
  }
  if (t.closed()) {
    if (len == m + 3) {
      type.tag = TileClass::kTm3Prime;
      type.k = m + 3;
    }
    return type;
  }
  if (t.runs.size() != 1) return type;
  if (len >= 1 && len <= m + 1 && b == m + len - 1) {
    type.tag = TileClass::kT;
    type.k = len;
  } else if (len == m + 2 && b == 2 * m + 1 &&
             (type.first_outer_short || type.last_outer_short)) {
    type.tag = TileClass::kT;
    type.k = m + 2;
  } else if (len == 1 && b == 2 * m + 1) {
    type.tag = TileClass::kT1Prime;
    type.k = 1;
  } else if (len == m + 3 && b == m + 1 && type.first_outer_short && type.last_outer_short) {
    type.tag = TileClass::kTm3;
    type.k = m + 3;
  }
  return type;
}

TheoremReport theorem_report(const ArcCollection& tc) {
  if (tc.has_crossing()) throw PreconditionError("theorem check requires a non-crossing collection");
  if (!is_connected(tc)) throw PreconditionError("theorem check requires a connected collection");
  const auto& ctx = tc.context();
  const int m = ctx.m();
  TheoremReport report;

  const auto tiles = extract_tiles(tc);
  report.tiles_classified = std::all_of(tiles.begin(), tiles.end(), [&](const Tile& t) {
    return classify_tile(ctx, t).classified();
  });

  report.flanking_shorts = true;
  for (const Tile& t : tiles) {
    if (t.runs.size() != 1 || t.open_length != 2 * m + 1) continue;
    const int first = t.open_boundary->first;
    const int last = t.open_boundary->second;
    const Diagonal before(ctx.wrap(first - m), first);
    const Diagonal after(last, ctx.wrap(last + m));
    if (!tc.contains(before) || !tc.contains(after)) report.flanking_shorts = false;
  }

  report.no_adjacent_shorts = true;
  const auto& arcs = tc.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const bool share = arcs[i].incident(arcs[j].lo) || arcs[i].incident(arcs[j].hi);
      if (share && is_short(ctx, arcs[i]) && is_short(ctx, arcs[j])) {
        report.no_adjacent_shorts = false;
      }
    }
  }

  // A vertex with at least m+1 isolated vertices on each side and a stretch
  // of 3m+1 vertices in total admits an extra short diagonal over it.
  report.no_isolated_stretch = true;
  const int n = ctx.vertex_count();
  for (int v = 1; v <= n; ++v) {
    int before = 0;
    while (before < n - 1 && tc.is_isolated(ctx.wrap(v - before - 1))) ++before;
    int after = 0;
    while (after < n - 1 && tc.is_isolated(ctx.wrap(v + after + 1))) ++after;
    if (before >= m + 1 && after >= m + 1 && before + after + 1 >= 3 * m + 1) {
      report.no_isolated_stretch = false;
    }
  }
  return report;
}

bool satisfies_theorem(const ArcCollection& tc) { return theorem_report(tc).ok(); }

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool none() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= o.words_[i];
    return r;
  }
  Bitset minus(const Bitset& o) const {
    Bitset r = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~o.words_[i];
    return r;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
  }
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
      std::uint64_t w = words_[wi];
      while (w) {
        const int bit = __builtin_ctzll(w);
        f(wi * 64 + static_cast<std::size_t>(bit));
        w &= w - 1;
      }
    }
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct CliqueSearch {
  std::vector<Bitset> adjacency;
  std::vector<std::vector<std::size_t>> found;

  void expand(std::vector<std::size_t>& clique, Bitset candidates, Bitset excluded) {
    if (candidates.none() && excluded.none()) {
      found.push_back(clique);
      return;
    }
    // Tomita pivot: maximise |candidates ∩ N(pivot)|.
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool have = false;
    auto consider = [&](std::size_t u) {
      const std::size_t c = (candidates & adjacency[u]).count();
      if (!have || c > best) {
        pivot = u;
        best = c;
        have = true;
      }
    };
    candidates.for_each(consider);
    excluded.for_each(consider);
    const Bitset branch = candidates.minus(adjacency[pivot]);
    branch.for_each([&](std::size_t v) {
      clique.push_back(v);
      expand(clique, candidates & adjacency[v], excluded & adjacency[v]);
      clique.pop_back();
      candidates.reset(v);
      excluded.set(v);
    });
  }
};

}  // namespace

std::vector<ArcCollection> enumerate_maximal(const PolygonContext& ctx,
                                             const EnumerationOptions& opts) {
  const auto diagonals = all_diagonals(ctx);
  const std::size_t n = diagonals.size();
  if (n > opts.max_diagonals) {
    throw ResourceError("context has " + std::to_string(n) + " diagonals, above the bound of " +
                        std::to_string(opts.max_diagonals));
  }
  std::vector<Bitset> adjacency(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (compatible(ctx, diagonals[i], diagonals[j])) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }

  // Split the top level of the search into independent branches, each with
  // its own candidate and excluded sets, so they can run concurrently.
  struct Branch {
    std::size_t root;
    Bitset candidates;
    Bitset excluded;
  };
  std::vector<Branch> branches;
  {
    Bitset candidates(n);
    for (std::size_t i = 0; i < n; ++i) candidates.set(i);
    Bitset excluded(n);
    for (std::size_t v = 0; v < n; ++v) {
      branches.push_back({v, candidates & adjacency[v], excluded & adjacency[v]});
      candidates.reset(v);
      excluded.set(v);
    }
  }

  auto run = [&](std::size_t begin, std::size_t stride) {
    CliqueSearch search{adjacency, {}};
    for (std::size_t b = begin; b < branches.size(); b += stride) {
      std::vector<std::size_t> clique{branches[b].root};
      search.expand(clique, branches[b].candidates, branches[b].excluded);
    }
    return std::move(search.found);
  };

  unsigned workers = opts.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                       : opts.threads;
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, n)));
  std::vector<std::vector<std::size_t>> cliques;
  if (workers <= 1) {
    cliques = run(0, 1);
  } else {
    std::vector<std::future<std::vector<std::vector<std::size_t>>>> futures;
    for (unsigned w = 0; w < workers; ++w) futures.push_back(std::async(std::launch::async, run, w, workers));
    for (auto& f : futures) {
      auto part = f.get();
      cliques.insert(cliques.end(), part.begin(), part.end());
    }
  }

  std::vector<ArcCollection> out;
  out.reserve(cliques.size());
  for (const auto& clique : cliques) {
    std::vector<Diagonal> arcs;
    for (std::size_t i : clique) arcs.push_back(diagonals[i]);
    out.emplace_back(ctx, std::move(arcs));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ArcCollection> enumerate_connected_maximal(const PolygonContext& ctx,
                                                       const EnumerationOptions& opts) {
  auto all = enumerate_maximal(ctx, opts);
  std::vector<ArcCollection> out;
  for (auto& tc : all) {
    if (is_connected(tc)) out.push_back(std::move(tc));
  }
  return out;
}

ArcCollection canonical_rotation(const ArcCollection& tc) {
  const auto& ctx = tc.context();
  ArcCollection best = tc;
  for (int k = 1; k < ctx.vertex_count(); ++k) {
    std::vector<Diagonal> arcs;
    for (const Diagonal& d : tc.arcs()) arcs.push_back(shift(ctx, d, k));
    ArcCollection rotated(ctx, std::move(arcs));
    if (rotated < best) best = std::move(rotated);
  }
  return best;
}

std::vector<std::vector<int>> simple_cycles(const ArcCollection& tc) {
  const int n = tc.context().vertex_count();
  std::vector<std::vector<int>> adj(n + 1);
  for (const Diagonal& d : tc.arcs()) {
    adj[d.lo].push_back(d.hi);
    adj[d.hi].push_back(d.lo);
  }
  std::vector<std::vector<int>> cycles;
  std::vector<int> path;
  std::vector<bool> on_path(n + 1, false);
  // Each cycle is rooted at its smallest vertex and reported in the
  // direction whose second vertex is smaller than its last.
  std::function<void(int, int)> dfs = [&](int root, int v) {
    for (int w : adj[v]) {
      if (w == root && path.size() >= 3 && path[1] < path.back()) cycles.push_back(path);
      if (w <= root || on_path[w]) continue;
      on_path[w] = true;
      path.push_back(w);
      dfs(root, w);
      path.pop_back();
      on_path[w] = false;
    }
  };
  for (int root = 1; root <= n; ++root) {
    path = {root};
    on_path[root] = true;
    dfs(root, root);
    on_path[root] = false;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

}  // namespace mrigid

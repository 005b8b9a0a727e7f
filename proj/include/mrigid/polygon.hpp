#pragma once

// Circular arithmetic on the marked polygon with (m+1)(n+1)-2 vertices and
// the elementary predicates on (m+1)-diagonals.
//
// Vertices are labelled 1..N clockwise. Every function here is pure.

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace mrigid {

/// The pair (n, m) together with the derived vertex count N.
class PolygonContext {
 public:
  /// Throws InputError unless n >= 2 and m >= 1. For n = 1 there are no
  /// m-rigid objects at all, so it is rejected here.
  PolygonContext(int n, int m);

  int n() const { return n_; }
  int m() const { return m_; }
  /// Vertex count (m+1)(n+1) - 2.
  int vertex_count() const { return vertex_count_; }

  /// Reduces any integer to its representative in 1..N.
  int wrap(long long v) const;
  /// Throws InputError if v is not in 1..N.
  void check_vertex(int v) const;

  friend bool operator==(const PolygonContext&, const PolygonContext&) = default;

 private:
  int n_;
  int m_;
  int vertex_count_;
};

/// An unordered vertex pair, stored with the smaller label first.
struct Diagonal {
  int lo = 0;
  int hi = 0;

  Diagonal() = default;
  Diagonal(int i, int j);

  bool incident(int v) const { return lo == v || hi == v; }
  /// The endpoint that is not v (v must be an endpoint).
  int other(int v) const { return v == lo ? hi : lo; }

  friend auto operator<=>(const Diagonal&, const Diagonal&) = default;
  friend bool operator==(const Diagonal&, const Diagonal&) = default;
};

std::string to_string(const Diagonal& d);

/// Inclusive clockwise vertex count from i to j; arc_count(i, i) = 1.
int arc_count(const PolygonContext& ctx, int i, int j);

/// True iff v_1, ..., v_k, v_1 follow each other in strict clockwise order.
/// Requires at least three distinct vertices.
bool clockwise_order(const PolygonContext& ctx, std::span<const int> vertices);

bool is_diagonal(const PolygonContext& ctx, int i, int j);

/// Validating constructor: throws InputError unless {i, j} is an (m+1)-diagonal.
Diagonal make_diagonal(const PolygonContext& ctx, int i, int j);

/// True iff d = {i, i+m} for some i.
bool is_short(const PolygonContext& ctx, const Diagonal& d);

/// For a short diagonal {i, i+m}, returns i (the endpoint from which the
/// short side runs clockwise). Throws PreconditionError for long diagonals.
int short_start(const PolygonContext& ctx, const Diagonal& d);

/// Strict interleaving of endpoints on the circle. Shared endpoints never cross.
bool crosses(const Diagonal& d1, const Diagonal& d2);

/// True iff d1 and d2 share no endpoint, do not cross, and some endpoint v
/// of d1 has d2 incident with v+k or v-k. Requires 1 <= k <= m.
bool k_neighbours(const PolygonContext& ctx, const Diagonal& d1, const Diagonal& d2, int k);

/// Every (m+1)-diagonal, lexicographically sorted; there are n*N/2 of them.
std::vector<Diagonal> all_diagonals(const PolygonContext& ctx);

}  // namespace mrigid

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hdeg/errors.hpp"

namespace hdeg {

using Mask = std::uint64_t;

constexpr int kMaxVertices = 64;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline int lowest_bit(Mask m) { return __builtin_ctzll(m); }
inline Mask bit(int v) { return Mask{1} << v; }
inline Mask low_bits(int n) { return n >= 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

// Subset of the vertices {0,...,n-1} of some carrier graph, as a bitmask.
struct VertexSet {
  Mask bits = 0;

  constexpr VertexSet() = default;
  constexpr explicit VertexSet(Mask m) : bits(m) {}
  static VertexSet single(int v) { return VertexSet{bit(v)}; }
  static VertexSet all(int n) { return VertexSet{low_bits(n)}; }
  static VertexSet of(std::initializer_list<int> vs) {
    Mask m = 0;
    for (int v : vs) m |= bit(v);
    return VertexSet{m};
  }

  bool test(int v) const { return bits >> v & 1; }
  bool empty() const { return bits == 0; }
  int count() const { return popcount(bits); }
  int lowest() const { return lowest_bit(bits); }
  bool contains(VertexSet s) const { return (s.bits & ~bits) == 0; }

  VertexSet operator|(VertexSet o) const { return VertexSet{bits | o.bits}; }
  VertexSet operator&(VertexSet o) const { return VertexSet{bits & o.bits}; }
  VertexSet minus(VertexSet o) const { return VertexSet{bits & ~o.bits}; }
  bool operator==(const VertexSet&) const = default;

  template <typename F>
  void for_each(F&& f) const {
    for (Mask m = bits; m; m &= m - 1) f(lowest_bit(m));
  }
  std::vector<int> to_vector() const {
    std::vector<int> out;
    for_each([&](int v) { out.push_back(v); });
    return out;
  }
};

// Immutable simple graph on at most 64 vertices.  adj(v) is the open
// neighborhood N(v) as a bitmask; rows are kept symmetric and loop-free.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n) : n_(check_n(n)), adj_(n, 0) {}

  static Graph from_edge_list(int n,
                              const std::vector<std::pair<int, int>>& edges);
  // Takes ownership of pre-built rows; validates symmetry and loop-freeness.
  static Graph from_adjacency(std::vector<Mask> rows);

  int vertex_count() const { return n_; }
  Mask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  const std::vector<Mask>& rows() const { return adj_; }
  bool adjacent(int u, int v) const { return neighbors(u) >> v & 1; }
  int degree(int v) const { return popcount(neighbors(v)); }
  int edge_count() const;
  std::vector<std::pair<int, int>> edges() const;
  Mask full_mask() const { return low_bits(n_); }
  bool operator==(const Graph&) const = default;

 private:
  static int check_n(int n) {
    if (n < 0 || n > kMaxVertices)
      throw IndexOutOfRange("vertex count out of range: " + std::to_string(n));
    return n;
  }

  int n_ = 0;
  std::vector<Mask> adj_;
};

// Two-coloring of a connected bipartite graph, normalized so |U| >= |V|
// with ties broken by putting vertex 0's color class into U.
struct Bipartition {
  VertexSet u;
  VertexSet v;
};

// --- structural queries ---

// True iff every vertex is reachable from vertex 0 (true for n <= 1).
bool is_connected(const Graph& g);

// Absent result means an odd cycle exists.  Disconnected graphs are
// two-colored per component, each component root starting in vertex 0's
// class, then normalized.
std::optional<Bipartition> bipartition(const Graph& g);

VertexSet leaves(const Graph& g);     // vertices of degree 1
VertexSet whiskered(const Graph& g);  // neighbors of leaves
VertexSet neighborhood(const Graph& g, VertexSet s);

// Graph on the vertices of w relabeled to 0..|w|-1 in increasing order.
Graph induced_subgraph(const Graph& g, VertexSet w);

// --- families (canonical labelings) ---

Graph path(int n);                          // edges {i,i+1}
Graph cycle(int n);                         // path plus {0,n-1}; n >= 3
Graph complete_bipartite(int a, int b);     // sides {0..a-1}, {a..a+b-1}
Graph star(int n_leaves);                   // center 0

// --- text formats ---

// graph6, ASCII with 63-offset sextets and big-endian upper-triangle bit
// order.  Rejects malformed headers and nonzero padding bits.
Graph parse_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

// Edge-list format: first non-comment line "n m", then m lines "u v".
// '#' starts a comment anywhere on a line.
Graph parse_edge_list(std::string_view text);

// --- helpers shared with the sweep corpora (raw adjacency rows) ---
namespace bits {
// Vertices reachable from `start` inside `within`.
Mask component_of(const Mask* adj, Mask within, int start);
bool rows_connected(int n, const Mask* adj);
// If bipartite, optionally writes the color-0 side (per-component roots).
bool rows_bipartite(int n, const Mask* adj, Mask* side0 = nullptr);
}  // namespace bits

}  // namespace hdeg

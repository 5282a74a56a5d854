#include "hdeg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hdeg {

Graph Graph::from_edge_list(int n,
                            const std::vector<std::pair<int, int>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw IndexOutOfRange("edge (" + std::to_string(u) + "," +
                            std::to_string(v) + ") outside 0.." +
                            std::to_string(n - 1));
    if (u == v)
      throw InvalidEdge("loop edge at vertex " + std::to_string(u));
    g.adj_[u] |= bit(v);
    g.adj_[v] |= bit(u);
  }
  return g;
}

Graph Graph::from_adjacency(std::vector<Mask> rows) {
  Graph g(static_cast<int>(rows.size()));
  Mask universe = low_bits(g.n_);
  for (int v = 0; v < g.n_; ++v) {
    if (rows[v] & ~universe)
      throw IndexOutOfRange("adjacency row " + std::to_string(v) +
                            " uses vertices >= n");
    if (rows[v] >> v & 1)
      throw InvalidEdge("loop edge at vertex " + std::to_string(v));
  }
  for (int v = 0; v < g.n_; ++v)
    for (Mask m = rows[v]; m; m &= m - 1)
      if (!(rows[lowest_bit(m)] >> v & 1))
        throw InvalidEdge("asymmetric adjacency at vertex " +
                          std::to_string(v));
  g.adj_ = std::move(rows);
  return g;
}

int Graph::edge_count() const {
  int twice = 0;
  for (int v = 0; v < n_; ++v) twice += degree(v);
  return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < n_; ++v)
    for (Mask m = neighbors(v) & ~low_bits(v + 1); m; m &= m - 1)
      out.emplace_back(v, lowest_bit(m));
  return out;
}

namespace bits {

Mask component_of(const Mask* adj, Mask within, int start) {
  Mask seen = bit(start) & within;
  Mask frontier = seen;
  while (frontier) {
    Mask next = 0;
    for (Mask m = frontier; m; m &= m - 1) next |= adj[lowest_bit(m)];
    frontier = next & within & ~seen;
    seen |= frontier;
  }
  return seen;
}

bool rows_connected(int n, const Mask* adj) {
  if (n <= 1) return true;
  return component_of(adj, low_bits(n), 0) == low_bits(n);
}

bool rows_bipartite(int n, const Mask* adj, Mask* side0) {
  Mask colored = 0, color0 = 0;
  for (int root = 0; root < n; ++root) {
    if (colored >> root & 1) continue;
    Mask level = bit(root);
    bool even = true;
    while (level) {
      if (even)
        color0 |= level;
      colored |= level;
      Mask next = 0;
      for (Mask m = level; m; m &= m - 1) next |= adj[lowest_bit(m)];
      // An edge inside the current level closes an odd walk.
      for (Mask m = level; m; m &= m - 1)
        if (adj[lowest_bit(m)] & level) return false;
      level = next & ~colored;
      even = !even;
    }
  }
  // Two-coloring found level by level; verify no edge inside either class.
  Mask color1 = low_bits(n) & ~color0;
  for (int v = 0; v < n; ++v) {
    Mask side = (color0 >> v & 1) ? color0 : color1;
    if (adj[v] & side) return false;
  }
  if (side0) *side0 = color0;
  return true;
}

}  // namespace bits

bool is_connected(const Graph& g) {
  return bits::rows_connected(g.vertex_count(), g.rows().data());
}

std::optional<Bipartition> bipartition(const Graph& g) {
  int n = g.vertex_count();
  Mask side0 = 0;
  if (!bits::rows_bipartite(n, g.rows().data(), &side0)) return std::nullopt;
  Mask side1 = low_bits(n) & ~side0;
  Bipartition b;
  // Larger side becomes U; vertex 0 sits in side0, which wins ties.
  if (popcount(side1) > popcount(side0)) {
    b.u = VertexSet{side1};
    b.v = VertexSet{side0};
  } else {
    b.u = VertexSet{side0};
    b.v = VertexSet{side1};
  }
  return b;
}

VertexSet leaves(const Graph& g) {
  Mask out = 0;
  for (int v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) == 1) out |= bit(v);
  return VertexSet{out};
}

VertexSet whiskered(const Graph& g) {
  return neighborhood(g, leaves(g));
}

VertexSet neighborhood(const Graph& g, VertexSet s) {
  Mask out = 0;
  s.for_each([&](int v) { out |= g.neighbors(v); });
  return VertexSet{out};
}

Graph induced_subgraph(const Graph& g, VertexSet w) {
  if (w.bits & ~g.full_mask())
    throw IndexOutOfRange("induced_subgraph: set outside vertex range");
  std::vector<int> verts = w.to_vector();
  int k = static_cast<int>(verts.size());
  std::vector<Mask> rows(k, 0);
  for (int i = 0; i < k; ++i) {
    Mask nb = g.neighbors(verts[i]) & w.bits;
    for (int j = 0; j < k; ++j)
      if (nb >> verts[j] & 1) rows[i] |= bit(j);
  }
  return Graph::from_adjacency(std::move(rows));
}

Graph path(int n) {
  if (n < 1) throw InvalidFamilyParameter("path needs n >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

Graph cycle(int n) {
  if (n < 3) throw InvalidFamilyParameter("cycle needs n >= 3");
  auto e = path(n).edges();
  e.emplace_back(0, n - 1);
  return Graph::from_edge_list(n, e);
}

Graph complete_bipartite(int a, int b) {
  if (a < 1 || b < 1)
    throw InvalidFamilyParameter("complete_bipartite needs a,b >= 1");
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, e);
}

Graph star(int n_leaves) {
  if (n_leaves < 1) throw InvalidFamilyParameter("star needs >= 1 leaf");
  return complete_bipartite(1, n_leaves);
}

// --- graph6 ---

namespace {

constexpr int kG6Offset = 63;

void append_bits(std::string& out, const std::vector<bool>& bits) {
  for (std::size_t i = 0; i < bits.size(); i += 6) {
    int sextet = 0;
    for (std::size_t j = 0; j < 6; ++j)
      sextet = sextet << 1 | (i + j < bits.size() && bits[i + j] ? 1 : 0);
    out.push_back(static_cast<char>(sextet + kG6Offset));
  }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
  int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kG6Offset));
  } else {
    out.push_back('~');
    out.push_back(static_cast<char>((n >> 12 & 63) + kG6Offset));
    out.push_back(static_cast<char>((n >> 6 & 63) + kG6Offset));
    out.push_back(static_cast<char>((n & 63) + kG6Offset));
  }
  std::vector<bool> tri;
  tri.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) tri.push_back(g.adjacent(i, j));
  append_bits(out, tri);
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;
  auto sextet = [&](std::size_t at) -> int {
    if (at >= text.size()) throw ParseError("graph6: truncated input", at);
    unsigned char c = static_cast<unsigned char>(text[at]);
    if (c < 63 || c > 126) throw ParseError("graph6: byte out of range", at);
    return c - kG6Offset;
  };

  long long n;
  if (text.empty()) throw ParseError("graph6: empty input", 0);
  if (text[0] != '~') {
    n = sextet(0);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == '~')
      throw ParseError("graph6: vertex count above 64 unsupported", 0);
    n = (static_cast<long long>(sextet(1)) << 12) | (sextet(2) << 6) |
        sextet(3);
    pos = 4;
  }
  if (n > kMaxVertices)
    throw ParseError("graph6: vertex count above 64 unsupported", 0);

  long long nbits = n * (n - 1) / 2;
  std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
  if (text.size() != pos + nbytes)
    throw ParseError("graph6: wrong payload length",
                     std::min(text.size(), pos + nbytes));

  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  long long k = 0;
  int i = 0, j = 1;
  for (std::size_t b = 0; b < nbytes; ++b) {
    int s = sextet(pos + b);
    for (int t = 5; t >= 0; --t, ++k) {
      int bit_val = s >> t & 1;
      if (k >= nbits) {
        if (bit_val) throw ParseError("graph6: nonzero padding", pos + b);
        continue;
      }
      if (bit_val) {
        rows[static_cast<std::size_t>(i)] |= bit(j);
        rows[static_cast<std::size_t>(j)] |= bit(i);
      }
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_adjacency(std::move(rows));
}

// --- edge-list text ---

Graph parse_edge_list(std::string_view text) {
  std::string cleaned;
  cleaned.reserve(text.size());
  bool comment = false;
  for (char c : text) {
    if (c == '#') comment = true;
    if (c == '\n') comment = false;
    cleaned.push_back(comment ? ' ' : c);
  }
  std::istringstream in(cleaned);
  long long n, m;
  if (!(in >> n >> m))
    throw ParseError("edge list: missing \"n m\" header", 0);
  if (n < 0 || n > kMaxVertices)
    throw ParseError("edge list: vertex count out of range", 0);
  std::vector<std::pair<int, int>> edges;
  for (long long e = 0; e < m; ++e) {
    long long u, v;
    if (!(in >> u >> v))
      throw ParseError("edge list: expected " + std::to_string(m) +
                           " edges, got " + std::to_string(e),
                       text.size());
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return Graph::from_edge_list(static_cast<int>(n), edges);
}

}  // namespace hdeg

#include "hdeg/regularity.hpp"

#include <algorithm>

#include "hdeg/errors.hpp"
#include "hdeg/hilbert.hpp"
#include "hdeg/independence.hpp"

namespace hdeg {

bool is_cameron_walker(const Graph& g) {
  return induced_matching_number(g) == matching_number(g);
}

bool is_five_cycle(const Graph& g) {
  if (g.vertex_count() != 5 || !is_connected(g)) return false;
  for (int v = 0; v < 5; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

std::vector<VertexSet> pendant_triangles(const Graph& g) {
  std::vector<VertexSet> out;
  for (auto [a, b] : g.edges()) {
    if (g.degree(a) != 2 || g.degree(b) != 2) continue;
    Mask common = g.neighbors(a) & g.neighbors(b);
    if (!common) continue;
    // deg(a) = 2 makes the third vertex unique.
    Mask tri = bit(a) | bit(b) | bit(lowest_bit(common));
    bool dup = false;
    for (const VertexSet& seen : out) dup = dup || seen.bits == tri;
    if (!dup) out.push_back(VertexSet{tri});
  }
  return out;
}

namespace {

// The whole graph is triangles glued at one shared vertex.
std::optional<CWStructure> match_triangle_star(const Graph& g,
                                               const std::vector<VertexSet>& tris) {
  if (tris.empty()) return std::nullopt;
  int t = static_cast<int>(tris.size());
  Mask covered = 0;
  for (const VertexSet& tri : tris) covered |= tri.bits;
  if (covered != g.full_mask() || g.edge_count() != 3 * t) return std::nullopt;
  int center;
  if (t == 1) {
    if (g.vertex_count() != 3) return std::nullopt;  // a lone 3-cycle
    center = 0;
  } else {
    Mask common = ~Mask{0};
    for (const VertexSet& tri : tris) common &= tri.bits;
    if (popcount(common) != 1) return std::nullopt;
    center = lowest_bit(common);
    if (g.vertex_count() != 2 * t + 1 || g.degree(center) != 2 * t)
      return std::nullopt;
  }
  CWStructure s;
  s.shape = tris.size() == 1 ? CWShape::triangle : CWShape::triangle_star;
  s.r = 0;
  s.d = 1;
  s.k = 1;
  s.triangle_count = static_cast<int>(tris.size());
  s.core_d = VertexSet::single(center);
  s.triangles = tris;
  return s;
}

}  // namespace

CWStructure cw_decompose(const Graph& g) {
  if (!is_connected(g))
    throw NotApplicable("cw_decompose needs a connected graph");
  if (!is_cameron_walker(g))
    throw NotApplicable("cw_decompose needs nu = mu");
  int n = g.vertex_count();

  // Star, including the single vertex as a star with no leaves.
  {
    Mask leaf_mask = leaves(g).bits;
    int leaf_cnt = popcount(leaf_mask);
    if (n == 1 || leaf_cnt == n - 1 || (n == 2 && leaf_cnt == 2)) {
      int center = 0;
      if (n >= 2) {
        for (int v = 0; v < n; ++v)
          if (g.degree(v) == n - 1) center = v;
        // K2 is the 1-leaf star anchored at vertex 0.
        if (n == 2) center = 0;
      }
      bool ok = true;
      for (int v = 0; v < n && ok; ++v)
        if (v != center) ok = g.neighbors(v) == bit(center);
      if (ok) {
        CWStructure s;
        s.shape = CWShape::star;
        s.r = 1;
        s.d = 0;
        s.k = 0;
        s.leaf_count = n - 1;
        s.leaf_set = VertexSet{g.full_mask() & ~bit(center)};
        s.core_r = VertexSet::single(center);
        return s;
      }
    }
  }

  auto tris = pendant_triangles(g);
  if (auto ts = match_triangle_star(g, tris)) return *ts;

  // General shape: strip the pendant triangles, take the leaves as L_U and
  // the rest as the bipartite core.
  Mask tri_outer = 0;
  Mask anchors = 0;
  for (const VertexSet& t : tris) {
    Mask deg2 = 0;
    t.for_each([&](int v) {
      if (g.degree(v) == 2) deg2 |= bit(v);
    });
    Mask anchor = t.bits & ~deg2;
    if (popcount(anchor) != 1)
      throw DecompositionFailed("pendant triangle without a unique anchor");
    tri_outer |= deg2;
    anchors |= anchor;
  }
  Mask leaf_mask = leaves(g).bits;
  if (leaf_mask & tri_outer)
    throw DecompositionFailed("leaf inside a pendant triangle");
  Mask core = g.full_mask() & ~tri_outer & ~leaf_mask;
  if (!core) throw DecompositionFailed("no bipartite core remains");

  Mask side_r = 0;  // core vertices carrying a leaf
  {
    Mask rest = core;
    for (Mask m = rest; m; m &= m - 1) {
      int v = lowest_bit(m);
      if (g.neighbors(v) & leaf_mask) side_r |= bit(v);
    }
  }
  Mask side_d = core & ~side_r;

  // Validity: the two sides two-color the core, leaves hang only off the
  // R-side, triangles only off the D-side, and unadorned D-vertices are not
  // leaves of the whole graph.
  if (anchors & ~side_d)
    throw DecompositionFailed("pendant triangle attached to the leafed side");
  for (Mask m = core; m; m &= m - 1) {
    int v = lowest_bit(m);
    Mask own = (side_r >> v & 1) ? side_r : side_d;
    if (g.neighbors(v) & own)
      throw DecompositionFailed("core is not bipartite along the leaf split");
  }
  if (!bits::rows_connected(static_cast<int>(popcount(core)),
                            induced_subgraph(g, VertexSet{core}).rows().data()))
    throw DecompositionFailed("core is disconnected");
  for (Mask m = side_d; m; m &= m - 1) {
    int v = lowest_bit(m);
    bool has_triangle = anchors >> v & 1;
    if (!has_triangle && popcount(g.neighbors(v) & core) < 2)
      throw DecompositionFailed("bare core vertex of degree one");
  }

  CWStructure s;
  s.shape = CWShape::general;
  s.r = popcount(side_r);
  s.d = popcount(side_d);
  s.k = popcount(anchors);
  s.leaf_count = popcount(leaf_mask);
  s.triangle_count = static_cast<int>(tris.size());
  s.leaf_set = VertexSet{leaf_mask};
  s.core_r = VertexSet{side_r};
  s.core_d = VertexSet{side_d};
  s.triangles = tris;

  if (s.r + s.d + s.leaf_count + 2 * s.triangle_count != n)
    throw InternalInconsistency("decomposition does not cover the graph");
  if (s.r == 0) throw DecompositionFailed("general shape with no leafed side");
  return s;
}

std::pair<int, int> cw_invariants(const CWStructure& s) {
  switch (s.shape) {
    case CWShape::star:
      return {s.leaf_count, s.leaf_count > 0 ? 1 : 0};
    case CWShape::triangle:
      return {1, 1};
    case CWShape::triangle_star:
      throw NotApplicable(
          "no closed degree formula for triangles glued at a vertex");
    case CWShape::general:
      break;
  }
  int deg = s.leaf_count + s.triangle_count + (s.d - s.k);
  int reg = s.r + s.triangle_count;
  return {deg, reg};
}

MaxSumReport classify_max_sum(const Graph& g, const RegularityOptions& opts) {
  if (!is_connected(g))
    throw NotApplicable("classify_max_sum needs a connected graph");
  MaxSumReport out;
  out.n = g.vertex_count();
  out.reg = regularity_homology(g, opts).reg;
  out.deg_h = summarize(g).deg_h;
  out.attained = out.reg + out.deg_h == out.n;
  if (g.edge_count() == 0) return out;  // empty edge ideal, nothing to compare
  bool structural = is_cameron_walker(g) && pendant_triangles(g).empty();
  if (structural != out.attained)
    throw TheoremViolation("max-sum classification mismatch: oracle " +
                           std::to_string(out.attained) + ", structure " +
                           std::to_string(structural));
  return out;
}

bool reg_equals_mu(const Graph& g, const RegularityOptions& opts) {
  if (!is_connected(g))
    throw NotApplicable("reg_equals_mu needs a connected graph");
  RegularityReport rep = regularity_homology(g, opts);
  bool oracle = rep.reg == rep.mu;
  bool structural = is_cameron_walker(g) || is_five_cycle(g);
  if (oracle != structural)
    throw TheoremViolation("reg = mu classification mismatch");
  return oracle;
}

}  // namespace hdeg

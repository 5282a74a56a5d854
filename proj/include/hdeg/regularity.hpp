#pragma once

#include <optional>
#include <vector>

#include "hdeg/graph.hpp"
#include "hdeg/homology.hpp"

namespace hdeg {

// nu(G) = mu(G).
bool is_cameron_walker(const Graph& g);

// Structural decomposition of a connected graph with nu = mu.
//
// The general shape is a connected bipartite core with sides R (r vertices,
// each carrying at least one leaf) and D (d vertices, the first k of which
// carry pendant triangles; the rest have no attachments and core degree at
// least 2).  A star is the degenerate r=1, d=0 case and a single 3-cycle the
// r=0, d=1 case.  Several triangles sharing one vertex also have nu = mu but
// fit none of those forms; they get their own shape and no degree formula.
enum class CWShape { star, triangle, triangle_star, general };

struct CWStructure {
  CWShape shape = CWShape::general;
  int r = 0;               // leaf-carrying core side
  int d = 0;               // triangle-carrying core side
  int k = 0;               // core vertices with at least one pendant triangle
  int leaf_count = 0;      // |L_U|
  int triangle_count = 0;  // |T|
  VertexSet leaf_set;
  VertexSet core_r;        // R-side core vertices
  VertexSet core_d;        // D-side core vertices
  std::vector<VertexSet> triangles;  // vertex sets {anchor, a, b}
};

// Detected pendant triangles: triangles with two degree-2 vertices; for a
// lone 3-cycle the anchor is ambiguous and the triangle is still counted once.
std::vector<VertexSet> pendant_triangles(const Graph& g);

// Throws NotApplicable if the graph is not connected with nu = mu, and
// DecompositionFailed if no shape matches (which would contradict the
// structure theorem; exercised as an impossibility in tests).
CWStructure cw_decompose(const Graph& g);

// (deg h, reg) from the structure: general shape uses
//   deg h = |L_U| + |T| + (d - k),   reg = r + |T|;
// stars give (leaf_count, 1) -- (0,0) for the single vertex -- and the
// 3-cycle gives (1,1).  No closed form is attached to triangle stars.
std::pair<int, int> cw_invariants(const CWStructure& s);

struct MaxSumReport {
  bool attained = false;  // reg + deg h = n
  int reg = 0;
  int deg_h = 0;
  int n = 0;
};

// Whether reg + deg h reaches the vertex count, from the homology and
// series oracles; checks the answer against the structural predicate
// "nu = mu and no pendant triangles" and throws TheoremViolation on
// disagreement.  The single-vertex graph has an empty edge ideal and is
// outside the predicate; it reports unattained without the structural check.
MaxSumReport classify_max_sum(const Graph& g,
                              const RegularityOptions& opts = {});

// reg = mu, checked against "nu = mu or G is a 5-cycle".
bool reg_equals_mu(const Graph& g, const RegularityOptions& opts = {});

bool is_five_cycle(const Graph& g);  // connected, five vertices, 2-regular

}  // namespace hdeg

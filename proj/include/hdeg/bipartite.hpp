#pragma once

#include <optional>
#include <vector>

#include "hdeg/bigint.hpp"
#include "hdeg/graph.hpp"

namespace hdeg {

// Whisker decoration of a connected bipartite graph: the whiskered part
// V_W of V, a choice U_L of one leaf per vertex of V_W, and complements.
struct BipartiteDecoration {
  Graph graph;
  Bipartition bip;
  VertexSet v_w;      // vertices of V adjacent to a leaf of U
  VertexSet u_l;      // chosen leaves, one per vertex of v_w
  VertexSet u_l_bar;  // U \ u_l
  VertexSet v_w_bar;  // V \ v_w
};

// Builds the decoration.  By default U_L picks the smallest-index leaf per
// whiskered vertex; leaf_choice overrides with an explicit leaf set (one
// leaf adjacent to each vertex of V_W).  Throws NotApplicable unless the
// graph is connected and the bipartition is valid for it.
BipartiteDecoration decorate(const Graph& g, const Bipartition& bip,
                             std::optional<VertexSet> leaf_choice = {});

// Convenience: bipartition then decorate.
BipartiteDecoration decorate(const Graph& g);

// Per-subset data for S inside the complement of U_L:
// w_s = V_W \ N(S), w_s_prime = complement-of-V_W \ N(S), the alternating
// sum g(S), and membership in the family X.
struct SubsetAnalysis {
  VertexSet s;
  VertexSet w_s;
  VertexSet w_s_prime;
  BigInt g_of_s;
  bool in_x = false;
};

// Alternating sum over sizes of independent sets C with C intersect
// complement-of-U_L exactly S, by direct enumeration.
BigInt g_subset_brute(const BipartiteDecoration& dec, VertexSet s);

// The same value in closed form:
//   if complement-of-V_W is empty: 0 for S != {}, else 0 / 2 by parity of |V|;
//   otherwise 1 for S = {}, (-1)^{|S|+|V_W|+1} when N(S) = complement, 0 else.
BigInt g_subset_closed(const BipartiteDecoration& dec, VertexSet s);

SubsetAnalysis analyze_subset(const BipartiteDecoration& dec, VertexSet s);

// All g(S) values by one enumeration pass; index = subset of u_l_bar packed
// into the low bits in increasing vertex order.  Test oracle for the sum
// identity g = sum_S g(S).
std::vector<long long> g_subset_all_brute(const BipartiteDecoration& dec);

// X = { S nonempty : N(S) = complement-of-V_W } and its signed count
// q = #even-size members - #odd-size members.
struct QReport {
  std::vector<VertexSet> x_members;
  long long q = 0;
  BigInt g_total;
  bool attains_alpha = false;  // deg h = alpha
};

// Enumerates subsets of u_l_bar.  Throws SubsetBudgetExceeded when
// |u_l_bar| > subset_cap_bits.
QReport q_report(const BipartiteDecoration& dec, int subset_cap_bits = 24);

// The short-cut classifications: every vertex of V whiskered, or X plus the
// empty set forming the power set of some nonempty T.  Absent when neither
// hypothesis holds.
struct SpecialCaseVerdict {
  enum class Rule { fully_whiskered, power_set_family } rule;
  bool deg_attains_alpha = true;
  std::optional<int> alpha;  // known to be |U| in the fully whiskered case
};

std::optional<SpecialCaseVerdict> specific_cases(
    const BipartiteDecoration& dec);

// Every valid choice of U_L (product of leaf options over V_W), for the
// choice-independence checks.
std::vector<VertexSet> all_leaf_choices(const Graph& g,
                                        const Bipartition& bip);

}  // namespace hdeg

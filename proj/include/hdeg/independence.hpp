#pragma once

#include <vector>

#include "hdeg/bigint.hpp"
#include "hdeg/graph.hpp"

namespace hdeg {

// counts[j-1] = g_j = number of independent sets of size j; alpha() is the
// independence number.  Empty for the 0-vertex graph.
struct FVector {
  std::vector<BigInt> counts;

  int alpha() const { return static_cast<int>(counts.size()); }
  const BigInt& g(int j) const { return counts[static_cast<std::size_t>(j - 1)]; }
};

// D_s ladder of the numerator written in powers of (1-t):
//   D_s = sum_{j=s+1}^{alpha} (-1)^{j-1-s} g_j C(j, j-1-s),  0 <= s < alpha.
// Always satisfies D_{alpha-1} = g_alpha and sum_s D_s = g.
struct DLadder {
  std::vector<BigInt> values;
  BigInt g;
};

// Exact count of independent sets grouped by cardinality.
FVector f_vector(const Graph& g);

int independence_number(const Graph& g);      // alpha
int matching_number(const Graph& g);          // mu, maximum matching
int induced_matching_number(const Graph& g);  // nu

// g = sum_j (-1)^{j-1} g_j.
BigInt alternating_g(const FVector& fv);

DLadder d_ladder(const FVector& fv);  // throws EmptyGraphNoLadder if alpha=0

// Hilbert function of the quotient by the edge ideal: the number of
// degree-d monomials whose support is an independent set, as
// sum_j g_j C(d-1, j-1) (1 at d = 0).
BigInt hilbert_function(const FVector& fv, long long d);

// Same count by direct enumeration of exponent vectors.  Exponential in
// d and n; this is the test oracle for hilbert_function.
BigInt standard_monomial_count(const Graph& g, int d);

// hilbert_function, cross-checked against the enumeration when both n and
// d are small enough for it.
BigInt hilbert_function_oracle(const Graph& g, long long d);

namespace detail {
// f-vector of the subgraph induced on `mask`, counts in machine words
// (exact: every count is at most C(64,32) < 2^63).  Used by the sweeps.
std::vector<unsigned long long> f_counts_rows(int n, const Mask* adj,
                                              Mask mask);
// Maximum matching restricted to `mask` by subset-DP; oracle for the
// blossom implementation, feasible to about 20 vertices.
int matching_number_dp(const Graph& g, Mask mask);
}  // namespace detail

}  // namespace hdeg

#pragma once

#include <optional>
#include <string>

#include "hdeg/bigint.hpp"

namespace hdeg {

// Closed-form counts and degree formulas for paths and cycles, each a total
// function that is zero outside its support.

// Number of independent sets of size i in the path P_n:
// C(n-i+1, i) when n >= 2i-1, else 0.  n >= 1, i >= 0.
BigInt path_count(int n, int i);

// Number of independent sets of size i in the cycle C_n (n >= 3):
// (n/i) C(n-i-1, i-1) when n >= 2i and i >= 1; 1 at i = 0; else 0.
BigInt cycle_count(int n, int i);

// Alternating sums p_n and c_n; values depend only on n mod 6.
BigInt path_alt_sum(int n);   // n >= 1
BigInt cycle_alt_sum(int n);  // n >= 3

// T_n = D_0 for the path P_n, via the case formula
//   (-1)^k (k+1)   for n = 3k+1 or 3k+3,
//   (-1)^k 2(k+1)  for n = 3k+2,
// cross-checked against the direct sum sum_j (-1)^{j-1} j p_{n,j}.
BigInt t_ladder(int n);

int path_degree(int n);   // deg h for P_n, n >= 1
int cycle_degree(int n);  // deg h for C_n, n >= 3

// Closed-form degree next to a brute-force recomputation (present when n is
// within the enumeration budget).
struct FamilyDegreeReport {
  std::string family;  // "path" or "cycle"
  int n = 0;
  int alpha = 0;
  int deg_formula = 0;
  std::optional<int> deg_brute;
};

FamilyDegreeReport family_degree_report(const std::string& family, int n,
                                        int brute_budget = 18);

}  // namespace hdeg

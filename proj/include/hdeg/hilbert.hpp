#pragma once

#include <optional>
#include <vector>

#include "hdeg/independence.hpp"
#include "hdeg/polynomial.hpp"

namespace hdeg {

// Reduced form of the Hilbert series h(t) / (1-t)^pole_order together with
// the combinatorial data that determines deg h.
struct HilbertSummary {
  IntPolynomial h;       // reduced numerator, h(0) = 1, h(1) != 0
  int pole_order = 0;    // equals alpha
  int deg_h = 0;
  int alpha = 0;
  BigInt g;                        // alternating sum of the f-vector
  std::optional<int> d_prime;      // min { s : D_s != 0 }, absent iff alpha=0
};

// Numerator of the series over the common denominator (1-t)^alpha:
//   N(t) = sum_{i=0}^{alpha} f_{i-1} t^i (1-t)^{alpha-i},  f_{-1} = 1.
IntPolynomial hilbert_numerator(const FVector& fv);

// Divides by (1-t) while the numerator vanishes at t=1, decrementing the
// pole order.  Result numerator satisfies h(1) != 0.
std::pair<IntPolynomial, int> reduce_numerator(IntPolynomial numerator,
                                               int pole);

// Full summary.  Computes deg h twice, from the reduction and from the
// alternating-sum rule (alpha when g != 1, else alpha - d' - 1), and throws
// TheoremViolation if they ever disagree.
HilbertSummary summarize(const FVector& fv);
HilbertSummary summarize(const Graph& g);  // rejects the 0-vertex graph

// Taylor coefficients of h(t)/(1-t)^pole_order through degree up_to; these
// are the values of the Hilbert function.
std::vector<BigInt> series_coefficients(const HilbertSummary& hs, int up_to);

}  // namespace hdeg

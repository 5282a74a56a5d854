#include "hdeg/hilbert.hpp"

#include "hdeg/errors.hpp"

namespace hdeg {

IntPolynomial hilbert_numerator(const FVector& fv) {
  int alpha = fv.alpha();
  // Powers of (1-t) built once, highest needed is alpha.
  std::vector<IntPolynomial> pw(static_cast<std::size_t>(alpha) + 1);
  pw[0] = IntPolynomial::constant(1);
  for (int i = 1; i <= alpha; ++i)
    pw[static_cast<std::size_t>(i)] =
        pw[static_cast<std::size_t>(i - 1)] * IntPolynomial::one_minus_t();

  IntPolynomial total = pw[static_cast<std::size_t>(alpha)];  // f_{-1} term
  for (int i = 1; i <= alpha; ++i) {
    std::vector<BigInt> mono(static_cast<std::size_t>(i) + 1, 0);
    mono.back() = fv.g(i);
    total = total +
            IntPolynomial(std::move(mono)) * pw[static_cast<std::size_t>(alpha - i)];
  }
  return total;
}

std::pair<IntPolynomial, int> reduce_numerator(IntPolynomial numerator,
                                               int pole) {
  if (pole < 0) throw InternalInconsistency("negative pole order");
  while (!numerator.is_zero() && numerator.eval_at_one() == 0) {
    if (pole == 0)
      throw InternalInconsistency(
          "numerator divisible by (1-t) with pole order exhausted");
    numerator = poly_divide_by_one_minus_t(numerator);
    --pole;
  }
  return {std::move(numerator), pole};
}

HilbertSummary summarize(const FVector& fv) {
  int alpha = fv.alpha();
  if (alpha == 0)
    throw NotApplicable("summarize needs a graph with at least one vertex");

  HilbertSummary out;
  out.alpha = alpha;
  out.g = alternating_g(fv);

  auto [h, pole] = reduce_numerator(hilbert_numerator(fv), alpha);
  out.h = std::move(h);
  out.pole_order = pole;
  out.deg_h = out.h.degree();

  if (out.pole_order != alpha)
    throw InternalInconsistency("pole order dropped below alpha");
  if (out.h.coeff(0) != 1)
    throw InternalInconsistency("reduced numerator has h(0) != 1");

  DLadder ladder = d_ladder(fv);
  int dp = 0;
  while (ladder.values[static_cast<std::size_t>(dp)] == 0) ++dp;
  out.d_prime = dp;

  int deg_rule = (out.g != 1) ? alpha : alpha - dp - 1;
  if (deg_rule != out.deg_h)
    throw TheoremViolation("degree from reduction is " +
                           std::to_string(out.deg_h) +
                           " but the alternating-sum rule gives " +
                           std::to_string(deg_rule));
  return out;
}

HilbertSummary summarize(const Graph& g) { return summarize(f_vector(g)); }

std::vector<BigInt> series_coefficients(const HilbertSummary& hs, int up_to) {
  if (up_to < 0) throw NotApplicable("series_coefficients needs up_to >= 0");
  std::vector<BigInt> out(static_cast<std::size_t>(up_to) + 1, 0);
  int p = hs.pole_order;
  for (int d = 0; d <= up_to; ++d) {
    BigInt c = 0;
    for (int k = 0; k <= std::min(d, hs.h.degree()); ++k) {
      // Coefficient of t^{d-k} in (1-t)^{-p}.
      c += hs.h.coeff(k) * (p == 0 ? BigInt(d == k ? 1 : 0)
                                   : binomial(d - k + p - 1, p - 1));
    }
    out[static_cast<std::size_t>(d)] = c;
  }
  return out;
}

}  // namespace hdeg

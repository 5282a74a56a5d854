#include "hdeg/bipartite.hpp"

#include <algorithm>

#include "hdeg/errors.hpp"
#include "hdeg/hilbert.hpp"
#include "hdeg/independence.hpp"

namespace hdeg {

namespace {

// Bits of `value` at the positions selected by `selector`, packed low.
Mask compress_bits(Mask value, Mask selector) {
  Mask out = 0;
  int at = 0;
  for (Mask m = selector; m; m &= m - 1) {
    if (value >> lowest_bit(m) & 1) out |= Mask{1} << at;
    ++at;
  }
  return out;
}

// Inverse of compress_bits: low bits of `packed` spread to `selector`.
Mask expand_bits(Mask packed, Mask selector) {
  Mask out = 0;
  int at = 0;
  for (Mask m = selector; m; m &= m - 1) {
    if (packed >> at & 1) out |= bit(lowest_bit(m));
    ++at;
  }
  return out;
}

void check_subset(const BipartiteDecoration& dec, VertexSet s) {
  if (!dec.u_l_bar.contains(s))
    throw InvalidSubset("subset is not contained in the complement of U_L");
}

bool independent(const Graph& g, Mask set) {
  for (Mask m = set; m; m &= m - 1)
    if (g.neighbors(lowest_bit(m)) & set) return false;
  return true;
}

}  // namespace

BipartiteDecoration decorate(const Graph& g, const Bipartition& bip,
                             std::optional<VertexSet> leaf_choice) {
  if (!is_connected(g)) throw NotApplicable("decorate needs a connected graph");
  Mask all = g.full_mask();
  if ((bip.u.bits | bip.v.bits) != all || (bip.u.bits & bip.v.bits))
    throw NotApplicable("bipartition does not partition the vertex set");
  for (int v = 0; v < g.vertex_count(); ++v) {
    Mask side = bip.u.test(v) ? bip.u.bits : bip.v.bits;
    if (g.neighbors(v) & side)
      throw NotApplicable("bipartition has an edge inside one side");
  }
  if (bip.u.count() < bip.v.count())
    throw NotApplicable("bipartition is not normalized to |U| >= |V|");

  BipartiteDecoration dec;
  dec.graph = g;
  dec.bip = bip;

  Mask leaf_mask = leaves(g).bits;
  Mask v_w = 0;
  bip.v.for_each([&](int v) {
    if (g.neighbors(v) & leaf_mask & bip.u.bits) v_w |= bit(v);
  });
  dec.v_w = VertexSet{v_w};
  dec.v_w_bar = bip.v.minus(dec.v_w);

  Mask u_l = 0;
  if (leaf_choice) {
    u_l = leaf_choice->bits;
    if (popcount(u_l) != popcount(v_w) || (u_l & ~(leaf_mask & bip.u.bits)))
      throw NotApplicable("leaf choice is not a set of leaves of U");
    Mask covered = 0;
    for (Mask m = u_l; m; m &= m - 1)
      covered |= g.neighbors(lowest_bit(m));
    if (covered != v_w)
      throw NotApplicable("leaf choice does not hit each whiskered vertex once");
  } else {
    dec.v_w.for_each([&](int v) {
      Mask options = g.neighbors(v) & leaf_mask & bip.u.bits;
      u_l |= bit(lowest_bit(options));
    });
  }
  dec.u_l = VertexSet{u_l};
  dec.u_l_bar = bip.u.minus(dec.u_l);
  return dec;
}

BipartiteDecoration decorate(const Graph& g) {
  auto bip = bipartition(g);
  if (!bip) throw NotApplicable("decorate needs a bipartite graph");
  return decorate(g, *bip);
}

BigInt g_subset_brute(const BipartiteDecoration& dec, VertexSet s) {
  check_subset(dec, s);
  const Graph& g = dec.graph;
  if (!independent(g, s.bits)) return 0;
  Mask blocked = neighborhood(g, s).bits;
  Mask free = g.full_mask() & ~dec.u_l_bar.bits & ~blocked & ~s.bits;
  if (popcount(free) > 28)
    throw BudgetExceeded("g_subset_brute: too many free vertices");
  long long total = 0;
  Mask rest = free;
  for (;;) {
    if (independent(g, rest)) {
      int size = popcount(rest) + s.count();
      if (size > 0) total += size % 2 ? 1 : -1;
    }
    if (rest == 0) break;
    rest = (rest - 1) & free;
  }
  return total;
}

BigInt g_subset_closed(const BipartiteDecoration& dec, VertexSet s) {
  check_subset(dec, s);
  if (dec.v_w_bar.empty()) {
    if (!s.empty()) return 0;
    return dec.bip.v.count() % 2 ? 2 : 0;
  }
  if (s.empty()) return 1;
  if (neighborhood(dec.graph, s) == dec.v_w_bar)
    return (s.count() + dec.v_w.count()) % 2 ? 1 : -1;  // (-1)^{|S|+|V_W|+1}
  return 0;
}

SubsetAnalysis analyze_subset(const BipartiteDecoration& dec, VertexSet s) {
  check_subset(dec, s);
  SubsetAnalysis out;
  out.s = s;
  VertexSet nbh = neighborhood(dec.graph, s);
  out.w_s = dec.v_w.minus(nbh);
  out.w_s_prime = dec.v_w_bar.minus(nbh);
  out.g_of_s = g_subset_closed(dec, s);
  out.in_x = !s.empty() && nbh == dec.v_w_bar;
  return out;
}

std::vector<long long> g_subset_all_brute(const BipartiteDecoration& dec) {
  const Graph& g = dec.graph;
  int n = g.vertex_count();
  int b = dec.u_l_bar.count();
  if (n > 26 || b > 20)
    throw BudgetExceeded("g_subset_all_brute: graph too large");
  std::vector<long long> out(std::size_t{1} << b, 0);
  Mask all = g.full_mask();
  for (Mask c = all;; c = (c - 1) & all) {
    if (c != 0 && independent(g, c)) {
      std::size_t idx = compress_bits(c, dec.u_l_bar.bits);
      out[idx] += popcount(c) % 2 ? 1 : -1;
    }
    if (c == 0) break;
  }
  return out;
}

QReport q_report(const BipartiteDecoration& dec, int subset_cap_bits) {
  int b = dec.u_l_bar.count();
  if (b > subset_cap_bits)
    throw SubsetBudgetExceeded("q_report: 2^" + std::to_string(b) +
                               " subsets exceed the cap");
  QReport out;
  for (Mask idx = 0; idx < (Mask{1} << b); ++idx) {
    Mask s = expand_bits(idx, dec.u_l_bar.bits);
    if (s == 0) continue;
    if (neighborhood(dec.graph, VertexSet{s}) == dec.v_w_bar) {
      out.x_members.push_back(VertexSet{s});
      out.q += popcount(s) % 2 ? -1 : 1;
    }
  }

  if (dec.v_w_bar.empty()) {
    out.g_total = dec.bip.v.count() % 2 ? 2 : 0;
    out.attains_alpha = true;
  } else {
    // g = 1 - (-1)^{|V_W|} q, the sum of all closed g(S) values.
    BigInt signed_q = dec.v_w.count() % 2 ? -out.q : out.q;
    out.g_total = 1 - signed_q;
    out.attains_alpha = out.q != 0;
  }

  // The subset-sum total must reproduce the alternating sum of the whole
  // f-vector; re-derive it whenever enumeration is cheap.
  if (dec.graph.vertex_count() <= 16) {
    if (out.g_total != alternating_g(f_vector(dec.graph)))
      throw InternalInconsistency("q_report: subset totals do not add to g");
  }
  return out;
}

std::optional<SpecialCaseVerdict> specific_cases(
    const BipartiteDecoration& dec) {
  if (dec.v_w_bar.empty()) {
    SpecialCaseVerdict v{SpecialCaseVerdict::Rule::fully_whiskered, true,
                         dec.bip.u.count()};
    return v;
  }
  QReport qr = q_report(dec);
  if (qr.x_members.empty()) return std::nullopt;
  Mask t = 0;
  for (const VertexSet& s : qr.x_members) t |= s.bits;
  if (qr.x_members.size() != (std::size_t{1} << popcount(t)) - 1)
    return std::nullopt;
  // X together with the empty set is the power set of T, so q = -1.
  if (qr.q != -1)
    throw InternalInconsistency("power-set family X must have q = -1");
  SpecialCaseVerdict v{SpecialCaseVerdict::Rule::power_set_family, true, {}};
  return v;
}

std::vector<VertexSet> all_leaf_choices(const Graph& g,
                                        const Bipartition& bip) {
  Mask leaf_mask = leaves(g).bits & bip.u.bits;
  std::vector<Mask> options;
  bip.v.for_each([&](int v) {
    Mask opts = g.neighbors(v) & leaf_mask;
    if (opts) options.push_back(opts);
  });
  std::vector<VertexSet> out{VertexSet{}};
  for (Mask opts : options) {
    std::vector<VertexSet> next;
    for (VertexSet partial : out)
      for (Mask m = opts; m; m &= m - 1)
        next.push_back(VertexSet{partial.bits | bit(lowest_bit(m))});
    out = std::move(next);
    if (out.size() > 100000)
      throw BudgetExceeded("all_leaf_choices: too many combinations");
  }
  return out;
}

}  // namespace hdeg

#include <doctest.h>

#include <random>

#include "hdeg/bipartite.hpp"
#include "hdeg/corpus.hpp"
#include "hdeg/errors.hpp"
#include "hdeg/hilbert.hpp"

using namespace hdeg;

namespace {

// Bipartite fixtures with U labeled before V.  Names u1..u6/v1..v5 map to
// 0..5/6..10 (or 0..4/5..8 for the nine-vertex ones).

// Three whiskered V-vertices, two unwhiskered; v3 carries two leaves, so
// the leaf representative for it can be chosen two ways.
Graph fixture_two_leaf_options() {
  return Graph::from_edge_list(11, {{0, 6},
                                    {0, 7},
                                    {0, 8},
                                    {1, 8},
                                    {2, 8},
                                    {2, 9},
                                    {2, 10},
                                    {3, 6},
                                    {4, 7},
                                    {5, 8}});
}

// The q = -1 example: X is the single set {u3}.
Graph fixture_q_minus_one() {
  return Graph::from_edge_list(11, {{0, 6},
                                    {0, 7},
                                    {0, 8},
                                    {1, 8},
                                    {1, 9},
                                    {2, 9},
                                    {2, 10},
                                    {3, 6},
                                    {4, 7},
                                    {5, 8}});
}

// The q = 0 example: X holds four subsets, evenly split by parity.
Graph fixture_q_zero() {
  return Graph::from_edge_list(9, {{4, 5},
                                   {0, 5},
                                   {0, 6},
                                   {1, 6},
                                   {2, 6},
                                   {1, 8},
                                   {2, 8},
                                   {3, 8},
                                   {3, 6},
                                   {2, 7}});
}

// X = all subsets of {u2,u3,u4} of size at least two, so q = 2.
Graph fixture_threshold_family() {
  return Graph::from_edge_list(9, {{4, 5},
                                   {0, 5},
                                   {0, 6},
                                   {0, 7},
                                   {0, 8},
                                   {1, 6},
                                   {1, 7},
                                   {2, 6},
                                   {2, 8},
                                   {3, 7},
                                   {3, 8}});
}

// Spine of two whiskered vertices: a 5-path with a pendant leaf on each of
// the two spine vertices; V is fully whiskered.
Graph fixture_whiskered_caterpillar() {
  return Graph::from_edge_list(
      7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 6}});
}

// Count of size-j independent sets meeting the complement of U_L in
// exactly s, by subset scan; reference for the per-size examples.
long long sized_count(const BipartiteDecoration& dec, VertexSet s, int j) {
  const Graph& g = dec.graph;
  long long count = 0;
  Mask all = g.full_mask();
  for (Mask c = 0;; c = c + 1) {
    if (popcount(c) == j && (c & dec.u_l_bar.bits) == s.bits) {
      bool ind = true;
      for (Mask m = c; m && ind; m &= m - 1)
        ind = (g.neighbors(lowest_bit(m)) & c) == 0;
      if (ind) ++count;
    }
    if (c == all) break;
  }
  return count;
}

}  // namespace

TEST_CASE("decoration of the running bipartite example") {
  Graph g = fixture_two_leaf_options();
  auto bip = bipartition(g);
  REQUIRE(bip.has_value());
  CHECK(bip->u == VertexSet::of({0, 1, 2, 3, 4, 5}));
  CHECK(bip->v == VertexSet::of({6, 7, 8, 9, 10}));

  // The published labeling picks u6 as v3's representative.
  BipartiteDecoration dec = decorate(g, *bip, VertexSet::of({3, 4, 5}));
  CHECK(dec.v_w == VertexSet::of({6, 7, 8}));
  CHECK(dec.u_l == VertexSet::of({3, 4, 5}));
  CHECK(dec.u_l_bar == VertexSet::of({0, 1, 2}));
  CHECK(dec.v_w_bar == VertexSet::of({9, 10}));

  // The default rule prefers the smallest-index leaf (u2 for v3).
  BipartiteDecoration def = decorate(g, *bip);
  CHECK(def.u_l == VertexSet::of({1, 3, 4}));
  CHECK(def.u_l_bar == VertexSet::of({0, 2, 5}));

  // Complete bipartite graphs carry no leaves at all.
  BipartiteDecoration kb = decorate(complete_bipartite(3, 2));
  CHECK(kb.v_w.empty());
  CHECK(kb.u_l.empty());
  CHECK(kb.u_l_bar == VertexSet::of({0, 1, 2}));
  CHECK(kb.v_w_bar == VertexSet::of({3, 4}));

  CHECK_THROWS_AS(decorate(cycle(5)), NotApplicable);
  CHECK_THROWS_AS(decorate(Graph::from_edge_list(4, {{0, 1}, {2, 3}})),
                  NotApplicable);
}

TEST_CASE("decoration of the nine-vertex example") {
  Graph g = fixture_q_zero();
  BipartiteDecoration dec = decorate(g);
  CHECK(dec.v_w == VertexSet::of({5}));
  CHECK(dec.u_l == VertexSet::of({4}));
  CHECK(dec.u_l_bar == VertexSet::of({0, 1, 2, 3}));
  CHECK(dec.v_w_bar == VertexSet::of({6, 7, 8}));
  CHECK(neighborhood(g, VertexSet::of({2})) == VertexSet::of({6, 7, 8}));
}

TEST_CASE("per-size subset counts from the worked example") {
  Graph g = fixture_two_leaf_options();
  BipartiteDecoration dec =
      decorate(g, *bipartition(g), VertexSet::of({3, 4, 5}));
  // S1 = {u2,u3}, S2 = {u1,u3}, S3 = {u1,u2}.
  CHECK(sized_count(dec, VertexSet::of({1, 2}), 3) == 5);
  CHECK(sized_count(dec, VertexSet::of({0, 2}), 3) == 3);
  // Enumeration gives 5 here, as does the closed product formula; the
  // worked example's stated 4 miscounts the five available vertices.
  CHECK(sized_count(dec, VertexSet::of({0, 1}), 3) == 5);

  SubsetAnalysis a1 = analyze_subset(dec, VertexSet::of({1, 2}));
  CHECK(a1.w_s == VertexSet::of({6, 7}));
  CHECK(a1.w_s_prime.empty());
  CHECK(!a1.in_x);
  SubsetAnalysis a2 = analyze_subset(dec, VertexSet::of({0, 2}));
  CHECK(a2.w_s.empty());
  CHECK(a2.w_s_prime.empty());
  SubsetAnalysis a3 = analyze_subset(dec, VertexSet::of({0, 1}));
  CHECK(a3.w_s.empty());
  CHECK(a3.w_s_prime == VertexSet::of({9, 10}));
}

TEST_CASE("closed subset sums match enumeration on the fixtures") {
  for (const Graph& g :
       {fixture_two_leaf_options(), fixture_q_minus_one(), fixture_q_zero(),
        fixture_threshold_family(), fixture_whiskered_caterpillar(),
        complete_bipartite(3, 2), complete_bipartite(4, 4), star(5),
        path(2)}) {
    BipartiteDecoration dec = decorate(g);
    auto brute = g_subset_all_brute(dec);
    int b = dec.u_l_bar.count();
    for (Mask idx = 0; idx < (Mask{1} << b); ++idx) {
      Mask s = 0;
      Mask rest = dec.u_l_bar.bits;
      for (int at = 0; rest; ++at, rest &= rest - 1)
        if (idx >> at & 1) s |= bit(lowest_bit(rest));
      CHECK(g_subset_closed(dec, VertexSet{s}) ==
            brute[static_cast<std::size_t>(idx)]);
      CHECK(g_subset_brute(dec, VertexSet{s}) ==
            brute[static_cast<std::size_t>(idx)]);
    }
  }
}

TEST_CASE("closed subset sums on the sign formula cases") {
  Graph g = fixture_q_zero();
  BipartiteDecoration dec = decorate(g);
  // |V_W| = 1, S = {u3}: sign is (-1)^{1+1+1} = -1.
  CHECK(g_subset_closed(dec, VertexSet::of({2})) == -1);
  CHECK(g_subset_closed(dec, VertexSet{}) == 1);
  CHECK(g_subset_closed(dec, VertexSet::of({0})) == 0);

  // Fully whiskered with |V| odd: the empty subset carries 2.
  BipartiteDecoration k2 = decorate(path(2));
  CHECK(k2.v_w_bar.empty());
  CHECK(g_subset_closed(k2, VertexSet{}) == 2);

  // Fully whiskered with |V| even.
  BipartiteDecoration cat = decorate(fixture_whiskered_caterpillar());
  CHECK(cat.v_w_bar.empty());
  CHECK(cat.bip.v.count() == 2);
  CHECK(g_subset_closed(cat, VertexSet{}) == 0);

  CHECK_THROWS_AS(g_subset_brute(k2, VertexSet::of({0})), InvalidSubset);
}

TEST_CASE("q reports on the worked examples") {
  QReport q1 = q_report(decorate(fixture_q_minus_one()));
  REQUIRE(q1.x_members.size() == 1);
  CHECK(q1.x_members[0] == VertexSet::of({2}));
  CHECK(q1.q == -1);
  CHECK(q1.attains_alpha);
  HilbertSummary h1 = summarize(fixture_q_minus_one());
  CHECK(h1.alpha == 6);
  CHECK(h1.deg_h == 6);

  QReport q2 = q_report(decorate(fixture_q_zero()));
  CHECK(q2.x_members.size() == 4);
  CHECK(q2.q == 0);
  CHECK(!q2.attains_alpha);
  HilbertSummary h2 = summarize(fixture_q_zero());
  CHECK(h2.alpha == 5);
  CHECK(h2.deg_h == 3);

  QReport q3 = q_report(decorate(fixture_threshold_family()));
  CHECK(q3.x_members.size() == 4);
  CHECK(q3.q == 2);
  CHECK(q3.attains_alpha);

  // Complete bipartite: every nonempty subset of U has full neighborhood.
  QReport kb = q_report(decorate(complete_bipartite(4, 3)));
  CHECK(kb.q == -1);
  CHECK(kb.attains_alpha);
  CHECK(summarize(complete_bipartite(4, 3)).deg_h == 4);

  CHECK_THROWS_AS(q_report(decorate(complete_bipartite(26, 26)), 24),
                  SubsetBudgetExceeded);
}

TEST_CASE("special-case verdicts") {
  auto cat = specific_cases(decorate(fixture_whiskered_caterpillar()));
  REQUIRE(cat.has_value());
  CHECK(cat->rule == SpecialCaseVerdict::Rule::fully_whiskered);
  CHECK(cat->alpha == 5);
  CHECK(summarize(fixture_whiskered_caterpillar()).deg_h == 5);
  CHECK(independence_number(fixture_whiskered_caterpillar()) == 5);

  auto kb = specific_cases(decorate(complete_bipartite(3, 2)));
  REQUIRE(kb.has_value());
  CHECK(kb->rule == SpecialCaseVerdict::Rule::power_set_family);
  CHECK(summarize(complete_bipartite(3, 2)).deg_h == 3);

  // Threshold family: attains alpha but not via either short cut.
  CHECK(!specific_cases(decorate(fixture_threshold_family())).has_value());
  // q = 0 case: no verdict either.
  CHECK(!specific_cases(decorate(fixture_q_zero())).has_value());
}

TEST_CASE("leaf choice does not change q or the verdict") {
  Graph g = fixture_two_leaf_options();
  auto bip = bipartition(g);
  auto choices = all_leaf_choices(g, *bip);
  CHECK(choices.size() == 2);
  QReport base = q_report(decorate(g, *bip, choices[0]));
  for (const auto& choice : choices) {
    QReport qr = q_report(decorate(g, *bip, choice));
    CHECK(qr.q == base.q);
    CHECK(qr.attains_alpha == base.attains_alpha);
  }
}

TEST_CASE("subset totals reproduce the alternating sum at random") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_connected_bipartite(2 + static_cast<int>(rng() % 9), rng);
    BipartiteDecoration dec = decorate(g);
    auto brute = g_subset_all_brute(dec);
    BigInt total = 0;
    for (long long v : brute) total += v;
    CHECK(total == alternating_g(f_vector(g)));
    QReport qr = q_report(dec);
    CHECK(qr.g_total == total);
    CHECK(qr.attains_alpha == (summarize(g).deg_h == summarize(g).alpha));
    // Identity behind the criterion when unwhiskered vertices exist.
    if (!dec.v_w_bar.empty()) {
      BigInt expect = dec.v_w.count() % 2 ? BigInt(1) + qr.q : BigInt(1) - qr.q;
      CHECK(total == expect);
    }
  }
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = random_fully_whiskered(1 + static_cast<int>(rng() % 5), rng);
    BipartiteDecoration dec = decorate(g);
    CHECK(dec.v_w_bar.empty());
    BigInt expect = dec.bip.v.count() % 2 ? 2 : 0;
    CHECK(alternating_g(f_vector(g)) == expect);
    CHECK(q_report(dec).attains_alpha);
    CHECK(summarize(g).deg_h == summarize(g).alpha);
  }
}

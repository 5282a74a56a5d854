#include <doctest.h>

#include <random>

#include "hdeg/errors.hpp"
#include "hdeg/homology.hpp"
#include "hdeg/independence.hpp"

using namespace hdeg;

namespace {

Graph random_graph(int n, std::mt19937_64& rng, double p) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

long long betti_at(const std::vector<long long>& betti, int s) {
  int idx = s + 1;
  if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
  return betti[static_cast<std::size_t>(idx)];
}

}  // namespace

TEST_CASE("independence complex homology of the standard shapes") {
  HomologyOptions raw{false};

  // Two isolated points: one reduced class in degree 0.
  Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  auto b = independence_betti(k2, VertexSet::all(2), raw);
  CHECK(betti_at(b, -1) == 0);
  CHECK(betti_at(b, 0) == 1);

  // A 5-cycle's complex is a circle.
  auto c5 = independence_betti(cycle(5), VertexSet::all(5), raw);
  CHECK(betti_at(c5, 0) == 0);
  CHECK(betti_at(c5, 1) == 1);

  // A 6-cycle gives two classes in degree 1.
  auto c6 = independence_betti(cycle(6), VertexSet::all(6), raw);
  CHECK(betti_at(c6, 1) == 2);

  // Paths are contractible or wedge-free; P4's complex is a tree.
  auto p4 = independence_betti(path(4), VertexSet::all(4), raw);
  for (int s = -1; s <= 2; ++s) CHECK(betti_at(p4, s) == 0);

  // A single vertex is a point; the empty set is the (-1)-sphere.
  auto point = independence_betti(Graph(1), VertexSet::all(1), raw);
  for (int s = -1; s <= 0; ++s) CHECK(betti_at(point, s) == 0);
  auto empty = independence_betti(Graph(1), VertexSet{}, raw);
  CHECK(betti_at(empty, -1) == 1);
}

TEST_CASE("folds preserve every betti number") {
  std::mt19937_64 rng(61);
  HomologyOptions folded{true}, raw{false};
  for (int trial = 0; trial < 250; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, rng, 0.15 + 0.09 * (trial % 8));
    Mask w = rng() & g.full_mask();
    auto a = independence_betti(g, VertexSet{w}, folded);
    auto bb = independence_betti(g, VertexSet{w}, raw);
    int top = std::max(a.size(), bb.size());
    for (int s = -1; s + 1 < top; ++s)
      CHECK(betti_at(a, s) == betti_at(bb, s));
  }
}

TEST_CASE("reduced euler characteristic ties faces to homology") {
  std::mt19937_64 rng(62);
  HomologyOptions raw{false};
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng() % 9);
    Graph g = random_graph(n, rng, 0.3);
    // sum_s (-1)^s rank H~_s = sum_d (-1)^d f_d, both starting at -1.
    auto betti = independence_betti(g, VertexSet::all(n), raw);
    BigInt chi_homology = 0;
    for (int s = -1; s + 1 < static_cast<int>(betti.size()); ++s)
      chi_homology += (s % 2 == 0 ? 1 : -1) * betti_at(betti, s);
    BigInt chi_faces = -1;  // the empty face in degree -1
    FVector fv = f_vector(g);
    for (int j = 1; j <= fv.alpha(); ++j)
      chi_faces += (j % 2 ? 1 : -1) * fv.g(j);
    CHECK(chi_homology == chi_faces);
  }
}

TEST_CASE("max nonvanishing degree and join additivity") {
  HomologyOptions raw{false};
  // Disjoint edges: k copies give one class in degree k-1.
  for (int k = 1; k <= 4; ++k) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(2 * i, 2 * i + 1);
    Graph g = Graph::from_edge_list(2 * k, e);
    auto md = max_nonvanishing_degree(g, VertexSet::all(2 * k), raw);
    REQUIRE(md.has_value());
    CHECK(*md == k - 1);
  }
  // Adding an isolated vertex cones everything off.
  Graph edge_plus_point = Graph::from_edge_list(3, {{0, 1}});
  CHECK(!max_nonvanishing_degree(edge_plus_point, VertexSet::all(3), raw)
           .has_value());
}

TEST_CASE("regularity calibration anchors") {
  CHECK(regularity_homology(Graph::from_edge_list(2, {{0, 1}})).reg == 1);
  CHECK(regularity_homology(cycle(5)).reg == 2);
  CHECK(regularity_homology(path(4)).reg == 1);
  CHECK(regularity_homology(cycle(6)).reg == 2);
  CHECK(regularity_homology(Graph(1)).reg == 0);
  CHECK(regularity_homology(Graph(3)).reg == 0);
  CHECK(regularity_homology(star(7)).reg == 1);
}

TEST_CASE("regularity sandwich and fold independence at random") {
  std::mt19937_64 rng(63);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng, 0.35);
    RegularityOptions folded;
    RegularityOptions raw;
    raw.use_folds = false;
    RegularityReport a = regularity_homology(g, folded);
    RegularityReport b = regularity_homology(g, raw);
    CHECK(a.reg == b.reg);
    CHECK(a.nu <= a.reg);
    CHECK(a.reg <= a.mu);
  }
}

TEST_CASE("parallel subset sweep matches sequential") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 6; ++trial) {
    Graph g = random_graph(11, rng, 0.3);
    RegularityOptions seq;
    RegularityOptions par;
    par.jobs = 4;
    CHECK(regularity_homology(g, seq).reg == regularity_homology(g, par).reg);
  }
}

TEST_CASE("budget guard") {
  RegularityOptions opts;
  opts.cap = 8;
  CHECK_THROWS_AS(regularity_homology(path(9), opts), BudgetExceeded);
}

#include <doctest.h>

#include <random>

#include "hdeg/errors.hpp"
#include "hdeg/graph.hpp"

using namespace hdeg;

namespace {

// Two triangles sharing vertex 0 and three triangles sharing vertex 0:
// the running 5- and 7-vertex examples.
Graph two_triangle_star() {
  return Graph::from_edge_list(
      5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

Graph random_graph(int n, std::mt19937_64& rng, double p) {
  std::uniform_real_distribution<double> coin(0, 1);
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng) < p) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("edge list construction") {
  Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(k2.neighbors(0) == bit(1));
  CHECK(k2.neighbors(1) == bit(0));

  Graph empty = Graph::from_edge_list(3, {});
  CHECK(empty.edge_count() == 0);

  Graph g = two_triangle_star();
  CHECK(g.edge_count() == 6);
  CHECK(g.degree(0) == 4);
  CHECK(g.adjacent(1, 2));
  CHECK(g.adjacent(3, 4));
  CHECK(!g.adjacent(1, 3));

  // Duplicates collapse.
  Graph dup = Graph::from_edge_list(2, {{0, 1}, {1, 0}, {0, 1}});
  CHECK(dup.edge_count() == 1);

  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), InvalidEdge);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), IndexOutOfRange);
  CHECK_THROWS_AS(Graph::from_edge_list(2, {{-1, 0}}), IndexOutOfRange);
}

TEST_CASE("adjacency validation") {
  CHECK_THROWS_AS(Graph::from_adjacency({bit(1), 0}), InvalidEdge);
  CHECK_THROWS_AS(Graph::from_adjacency({bit(0)}), InvalidEdge);
  CHECK_THROWS_AS(Graph::from_adjacency({bit(5), bit(0)}), IndexOutOfRange);
}

TEST_CASE("connectivity") {
  CHECK(is_connected(path(4)));
  CHECK(!is_connected(Graph::from_edge_list(3, {})));
  CHECK(is_connected(two_triangle_star()));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph()));
}

TEST_CASE("bipartition normalization") {
  auto b6 = bipartition(cycle(6));
  REQUIRE(b6.has_value());
  CHECK(b6->u == VertexSet::of({0, 2, 4}));
  CHECK(b6->v == VertexSet::of({1, 3, 5}));

  CHECK(!bipartition(cycle(5)).has_value());

  auto bs = bipartition(star(4));
  REQUIRE(bs.has_value());
  CHECK(bs->u == VertexSet::of({1, 2, 3, 4}));
  CHECK(bs->v == VertexSet::of({0}));
  CHECK(bs->u.count() >= bs->v.count());
}

TEST_CASE("bipartition absence matches odd-cycle search on small graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 2 + static_cast<int>(rng() % 8);
    Graph g = random_graph(n, rng, 0.35);
    bool two_colorable = false;
    // Brute force over all colorings.
    for (Mask c = 0; c < (Mask{1} << n) && !two_colorable; ++c) {
      bool proper = true;
      for (auto [u, v] : g.edges())
        proper = proper && (((c >> u) & 1) != ((c >> v) & 1));
      two_colorable = proper;
    }
    auto b = bipartition(g);
    CHECK(b.has_value() == two_colorable);
    if (b) {
      for (auto [u, v] : g.edges())
        CHECK(b->u.test(u) != b->u.test(v));
    }
  }
}

TEST_CASE("leaves, whiskered, neighborhoods") {
  Graph k2 = Graph::from_edge_list(2, {{0, 1}});
  CHECK(leaves(k2) == VertexSet::of({0, 1}));
  CHECK(whiskered(k2) == VertexSet::of({0, 1}));

  Graph p4 = path(4);
  CHECK(leaves(p4) == VertexSet::of({0, 3}));
  CHECK(whiskered(p4) == VertexSet::of({1, 2}));

  CHECK(neighborhood(p4, VertexSet::of({1, 2})) == VertexSet::of({0, 1, 2, 3}));
  CHECK(neighborhood(p4, VertexSet{}) == VertexSet{});
}

TEST_CASE("induced subgraphs") {
  Graph c5 = cycle(5);
  Graph p3 = induced_subgraph(c5, VertexSet::of({0, 1, 2}));
  CHECK(p3 == path(3));

  Graph even = induced_subgraph(cycle(6), VertexSet::of({0, 2, 4}));
  CHECK(even.edge_count() == 0);
  CHECK(even.vertex_count() == 3);

  // One triangle of the triangle star is a 3-cycle.
  Graph h = Graph::from_edge_list(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4},
                                      {3, 4}, {0, 5}, {0, 6}, {5, 6}});
  Graph tri = induced_subgraph(h, VertexSet::of({0, 3, 4}));
  CHECK(tri == cycle(3));

  CHECK(induced_subgraph(c5, VertexSet::all(5)) == c5);
}

TEST_CASE("family constructors") {
  CHECK(path(4).edge_count() == 3);
  CHECK(path(1).edge_count() == 0);
  CHECK(cycle(3) == Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}}));
  Graph k32 = complete_bipartite(3, 2);
  CHECK(k32.edge_count() == 6);
  CHECK(is_connected(k32));
  CHECK(bipartition(k32).has_value());
  CHECK(star(5).edge_count() == 5);
  CHECK_THROWS_AS(cycle(2), InvalidFamilyParameter);
  CHECK_THROWS_AS(path(0), InvalidFamilyParameter);
  CHECK_THROWS_AS(star(0), InvalidFamilyParameter);
}

TEST_CASE("graph6 basics") {
  // One-vertex edgeless graph.
  Graph k1 = parse_graph6("@");
  CHECK(k1.vertex_count() == 1);
  CHECK(k1.edge_count() == 0);
  CHECK(encode_graph6(k1) == "@");

  // 5 vertices, last vertex joined to the first four.
  Graph g = parse_graph6("D?{");
  CHECK(g.vertex_count() == 5);
  CHECK(g.degree(4) == 4);
  CHECK(g.edge_count() == 4);
  CHECK(encode_graph6(g) == "D?{");

  CHECK(encode_graph6(path(2)) == "A_");
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("D?"), ParseError);    // truncated
  CHECK_THROWS_AS(parse_graph6("D?{{"), ParseError);  // trailing bytes
  CHECK_THROWS_AS(parse_graph6("A\x20"), ParseError); // byte below offset
  // Nonzero padding: a 2-vertex graph uses 1 bit, the other 5 must be 0.
  CHECK_THROWS_AS(parse_graph6("A~"), ParseError);
  try {
    parse_graph6("A~");
  } catch (const ParseError& e) {
    CHECK(e.offset == 1);
  }
}

TEST_CASE("graph6 round trips") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    int n = 1 + static_cast<int>(rng() % 16);
    Graph g = random_graph(n, rng, 0.4);
    Graph back = parse_graph6(encode_graph6(g));
    CHECK(back == g);
  }
  // Including the extended header sizes.
  for (int n : {62, 63, 64}) {
    Graph g = random_graph(n, rng, 0.1);
    CHECK(parse_graph6(encode_graph6(g)) == g);
  }
  // encode(parse(s)) = s for canonical strings.
  for (const char* s : {"@", "A_", "Bw", "D?{", "DQc"}) {
    CHECK(encode_graph6(parse_graph6(s)) == s);
  }
}

TEST_CASE("edge-list text format") {
  Graph g = parse_edge_list("# sample\n5 6\n0 1\n0 2\n1 2\n0 3\n0 4\n3 4\n");
  CHECK(g == two_triangle_star());

  Graph trailing = parse_edge_list("2 1 # header\n0 1 # edge\n");
  CHECK(trailing.edge_count() == 1);

  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2 1\n0 0\n"), InvalidEdge);
  CHECK_THROWS_AS(parse_edge_list("99 0\n"), ParseError);
}

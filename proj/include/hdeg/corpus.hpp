#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "hdeg/graph.hpp"
#include "hdeg/regularity.hpp"

namespace hdeg {

enum class CorpusFilter { all, connected, connected_bipartite };

// Visits every labeled graph on n vertices passing the filter, split over
// `jobs` workers by edge-mask blocks.  `fn(worker, graph)` must be safe to
// call concurrently from distinct workers.  Returns the visit count.
std::uint64_t for_each_labeled(
    int n, CorpusFilter filter, int jobs,
    const std::function<void(int, const Graph&)>& fn);

// As above but visits only every `stride`-th graph passing the filter
// (counted in edge-mask order), single worker, deterministic.
std::uint64_t for_each_labeled_strided(
    int n, CorpusFilter filter, std::uint64_t stride,
    const std::function<void(const Graph&)>& fn);

// One representative per isomorphism class, generated by vertex
// augmentation with a canonical certificate; cached per n (n <= 10).
const std::vector<Graph>& graphs_up_to_iso(int n);
std::vector<Graph> connected_graphs_up_to_iso(int n);

// Canonical certificate used by the generator: the smallest upper-triangle
// bit string over degree-invariant-respecting relabelings.
std::uint64_t iso_certificate(const Graph& g);

// Erdos-Renyi rejection-sampled to connectivity; p drawn from
// {0.2, 0.5, 0.8} when not given.
Graph random_connected(int n, std::mt19937_64& rng, double p = -1);

// Random bipartition, cross edges only, rejection-sampled to connectivity.
Graph random_connected_bipartite(int n, std::mt19937_64& rng, double p = -1);

// Connected bipartite graph with a leaf attached to every vertex of the
// smaller side (so V is fully whiskered after normalization).
Graph random_fully_whiskered(int core_n, std::mt19937_64& rng);

struct CwSample {
  Graph g;
  CWStructure expected;  // counts only; vertex sets are after relabeling
};

// Random general-shape sample: connected bipartite core, every R-side
// vertex whiskered, pendant triangles on the first k D-side vertices, bare
// D-side vertices of core degree >= 2, labels shuffled.
CwSample random_cameron_walker_general(int max_n, std::mt19937_64& rng);

}  // namespace hdeg

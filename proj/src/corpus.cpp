#include "hdeg/corpus.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "hdeg/errors.hpp"

namespace hdeg {

namespace {

struct PairTable {
  // bit k of an edge mask <-> pairs[k] = (i, j), i < j
  std::vector<std::pair<int, int>> pairs;
  explicit PairTable(int n) {
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
};

void rows_from_edge_mask(const PairTable& pt, Mask edge_mask, Mask* rows,
                         int n) {
  std::fill(rows, rows + n, 0);
  for (Mask m = edge_mask; m; m &= m - 1) {
    auto [i, j] = pt.pairs[static_cast<std::size_t>(lowest_bit(m))];
    rows[i] |= bit(j);
    rows[j] |= bit(i);
  }
}

bool passes(CorpusFilter filter, int n, const Mask* rows) {
  switch (filter) {
    case CorpusFilter::all:
      return true;
    case CorpusFilter::connected:
      return bits::rows_connected(n, rows);
    case CorpusFilter::connected_bipartite:
      return bits::rows_connected(n, rows) && bits::rows_bipartite(n, rows);
  }
  return false;
}

}  // namespace

std::uint64_t for_each_labeled(
    int n, CorpusFilter filter, int jobs,
    const std::function<void(int, const Graph&)>& fn) {
  if (n < 0 || n > 10)
    throw BudgetExceeded("labeled enumeration limited to n <= 10");
  PairTable pt(n);
  int nbits = n * (n - 1) / 2;
  Mask total = Mask{1} << nbits;
  if (jobs <= 0)
    jobs = static_cast<int>(std::thread::hardware_concurrency());
  jobs = std::max(1, std::min<int>(jobs, 64));

  std::atomic<std::uint64_t> visited{0};
  std::atomic<Mask> next{0};
  const Mask block = std::min<Mask>(total, Mask{1} << 16);

  auto worker = [&](int id) {
    Mask rows[kMaxVertices];
    std::uint64_t local = 0;
    for (;;) {
      Mask start = next.fetch_add(block);
      if (start >= total) break;
      Mask stop = std::min(total, start + block);
      for (Mask em = start; em < stop; ++em) {
        rows_from_edge_mask(pt, em, rows, n);
        if (!passes(filter, n, rows)) continue;
        ++local;
        fn(id, Graph::from_adjacency(std::vector<Mask>(rows, rows + n)));
      }
    }
    visited += local;
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  return visited.load();
}

std::uint64_t for_each_labeled_strided(
    int n, CorpusFilter filter, std::uint64_t stride,
    const std::function<void(const Graph&)>& fn) {
  if (n < 0 || n > 10)
    throw BudgetExceeded("labeled enumeration limited to n <= 10");
  if (stride == 0) stride = 1;
  PairTable pt(n);
  int nbits = n * (n - 1) / 2;
  Mask total = Mask{1} << nbits;
  Mask rows[kMaxVertices];
  std::uint64_t seen = 0, visited = 0;
  for (Mask em = 0; em < total; ++em) {
    rows_from_edge_mask(pt, em, rows, n);
    if (!passes(filter, n, rows)) continue;
    if (seen++ % stride == 0) {
      ++visited;
      fn(Graph::from_adjacency(std::vector<Mask>(rows, rows + n)));
    }
  }
  return visited;
}

// --- canonical certificates and the iso-class generator ---

namespace {

// Sorts vertices into invariant classes by (degree, sorted neighbor
// degrees); the certificate minimizes over class-respecting relabelings.
struct CertContext {
  int n;
  const Mask* adj;
  std::vector<int> class_of_vertex;
  std::vector<int> class_of_pos;
  std::vector<unsigned> best;    // chunk of p bits per position p
  std::vector<int> perm;         // perm[p] = original vertex
  Mask used = 0;

  void search(int p) {
    if (p == n) return;
    for (int v = 0; v < n; ++v) {
      if (used >> v & 1) continue;
      if (class_of_vertex[static_cast<std::size_t>(v)] !=
          class_of_pos[static_cast<std::size_t>(p)])
        continue;
      unsigned chunk = 0;
      for (int q = 0; q < p; ++q)
        chunk = chunk << 1 |
                (adj[v] >> perm[static_cast<std::size_t>(q)] & 1);
      unsigned& slot = best[static_cast<std::size_t>(p)];
      if (chunk > slot) continue;
      if (chunk < slot) {
        slot = static_cast<unsigned>(chunk);
        for (std::size_t q = static_cast<std::size_t>(p) + 1;
             q < best.size(); ++q)
          best[q] = ~0u;  // stale suffix, any completion beats it
      }
      perm[static_cast<std::size_t>(p)] = v;
      used |= bit(v);
      search(p + 1);
      used &= ~bit(v);
    }
  }
};

std::uint64_t certificate_rows(int n, const Mask* adj) {
  std::vector<std::pair<std::vector<int>, int>> keyed(
      static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    std::vector<int> key{popcount(adj[v])};
    std::vector<int> nb_degs;
    for (Mask m = adj[v]; m; m &= m - 1)
      nb_degs.push_back(popcount(adj[lowest_bit(m)]));
    std::sort(nb_degs.begin(), nb_degs.end());
    key.insert(key.end(), nb_degs.begin(), nb_degs.end());
    keyed[static_cast<std::size_t>(v)] = {std::move(key), v};
  }
  auto sorted = keyed;
  std::sort(sorted.begin(), sorted.end());

  CertContext ctx;
  ctx.n = n;
  ctx.adj = adj;
  ctx.class_of_vertex.resize(static_cast<std::size_t>(n));
  ctx.class_of_pos.resize(static_cast<std::size_t>(n));
  int cls = -1;
  for (int p = 0; p < n; ++p) {
    if (p == 0 || sorted[static_cast<std::size_t>(p)].first !=
                      sorted[static_cast<std::size_t>(p - 1)].first)
      ++cls;
    ctx.class_of_pos[static_cast<std::size_t>(p)] = cls;
    ctx.class_of_vertex[static_cast<std::size_t>(
        sorted[static_cast<std::size_t>(p)].second)] = cls;
  }
  ctx.best.assign(static_cast<std::size_t>(n), ~0u);
  ctx.perm.assign(static_cast<std::size_t>(n), -1);
  ctx.search(0);

  std::uint64_t cert = 0;
  for (int p = 1; p < n; ++p)
    cert = cert << p | ctx.best[static_cast<std::size_t>(p)];
  return cert;
}

}  // namespace

std::uint64_t iso_certificate(const Graph& g) {
  if (g.vertex_count() > 10)
    throw BudgetExceeded("iso_certificate limited to n <= 10");
  return certificate_rows(g.vertex_count(), g.rows().data());
}

const std::vector<Graph>& graphs_up_to_iso(int n) {
  if (n < 1 || n > 10)
    throw BudgetExceeded("iso-class generation limited to 1 <= n <= 10");
  static std::mutex mu;
  static std::map<int, std::vector<Graph>> cache;
  std::scoped_lock lock(mu);
  if (!cache.count(1)) cache.emplace(1, std::vector<Graph>{Graph(1)});
  for (int m = 2; m <= n; ++m) {
    if (cache.count(m)) continue;
    const std::vector<Graph>& prev = cache.at(m - 1);
    std::unordered_set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (const Graph& g : prev) {
      for (Mask nb = 0; nb < (Mask{1} << (m - 1)); ++nb) {
        std::vector<Mask> rows = g.rows();
        rows.push_back(nb);
        for (Mask b = nb; b; b &= b - 1)
          rows[static_cast<std::size_t>(lowest_bit(b))] |= bit(m - 1);
        if (seen.insert(certificate_rows(m, rows.data())).second)
          out.push_back(Graph::from_adjacency(std::move(rows)));
      }
    }
    cache.emplace(m, std::move(out));
  }
  return cache.at(n);
}

std::vector<Graph> connected_graphs_up_to_iso(int n) {
  std::vector<Graph> out;
  for (const Graph& g : graphs_up_to_iso(n))
    if (is_connected(g)) out.push_back(g);
  return out;
}

// --- random corpora ---

namespace {

double pick_probability(std::mt19937_64& rng, double p) {
  if (p > 0) return p;
  static const double choices[] = {0.2, 0.5, 0.8};
  return choices[rng() % 3];
}

}  // namespace

Graph random_connected(int n, std::mt19937_64& rng, double p) {
  if (n < 1 || n > kMaxVertices)
    throw InvalidFamilyParameter("random_connected needs 1 <= n <= 64");
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    double prob = pick_probability(rng, p);
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (coin(rng) < prob) edges.emplace_back(i, j);
    Graph g = Graph::from_edge_list(n, edges);
    if (is_connected(g)) return g;
  }
}

Graph random_connected_bipartite(int n, std::mt19937_64& rng, double p) {
  if (n < 1 || n > kMaxVertices)
    throw InvalidFamilyParameter("random_connected_bipartite needs n >= 1");
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    Mask side = 0;
    for (int v = 0; v < n; ++v)
      if (rng() & 1) side |= bit(v);
    if (n >= 2 && (side == 0 || side == low_bits(n))) continue;
    double prob = pick_probability(rng, p);
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
      for (int i = 0; i < j; ++i)
        if (((side >> i ^ side >> j) & 1) && coin(rng) < prob)
          edges.emplace_back(i, j);
    Graph g = Graph::from_edge_list(n, edges);
    if (is_connected(g)) return g;
  }
}

Graph random_fully_whiskered(int core_n, std::mt19937_64& rng) {
  if (core_n < 1 || 2 * core_n > kMaxVertices)
    throw InvalidFamilyParameter("random_fully_whiskered core too large");
  Graph core = core_n == 1 ? Graph(1) : random_connected_bipartite(core_n, rng);
  auto bip = bipartition(core);
  if (!bip) throw InternalInconsistency("bipartite core expected");
  // One new leaf per vertex of the smaller side.
  auto edges = core.edges();
  int next = core_n;
  bip->v.for_each([&](int v) { edges.emplace_back(v, next++); });
  if (core_n == 1) edges.emplace_back(0, next++);
  return Graph::from_edge_list(next, edges);
}

CwSample random_cameron_walker_general(int max_n, std::mt19937_64& rng) {
  if (max_n < 4)
    throw InvalidFamilyParameter("random_cameron_walker_general needs n >= 4");
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (;;) {
    int r = 1 + static_cast<int>(rng() % 4);
    int d = 1 + static_cast<int>(rng() % 3);
    int k = static_cast<int>(rng() % (d + 1));
    if (k < d && r < 2) continue;  // bare D-vertices need core degree >= 2

    // Random connected core with every bare D-vertex of degree >= 2.
    std::vector<Mask> core_adj(static_cast<std::size_t>(r + d), 0);
    bool ok = false;
    for (int attempt = 0; attempt < 50 && !ok; ++attempt) {
      std::fill(core_adj.begin(), core_adj.end(), 0);
      for (int vi = 0; vi < r; ++vi)
        for (int uj = 0; uj < d; ++uj)
          if (coin(rng) < 0.6) {
            core_adj[static_cast<std::size_t>(vi)] |= bit(r + uj);
            core_adj[static_cast<std::size_t>(r + uj)] |= bit(vi);
          }
      ok = bits::rows_connected(r + d, core_adj.data());
      for (int uj = 0; uj < d && ok; ++uj) {
        int need = uj < k ? 1 : 2;
        ok = popcount(core_adj[static_cast<std::size_t>(r + uj)]) >= need;
      }
    }
    if (!ok) continue;

    int next = r + d;
    std::vector<std::pair<int, int>> edges;
    for (int vi = 0; vi < r; ++vi)
      for (Mask m = core_adj[static_cast<std::size_t>(vi)]; m; m &= m - 1)
        edges.emplace_back(vi, lowest_bit(m));

    int leaf_count = 0;
    for (int vi = 0; vi < r; ++vi) {
      int cnt = 1 + static_cast<int>(rng() % 2);
      for (int c = 0; c < cnt; ++c) {
        edges.emplace_back(vi, next++);
        ++leaf_count;
      }
    }
    int triangle_count = 0;
    for (int uj = 0; uj < k; ++uj) {
      int cnt = 1 + static_cast<int>(rng() % 2);
      for (int c = 0; c < cnt; ++c) {
        int a = next++, b = next++;
        edges.emplace_back(r + uj, a);
        edges.emplace_back(r + uj, b);
        edges.emplace_back(a, b);
        ++triangle_count;
      }
    }
    if (next > max_n) continue;

    // Shuffle labels so the decomposition cannot rely on construction order.
    std::vector<int> relabel(static_cast<std::size_t>(next));
    for (int i = 0; i < next; ++i) relabel[static_cast<std::size_t>(i)] = i;
    std::shuffle(relabel.begin(), relabel.end(), rng);
    for (auto& [a, b] : edges) {
      a = relabel[static_cast<std::size_t>(a)];
      b = relabel[static_cast<std::size_t>(b)];
    }

    CwSample sample;
    sample.g = Graph::from_edge_list(next, edges);
    sample.expected.shape = CWShape::general;
    sample.expected.r = r;
    sample.expected.d = d;
    sample.expected.k = k;
    sample.expected.leaf_count = leaf_count;
    sample.expected.triangle_count = triangle_count;
    return sample;
  }
}

}  // namespace hdeg

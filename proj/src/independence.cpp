#include "hdeg/independence.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "hdeg/errors.hpp"

namespace hdeg {

namespace detail {

namespace {

using Counts = std::vector<unsigned long long>;

bool induced_edgeless(const Mask* adj, Mask mask) {
  for (Mask m = mask; m; m &= m - 1)
    if (adj[lowest_bit(m)] & mask) return false;
  return true;
}

// C(k,0..k) as machine words; k <= 64 so every entry fits.
Counts binomial_row(int k) {
  Counts row(static_cast<std::size_t>(k) + 1, 1);
  for (int j = 1; j <= k; ++j)
    row[static_cast<std::size_t>(j)] =
        row[static_cast<std::size_t>(j - 1)] * (k - j + 1) / j;
  return row;
}

struct FCounter {
  const Mask* adj;
  std::unordered_map<Mask, Counts> memo;

  // Independence polynomial coefficients of the subgraph induced on mask:
  // branch on the highest-degree vertex v, splitting sets by v-membership.
  const Counts& run(Mask mask) {
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;

    Counts result;
    int pivot = -1, pivot_deg = -1;
    for (Mask m = mask; m; m &= m - 1) {
      int v = lowest_bit(m);
      int deg = popcount(adj[v] & mask);
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    if (pivot_deg <= 0) {
      result = binomial_row(popcount(mask));
    } else {
      Counts without = run(mask & ~bit(pivot));
      Counts with = run(mask & ~(adj[pivot] | bit(pivot)));
      result = std::move(without);
      if (result.size() < with.size() + 1) result.resize(with.size() + 1, 0);
      for (std::size_t j = 0; j < with.size(); ++j) result[j + 1] += with[j];
    }
    return memo.emplace(mask, std::move(result)).first->second;
  }
};

}  // namespace

std::vector<unsigned long long> f_counts_rows(int n, const Mask* adj,
                                              Mask mask) {
  int k = popcount(mask);
  if (k <= 16) {
    // Direct scan of all subsets of mask.
    Counts counts(static_cast<std::size_t>(k) + 1, 0);
    Mask sub = mask;
    for (;;) {
      if (induced_edgeless(adj, sub)) ++counts[popcount(sub)];
      if (sub == 0) break;
      sub = (sub - 1) & mask;
    }
    while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
    return counts;
  }
  FCounter counter{adj, {}};
  Counts counts = counter.run(mask);
  while (counts.size() > 1 && counts.back() == 0) counts.pop_back();
  return counts;
}

int matching_number_dp(const Graph& g, Mask mask) {
  std::unordered_map<Mask, int> memo;
  auto rec = [&](auto&& self, Mask m) -> int {
    if (m == 0) return 0;
    auto it = memo.find(m);
    if (it != memo.end()) return it->second;
    int v = lowest_bit(m);
    int best = self(self, m & ~bit(v));  // leave v unmatched
    for (Mask nb = g.neighbors(v) & m; nb; nb &= nb - 1) {
      int u = lowest_bit(nb);
      best = std::max(best, 1 + self(self, m & ~(bit(v) | bit(u))));
    }
    memo.emplace(m, best);
    return best;
  };
  return rec(rec, mask);
}

}  // namespace detail

FVector f_vector(const Graph& g) {
  auto raw = detail::f_counts_rows(g.vertex_count(), g.rows().data(),
                                   g.full_mask());
  FVector fv;
  for (std::size_t j = 1; j < raw.size(); ++j) fv.counts.emplace_back(raw[j]);
  // g_1 = n and the top count is positive by construction.
  if (!fv.counts.empty() &&
      (fv.counts.front() != g.vertex_count() || fv.counts.back() == 0))
    throw InternalInconsistency("f_vector: malformed counts");
  return fv;
}

int independence_number(const Graph& g) {
  std::unordered_map<Mask, int> memo;
  const Mask* adj = g.rows().data();
  auto rec = [&](auto&& self, Mask mask) -> int {
    int pivot = -1, pivot_deg = 0;
    for (Mask m = mask; m; m &= m - 1) {
      int v = lowest_bit(m);
      int deg = popcount(adj[v] & mask);
      if (deg > pivot_deg) {
        pivot_deg = deg;
        pivot = v;
      }
    }
    if (pivot < 0) return popcount(mask);  // edgeless remainder
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int best = std::max(self(self, mask & ~bit(pivot)),
                        1 + self(self, mask & ~(adj[pivot] | bit(pivot))));
    memo.emplace(mask, best);
    return best;
  };
  return rec(rec, g.full_mask());
}

// Maximum matching in a general graph by augmenting paths with blossom
// contraction.
int matching_number(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> match(n, -1), parent(n), base(n);
  std::vector<bool> used(n), in_blossom(n);

  auto lca = [&](int a, int b) {
    std::vector<bool> seen(n, false);
    for (;;) {
      a = base[a];
      seen[a] = true;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };

  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = true;
      in_blossom[base[match[v]]] = true;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };

  auto find_augmenting_path = [&](int root) -> bool {
    std::fill(used.begin(), used.end(), false);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = true;
    std::queue<int> q;
    q.push(root);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (Mask nb = g.neighbors(v); nb; nb &= nb - 1) {
        int to = lowest_bit(nb);
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur_base = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), false);
          mark_path(v, cur_base, to);
          mark_path(to, cur_base, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur_base;
              if (!used[i]) {
                used[i] = true;
                q.push(i);
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) {
            // Augment along the alternating path back to the root.
            int u = to;
            while (u != -1) {
              int pv = parent[u], ppv = match[pv];
              match[u] = pv;
              match[pv] = u;
              u = ppv;
            }
            return true;
          }
          used[match[to]] = true;
          q.push(match[to]);
        }
      }
    }
    return false;
  };

  int size = 0;
  // Greedy seed matching cuts down the number of augmentation phases.
  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    for (Mask nb = g.neighbors(v); nb; nb &= nb - 1) {
      int to = lowest_bit(nb);
      if (match[to] == -1) {
        match[v] = to;
        match[to] = v;
        ++size;
        break;
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (match[v] == -1 && find_augmenting_path(v)) ++size;
  return size;
}

int induced_matching_number(const Graph& g) {
  std::unordered_map<Mask, int> memo;
  const Mask* adj = g.rows().data();
  auto rec = [&](auto&& self, Mask mask) -> int {
    int v = -1;
    for (Mask m = mask; m; m &= m - 1) {
      if (adj[lowest_bit(m)] & mask) {
        v = lowest_bit(m);
        break;
      }
    }
    if (v < 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    int best = self(self, mask & ~bit(v));
    for (Mask nb = adj[v] & mask; nb; nb &= nb - 1) {
      int u = lowest_bit(nb);
      // Taking edge uv forbids all of N[u] and N[v] for later edges.
      Mask rest = mask & ~(adj[v] | adj[u] | bit(v) | bit(u));
      best = std::max(best, 1 + self(self, rest));
    }
    memo.emplace(mask, best);
    return best;
  };
  int nu = rec(rec, g.full_mask());
  return nu;
}

BigInt alternating_g(const FVector& fv) {
  BigInt g = 0;
  for (int j = 1; j <= fv.alpha(); ++j)
    if (j % 2 == 1)
      g += fv.g(j);
    else
      g -= fv.g(j);
  return g;
}

DLadder d_ladder(const FVector& fv) {
  int alpha = fv.alpha();
  if (alpha == 0) throw EmptyGraphNoLadder("d_ladder needs alpha >= 1");
  DLadder out;
  out.values.resize(static_cast<std::size_t>(alpha));
  for (int s = 0; s < alpha; ++s) {
    BigInt d = 0;
    for (int j = s + 1; j <= alpha; ++j) {
      BigInt term = fv.g(j) * binomial(j, j - 1 - s);
      if ((j - 1 - s) % 2 == 0)
        d += term;
      else
        d -= term;
    }
    out.values[static_cast<std::size_t>(s)] = d;
  }
  out.g = alternating_g(fv);
  BigInt sum = 0;
  for (const BigInt& d : out.values) sum += d;
  if (sum != out.g || out.values.back() != fv.g(alpha))
    throw InternalInconsistency("d_ladder identities failed");
  return out;
}

BigInt hilbert_function(const FVector& fv, long long d) {
  if (d < 0) throw NotApplicable("hilbert_function needs d >= 0");
  if (d == 0) return 1;
  BigInt total = 0;
  for (int j = 1; j <= fv.alpha(); ++j)
    total += fv.g(j) * binomial(d - 1, j - 1);
  return total;
}

BigInt standard_monomial_count(const Graph& g, int d) {
  if (d < 0) throw NotApplicable("standard_monomial_count needs d >= 0");
  int n = g.vertex_count();
  // Walk exponent vectors vertex by vertex; a positive exponent joins the
  // support, which must stay independent.
  auto rec = [&](auto&& self, int v, int remaining, Mask support) -> BigInt {
    if (v == n) return remaining == 0 ? 1 : 0;
    BigInt total = self(self, v + 1, remaining, support);
    if ((g.neighbors(v) & support) == 0) {
      for (int e = 1; e <= remaining; ++e)
        total += self(self, v + 1, remaining - e, support | bit(v));
    }
    return total;
  };
  return rec(rec, 0, d, 0);
}

BigInt hilbert_function_oracle(const Graph& g, long long d) {
  FVector fv = f_vector(g);
  BigInt via_counts = hilbert_function(fv, d);
  if (g.vertex_count() <= 12 && d <= 7) {
    BigInt via_monomials = standard_monomial_count(g, static_cast<int>(d));
    if (via_counts != via_monomials)
      throw TheoremViolation("hilbert function routes disagree");
  }
  return via_counts;
}

}  // namespace hdeg

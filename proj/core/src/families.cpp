#include "digraph_spectra/families.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace dgs {

Digraph empty_digraph(int n) { return Digraph::from_arcs(n, {}); }

Digraph complete_symmetric(int n) { return complete_plus_isolated(n, n); }

Digraph complete_plus_isolated(int k, int n) {
  if (k < 0 || k > n) throw std::invalid_argument("complete_plus_isolated requires 0 <= k <= n");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(k) * (k > 0 ? k - 1 : 0));
  for (int u = 0; u < k; ++u)
    for (int v = 0; v < k; ++v)
      if (u != v) arcs.emplace_back(u, v);
  return Digraph::from_arcs(n, std::move(arcs));
}

Digraph digon_union(int t) { return digon_chain(t, {}); }

Digraph digon_chain(int t, const std::vector<Arc>& inter_arcs) {
  if (t < 1) throw std::invalid_argument("digon_chain requires t >= 1");
  std::vector<Arc> arcs;
  for (int i = 0; i < t; ++i) {
    arcs.emplace_back(2 * i, 2 * i + 1);
    arcs.emplace_back(2 * i + 1, 2 * i);
  }
  for (auto [u, v] : inter_arcs) {
    if (u < 0 || v < 0 || u >= 2 * t || v >= 2 * t)
      throw std::invalid_argument("digon_chain inter-arc endpoint out of range");
    if (u / 2 >= v / 2)
      throw std::invalid_argument("digon_chain inter-arcs must go from a lower to a higher digon");
    arcs.emplace_back(u, v);
  }
  return Digraph::from_arcs(2 * t, std::move(arcs));
}

Digraph directed_cycle(int k) {
  if (k < 2) throw std::invalid_argument("directed_cycle requires k >= 2");
  std::vector<Arc> arcs;
  for (int i = 0; i < k; ++i) arcs.emplace_back(i, (i + 1) % k);
  return Digraph::from_arcs(k, std::move(arcs));
}

Digraph complete_bipartite_symmetric(int t) {
  if (t < 1) throw std::invalid_argument("complete_bipartite_symmetric requires t >= 1");
  std::vector<Arc> arcs;
  for (int u = 0; u < t; ++u)
    for (int v = t; v < 2 * t; ++v) {
      arcs.emplace_back(u, v);
      arcs.emplace_back(v, u);
    }
  return Digraph::from_arcs(2 * t, std::move(arcs));
}

Digraph rotational_tournament(int n) {
  if (n < 3 || n % 2 == 0)
    throw std::invalid_argument("rotational_tournament requires odd n >= 3");
  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i)
    for (int j = 1; j <= (n - 1) / 2; ++j) arcs.emplace_back(i, (i + j) % n);
  return Digraph::from_arcs(n, std::move(arcs));
}

Digraph core_complete_random(const CoreCompleteParams& p, RngSeed seed) {
  if (p.r < 1 || p.r > p.n)
    throw std::invalid_argument("core_complete_random requires 1 <= r <= n");
  if (!(p.beta > 0.0 && p.beta < 1.0))
    throw std::invalid_argument("core_complete_random requires beta in (0, 1)");
  if (p.extra_arcs < 0) throw std::invalid_argument("extra_arcs must be non-negative");

  SplitMix64 rng(seed);
  std::set<Arc> arcs;
  for (int u = 0; u < p.r; ++u)
    for (int v = 0; v < p.r; ++v)
      if (u != v) arcs.emplace(u, v);

  // Truncated geometric attachment: Pr(core j) = (1-beta) beta^(j-1) / (1-beta^r).
  for (int u = p.r; u < p.n; ++u) {
    double x = rng.next_double() * (1.0 - std::pow(p.beta, p.r));
    double cum = 0.0;
    int chosen = p.r - 1;
    for (int j = 0; j < p.r; ++j) {
      cum += (1.0 - p.beta) * std::pow(p.beta, j);
      if (x < cum) {
        chosen = j;
        break;
      }
    }
    arcs.emplace(u, chosen);
    arcs.emplace(chosen, u);
  }

  // Extra arcs: uniform without replacement over ordered pairs not yet present,
  // excluding self-loops and the core-core block.
  std::vector<Arc> candidates;
  for (int u = 0; u < p.n; ++u)
    for (int v = 0; v < p.n; ++v) {
      if (u == v) continue;
      if (u < p.r && v < p.r) continue;
      if (!arcs.count({u, v})) candidates.emplace_back(u, v);
    }
  if (static_cast<std::size_t>(p.extra_arcs) > candidates.size())
    throw std::invalid_argument("extra_arcs exceeds available pairs (" +
                                std::to_string(candidates.size()) + ")");
  for (int i = 0; i < p.extra_arcs; ++i) {
    std::size_t j = i + rng.below(candidates.size() - i);
    std::swap(candidates[i], candidates[j]);
    arcs.insert(candidates[i]);
  }

  return Digraph::from_arcs(p.n, std::vector<Arc>(arcs.begin(), arcs.end()));
}

Digraph random_k_regular(int n, int k, RngSeed seed) {
  if (k < 1 || k >= n) throw std::invalid_argument("random_k_regular requires 1 <= k < n");
  SplitMix64 rng(seed);

  constexpr int kMaxRestarts = 100;
  constexpr int kMaxResamples = 100;
  std::vector<int> perm(n);
  for (int restart = 0; restart < kMaxRestarts; ++restart) {
    std::set<Arc> arcs;
    bool ok = true;
    for (int layer = 0; layer < k && ok; ++layer) {
      auto bad = [&](int v, int target) { return target == v || arcs.count({v, target}); };
      bool placed = false;
      for (int attempt = 0; attempt < kMaxResamples && !placed; ++attempt) {
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
          std::swap(perm[i], perm[rng.below(static_cast<std::uint64_t>(i) + 1)]);
        // Repair violating slots by swapping with a random partner when both
        // ends stay valid; a fresh whole-permutation draw dodges ~layer*n
        // forbidden slots only with probability about e^-(layer+1), which is
        // hopeless at the table scales, while a swap repair almost always
        // lands.
        int budget = 50 * n;
        int v = 0;
        while (budget-- > 0) {
          while (v < n && !bad(v, perm[v])) ++v;
          if (v == n) break;
          int u = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
          if (u != v && !bad(v, perm[u]) && !bad(u, perm[v])) std::swap(perm[v], perm[u]);
        }
        if (v == n) {
          for (int w = 0; w < n; ++w) arcs.emplace(w, perm[w]);
          placed = true;
        }
      }
      if (!placed) ok = false;
    }
    if (ok) return Digraph::from_arcs(n, std::vector<Arc>(arcs.begin(), arcs.end()));
  }
  throw std::runtime_error("random_k_regular: retry budget exhausted for n = " +
                           std::to_string(n) + ", k = " + std::to_string(k));
}

Digraph random_digraph(int n, double p_arc, RngSeed seed) {
  if (!(p_arc >= 0.0 && p_arc <= 1.0))
    throw std::invalid_argument("random_digraph requires p_arc in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<Arc> arcs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      if (rng.next_double() < p_arc) arcs.emplace_back(u, v);
    }
  return Digraph::from_arcs(n, std::move(arcs));
}

}  // namespace dgs

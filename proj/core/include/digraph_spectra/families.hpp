#pragma once

#include <vector>

#include "digraph_spectra/digraph.hpp"
#include "digraph_spectra/rng.hpp"

namespace dgs {

Digraph empty_digraph(int n);
Digraph complete_symmetric(int n);
/// Complete symmetric digraph on vertices 0..k-1 plus n-k isolated vertices.
Digraph complete_plus_isolated(int k, int n);

/// t disjoint digons; digon i occupies vertices {2i, 2i+1}.
Digraph digon_union(int t);
/// Digons plus forward arcs between distinct digons. Every inter-arc (u, v)
/// must satisfy digon(u) < digon(v), so each strong component stays a digon.
Digraph digon_chain(int t, const std::vector<Arc>& inter_arcs);

Digraph directed_cycle(int k);
/// Symmetric complete bipartite digraph on parts {0..t-1} and {t..2t-1}.
Digraph complete_bipartite_symmetric(int t);
/// Circulant regular tournament i -> i+j (mod n), j = 1..(n-1)/2. n odd.
Digraph rotational_tournament(int n);

struct CoreCompleteParams {
  int n = 0;
  int r = 0;           // core size, 1 <= r <= n
  double beta = 0.5;   // in (0, 1)
  int extra_arcs = 0;
};

/// Complete symmetric core; each secondary vertex gets one digon to a core
/// vertex drawn from a truncated geometric law (weight (1-beta)*beta^(j-1)),
/// then extra arcs sampled uniformly without replacement from the remaining
/// ordered pairs outside the core-core block.
Digraph core_complete_random(const CoreCompleteParams& p, RngSeed seed);

/// d+(v) = d-(v) = k everywhere, built by superposing k random permutations.
/// Permutations creating a fixed point or duplicate arc are resampled; throws
/// after the retry budget is exhausted.
Digraph random_k_regular(int n, int k, RngSeed seed);

/// Each ordered non-loop pair included independently with probability p_arc.
Digraph random_digraph(int n, double p_arc, RngSeed seed);

}  // namespace dgs

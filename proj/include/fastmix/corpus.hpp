#pragma once

#include <vector>

#include "fastmix/chain_builders.hpp"
#include "fastmix/conductance.hpp"
#include "fastmix/graph.hpp"
#include "fastmix/matching.hpp"
#include "fastmix/rng.hpp"

namespace fastmix::corpus {

// Seeded instance generation shared by the property suites. Everything is a
// pure function of the RNG stream.

// Random spanning tree plus each extra pair independently with the given
// probability.
Graph random_connected_graph(Rng& rng, int min_n, int max_n, double extra_edge_prob = 0.25);
Graph random_tree(Rng& rng, int n);

// Random simple edge set (not necessarily connected), weights in [0.1, 1.1).
std::vector<WeightedEdge> random_weighted_edges(Rng& rng, int n, int max_m);

// Positive weights on the edges of a random tree, loops on a coin flip.
WeightedGraph random_tree_weighting(Rng& rng, int n);

TargetDistribution random_distribution(Rng& rng, int n);

// Feasible slack certificates: g covers every edge with headroom. mean_zero
// recentres f (for median rounding); otherwise f is nonnegative (for sweeps).
Embedding1D random_feasible_embedding(Rng& rng, const Graph& g, bool mean_zero);
VectorEmbedding random_feasible_vector_embedding(Rng& rng, const Graph& g, int dim);

// Named family instances: desk scale for exact enumeration, and the larger
// set the mixing suites run on.
std::vector<Graph> small_family_corpus();
std::vector<Graph> family_corpus();

// All connected labelled graphs on n vertices; n <= 6 stays cheap.
std::vector<Graph> all_connected_graphs(int n);

}  // namespace fastmix::corpus

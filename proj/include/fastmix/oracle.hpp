#pragma once

#include <cstdint>
#include <vector>

#include "fastmix/conductance.hpp"
#include "fastmix/graph.hpp"
#include "fastmix/matching.hpp"
#include "fastmix/rat.hpp"
#include "fastmix/spectral.hpp"

namespace fastmix::oracle {

// Exhaustive minimizer over admissible sets: 0 < |S| <= n/2 for the vertex
// and matching quantities, 0 < vol(S) <= vol(V)/2 for the edge quantity. Ties
// go to the lexicographically smallest set. Throws beyond the enumeration
// caps (n <= 20; matching n <= 16).
CutCertificate exact_conductance(const Graph& g, CutQuantity which);

// Maximum-weight matching by include/exclude search, at most 20 edges.
MatchingResult exact_max_matching(int n, const std::vector<WeightedEdge>& edges);
// Directed variant: out-degrees and in-degrees at most one.
MatchingResult exact_max_directed_matching(int n, const std::vector<Arc>& arcs);

struct RatEdge {
    int u = 0, v = 0;
    Rat w{1};
};

// Exact maximum fractional matching with an optimal dual cover. The primal
// comes from enumerating the half-integral values {0, 1/2, 1} per edge (an
// optimal solution of this form always exists), capped at 12 edges; the value
// is cross-checked against the assignment reduction, which also supplies the
// cover.
struct FractionalCertificate {
    Rat value{0};
    std::vector<Rat> edge_value;  // aligned with the input edges
    std::vector<Rat> cover;       // g(u) + g(v) >= w(e) on every edge, sum = value
};
FractionalCertificate exact_fractional_matching(int n, const std::vector<RatEdge>& edges);

// Local search for a large-gap member of the lazy reversible chains with the
// given stationary distribution. Chains are parametrized by symmetric edge
// flows f(e) >= 0 with sum of flows at x at most pi(x)/2; then
// P(x,y) = f(e)/pi(x) and P(x,x) = 1 - sum >= 1/2. Coordinate ascent with a
// gridded line search per edge, one deterministic start plus seeded random
// restarts.
struct GapSearchResult {
    TransitionMatrix chain;
    double gap = 0.0;
    int evaluations = 0;
};
GapSearchResult best_gap_search(const Graph& g, const std::vector<double>& pi, int sweeps,
                                std::uint64_t seed);

}  // namespace fastmix::oracle

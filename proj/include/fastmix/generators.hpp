#pragma once

#include <string>

#include "fastmix/graph.hpp"

namespace fastmix {

enum class Family {
    path,            // n vertices in a line
    cycle,           // n-cycle, n >= 3
    star,            // hub 0 plus n leaves
    complete,        // K_n
    binary_tree,     // complete binary tree of the given depth, 2^depth - 1 vertices
    dumbbell,        // two K_n bells bridged through one extra vertex
    clique_matching, // two K_n joined by a perfect matching
    clique_source,   // two K_n, one vertex of the first joined to k of the second
};

Family family_from_string(const std::string& name);
std::string family_name(Family f);

// primary is the size parameter (depth for binary_tree); secondary is k for
// clique_source and ignored elsewhere.
Graph generate(Family f, int primary, int secondary = 0);

// Vertex conventions, fixed so tests and certificates can name sets:
//   dumbbell(n):        bell A = [0, n), bell B = [n, 2n), bridge vertex 2n;
//                       the bridge attaches to vertices 0 and n.
//   clique_matching(n): cliques [0, n) and [n, 2n), matching i -- n+i.
//   clique_source(n,k): cliques [0, n) and [n, 2n), source vertex 0 joined to
//                       n, n+1, ..., n+k-1.
//   star(n):            hub 0, leaves 1..n.

}  // namespace fastmix

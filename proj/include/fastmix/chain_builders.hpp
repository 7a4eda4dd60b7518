#pragma once

#include <optional>
#include <vector>

#include "fastmix/graph.hpp"
#include "fastmix/spectral.hpp"

namespace fastmix {

// Target stationary distribution: positive entries summing to one (within
// 1e-9 of accumulated rounding).
struct TargetDistribution {
    std::vector<double> p;
};
TargetDistribution uniform_distribution(int n);
void validate_distribution(const TargetDistribution& pi, int n);

// Weighting whose walk reproduces a reversible chain exactly: edge weight
// pi(x) P(x,y), loop weight pi(x) P(x,x), unit total. The chain's support
// must lie inside the graph.
WeightedGraph base_weighting_from_chain(const Graph& g, const TransitionMatrix& t);

// Adds eta * pi(T_x) to each spanning-tree edge {x, parent(x)} of a base
// weighting (default: loops of mass pi(x)), eta = epsilon / (2 diam T). The
// result keeps every stationary mass within 1/(1+epsilon) of the target and
// every base flow within 1-epsilon, while the walk's gap rises to
// epsilon / (24 diam(G)^2) before lazification and half that after.
struct AlmostMixReport {
    WeightedGraph weighting;
    RootedSpanningTree tree;
    TransitionMatrix chain;       // lazified walk on the weighting
    double epsilon = 0.0;
    double eta = 0.0;
    int graph_diameter = 0;
    int tree_diameter = 0;
    double total_weight = 0.0;    // at most 1 + epsilon
    double min_ratio = 0.0;       // min over x of pi_w(x) / pi(x)
    double min_flow_ratio = 0.0;  // min over base support of relative flow
    double hat_cond = 0.0;        // subtree-cut quantity, >= epsilon / (6 diam T)
    double gap = 0.0;             // lazified
    double gap_bound = 0.0;       // epsilon / (48 diam(G)^2)
    double pre_gap = 0.0;         // before lazification
    double pre_gap_bound = 0.0;   // epsilon / (6 diam(T)^2)
};
AlmostMixReport almost_mixing_weighting(const Graph& g, const TargetDistribution& pi,
                                        double epsilon,
                                        const std::optional<WeightedGraph>& base = {},
                                        std::optional<int> root = {});

// Continuous-time rates on a BFS tree: q({x, parent(x)}) = |T_x| / (2 diam T).
// Average leave rate is at most one, the Laplacian gap at least
// 1 / (16 diam(G)^2), and every expected root-hitting time at most
// 8 diam(G)^2.
struct ContinuousReport {
    WeightedGraph rates;
    RootedSpanningTree tree;
    int graph_diameter = 0;
    int tree_diameter = 0;
    double total_rate = 0.0;
    double average_rate = 0.0;
    double gap = 0.0;
    double gap_bound = 0.0;      // 1 / (16 diam(G)^2)
    double max_hitting = 0.0;    // max over x of E_x[time to root]
    double hitting_bound = 0.0;  // 8 diam(G)^2
};
ContinuousReport continuous_time_weighting(const Graph& g, std::optional<int> root = {});

// Time-inhomogeneous schedule of exactly 2 diam(G) steps: depth(T) pulls
// toward the root, then one descent step per depth level redistributing
// subtree mass proportionally, then identity padding. Every point start lands
// exactly on the target.
struct ChainSchedule {
    int n = 0;
    int diam = 0;
    int root = 0;
    std::vector<double> pi;
    std::vector<TransitionMatrix> steps;
};
ChainSchedule perfect_mixing_schedule(const Graph& g, const TargetDistribution& pi,
                                      std::optional<int> root = {});
std::vector<double> run_schedule(const ChainSchedule& schedule, std::vector<double> mu);
// Worst-case total-variation distance from the target over all point starts.
double schedule_tv_error(const ChainSchedule& schedule);

// Lazy uniform-stationary baseline: off-diagonal 1 / (2 max-degree).
TransitionMatrix uniform_max_degree_chain(const Graph& g);

}  // namespace fastmix

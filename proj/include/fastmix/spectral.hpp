#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fastmix/graph.hpp"
#include "fastmix/matrix.hpp"

namespace fastmix {

// Row-stochastic matrix with its stationary distribution.
struct TransitionMatrix {
    int n = 0;
    DenseMatrix p;
    std::vector<double> pi;

    double at(int i, int j) const { return p.at(i, j); }
    double& at(int i, int j) { return p.at(i, j); }
};

// Walk on a weighting: P(x,y) = w({x,y})/w(x) off the diagonal, the loop
// share on it. Every vertex weight must be positive.
TransitionMatrix chain_from_weighting(const WeightedGraph& wg);

struct ChainDiagnostics {
    double max_row_error = 0.0;      // |row sum - 1|
    double min_entry = 0.0;          // most negative entry
    double max_reversibility_error = 0.0;  // |pi_x P(x,y) - pi_y P(y,x)|
    double min_diagonal = 0.0;
    bool rows_ok = false, nonneg_ok = false, reversible_ok = false, lazy = false;
};
ChainDiagnostics diagnose_chain(const TransitionMatrix& t);
// Throws domain_error unless rows sum to one, entries are nonnegative, and
// detailed balance holds, all within 1e-12.
void require_reversible(const TransitionMatrix& t);

// Cyclic-rotation eigensolver for symmetric matrices. Runs sweeps until the
// off-diagonal Frobenius norm falls below 1e-12 (scaled by the matrix norm)
// or 50 sweeps. Eigenvalues ascending; vectors (as columns) optional.
struct SymmetricEigen {
    std::vector<double> values;
    std::optional<DenseMatrix> vectors;
    int sweeps = 0;
    double off_norm = 0.0;
};
SymmetricEigen jacobi_eigen(DenseMatrix a, bool want_vectors = false);

struct SpectralReport {
    double gap = 0.0;
    std::optional<double> relaxation;
    std::vector<double> eigenvalues;  // ascending
    std::string method = "jacobi-like";
    std::optional<double> average_rate;  // mean leave rate, continuous time only
    bool warning = false;
};

// Discrete-time gap 1 - lambda_2 of a reversible chain, via the symmetrized
// matrix sqrt(pi_x/pi_y) P(x,y).
SpectralReport spectral_gap(const TransitionMatrix& t);

// Continuous-time gap: second smallest eigenvalue of the Laplacian of the
// rate weighting (loops ignored). Disconnected support reports gap 0 with the
// warning flag set.
SpectralReport laplacian_gap(const WeightedGraph& rates);

// Half-identity mix; spectrum maps lambda to (1 + lambda) / 2.
TransitionMatrix lazify(const TransitionMatrix& t);

// One simple path per unordered vertex pair.
struct PathSystem {
    int n = 0;
    std::vector<std::vector<int>> paths;

    int pair_index(int x, int y) const;
    const std::vector<int>& path(int x, int y) const;
};
PathSystem shortest_path_system(const Graph& g);
PathSystem tree_path_system(const RootedSpanningTree& tree);

enum class TimeMode { discrete, continuous };

// Congestion lower bound on the gap: minimum over edges of flow capacity over
// sum of pi(x) pi(y) |path| across the unordered pairs routed through the
// edge. Continuous mode assumes uniform stationary mass and scales by n.
double canonical_paths_bound(const WeightedGraph& wg, const PathSystem& paths, TimeMode mode);

// Specialization for weightings supported on a spanning tree: minimum over
// tree edges of the adjusted cut conductance, divided by the tree diameter.
double tree_canonical_bound(const WeightedGraph& wg);

// Minimum over non-root vertices of the subtree-cut quantity
// (w(x, parent) / w(V)) / (pi_w(T_x) pi_w(T_x complement)), which counts only
// the tree edge leaving the subtree rather than the whole cut.
double hat_conductance(const WeightedGraph& wg, const RootedSpanningTree& tree);

enum class DistanceMetric { linf, tv };
struct MixingResult {
    int time = 0;
    bool timed_out = false;
    double distance = 0.0;  // at the returned time
    long long cap = 0;
};
// Smallest t with worst-case distance from stationarity at most xi, evolving
// all point starts step by step; gives up at ceil((64/gap) log(1/(xi^2
// pi_min))).
MixingResult mixing_time(const TransitionMatrix& t, double xi, DistanceMetric metric);

// Expected time to reach the tree root from `from` under the continuous-time
// walk with the given rates: sum over non-root ancestors y of subtree size
// over rate to the parent.
double hitting_time_tree(const WeightedGraph& rates, const RootedSpanningTree& tree, int from);

// Expected hitting times of `target` from every vertex by solving the
// first-step equations of the continuous-time walk.
std::vector<double> hitting_times_to_target(const WeightedGraph& rates, int target);

}  // namespace fastmix

#include "fastmix/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "fastmix/constants.hpp"

namespace fastmix {

TransitionMatrix chain_from_weighting(const WeightedGraph& wg) {
    const Graph& g = wg.graph();
    int n = g.vertex_count();
    std::vector<double> weight(n);
    for (int x = 0; x < n; ++x) {
        weight[x] = wg.vertex_weight(x);
        if (!(weight[x] > 0.0))
            throw std::domain_error("vertex " + std::to_string(x) + " has zero weight");
    }
    TransitionMatrix t;
    t.n = n;
    t.p = DenseMatrix(n);
    t.pi = wg.stationary();
    for (int x = 0; x < n; ++x) {
        for (const auto& [y, e] : g.incident(x)) t.p.at(x, y) = wg.edge_weight(e) / weight[x];
        t.p.at(x, x) = wg.loop_weight(x) / weight[x];
    }
    return t;
}

ChainDiagnostics diagnose_chain(const TransitionMatrix& t) {
    ChainDiagnostics d;
    d.min_entry = 0.0;
    d.min_diagonal = 1.0;
    for (int i = 0; i < t.n; ++i) {
        double row = 0.0;
        for (int j = 0; j < t.n; ++j) {
            row += t.at(i, j);
            d.min_entry = std::min(d.min_entry, t.at(i, j));
        }
        d.max_row_error = std::max(d.max_row_error, std::fabs(row - 1.0));
        d.min_diagonal = std::min(d.min_diagonal, t.at(i, i));
    }
    for (int i = 0; i < t.n; ++i)
        for (int j = i + 1; j < t.n; ++j)
            d.max_reversibility_error =
                std::max(d.max_reversibility_error,
                         std::fabs(t.pi[i] * t.at(i, j) - t.pi[j] * t.at(j, i)));
    d.rows_ok = d.max_row_error <= kRowSumTol;
    d.nonneg_ok = d.min_entry >= -kRowSumTol;
    d.reversible_ok = d.max_reversibility_error <= kReversibilityTol;
    d.lazy = d.min_diagonal >= 0.5 - kRowSumTol;
    return d;
}

void require_reversible(const TransitionMatrix& t) {
    if (t.n <= 0) throw std::domain_error("empty chain");
    if (static_cast<int>(t.pi.size()) != t.n || t.p.n != t.n)
        throw std::invalid_argument("chain size mismatch");
    for (double mass : t.pi)
        if (!(mass > 0.0)) throw std::domain_error("stationary mass must be positive");
    auto d = diagnose_chain(t);
    if (!d.rows_ok)
        throw std::domain_error("row sums off by " + std::to_string(d.max_row_error));
    if (!d.nonneg_ok) throw std::domain_error("negative transition probability");
    if (!d.reversible_ok)
        throw std::domain_error("detailed balance violated by " +
                                std::to_string(d.max_reversibility_error));
}

namespace {

double off_diagonal_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (int p = 0; p < a.n; ++p)
        for (int q = p + 1; q < a.n; ++q) s += a.at(p, q) * a.at(p, q);
    return std::sqrt(2.0 * s);
}

double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    for (double v : a.a) s += v * v;
    return std::sqrt(s);
}

}  // namespace

SymmetricEigen jacobi_eigen(DenseMatrix a, bool want_vectors) {
    int n = a.n;
    SymmetricEigen out;
    if (n == 0) return out;
    // Symmetry is assumed by the rotations; fold in any tiny asymmetry.
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            double m = 0.5 * (a.at(p, q) + a.at(q, p));
            a.at(p, q) = a.at(q, p) = m;
        }

    DenseMatrix v = DenseMatrix::identity(n);
    double tol = kJacobiOffTol * std::max(1.0, frobenius_norm(a));
    int sweeps = 0;
    while (sweeps < kJacobiMaxSweeps && off_diagonal_norm(a) > tol) {
        ++sweeps;
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a.at(p, q);
                if (std::fabs(apq) <= tol / (n * n + 1.0)) continue;
                double theta = (a.at(q, q) - a.at(p, p)) / (2.0 * apq);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = a.at(k, p), akq = a.at(k, q);
                    a.at(k, p) = c * akp - s * akq;
                    a.at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = a.at(p, k), aqk = a.at(q, k);
                    a.at(p, k) = c * apk - s * aqk;
                    a.at(q, k) = s * apk + c * aqk;
                }
                if (want_vectors) {
                    for (int k = 0; k < n; ++k) {
                        double vkp = v.at(k, p), vkq = v.at(k, q);
                        v.at(k, p) = c * vkp - s * vkq;
                        v.at(k, q) = s * vkp + c * vkq;
                    }
                }
            }
        }
    }
    out.sweeps = sweeps;
    out.off_norm = off_diagonal_norm(a);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) { return a.at(i, i) < a.at(j, j); });
    out.values.resize(n);
    for (int i = 0; i < n; ++i) out.values[i] = a.at(order[i], order[i]);
    if (want_vectors) {
        DenseMatrix sorted(n);
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row) sorted.at(row, col) = v.at(row, order[col]);
        out.vectors = std::move(sorted);
    }
    return out;
}

SpectralReport spectral_gap(const TransitionMatrix& t) {
    require_reversible(t);
    SpectralReport report;
    if (t.n == 1) {
        report.gap = 1.0;
        report.relaxation = 1.0;
        report.eigenvalues = {1.0};
        return report;
    }
    DenseMatrix s(t.n);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            s.at(i, j) = std::sqrt(t.pi[i] / t.pi[j]) * t.at(i, j);
    auto eig = jacobi_eigen(std::move(s));
    report.eigenvalues = eig.values;
    report.gap = 1.0 - report.eigenvalues[t.n - 2];
    if (report.gap > 0.0)
        report.relaxation = 1.0 / report.gap;
    else
        report.warning = true;
    return report;
}

SpectralReport laplacian_gap(const WeightedGraph& rates) {
    int n = rates.vertex_count();
    if (n == 0) throw std::domain_error("empty weighting");
    DenseMatrix l(n);
    for (int e = 0; e < rates.graph().edge_count(); ++e) {
        auto [u, v] = rates.graph().edges()[e];
        double w = rates.edge_weight(e);
        l.at(u, v) -= w;
        l.at(v, u) -= w;
        l.at(u, u) += w;
        l.at(v, v) += w;
    }
    auto eig = jacobi_eigen(std::move(l));
    SpectralReport report;
    report.eigenvalues = eig.values;
    report.gap = n >= 2 ? report.eigenvalues[1] : 0.0;
    double rate_sum = 0.0;
    for (int e = 0; e < rates.graph().edge_count(); ++e) rate_sum += 2.0 * rates.edge_weight(e);
    report.average_rate = rate_sum / n;
    if (report.gap > kCrossCheckTol)
        report.relaxation = 1.0 / report.gap;
    else
        report.warning = true;  // disconnected support (or a single vertex)
    return report;
}

TransitionMatrix lazify(const TransitionMatrix& t) {
    TransitionMatrix out = t;
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            out.at(i, j) = 0.5 * t.at(i, j) + (i == j ? 0.5 : 0.0);
    return out;
}

int PathSystem::pair_index(int x, int y) const {
    if (x == y || x < 0 || y < 0 || x >= n || y >= n)
        throw std::invalid_argument("bad vertex pair");
    if (x > y) std::swap(x, y);
    // Pairs (x, y), x < y, in lexicographic order.
    return x * n - x * (x + 1) / 2 + (y - x - 1);
}

const std::vector<int>& PathSystem::path(int x, int y) const {
    return paths.at(pair_index(x, y));
}

PathSystem shortest_path_system(const Graph& g) {
    int n = g.vertex_count();
    if (!g.connected()) throw std::domain_error("graph is not connected");
    PathSystem ps;
    ps.n = n;
    ps.paths.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int src = 0; src < n; ++src) {
        // BFS parents with ascending-id tie-break give canonical paths.
        auto dist = g.bfs_distances(src);
        std::vector<int> parent(n, -1);
        for (int v = 0; v < n; ++v) {
            if (v == src) continue;
            for (int u : g.neighbors(v)) {
                if (dist[u] == dist[v] - 1) {
                    parent[v] = u;
                    break;
                }
            }
        }
        for (int dst = src + 1; dst < n; ++dst) {
            std::vector<int> path;
            for (int x = dst; x != -1; x = parent[x]) {
                path.push_back(x);
                if (x == src) break;
            }
            std::reverse(path.begin(), path.end());
            ps.paths[ps.pair_index(src, dst)] = std::move(path);
        }
    }
    return ps;
}

PathSystem tree_path_system(const RootedSpanningTree& tree) {
    int n = static_cast<int>(tree.parent.size());
    PathSystem ps;
    ps.n = n;
    ps.paths.resize(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            // Join the two root paths at the lowest common ancestor.
            int a = x, b = y;
            std::vector<int> up, down;
            while (tree.depth[a] > tree.depth[b]) {
                up.push_back(a);
                a = tree.parent[a];
            }
            while (tree.depth[b] > tree.depth[a]) {
                down.push_back(b);
                b = tree.parent[b];
            }
            while (a != b) {
                up.push_back(a);
                down.push_back(b);
                a = tree.parent[a];
                b = tree.parent[b];
            }
            up.push_back(a);
            std::reverse(down.begin(), down.end());
            up.insert(up.end(), down.begin(), down.end());
            ps.paths[ps.pair_index(x, y)] = std::move(up);
        }
    }
    return ps;
}

double canonical_paths_bound(const WeightedGraph& wg, const PathSystem& paths, TimeMode mode) {
    const Graph& g = wg.graph();
    int n = g.vertex_count();
    if (n < 2) throw std::domain_error("need at least two vertices");
    if (paths.n != n) throw std::invalid_argument("path system size mismatch");

    std::vector<double> pi;
    double total = 0.0;
    if (mode == TimeMode::discrete) {
        pi = wg.stationary();
        total = wg.total_weight();
    }

    std::vector<double> congestion(g.edge_count(), 0.0);
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            const auto& path = paths.path(x, y);
            if (path.size() < 2 || path.front() != x || path.back() != y)
                throw std::invalid_argument("path for pair does not join its endpoints");
            double length = static_cast<double>(path.size() - 1);
            double mass = mode == TimeMode::discrete ? pi[x] * pi[y] : 1.0;
            for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                int e = g.edge_index(path[i], path[i + 1]);
                if (e < 0)
                    throw std::invalid_argument("path uses a non-edge " +
                                                std::to_string(path[i]) + "-" +
                                                std::to_string(path[i + 1]));
                congestion[e] += mass * length;
            }
        }
    }

    double bound = std::numeric_limits<double>::infinity();
    for (int e = 0; e < g.edge_count(); ++e) {
        if (congestion[e] == 0.0) continue;
        double capacity = mode == TimeMode::discrete ? wg.edge_weight(e) / total
                                                     : n * wg.edge_weight(e);
        bound = std::min(bound, capacity / congestion[e]);
    }
    return bound;
}

double tree_canonical_bound(const WeightedGraph& wg) {
    const Graph& g = wg.graph();
    int n = g.vertex_count();
    if (n < 2) throw std::domain_error("need at least two vertices");

    std::vector<std::pair<int, int>> support;
    for (int e = 0; e < g.edge_count(); ++e)
        if (wg.edge_weight(e) > 0.0) support.push_back(g.edges()[e]);
    if (static_cast<int>(support.size()) != n - 1)
        throw std::domain_error("support is not a spanning tree");
    Graph tree_graph(n, support);
    if (!tree_graph.connected()) throw std::domain_error("support is not a spanning tree");

    auto tree = bfs_tree(tree_graph, 0);
    auto pi = wg.stationary();
    double total = wg.total_weight();

    // pi-mass of each subtree via the child-to-parent accumulation.
    std::vector<double> mass(n, 0.0);
    for (auto it = tree.bfs_order.rbegin(); it != tree.bfs_order.rend(); ++it) {
        mass[*it] += pi[*it];
        if (tree.parent[*it] >= 0) mass[tree.parent[*it]] += mass[*it];
    }

    double best = std::numeric_limits<double>::infinity();
    for (auto [child, parent] : tree.tree_edges) {
        double flow = wg.edge_weight_between(child, parent) / total;
        double split = mass[child] * (1.0 - mass[child]);
        if (split <= 0.0) throw std::domain_error("degenerate stationary split");
        best = std::min(best, flow / split);
    }
    return best / tree.diameter;
}

double hat_conductance(const WeightedGraph& wg, const RootedSpanningTree& tree) {
    int n = wg.vertex_count();
    if (static_cast<int>(tree.parent.size()) != n)
        throw std::invalid_argument("tree size mismatch");
    if (n < 2) throw std::domain_error("need at least two vertices");

    auto pi = wg.stationary();
    double total = wg.total_weight();
    std::vector<double> mass(n, 0.0);
    for (auto it = tree.bfs_order.rbegin(); it != tree.bfs_order.rend(); ++it) {
        mass[*it] += pi[*it];
        if (tree.parent[*it] >= 0) mass[tree.parent[*it]] += mass[*it];
    }

    double best = std::numeric_limits<double>::infinity();
    for (int x = 0; x < n; ++x) {
        if (x == tree.root) continue;
        double flow = wg.edge_weight_between(x, tree.parent[x]) / total;
        double split = mass[x] * (1.0 - mass[x]);
        if (split <= 0.0) throw std::domain_error("degenerate stationary split");
        best = std::min(best, flow / split);
    }
    return best;
}

namespace {

double distance_from_stationarity(const DenseMatrix& m, const std::vector<double>& pi,
                                  DistanceMetric metric) {
    double worst = 0.0;
    for (int x = 0; x < m.n; ++x) {
        if (metric == DistanceMetric::linf) {
            for (int y = 0; y < m.n; ++y)
                worst = std::max(worst, std::fabs(m.at(x, y) / pi[y] - 1.0));
        } else {
            double tv = 0.0;
            for (int y = 0; y < m.n; ++y) tv += std::fabs(m.at(x, y) - pi[y]);
            worst = std::max(worst, 0.5 * tv);
        }
    }
    return worst;
}

}  // namespace

MixingResult mixing_time(const TransitionMatrix& t, double xi, DistanceMetric metric) {
    if (!(xi > 0.0)) throw std::invalid_argument("threshold must be positive");
    require_reversible(t);
    MixingResult out;
    double gap = spectral_gap(t).gap;
    double pi_min = *std::min_element(t.pi.begin(), t.pi.end());
    if (gap <= 0.0) {
        out.cap = 1;
    } else {
        out.cap = static_cast<long long>(
            std::ceil(kMixingCapFactor / gap * std::log(1.0 / (xi * xi * pi_min))));
        out.cap = std::max(out.cap, 1LL);
    }

    DenseMatrix power = DenseMatrix::identity(t.n);
    for (long long step = 0;; ++step) {
        double d = distance_from_stationarity(power, t.pi, metric);
        if (d <= xi + kFeasibilityTol) {
            out.time = static_cast<int>(step);
            out.distance = d;
            return out;
        }
        if (step >= out.cap) {
            out.time = static_cast<int>(step);
            out.distance = d;
            out.timed_out = true;
            return out;
        }
        power = multiply(power, t.p);
    }
}

double hitting_time_tree(const WeightedGraph& rates, const RootedSpanningTree& tree, int from) {
    int n = rates.vertex_count();
    if (from < 0 || from >= n) throw std::invalid_argument("vertex out of range");
    double expected = 0.0;
    for (int y : tree.path_from_root(from)) {
        if (y == tree.root) continue;
        double rate = rates.edge_weight_between(y, tree.parent[y]);
        if (!(rate > 0.0)) throw std::domain_error("zero rate on a tree edge");
        expected += tree.subtree_size[y] / rate;
    }
    return expected;
}

std::vector<double> hitting_times_to_target(const WeightedGraph& rates, int target) {
    int n = rates.vertex_count();
    if (target < 0 || target >= n) throw std::invalid_argument("target out of range");
    if (!rates.graph().connected()) throw std::domain_error("graph is not connected");

    // First-step equations: leave_rate(x) h(x) - sum_y rate(x,y) h(y) = 1.
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
        if (v != target) rest.push_back(v);
    std::vector<int> slot(n, -1);
    for (std::size_t i = 0; i < rest.size(); ++i) slot[rest[i]] = static_cast<int>(i);

    DenseMatrix a(static_cast<int>(rest.size()));
    std::vector<double> b(rest.size(), 1.0);
    for (std::size_t i = 0; i < rest.size(); ++i) {
        int x = rest[i];
        double leave = 0.0;
        for (auto [y, e] : rates.graph().incident(x)) {
            double w = rates.edge_weight(e);
            leave += w;
            if (y != target && w != 0.0) a.at(static_cast<int>(i), slot[y]) -= w;
        }
        if (!(leave > 0.0)) throw std::domain_error("vertex with zero leave rate");
        a.at(static_cast<int>(i), static_cast<int>(i)) += leave;
    }
    auto h = solve_linear_system(std::move(a), std::move(b));

    std::vector<double> out(n, 0.0);
    for (std::size_t i = 0; i < rest.size(); ++i) out[rest[i]] = h[i];
    return out;
}

}  // namespace fastmix

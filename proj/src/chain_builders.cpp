#include "fastmix/chain_builders.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "fastmix/constants.hpp"
#include "fastmix/matrix.hpp"

namespace fastmix {

TargetDistribution uniform_distribution(int n) {
    if (n <= 0) throw std::invalid_argument("need at least one vertex");
    TargetDistribution pi;
    pi.p.assign(n, 1.0 / n);
    return pi;
}

void validate_distribution(const TargetDistribution& pi, int n) {
    if (static_cast<int>(pi.p.size()) != n)
        throw std::invalid_argument("distribution size " + std::to_string(pi.p.size()) +
                                    " does not match vertex count " + std::to_string(n));
    double sum = 0.0;
    for (double mass : pi.p) {
        if (!(mass > 0.0)) throw std::domain_error("distribution must be positive");
        sum += mass;
    }
    if (std::fabs(sum - 1.0) > kCrossCheckTol)
        throw std::domain_error("distribution sums to " + std::to_string(sum));
}

WeightedGraph base_weighting_from_chain(const Graph& g, const TransitionMatrix& t) {
    if (t.n != g.vertex_count()) throw std::invalid_argument("chain size mismatch");
    require_reversible(t);
    for (int x = 0; x < t.n; ++x)
        for (int y = x + 1; y < t.n; ++y)
            if (std::fabs(t.at(x, y)) > kFeasibilityTol && g.edge_index(x, y) < 0)
                throw std::domain_error("chain moves across the non-edge " + std::to_string(x) +
                                        "-" + std::to_string(y));
    WeightedGraph w(g);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        w.set_edge_weight(e, (t.pi[u] * t.at(u, v) + t.pi[v] * t.at(v, u)) / 2.0);
    }
    for (int x = 0; x < t.n; ++x) w.set_loop_weight(x, t.pi[x] * t.at(x, x));
    return w;
}

namespace {

int checked_root(const Graph& g, std::optional<int> root) {
    if (!root) return min_eccentricity_vertex(g);
    if (*root < 0 || *root >= g.vertex_count())
        throw std::invalid_argument("root " + std::to_string(*root) + " out of range");
    return *root;
}

void require_connected(const Graph& g) {
    if (!g.connected()) throw std::domain_error("graph must be connected");
}

}  // namespace

AlmostMixReport almost_mixing_weighting(const Graph& g, const TargetDistribution& pi,
                                        double epsilon,
                                        const std::optional<WeightedGraph>& base,
                                        std::optional<int> root) {
    int n = g.vertex_count();
    require_connected(g);
    validate_distribution(pi, n);
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");

    WeightedGraph w = base.value_or(WeightedGraph(g));
    if (base) {
        if (w.vertex_count() != n || w.graph().edges() != g.edges())
            throw std::invalid_argument("base weighting lives on a different graph");
        if (std::fabs(w.total_weight() - 1.0) > kCrossCheckTol)
            throw std::domain_error("base weighting must have unit total weight");
        auto induced = w.stationary();
        for (int x = 0; x < n; ++x)
            if (std::fabs(induced[x] - pi.p[x]) > kCrossCheckTol)
                throw std::domain_error("base weighting induces a different distribution");
    } else {
        for (int x = 0; x < n; ++x) w.set_loop_weight(x, pi.p[x]);
    }

    AlmostMixReport report;
    report.epsilon = epsilon;
    report.tree = bfs_tree(g, checked_root(g, root), pi.p);
    report.graph_diameter = diameter(g);
    report.tree_diameter = report.tree.diameter;

    if (n == 1) {
        report.weighting = w;
        report.chain = chain_from_weighting(w);
        report.total_weight = w.total_weight();
        report.min_ratio = report.min_flow_ratio = 1.0;
        report.hat_cond = 0.0;
        report.gap = report.pre_gap = 1.0;
        return report;
    }

    report.eta = epsilon / (2.0 * report.tree_diameter);
    const WeightedGraph base_w = w;
    for (const auto& [x, parent] : report.tree.tree_edges)
        w.add_edge_weight(g.edge_index(x, parent), report.eta * report.tree.subtree_mass[x]);
    report.weighting = w;

    report.total_weight = w.total_weight();
    double base_total = base_w.total_weight();
    report.min_ratio = report.min_flow_ratio = std::numeric_limits<double>::infinity();
    for (int x = 0; x < n; ++x) {
        report.min_ratio =
            std::min(report.min_ratio, w.vertex_weight(x) / report.total_weight / pi.p[x]);
        if (base_w.loop_weight(x) > 0.0)
            report.min_flow_ratio = std::min(report.min_flow_ratio,
                                             (w.loop_weight(x) / report.total_weight) /
                                                 (base_w.loop_weight(x) / base_total));
    }
    for (int e = 0; e < g.edge_count(); ++e)
        if (base_w.edge_weight(e) > 0.0)
            report.min_flow_ratio = std::min(report.min_flow_ratio,
                                             (w.edge_weight(e) / report.total_weight) /
                                                 (base_w.edge_weight(e) / base_total));

    report.hat_cond = hat_conductance(w, report.tree);
    TransitionMatrix walk = chain_from_weighting(w);
    report.pre_gap = spectral_gap(walk).gap;
    report.chain = lazify(walk);
    report.gap = spectral_gap(report.chain).gap;
    double d2 = static_cast<double>(report.graph_diameter) * report.graph_diameter;
    double t2 = static_cast<double>(report.tree_diameter) * report.tree_diameter;
    report.gap_bound = epsilon / (48.0 * d2);
    report.pre_gap_bound = epsilon / (6.0 * t2);
    return report;
}

ContinuousReport continuous_time_weighting(const Graph& g, std::optional<int> root) {
    int n = g.vertex_count();
    require_connected(g);

    ContinuousReport report;
    report.tree = bfs_tree(g, checked_root(g, root));
    report.graph_diameter = diameter(g);
    report.tree_diameter = report.tree.diameter;
    report.rates = WeightedGraph(g);

    if (n == 1) return report;

    for (const auto& [x, parent] : report.tree.tree_edges)
        report.rates.set_edge_weight(g.edge_index(x, parent),
                                     report.tree.subtree_size[x] / (2.0 * report.tree_diameter));
    report.total_rate = report.rates.total_weight();
    report.average_rate = report.total_rate / n;
    report.gap = laplacian_gap(report.rates).gap;
    double d2 = static_cast<double>(report.graph_diameter) * report.graph_diameter;
    report.gap_bound = 1.0 / (16.0 * d2);
    report.hitting_bound = 8.0 * d2;
    for (int x = 0; x < n; ++x)
        report.max_hitting =
            std::max(report.max_hitting, hitting_time_tree(report.rates, report.tree, x));
    return report;
}

ChainSchedule perfect_mixing_schedule(const Graph& g, const TargetDistribution& pi,
                                      std::optional<int> root) {
    int n = g.vertex_count();
    require_connected(g);
    validate_distribution(pi, n);

    ChainSchedule schedule;
    schedule.n = n;
    schedule.diam = diameter(g);
    schedule.pi = pi.p;
    auto tree = bfs_tree(g, checked_root(g, root), pi.p);
    schedule.root = tree.root;
    if (n == 1) return schedule;

    TransitionMatrix pull;
    pull.n = n;
    pull.p = DenseMatrix(n);
    pull.pi = pi.p;
    for (int x = 0; x < n; ++x)
        pull.p.at(x, x == tree.root ? x : tree.parent[x]) = 1.0;
    int depth = tree.max_depth();
    for (int step = 0; step < depth; ++step) schedule.steps.push_back(pull);

    for (int level = 1; level <= depth; ++level) {
        TransitionMatrix descend;
        descend.n = n;
        descend.p = DenseMatrix::identity(n);
        descend.pi = pi.p;
        for (int x = 0; x < n; ++x) {
            if (tree.depth[x] != level - 1) continue;
            descend.p.at(x, x) = pi.p[x] / tree.subtree_mass[x];
            for (int child : tree.children[x])
                descend.p.at(x, child) = tree.subtree_mass[child] / tree.subtree_mass[x];
        }
        schedule.steps.push_back(descend);
    }

    TransitionMatrix hold;
    hold.n = n;
    hold.p = DenseMatrix::identity(n);
    hold.pi = pi.p;
    while (static_cast<int>(schedule.steps.size()) < 2 * schedule.diam)
        schedule.steps.push_back(hold);
    return schedule;
}

std::vector<double> run_schedule(const ChainSchedule& schedule, std::vector<double> mu) {
    if (static_cast<int>(mu.size()) != schedule.n)
        throw std::invalid_argument("start vector size mismatch");
    for (const auto& step : schedule.steps) mu = multiply_left(mu, step.p);
    return mu;
}

double schedule_tv_error(const ChainSchedule& schedule) {
    double worst = 0.0;
    for (int x = 0; x < schedule.n; ++x) {
        std::vector<double> mu(schedule.n, 0.0);
        mu[x] = 1.0;
        mu = run_schedule(schedule, mu);
        double tv = 0.0;
        for (int y = 0; y < schedule.n; ++y) tv += std::fabs(mu[y] - schedule.pi[y]);
        worst = std::max(worst, tv / 2.0);
    }
    return worst;
}

TransitionMatrix uniform_max_degree_chain(const Graph& g) {
    int n = g.vertex_count();
    require_connected(g);
    int max_degree = 1;
    for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    TransitionMatrix t;
    t.n = n;
    t.p = DenseMatrix(n);
    t.pi.assign(n, 1.0 / n);
    for (int x = 0; x < n; ++x) {
        for (int y : g.neighbors(x)) t.p.at(x, y) = 1.0 / (2.0 * max_degree);
        t.p.at(x, x) = 1.0 - g.degree(x) / (2.0 * max_degree);
    }
    return t;
}

}  // namespace fastmix

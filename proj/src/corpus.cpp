#include "fastmix/corpus.hpp"

#include <algorithm>
#include <cmath>

#include "fastmix/generators.hpp"

namespace fastmix::corpus {

Graph random_connected_graph(Rng& rng, int min_n, int max_n, double extra_edge_prob) {
    int n = uniform_int(rng, min_n, max_n);
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(uniform_int(rng, 0, v - 1), v);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (uniform01(rng) < extra_edge_prob) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph random_tree(Rng& rng, int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(uniform_int(rng, 0, v - 1), v);
    return Graph(n, std::move(edges));
}

std::vector<WeightedEdge> random_weighted_edges(Rng& rng, int n, int max_m) {
    int m = uniform_int(rng, 1, max_m);
    std::vector<std::pair<int, int>> seen;
    std::vector<WeightedEdge> edges;
    int attempts = 0;
    while (static_cast<int>(edges.size()) < m && ++attempts < 20 * max_m) {
        int u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
        if (u == v) continue;
        std::pair<int, int> key = std::minmax(u, v);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        edges.push_back({key.first, key.second, 0.1 + uniform01(rng)});
    }
    return edges;
}

WeightedGraph random_tree_weighting(Rng& rng, int n) {
    Graph tree = random_tree(rng, n);
    WeightedGraph w(tree);
    for (int e = 0; e < w.graph().edge_count(); ++e) w.set_edge_weight(e, 0.1 + uniform01(rng));
    for (int x = 0; x < n; ++x)
        if (uniform01(rng) < 0.5) w.set_loop_weight(x, uniform01(rng));
    return w;
}

TargetDistribution random_distribution(Rng& rng, int n) {
    TargetDistribution pi;
    double sum = 0.0;
    for (int x = 0; x < n; ++x) {
        pi.p.push_back(0.05 + uniform01(rng));
        sum += pi.p.back();
    }
    for (double& mass : pi.p) mass /= sum;
    return pi;
}

namespace {

// g(u) = half the largest squared difference at u, scaled up a little, makes
// every edge constraint hold with slack.
std::vector<double> covering_slack(Rng& rng, const Graph& g,
                                   const std::vector<double>& need_by_edge) {
    std::vector<double> slack(g.vertex_count(), 0.0);
    for (int x = 0; x < g.vertex_count(); ++x) {
        double worst = 0.0;
        for (const auto& [_, e] : g.incident(x)) worst = std::max(worst, need_by_edge[e]);
        slack[x] = (1.0 + uniform01(rng)) * worst / 2.0;
    }
    return slack;
}

}  // namespace

Embedding1D random_feasible_embedding(Rng& rng, const Graph& g, bool mean_zero) {
    int n = g.vertex_count();
    Embedding1D emb;
    for (int x = 0; x < n; ++x) emb.f.push_back(standard_normal(rng));
    if (mean_zero) {
        double mean = 0.0;
        for (double v : emb.f) mean += v;
        mean /= n;
        for (double& v : emb.f) v -= mean;
    } else {
        for (double& v : emb.f) v = std::fabs(v);
    }
    std::vector<double> need;
    for (auto [u, v] : g.edges()) need.push_back((emb.f[u] - emb.f[v]) * (emb.f[u] - emb.f[v]));
    emb.g = covering_slack(rng, g, need);
    return emb;
}

VectorEmbedding random_feasible_vector_embedding(Rng& rng, const Graph& g, int dim) {
    int n = g.vertex_count();
    VectorEmbedding emb;
    emb.f.assign(n, std::vector<double>(dim, 0.0));
    for (int d = 0; d < dim; ++d) {
        double mean = 0.0;
        for (int x = 0; x < n; ++x) mean += (emb.f[x][d] = standard_normal(rng));
        mean /= n;
        for (int x = 0; x < n; ++x) emb.f[x][d] -= mean;
    }
    std::vector<double> need;
    for (auto [u, v] : g.edges()) {
        double dist2 = 0.0;
        for (int d = 0; d < dim; ++d) {
            double diff = emb.f[u][d] - emb.f[v][d];
            dist2 += diff * diff;
        }
        need.push_back(dist2);
    }
    emb.g = covering_slack(rng, g, need);
    return emb;
}

std::vector<Graph> small_family_corpus() {
    return {
        generate(Family::path, 4),
        generate(Family::path, 7),
        generate(Family::cycle, 4),
        generate(Family::cycle, 6),
        generate(Family::cycle, 7),
        generate(Family::star, 4),
        generate(Family::star, 6),
        generate(Family::complete, 4),
        generate(Family::complete, 6),
        generate(Family::binary_tree, 2),
        generate(Family::dumbbell, 3),
        generate(Family::clique_matching, 3),
        generate(Family::clique_source, 3, 2),
    };
}

std::vector<Graph> family_corpus() {
    return {
        generate(Family::path, 50),
        generate(Family::cycle, 64),
        generate(Family::star, 100),
        generate(Family::complete, 32),
        generate(Family::binary_tree, 6),
        generate(Family::dumbbell, 50),
        generate(Family::clique_matching, 50),
        generate(Family::clique_source, 50, 7),
    };
}

std::vector<Graph> all_connected_graphs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (mask >> i & 1) edges.push_back(pairs[i]);
        Graph g(n, std::move(edges));
        if (g.connected()) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace fastmix::corpus

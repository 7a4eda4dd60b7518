#include "fastmix/generators.hpp"

#include <stdexcept>

namespace fastmix {

Family family_from_string(const std::string& name) {
    if (name == "path") return Family::path;
    if (name == "cycle") return Family::cycle;
    if (name == "star") return Family::star;
    if (name == "complete") return Family::complete;
    if (name == "binary_tree") return Family::binary_tree;
    if (name == "dumbbell") return Family::dumbbell;
    if (name == "clique_matching") return Family::clique_matching;
    if (name == "clique_source") return Family::clique_source;
    throw std::invalid_argument("unknown family: " + name);
}

std::string family_name(Family f) {
    switch (f) {
        case Family::path: return "path";
        case Family::cycle: return "cycle";
        case Family::star: return "star";
        case Family::complete: return "complete";
        case Family::binary_tree: return "binary_tree";
        case Family::dumbbell: return "dumbbell";
        case Family::clique_matching: return "clique_matching";
        case Family::clique_source: return "clique_source";
    }
    throw std::invalid_argument("unknown family");
}

namespace {

std::vector<std::pair<int, int>> clique_edges(int lo, int hi) {
    std::vector<std::pair<int, int>> edges;
    for (int u = lo; u < hi; ++u)
        for (int v = u + 1; v < hi; ++v) edges.push_back({u, v});
    return edges;
}

}  // namespace

Graph generate(Family f, int primary, int secondary) {
    if (primary < 1) throw std::invalid_argument("family size must be positive");
    std::vector<std::pair<int, int>> edges;
    switch (f) {
        case Family::path: {
            for (int v = 0; v + 1 < primary; ++v) edges.push_back({v, v + 1});
            return Graph(primary, edges);
        }
        case Family::cycle: {
            if (primary < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
            for (int v = 0; v < primary; ++v) edges.push_back({v, (v + 1) % primary});
            return Graph(primary, edges);
        }
        case Family::star: {
            for (int leaf = 1; leaf <= primary; ++leaf) edges.push_back({0, leaf});
            return Graph(primary + 1, edges);
        }
        case Family::complete: {
            return Graph(primary, clique_edges(0, primary));
        }
        case Family::binary_tree: {
            int n = (1 << primary) - 1;
            for (int v = 1; v < n; ++v) edges.push_back({(v - 1) / 2, v});
            return Graph(n, edges);
        }
        case Family::dumbbell: {
            int n = primary;
            edges = clique_edges(0, n);
            auto right = clique_edges(n, 2 * n);
            edges.insert(edges.end(), right.begin(), right.end());
            edges.push_back({0, 2 * n});
            edges.push_back({n, 2 * n});
            return Graph(2 * n + 1, edges);
        }
        case Family::clique_matching: {
            int n = primary;
            edges = clique_edges(0, n);
            auto right = clique_edges(n, 2 * n);
            edges.insert(edges.end(), right.begin(), right.end());
            for (int i = 0; i < n; ++i) edges.push_back({i, n + i});
            return Graph(2 * n, edges);
        }
        case Family::clique_source: {
            int n = primary, k = secondary;
            if (k < 1 || k > n)
                throw std::invalid_argument("clique_source needs 1 <= k <= n");
            edges = clique_edges(0, n);
            auto right = clique_edges(n, 2 * n);
            edges.insert(edges.end(), right.begin(), right.end());
            for (int i = 0; i < k; ++i) edges.push_back({0, n + i});
            return Graph(2 * n, edges);
        }
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace fastmix

#include "fastmix/matching.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace fastmix {

MatchingResult greedy_matching(std::vector<WeightedEdge> edges) {
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop in edge list");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::stable_sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        if (a.w != b.w) return a.w > b.w;
        return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
    });
    MatchingResult out;
    std::map<int, bool> used;
    for (const auto& e : edges) {
        if (used[e.u] || used[e.v]) continue;
        used[e.u] = used[e.v] = true;
        out.edges.push_back({e.u, e.v});
        out.weight += e.w;
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

MatchingResult greedy_directed_matching(std::vector<Arc> arcs) {
    for (const auto& a : arcs)
        if (a.tail == a.head) throw std::invalid_argument("self-loop arc");
    std::stable_sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        if (a.w != b.w) return a.w > b.w;
        return std::make_pair(a.tail, a.head) < std::make_pair(b.tail, b.head);
    });
    MatchingResult out;
    std::map<int, bool> out_used, in_used;
    for (const auto& a : arcs) {
        if (out_used[a.tail] || in_used[a.head]) continue;
        out_used[a.tail] = in_used[a.head] = true;
        out.edges.push_back({a.tail, a.head});
        out.weight += a.w;
    }
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

std::vector<std::pair<int, int>> max_bipartite_matching(
    const std::vector<std::pair<int, int>>& edges) {
    // Compress both sides; adjacency built in sorted order for determinism.
    std::vector<int> lefts, rights;
    for (auto [l, r] : edges) {
        lefts.push_back(l);
        rights.push_back(r);
    }
    auto dedup = [](std::vector<int>& v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    dedup(lefts);
    dedup(rights);
    auto index_of = [](const std::vector<int>& v, int x) {
        return static_cast<int>(std::lower_bound(v.begin(), v.end(), x) - v.begin());
    };
    std::vector<std::vector<int>> adj(lefts.size());
    for (auto [l, r] : edges) adj[index_of(lefts, l)].push_back(index_of(rights, r));
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }

    std::vector<int> match_right(rights.size(), -1);
    std::vector<bool> visited;
    std::function<bool(int)> augment = [&](int l) {
        for (int r : adj[l]) {
            if (visited[r]) continue;
            visited[r] = true;
            if (match_right[r] < 0 || augment(match_right[r])) {
                match_right[r] = l;
                return true;
            }
        }
        return false;
    };
    for (std::size_t l = 0; l < lefts.size(); ++l) {
        visited.assign(rights.size(), false);
        augment(static_cast<int>(l));
    }

    std::vector<std::pair<int, int>> out;
    for (std::size_t r = 0; r < rights.size(); ++r)
        if (match_right[r] >= 0) out.push_back({lefts[match_right[r]], rights[r]});
    std::sort(out.begin(), out.end());
    return out;
}

FractionalMatching fractional_matching_number(int n, const std::vector<WeightedEdge>& edges) {
    std::vector<int> us, vs;
    std::vector<double> ws;
    for (const auto& e : edges) {
        us.push_back(e.u);
        vs.push_back(e.v);
        ws.push_back(e.w);
    }
    return fractional_matching_core<double>(n, us, vs, ws);
}

}  // namespace fastmix

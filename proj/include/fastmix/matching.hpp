#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fastmix/rat.hpp"

namespace fastmix {

struct WeightedEdge {
    int u, v;
    double w = 1.0;
};

struct Arc {
    int tail, head;
    double w = 1.0;
};

struct MatchingResult {
    std::vector<std::pair<int, int>> edges;
    double weight = 0.0;
};

// Scans edges by descending weight (ties broken by endpoint ids) and keeps an
// edge when both endpoints are still free. The result is maximal, so it covers
// every edge, and its weight is at least half the maximum.
MatchingResult greedy_matching(std::vector<WeightedEdge> edges);

// Same scan for arcs; an arc is kept when its tail has no outgoing and its
// head no incoming arc yet, so head-to-tail chains are allowed.
MatchingResult greedy_directed_matching(std::vector<Arc> arcs);

// Maximum-cardinality matching of a bipartite edge set given as (left, right)
// pairs, by augmenting paths. Deterministic: left vertices in ascending order.
std::vector<std::pair<int, int>> max_bipartite_matching(
    const std::vector<std::pair<int, int>>& edges);

// Maximum-weight perfect assignment on a complete n x n matrix with the
// classic potential-maintaining O(n^3) scheme. Division-free, so instantiating
// over Rat is exact. Potentials satisfy row_potential[i] + col_potential[j]
// >= w[i][j] for every cell, with equality on matched cells.
template <class T>
struct AssignmentResult {
    std::vector<int> col_of_row;
    std::vector<T> row_potential, col_potential;
    T value{};
};

template <class T>
AssignmentResult<T> max_weight_assignment(const std::vector<std::vector<T>>& w) {
    int n = static_cast<int>(w.size());
    AssignmentResult<T> result;
    result.col_of_row.assign(n, -1);
    result.row_potential.assign(n, T{});
    result.col_potential.assign(n, T{});
    if (n == 0) return result;

    // Minimization form on cost = -w, 1-indexed with a virtual row/column 0.
    std::vector<T> u(n + 1, T{}), v(n + 1, T{});
    std::vector<int> match(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        match[0] = i;
        int j0 = 0;
        std::vector<T> minv(n + 1, T{});
        std::vector<bool> filled(n + 1, false), used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = match[j0], j1 = -1;
            T delta{};
            bool have_delta = false;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                T cur = -w[i0 - 1][j - 1] - u[i0] - v[j];
                if (!filled[j] || cur < minv[j]) {
                    minv[j] = cur;
                    filled[j] = true;
                    way[j] = j0;
                }
                if (!have_delta || minv[j] < delta) {
                    delta = minv[j];
                    have_delta = true;
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else if (filled[j]) {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            int j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    for (int j = 1; j <= n; ++j)
        if (match[j] != 0) result.col_of_row[match[j] - 1] = j - 1;
    for (int i = 1; i <= n; ++i) result.row_potential[i - 1] = -u[i];
    for (int j = 1; j <= n; ++j) result.col_potential[j - 1] = -v[j];
    for (int i = 0; i < n; ++i) result.value += w[i][result.col_of_row[i]];
    return result;
}

// Fractional relaxation of maximum matching: maximize sum w(e) f(e) subject
// to f >= 0 and per-vertex load at most 1. Solved as a maximum-weight perfect
// assignment on the zero-padded bipartite double cover, halved; an optimal
// half-integral solution and the dual fractional vertex cover come out of the
// same run (cover g(x) = (row_potential(x) + col_potential(x)) / 2).
template <class T>
struct FractionalMatchingT {
    T value{};
    std::vector<T> edge_value;    // per input edge
    std::vector<T> vertex_cover;  // dual: g(u)+g(v) >= w(e), sum = value
};

template <class T>
FractionalMatchingT<T> fractional_matching_core(int n, const std::vector<int>& us,
                                                const std::vector<int>& vs,
                                                const std::vector<T>& ws) {
    for (std::size_t e = 0; e < ws.size(); ++e) {
        if (us[e] == vs[e]) throw std::invalid_argument("self-loop in edge list");
        if (us[e] < 0 || vs[e] < 0 || us[e] >= n || vs[e] >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (ws[e] < T{}) throw std::invalid_argument("negative edge weight");
    }
    FractionalMatchingT<T> out;
    out.edge_value.assign(ws.size(), T{});
    out.vertex_cover.assign(n, T{});
    if (n == 0) return out;

    std::vector<std::vector<T>> cover(n, std::vector<T>(n, T{}));
    std::vector<std::vector<int>> owner(n, std::vector<int>(n, -1));
    for (std::size_t e = 0; e < ws.size(); ++e) {
        if (owner[us[e]][vs[e]] < 0 || ws[e] > cover[us[e]][vs[e]]) {
            cover[us[e]][vs[e]] = ws[e];
            cover[vs[e]][us[e]] = ws[e];
            owner[us[e]][vs[e]] = owner[vs[e]][us[e]] = static_cast<int>(e);
        }
    }
    auto assignment = max_weight_assignment(cover);

    T two(2);
    out.value = assignment.value / two;
    for (int x = 0; x < n; ++x)
        out.vertex_cover[x] =
            (assignment.row_potential[x] + assignment.col_potential[x]) / two;
    for (std::size_t e = 0; e < ws.size(); ++e) {
        if (owner[us[e]][vs[e]] != static_cast<int>(e)) continue;
        T hits{};
        if (assignment.col_of_row[us[e]] == vs[e]) hits += T(1);
        if (assignment.col_of_row[vs[e]] == us[e]) hits += T(1);
        out.edge_value[e] = hits / two;
    }
    return out;
}

using FractionalMatching = FractionalMatchingT<double>;

FractionalMatching fractional_matching_number(int n, const std::vector<WeightedEdge>& edges);

}  // namespace fastmix

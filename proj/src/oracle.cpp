#include "fastmix/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fastmix/constants.hpp"
#include "fastmix/rng.hpp"

namespace fastmix::oracle {

namespace {

std::vector<int> mask_to_set(std::uint32_t mask, int n) {
    std::vector<int> set;
    for (int v = 0; v < n; ++v)
        if (mask >> v & 1u) set.push_back(v);
    return set;
}

}  // namespace

CutCertificate exact_conductance(const Graph& g, CutQuantity which) {
    int n = g.vertex_count();
    if (n < 2) throw std::domain_error("no admissible set below two vertices");
    int cap = which == CutQuantity::matching ? kExactMatchingSetCap : kExactSetCap;
    if (n > cap)
        throw std::invalid_argument("vertex count " + std::to_string(n) +
                                    " exceeds the exhaustive cap " + std::to_string(cap));

    std::vector<std::uint32_t> nb(n, 0);
    for (const auto& [u, v] : g.edges()) {
        nb[u] |= 1u << v;
        nb[v] |= 1u << u;
    }
    long long total_volume = 2LL * g.edge_count();

    bool have_best = false;
    Rat best_value{0};
    std::vector<int> best_set;
    std::uint32_t full = (1u << n) - 1u;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int size = std::popcount(mask);
        Rat value{0};
        if (which == CutQuantity::edge) {
            long long volume = 0, cut = 0;
            for (int v = 0; v < n; ++v) {
                if (!(mask >> v & 1u)) continue;
                volume += g.degree(v);
                cut += std::popcount(nb[v] & ~mask);
            }
            if (volume == 0 || 2 * volume > total_volume) continue;
            value = Rat(cut, volume);
        } else if (which == CutQuantity::vertex) {
            if (2 * size > n) continue;
            long long boundary = 0;
            for (int v = 0; v < n; ++v)
                if (!(mask >> v & 1u) && (nb[v] & mask)) ++boundary;
            value = Rat(boundary, size);
        } else {
            if (2 * size > n) continue;
            std::vector<std::pair<int, int>> cut_pairs;
            for (const auto& [u, v] : g.edges()) {
                bool iu = mask >> u & 1u, iv = mask >> v & 1u;
                if (iu == iv) continue;
                cut_pairs.emplace_back(iu ? u : v, iu ? v : u);
            }
            long long nu = static_cast<long long>(max_bipartite_matching(cut_pairs).size());
            value = Rat(nu, size);
        }
        if (have_best && value > best_value) continue;
        auto set = mask_to_set(mask, n);
        if (!have_best || value < best_value || set < best_set) {
            have_best = true;
            best_value = value;
            best_set = std::move(set);
        }
    }
    return cut_certificate(g, best_set);
}

namespace {

struct MatchingSearch {
    const std::vector<WeightedEdge>* edges = nullptr;
    std::vector<double> suffix;
    std::vector<char> used;
    std::vector<std::pair<int, int>> stack;
    MatchingResult best;

    void run(std::size_t i, double weight) {
        if (weight > best.weight) {
            best.weight = weight;
            best.edges = stack;
        }
        if (i == edges->size() || weight + suffix[i] <= best.weight) return;
        const auto& e = (*edges)[i];
        if (!used[e.u] && !used[e.v]) {
            used[e.u] = used[e.v] = 1;
            stack.emplace_back(e.u, e.v);
            run(i + 1, weight + e.w);
            stack.pop_back();
            used[e.u] = used[e.v] = 0;
        }
        run(i + 1, weight);
    }
};

struct DirectedMatchingSearch {
    const std::vector<Arc>* arcs = nullptr;
    std::vector<double> suffix;
    std::vector<char> used_out, used_in;
    std::vector<std::pair<int, int>> stack;
    MatchingResult best;

    void run(std::size_t i, double weight) {
        if (weight > best.weight) {
            best.weight = weight;
            best.edges = stack;
        }
        if (i == arcs->size() || weight + suffix[i] <= best.weight) return;
        const auto& a = (*arcs)[i];
        if (!used_out[a.tail] && !used_in[a.head]) {
            used_out[a.tail] = used_in[a.head] = 1;
            stack.emplace_back(a.tail, a.head);
            run(i + 1, weight + a.w);
            stack.pop_back();
            used_out[a.tail] = used_in[a.head] = 0;
        }
        run(i + 1, weight);
    }
};

template <class E>
void check_edge_cap(const std::vector<E>& edges, int cap) {
    if (static_cast<int>(edges.size()) > cap)
        throw std::invalid_argument("edge count " + std::to_string(edges.size()) +
                                    " exceeds the exhaustive cap " + std::to_string(cap));
}

}  // namespace

MatchingResult exact_max_matching(int n, const std::vector<WeightedEdge>& edges) {
    check_edge_cap(edges, kExactMatchingEdgeCap);
    for (const auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop in edge list");
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.w < 0) throw std::invalid_argument("negative edge weight");
    }
    MatchingSearch search;
    search.edges = &edges;
    search.suffix.assign(edges.size() + 1, 0.0);
    for (std::size_t i = edges.size(); i-- > 0;)
        search.suffix[i] = search.suffix[i + 1] + edges[i].w;
    search.used.assign(std::max(n, 1), 0);
    search.run(0, 0.0);
    return search.best;
}

MatchingResult exact_max_directed_matching(int n, const std::vector<Arc>& arcs) {
    check_edge_cap(arcs, kExactMatchingEdgeCap);
    for (const auto& a : arcs) {
        if (a.tail == a.head) throw std::invalid_argument("self-loop in arc list");
        if (a.tail < 0 || a.head < 0 || a.tail >= n || a.head >= n)
            throw std::invalid_argument("arc endpoint out of range");
        if (a.w < 0) throw std::invalid_argument("negative arc weight");
    }
    DirectedMatchingSearch search;
    search.arcs = &arcs;
    search.suffix.assign(arcs.size() + 1, 0.0);
    for (std::size_t i = arcs.size(); i-- > 0;)
        search.suffix[i] = search.suffix[i + 1] + arcs[i].w;
    search.used_out.assign(std::max(n, 1), 0);
    search.used_in.assign(std::max(n, 1), 0);
    search.run(0, 0.0);
    return search.best;
}

namespace {

// Loads are tracked in halves so the search stays in integers; a vertex is
// saturated at load 2.
struct FractionalSearch {
    const std::vector<RatEdge>* edges = nullptr;
    std::vector<int> load;
    std::vector<int> choice, best_choice;
    Rat best{0};
    bool have_best = false;

    void run(std::size_t i, Rat halves) {
        if (i == edges->size()) {
            if (!have_best || halves > best) {
                have_best = true;
                best = halves;
                best_choice = choice;
            }
            return;
        }
        const auto& e = (*edges)[i];
        int room = std::min(2 - load[e.u], 2 - load[e.v]);
        for (int k = std::min(room, 2); k >= 0; --k) {
            load[e.u] += k;
            load[e.v] += k;
            choice[i] = k;
            run(i + 1, halves + e.w * k);
            load[e.u] -= k;
            load[e.v] -= k;
        }
    }
};

}  // namespace

FractionalCertificate exact_fractional_matching(int n, const std::vector<RatEdge>& edges) {
    check_edge_cap(edges, kExactFractionalEdgeCap);
    std::vector<int> us, vs;
    std::vector<Rat> ws;
    for (const auto& e : edges) {
        us.push_back(e.u);
        vs.push_back(e.v);
        ws.push_back(e.w);
    }
    auto dual_route = fractional_matching_core<Rat>(n, us, vs, ws);

    FractionalSearch search;
    search.edges = &edges;
    search.load.assign(std::max(n, 1), 0);
    search.choice.assign(edges.size(), 0);
    search.run(0, Rat(0));
    Rat value = search.best / Rat(2);
    if (value != dual_route.value)
        throw std::logic_error("fractional matching cross-check failed: " + to_string(value) +
                               " vs " + to_string(dual_route.value));

    FractionalCertificate cert;
    cert.value = value;
    for (std::size_t e = 0; e < edges.size(); ++e)
        cert.edge_value.push_back(Rat(search.best_choice[e], 2));
    cert.cover = std::move(dual_route.vertex_cover);
    return cert;
}

namespace {

TransitionMatrix chain_from_flow(const Graph& g, const std::vector<double>& pi,
                                 const std::vector<double>& flow) {
    int n = g.vertex_count();
    TransitionMatrix t;
    t.n = n;
    t.p = DenseMatrix(n);
    t.pi = pi;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        t.p.at(u, v) = flow[e] / pi[u];
        t.p.at(v, u) = flow[e] / pi[v];
    }
    for (int x = 0; x < n; ++x) {
        double off = 0.0;
        for (int y = 0; y < n; ++y)
            if (y != x) off += t.p.at(x, y);
        t.p.at(x, x) = 1.0 - off;
    }
    return t;
}

}  // namespace

GapSearchResult best_gap_search(const Graph& g, const std::vector<double>& pi, int sweeps,
                                std::uint64_t seed) {
    int n = g.vertex_count();
    int m = g.edge_count();
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("distribution size mismatch");
    double pi_sum = 0.0;
    for (double p : pi) {
        if (p <= 0.0) throw std::domain_error("distribution must be positive");
        pi_sum += p;
    }
    if (std::abs(pi_sum - 1.0) > kCrossCheckTol)
        throw std::domain_error("distribution must sum to one");
    if (!g.connected()) throw std::domain_error("graph must be connected");

    GapSearchResult result;
    auto evaluate = [&](const std::vector<double>& flow) {
        ++result.evaluations;
        return spectral_gap(chain_from_flow(g, pi, flow)).gap;
    };

    int max_degree = 1;
    for (int v = 0; v < n; ++v) max_degree = std::max(max_degree, g.degree(v));
    std::vector<double> start(m);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edges()[e];
        start[e] = std::min(pi[u], pi[v]) / (2.0 * max_degree);
    }

    Rng rng(seed);
    const int kRestarts = 2, kGrid = 8;
    bool have_best = false;
    for (int attempt = 0; attempt <= kRestarts; ++attempt) {
        std::vector<double> flow = start;
        if (attempt > 0)
            for (double& f : flow) f *= uniform01(rng);
        double gap = evaluate(flow);
        for (int sweep = 0; sweep < sweeps; ++sweep) {
            bool improved = false;
            for (int e = 0; e < m; ++e) {
                auto [u, v] = g.edges()[e];
                auto slack = [&](int x) {
                    double s = pi[x] / 2.0;
                    for (const auto& [_, idx] : g.incident(x)) s -= flow[idx];
                    return s;
                };
                double hi = flow[e] + std::max(0.0, std::min(slack(u), slack(v)));
                double keep = flow[e];
                for (int k = 0; k <= kGrid; ++k) {
                    double candidate = hi * k / kGrid;
                    if (candidate == keep) continue;
                    flow[e] = candidate;
                    double value = evaluate(flow);
                    if (value > gap) {
                        gap = value;
                        keep = candidate;
                        improved = true;
                    }
                }
                flow[e] = keep;
            }
            if (!improved) break;
        }
        if (!have_best || gap > result.gap) {
            have_best = true;
            result.gap = gap;
            result.chain = chain_from_flow(g, pi, flow);
        }
    }
    return result;
}

}  // namespace fastmix::oracle

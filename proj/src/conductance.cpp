#include "fastmix/conductance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include "fastmix/constants.hpp"
#include "fastmix/oracle.hpp"
#include "fastmix/rng.hpp"
#include "fastmix/spectral.hpp"

namespace fastmix {

std::vector<int> normalize_vertex_set(const Graph& g, std::vector<int> set) {
    if (set.empty()) throw std::domain_error("vertex set must be nonempty");
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end())
        throw std::invalid_argument("duplicate vertex in set");
    if (set.front() < 0 || set.back() >= g.vertex_count())
        throw std::invalid_argument("vertex id out of range");
    return set;
}

namespace {

std::vector<char> membership(const Graph& g, const std::vector<int>& set) {
    std::vector<char> in(g.vertex_count(), 0);
    for (int v : set) in[v] = 1;
    return in;
}

// Cut edges as (inside, outside) pairs.
std::vector<std::pair<int, int>> cut_edges(const Graph& g, const std::vector<char>& in) {
    std::vector<std::pair<int, int>> cut;
    for (auto [u, v] : g.edges()) {
        if (in[u] && !in[v]) cut.push_back({u, v});
        else if (in[v] && !in[u]) cut.push_back({v, u});
    }
    return cut;
}

}  // namespace

EdgeConductance edge_conductance_of_set(const WeightedGraph& wg, const std::vector<int>& set) {
    auto s = normalize_vertex_set(wg.graph(), set);
    auto in = membership(wg.graph(), s);
    double set_weight = 0.0;
    for (int v : s) set_weight += wg.vertex_weight(v);
    if (!(set_weight > 0.0)) throw std::domain_error("set has zero weight");
    double cut = 0.0;
    for (int e = 0; e < wg.graph().edge_count(); ++e) {
        auto [u, v] = wg.graph().edges()[e];
        if (in[u] != in[v]) cut += wg.edge_weight(e);
    }
    EdgeConductance out;
    out.plain = cut / set_weight;
    double complement_weight = wg.total_weight() - set_weight;
    if (complement_weight > 0.0)
        out.adjusted = cut * wg.total_weight() / (set_weight * complement_weight);
    return out;
}

Rat edge_conductance_exact(const Graph& g, const std::vector<int>& set) {
    auto s = normalize_vertex_set(g, set);
    auto in = membership(g, s);
    long long volume = 0;
    for (int v : s) volume += g.degree(v);
    if (volume == 0) return Rat(0);
    long long cut = static_cast<long long>(cut_edges(g, in).size());
    return Rat(cut, volume);
}

Rat adjusted_edge_conductance_exact(const Graph& g, const std::vector<int>& set) {
    auto s = normalize_vertex_set(g, set);
    auto in = membership(g, s);
    long long volume = 0;
    for (int v : s) volume += g.degree(v);
    long long total = 2LL * g.edge_count();
    long long complement = total - volume;
    if (volume == 0 || complement == 0)
        throw std::domain_error("adjusted conductance needs both sides weighted");
    long long cut = static_cast<long long>(cut_edges(g, in).size());
    return Rat(cut * total, volume * complement);
}

Rat vertex_conductance_of_set(const Graph& g, const std::vector<int>& set) {
    auto s = normalize_vertex_set(g, set);
    auto in = membership(g, s);
    std::set<int> boundary;
    for (auto [_, outside] : cut_edges(g, in)) boundary.insert(outside);
    return Rat(static_cast<long long>(boundary.size()), static_cast<long long>(s.size()));
}

CutCertificate cut_certificate(const Graph& g, const std::vector<int>& set) {
    auto s = normalize_vertex_set(g, set);
    auto in = membership(g, s);
    auto cut = cut_edges(g, in);

    CutCertificate cert;
    cert.set = s;
    cert.witness = max_bipartite_matching(cut);
    long long size = static_cast<long long>(s.size());
    cert.matching_cond = Rat(static_cast<long long>(cert.witness.size()), size);
    std::set<int> boundary;
    for (auto [_, outside] : cut) boundary.insert(outside);
    cert.vertex_cond = Rat(static_cast<long long>(boundary.size()), size);
    long long volume = 0;
    for (int v : s) volume += g.degree(v);
    cert.edge_cond = volume == 0 ? Rat(0) : Rat(static_cast<long long>(cut.size()), volume);
    return cert;
}

CutCertificate matching_conductance_of_set(const Graph& g, const std::vector<int>& set) {
    return cut_certificate(g, set);
}

namespace {

Rat quantity_of(const CutCertificate& cert, CutQuantity q) {
    switch (q) {
        case CutQuantity::edge: return cert.edge_cond;
        case CutQuantity::vertex: return cert.vertex_cond;
        case CutQuantity::matching: return cert.matching_cond;
    }
    throw std::invalid_argument("unknown quantity");
}

bool improves(const CutCertificate& challenger, const std::optional<CutCertificate>& best,
              CutQuantity q) {
    if (!best) return true;
    Rat a = quantity_of(challenger, q), b = quantity_of(*best, q);
    if (a != b) return a < b;
    return challenger.set < best->set;
}

// Prefix sweep over vertex orders: second-eigenvector order of the normalized
// adjacency plus breadth-first balls from a few sources.
GlobalConductances heuristic_global(const Graph& g, const std::vector<CutQuantity>& which) {
    int n = g.vertex_count();
    long long half_volume = g.edge_count();  // vol(V)/2

    std::vector<std::vector<int>> orders;
    {
        DenseMatrix a(n);
        for (auto [u, v] : g.edges()) {
            double w = 1.0 / std::sqrt(static_cast<double>(g.degree(u)) * g.degree(v));
            a.at(u, v) = w;
            a.at(v, u) = w;
        }
        auto eig = jacobi_eigen(std::move(a), true);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            double fx = eig.vectors->at(x, n - 2) / std::sqrt(static_cast<double>(g.degree(x)));
            double fy = eig.vectors->at(y, n - 2) / std::sqrt(static_cast<double>(g.degree(y)));
            return fx < fy;
        });
        orders.push_back(order);
        std::reverse(order.begin(), order.end());
        orders.push_back(order);
    }
    int sources = std::max(1, 4096 / std::max(n, 1));
    for (int src = 0; src < n && src < sources; ++src) {
        auto dist = g.bfs_distances(src);
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return std::make_pair(dist[x], x) <
                                                    std::make_pair(dist[y], y); });
        orders.push_back(order);
    }

    GlobalConductances out;
    bool want_matching =
        std::find(which.begin(), which.end(), CutQuantity::matching) != which.end();
    for (const auto& order : orders) {
        std::vector<int> prefix;
        long long volume = 0;
        for (int v : order) {
            prefix.push_back(v);
            volume += g.degree(v);
            if (2 * static_cast<long long>(prefix.size()) > n) break;
            CutCertificate cert = cut_certificate(g, prefix);
            cert.exact = false;
            for (CutQuantity q : which) {
                if (q == CutQuantity::edge && volume > half_volume) continue;
                auto& slot = q == CutQuantity::edge ? out.edge
                             : q == CutQuantity::vertex ? out.vertex
                                                        : out.matching;
                if (improves(cert, slot, q)) slot = cert;
            }
            (void)want_matching;
        }
    }
    return out;
}

}  // namespace

GlobalConductances global_conductances(const Graph& g, const std::vector<CutQuantity>& which,
                                       std::optional<int> exact_limit) {
    if (!g.connected()) throw std::domain_error("graph is not connected");
    int n = g.vertex_count();
    if (n < 2) throw std::domain_error("no admissible sets below two vertices");

    GlobalConductances out;
    std::vector<CutQuantity> heuristic_quantities;
    for (CutQuantity q : which) {
        int cap = q == CutQuantity::matching ? kExactMatchingSetCap : kExactSetCap;
        if (exact_limit) cap = std::min(cap, *exact_limit);
        if (n <= cap) {
            auto cert = oracle::exact_conductance(g, q);
            (q == CutQuantity::edge ? out.edge
             : q == CutQuantity::vertex ? out.vertex
                                        : out.matching) = cert;
        } else {
            heuristic_quantities.push_back(q);
        }
    }
    if (!heuristic_quantities.empty()) {
        auto partial = heuristic_global(g, heuristic_quantities);
        for (CutQuantity q : heuristic_quantities) {
            auto& src = q == CutQuantity::edge ? partial.edge
                        : q == CutQuantity::vertex ? partial.vertex
                                                   : partial.matching;
            auto& dst = q == CutQuantity::edge ? out.edge
                        : q == CutQuantity::vertex ? out.vertex
                                                   : out.matching;
            dst = src;
        }
    }
    return out;
}

std::optional<std::pair<int, int>> embedding_violation(const Graph& g, const Embedding1D& emb,
                                                       double tol) {
    if (static_cast<int>(emb.f.size()) != g.vertex_count() ||
        static_cast<int>(emb.g.size()) != g.vertex_count())
        throw std::invalid_argument("embedding size mismatch");
    for (double slack : emb.g)
        if (slack < -tol) return std::make_pair(-1, -1);  // negative certificate entry
    for (auto [u, v] : g.edges()) {
        double diff = emb.f[u] - emb.f[v];
        if (diff * diff > emb.g[u] + emb.g[v] + tol) return std::make_pair(u, v);
    }
    return std::nullopt;
}

double embedding_value(const Embedding1D& emb) {
    double num = std::accumulate(emb.g.begin(), emb.g.end(), 0.0);
    double den = 0.0;
    for (double x : emb.f) den += x * x;
    if (!(den > 0.0)) throw std::domain_error("embedding is identically zero");
    return num / den;
}

std::optional<std::pair<int, int>> embedding_violation(const Graph& g, const VectorEmbedding& emb,
                                                       double tol) {
    if (static_cast<int>(emb.f.size()) != g.vertex_count() ||
        static_cast<int>(emb.g.size()) != g.vertex_count())
        throw std::invalid_argument("embedding size mismatch");
    for (double slack : emb.g)
        if (slack < -tol) return std::make_pair(-1, -1);
    for (auto [u, v] : g.edges()) {
        double dist2 = 0.0;
        for (std::size_t k = 0; k < emb.f[u].size(); ++k) {
            double d = emb.f[u][k] - emb.f[v][k];
            dist2 += d * d;
        }
        if (dist2 > emb.g[u] + emb.g[v] + tol) return std::make_pair(u, v);
    }
    return std::nullopt;
}

double embedding_value(const VectorEmbedding& emb) {
    double num = std::accumulate(emb.g.begin(), emb.g.end(), 0.0);
    double den = 0.0;
    for (const auto& vec : emb.f)
        for (double x : vec) den += x * x;
    if (!(den > 0.0)) throw std::domain_error("embedding is identically zero");
    return num / den;
}

DirectedWeightedGraph orient_by_embedding(const Graph& g, const std::vector<double>& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("embedding size mismatch");
    for (double x : f)
        if (x < 0.0) throw std::domain_error("orientation requires nonnegative values");
    DirectedWeightedGraph out;
    out.n = g.vertex_count();
    for (auto [u, v] : g.edges()) {
        if (f[u] < f[v]) out.arcs.push_back({u, v, f[v] * f[v] - f[u] * f[u]});
        else if (f[v] < f[u]) out.arcs.push_back({v, u, f[u] * f[u] - f[v] * f[v]});
    }
    return out;
}

double level_set_matching_integral(const Graph& g, const std::vector<double>& f) {
    if (static_cast<int>(f.size()) != g.vertex_count())
        throw std::invalid_argument("embedding size mismatch");
    for (double x : f)
        if (x < 0.0) throw std::domain_error("level sets require nonnegative values");
    std::vector<double> levels;
    for (double x : f) levels.push_back(x * x);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    double integral = 0.0, prev = 0.0;
    for (double level : levels) {
        if (level <= 0.0) continue;
        std::vector<int> set;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (f[v] * f[v] >= level) set.push_back(v);
        auto in = membership(g, set);
        auto matching = max_bipartite_matching(cut_edges(g, in));
        integral += (level - prev) * static_cast<double>(matching.size());
        prev = level;
    }
    return integral;
}

CutCertificate sweep_cut(const Graph& g, const Embedding1D& emb) {
    if (g.vertex_count() == 0) throw std::domain_error("empty graph");
    for (double x : emb.f)
        if (x < 0.0) throw std::domain_error("sweep requires nonnegative values");
    if (auto bad = embedding_violation(g, emb, kFeasibilityTol)) {
        if (bad->first < 0) throw std::domain_error("negative certificate entry");
        throw std::domain_error("certificate infeasible on edge " +
                                std::to_string(bad->first) + "-" + std::to_string(bad->second));
    }

    std::vector<double> levels;
    for (double x : emb.f)
        if (x > 0.0) levels.push_back(x * x);
    if (levels.empty()) throw std::domain_error("embedding is identically zero");
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());

    std::optional<CutCertificate> best;
    for (double level : levels) {
        std::vector<int> set;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (emb.f[v] * emb.f[v] >= level) set.push_back(v);
        CutCertificate cert = cut_certificate(g, set);
        if (improves(cert, best, CutQuantity::matching)) best = cert;
    }
    return *best;
}

CutCertificate cheeger_round(const Graph& g, const Embedding1D& emb) {
    int n = g.vertex_count();
    if (static_cast<int>(emb.f.size()) != n) throw std::invalid_argument("embedding size mismatch");
    double sum = std::accumulate(emb.f.begin(), emb.f.end(), 0.0);
    double scale = 0.0;
    for (double x : emb.f) scale += std::fabs(x);
    if (!(scale > 0.0)) throw std::domain_error("embedding is identically zero");
    if (std::fabs(sum) > kCrossCheckTol * std::max(1.0, scale))
        throw std::domain_error("embedding is not mean-zero");
    if (auto bad = embedding_violation(g, emb, kFeasibilityTol)) {
        if (bad->first < 0) throw std::domain_error("negative certificate entry");
        throw std::domain_error("certificate infeasible on edge " +
                                std::to_string(bad->first) + "-" + std::to_string(bad->second));
    }

    std::vector<double> sorted = emb.f;
    std::sort(sorted.begin(), sorted.end());
    double center = sorted[(n + 1) / 2 - 1];  // ceil(n/2)-th smallest

    std::vector<double> below(n, 0.0), above(n, 0.0);
    double below2 = 0.0, above2 = 0.0;
    for (int v = 0; v < n; ++v) {
        below[v] = std::max(0.0, center - emb.f[v]);
        above[v] = std::max(0.0, emb.f[v] - center);
        below2 += below[v] * below[v];
        above2 += above[v] * above[v];
    }
    Embedding1D one_sided;
    one_sided.f = below2 >= above2 ? below : above;
    one_sided.g = emb.g;
    return sweep_cut(g, one_sided);
}

Embedding1D easy_side_certificate(const Graph& g, const std::vector<int>& set) {
    auto s = normalize_vertex_set(g, set);
    int n = g.vertex_count();
    if (2 * static_cast<int>(s.size()) > n)
        throw std::domain_error("set must contain at most half the vertices");
    auto in = membership(g, s);
    auto matching = max_bipartite_matching(cut_edges(g, in));

    Embedding1D emb;
    emb.f.assign(n, 0.0);
    emb.g.assign(n, 0.0);
    double scale = 1.0 / (2.0 * static_cast<double>(s.size()));
    for (int v : s) emb.f[v] = std::sqrt(scale);
    for (auto [u, v] : matching) {
        emb.g[u] = scale;
        emb.g[v] = scale;
    }
    return emb;
}

std::vector<int> matching_to_vertex_cut(const Graph& g, const CutCertificate& cert) {
    auto s = normalize_vertex_set(g, cert.set);
    if (Rat(4) * cert.matching_cond > Rat(1))
        throw std::domain_error("matching conductance above 1/4");
    std::vector<char> drop(g.vertex_count(), 0);
    for (auto [u, v] : cert.witness) {
        drop[u] = 1;
        drop[v] = 1;
    }
    std::vector<int> rest;
    for (int v : s)
        if (!drop[v]) rest.push_back(v);
    if (rest.empty()) throw std::domain_error("matched vertices exhaust the set");
    return rest;
}

RoundingResult round_embedding(const Graph& g, const VectorEmbedding& emb, std::uint64_t seed) {
    int n = g.vertex_count();
    if (static_cast<int>(emb.f.size()) != n || static_cast<int>(emb.g.size()) != n)
        throw std::invalid_argument("embedding size mismatch");
    if (n == 0) throw std::domain_error("empty graph");
    std::size_t dim = emb.f[0].size();
    for (const auto& vec : emb.f)
        if (vec.size() != dim) throw std::invalid_argument("ragged embedding");
    if (dim == 0) throw std::invalid_argument("zero-dimensional embedding");

    RoundingResult out;

    auto center = [&](std::vector<double> f) {
        double mean = std::accumulate(f.begin(), f.end(), 0.0) / f.size();
        for (double& x : f) x -= mean;
        return f;
    };
    auto is_zero = [&](const std::vector<double>& f) {
        double norm2 = 0.0, input2 = 0.0;
        for (double x : f) norm2 += x * x;
        for (const auto& vec : emb.f)
            for (double x : vec) input2 += x * x;
        return norm2 <= 1e-20 * std::max(1.0, input2);
    };

    if (dim == 1) {
        // Already one-dimensional: recentring preserves all differences.
        out.projection_dim = 1;
        out.attempts = 1;
        std::vector<double> flat(n);
        for (int v = 0; v < n; ++v) flat[v] = emb.f[v][0];
        out.embedding.f = center(std::move(flat));
        out.embedding.g = emb.g;
        out.zero_warning = is_zero(out.embedding.f);
        out.feasible = !out.zero_warning &&
                       !embedding_violation(g, out.embedding, kFeasibilityTol);
        return out;
    }

    int d = std::max(1, static_cast<int>(std::ceil(8.0 * std::log(std::max(n, 2)))));
    out.projection_dim = d;
    double inv_sqrt_d = 1.0 / std::sqrt(static_cast<double>(d));

    Rng rng(seed);
    Embedding1D attempt;
    attempt.g = emb.g;
    for (out.attempts = 1; out.attempts <= kRoundingMaxAttempts; ++out.attempts) {
        // One Gaussian projection row per target coordinate.
        std::vector<std::vector<double>> projected(d, std::vector<double>(n, 0.0));
        for (int row = 0; row < d; ++row) {
            std::vector<double> direction(dim);
            for (auto& x : direction) x = standard_normal(rng);
            for (int v = 0; v < n; ++v) {
                double dot = 0.0;
                for (std::size_t k = 0; k < dim; ++k) dot += direction[k] * emb.f[v][k];
                projected[row][v] = dot * inv_sqrt_d;
            }
        }
        // Coordinate with the largest spread; pairwise sum of squared
        // differences equals 2n times the variance.
        int best_row = 0;
        double best_spread = -1.0;
        for (int row = 0; row < d; ++row) {
            double mean = std::accumulate(projected[row].begin(), projected[row].end(), 0.0) / n;
            double spread = 0.0;
            for (double x : projected[row]) spread += (x - mean) * (x - mean);
            if (spread > best_spread) {
                best_spread = spread;
                best_row = row;
            }
        }
        attempt.f = center(std::move(projected[best_row]));
        if (is_zero(attempt.f)) {
            out.zero_warning = true;
            continue;
        }
        out.zero_warning = false;
        if (!embedding_violation(g, attempt, kFeasibilityTol)) {
            out.embedding = attempt;
            out.feasible = true;
            return out;
        }
    }
    out.attempts = kRoundingMaxAttempts;
    out.embedding = attempt;  // best effort
    out.feasible = false;
    return out;
}

}  // namespace fastmix

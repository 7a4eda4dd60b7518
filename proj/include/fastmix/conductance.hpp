#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fastmix/graph.hpp"
#include "fastmix/matching.hpp"
#include "fastmix/rat.hpp"

namespace fastmix {

// Validates a vertex set: ids in range, no duplicates, nonempty. Returns it
// sorted ascending.
std::vector<int> normalize_vertex_set(const Graph& g, std::vector<int> set);

// Weighted edge conductance of a set: cut weight over set weight, plus the
// adjusted form cut weight * total / (set weight * complement weight) when the
// complement is nonempty.
struct EdgeConductance {
    double plain = 0.0;
    std::optional<double> adjusted;
};
EdgeConductance edge_conductance_of_set(const WeightedGraph& wg, const std::vector<int>& set);

// Unit-weight exact counterparts. Edge form uses degree volume.
Rat edge_conductance_exact(const Graph& g, const std::vector<int>& set);
Rat adjusted_edge_conductance_exact(const Graph& g, const std::vector<int>& set);
Rat vertex_conductance_of_set(const Graph& g, const std::vector<int>& set);

// A set together with all three of its conductances and a maximum matching of
// its cut edges as the witness. exact is false only for heuristic minimizers.
struct CutCertificate {
    std::vector<int> set;
    Rat edge_cond{0};
    Rat vertex_cond{0};
    Rat matching_cond{0};
    std::vector<std::pair<int, int>> witness;
    bool exact = true;
};

CutCertificate cut_certificate(const Graph& g, const std::vector<int>& set);
CutCertificate matching_conductance_of_set(const Graph& g, const std::vector<int>& set);

enum class CutQuantity { edge, vertex, matching };

// Global minimizers over 0 < |S| <= n/2 (edge form: 0 < vol(S) <= vol(V)/2).
// Within the exhaustive caps this delegates to the oracle; beyond them a
// sweep heuristic produces certificates flagged exact = false. exact_limit
// lowers (never raises) the enumeration threshold.
struct GlobalConductances {
    std::optional<CutCertificate> edge, vertex, matching;
};
GlobalConductances global_conductances(const Graph& g, const std::vector<CutQuantity>& which,
                                       std::optional<int> exact_limit = {});

// One-dimensional embedding with a slack certificate: feasible when
// g(u) + g(v) >= (f(u) - f(v))^2 on every edge, g nonnegative.
struct Embedding1D {
    std::vector<double> f, g;
};

// First edge violating feasibility beyond tol, if any.
std::optional<std::pair<int, int>> embedding_violation(const Graph& g, const Embedding1D& emb,
                                                       double tol);
// sum g / sum f^2; domain error on identically zero f.
double embedding_value(const Embedding1D& emb);

// Vector-valued relaxation: one vector per vertex, same slack certificate.
struct VectorEmbedding {
    std::vector<std::vector<double>> f;
    std::vector<double> g;
};
std::optional<std::pair<int, int>> embedding_violation(const Graph& g, const VectorEmbedding& emb,
                                                       double tol);
double embedding_value(const VectorEmbedding& emb);

// Orients every edge towards the larger f value with weight f(v)^2 - f(u)^2;
// ties carry no arc. Requires f >= 0.
struct DirectedWeightedGraph {
    int n = 0;
    std::vector<Arc> arcs;
};
DirectedWeightedGraph orient_by_embedding(const Graph& g, const std::vector<double>& f);

// Finite evaluation of the level-set integral: sum over consecutive distinct
// thresholds of f^2 of interval length times the maximum matching size of the
// cut of {f^2 >= next threshold}. Requires f >= 0.
double level_set_matching_integral(const Graph& g, const std::vector<double>& f);

// Sweeps the level sets {u : f(u)^2 >= t} over distinct thresholds t of f^2
// (descending) and returns the set minimizing matching conductance. Requires
// f >= 0, f not identically zero, and a feasible certificate.
CutCertificate sweep_cut(const Graph& g, const Embedding1D& emb);

// Median-centring rounding for mean-zero f: splits at the median, keeps the
// heavier one-sided part h (sum h^2 >= sum f^2 / 2), and sweeps (h, g). The
// returned set has size at most n/2 and matching conductance at most
// 16 sqrt(embedding value).
CutCertificate cheeger_round(const Graph& g, const Embedding1D& emb);

// Feasible pair supported on S with value exactly 2 * matching conductance:
// f = indicator(S)/sqrt(2|S|), g = 1/(2|S|) on the vertices of a maximum cut
// matching. Requires 0 < |S| <= n/2.
Embedding1D easy_side_certificate(const Graph& g, const std::vector<int>& set);

// Drops the matched vertices from the set; when matching conductance is at
// most 1/4 the remainder T is nonempty with vertex conductance at most
// 4 * matching conductance of the input set.
std::vector<int> matching_to_vertex_cut(const Graph& g, const CutCertificate& cert);

// Randomized one-dimensional rounding of a vector embedding: Gaussian
// projection to ceil(8 ln n) coordinates, best coordinate by spread,
// recentred, retried until the original certificate stays feasible.
struct RoundingResult {
    Embedding1D embedding;
    bool feasible = false;
    bool zero_warning = false;
    int attempts = 0;
    int projection_dim = 0;
};
RoundingResult round_embedding(const Graph& g, const VectorEmbedding& emb, std::uint64_t seed);

}  // namespace fastmix

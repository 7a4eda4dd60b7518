#include "doctest.h"

#include <algorithm>
#include <cmath>

#include "fastmix/conductance.hpp"
#include "fastmix/corpus.hpp"
#include "fastmix/generators.hpp"
#include "fastmix/oracle.hpp"
#include "fastmix/rng.hpp"

using namespace fastmix;

TEST_SUITE("conductance") {

TEST_CASE("vertex sets are validated and sorted") {
    Graph g = generate(Family::path, 4);
    CHECK(normalize_vertex_set(g, {3, 1}) == std::vector<int>{1, 3});
    CHECK_THROWS_AS(normalize_vertex_set(g, {}), std::domain_error);
    CHECK_THROWS_AS(normalize_vertex_set(g, {1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(normalize_vertex_set(g, {4}), std::invalid_argument);
}

TEST_CASE("weighted edge conductance of a set") {
    Graph g = generate(Family::path, 3);
    WeightedGraph wg(g, {2.0, 1.0}, {0.0, 0.0, 0.0});
    auto c = edge_conductance_of_set(wg, {0});
    CHECK(c.plain == doctest::Approx(1.0));
    // cut * total / (side * complement) = 2 * 6 / (2 * 4).
    CHECK(*c.adjusted == doctest::Approx(1.5));
    CHECK_THROWS_AS(edge_conductance_of_set(WeightedGraph(g), {0, 1, 2}), std::domain_error);
}

TEST_CASE("exact conductances of a 4-cycle half") {
    Graph g = generate(Family::cycle, 4);
    std::vector<int> half = {0, 1};
    CHECK(edge_conductance_exact(g, half) == Rat(1, 2));
    CHECK(adjusted_edge_conductance_exact(g, half) == Rat(1));
    CHECK(vertex_conductance_of_set(g, half) == Rat(1));
    auto cert = cut_certificate(g, half);
    CHECK(cert.matching_cond == Rat(1));
    CHECK(cert.witness.size() == 2);
    CHECK(cert.exact);
}

TEST_CASE("adjusted form stays within a factor two of the plain form") {
    Rng rng(7);
    for (int i = 0; i < 25; ++i) {
        Graph g = corpus::random_connected_graph(rng, 2, 7);
        int n = g.vertex_count();
        long long total = 2LL * g.edge_count();
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<int> set;
            long long vol = 0;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1u) {
                    set.push_back(v);
                    vol += g.degree(v);
                }
            if (vol == 0 || 2 * vol > total) continue;
            Rat plain = edge_conductance_exact(g, set);
            Rat adjusted = adjusted_edge_conductance_exact(g, set);
            REQUIRE(plain <= adjusted);
            REQUIRE(adjusted <= Rat(2) * plain);
        }
    }
}

TEST_CASE("cut witness is a matching of cut edges") {
    Graph g = generate(Family::dumbbell, 3);
    auto cert = cut_certificate(g, {0, 1, 2});
    CHECK(cert.matching_cond == Rat(1, 3));
    CHECK(cert.vertex_cond == Rat(1, 3));
    for (auto [inside, outside] : cert.witness) {
        CHECK(g.has_edge(inside, outside));
        CHECK(std::binary_search(cert.set.begin(), cert.set.end(), inside));
        CHECK_FALSE(std::binary_search(cert.set.begin(), cert.set.end(), outside));
    }
}

TEST_CASE("matching-to-vertex rounding drops the matched vertices") {
    Graph g = generate(Family::path, 12);
    auto cert = oracle::exact_conductance(g, CutQuantity::matching);
    REQUIRE(Rat(4) * cert.matching_cond <= Rat(1));
    auto rest = matching_to_vertex_cut(g, cert);
    CHECK_FALSE(rest.empty());
    CHECK(2 * static_cast<int>(rest.size()) <= g.vertex_count());
    CHECK(vertex_conductance_of_set(g, rest) <= Rat(4) * cert.matching_cond);

    // A quarter of the set must stay unmatched for the rounding to work.
    Graph c4 = generate(Family::cycle, 4);
    CHECK_THROWS_WITH_AS(matching_to_vertex_cut(c4, cut_certificate(c4, {0})),
                         "matching conductance above 1/4", std::domain_error);
}

TEST_CASE("one-sided certificate reproduces twice the matching conductance") {
    Graph c4 = generate(Family::cycle, 4);
    auto emb = easy_side_certificate(c4, {0});
    CHECK_FALSE(embedding_violation(c4, emb, 1e-12));
    CHECK(embedding_value(emb) == doctest::Approx(2.0).epsilon(1e-12));

    Graph cs = generate(Family::clique_source, 4, 3);
    emb = easy_side_certificate(cs, {4, 5, 6, 7});
    CHECK_FALSE(embedding_violation(cs, emb, 1e-12));
    CHECK(embedding_value(emb) == doctest::Approx(0.5).epsilon(1e-12));

    CHECK_THROWS_AS(easy_side_certificate(c4, {0, 1, 2}), std::domain_error);
}

TEST_CASE("embedding feasibility surfaces the first bad edge") {
    Graph g = generate(Family::path, 3);
    Embedding1D ok{{0.0, 1.0, 1.0}, {0.5, 0.5, 0.0}};
    CHECK_FALSE(embedding_violation(g, ok, 1e-12));

    Embedding1D bad{{0.0, 2.0, 2.0}, {0.5, 0.5, 0.0}};
    auto where = embedding_violation(g, bad, 1e-12);
    REQUIRE(where);
    CHECK(*where == std::pair<int, int>{0, 1});

    Embedding1D negative{{0.0, 1.0, 1.0}, {-1.0, 5.0, 5.0}};
    where = embedding_violation(g, negative, 1e-12);
    REQUIRE(where);
    CHECK(where->first == -1);

    CHECK_THROWS_AS(embedding_violation(g, Embedding1D{{0.0}, {0.0}}, 1e-12),
                    std::invalid_argument);
    CHECK_THROWS_AS(embedding_value(Embedding1D{{0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}}),
                    std::domain_error);
}

TEST_CASE("orientation by squares skips ties") {
    Graph g = generate(Family::path, 3);
    auto oriented = orient_by_embedding(g, {1.0, 1.0, 2.0});
    REQUIRE(oriented.arcs.size() == 1);
    CHECK(oriented.arcs[0].tail == 1);
    CHECK(oriented.arcs[0].head == 2);
    CHECK(oriented.arcs[0].w == doctest::Approx(3.0));
    CHECK_THROWS_AS(orient_by_embedding(g, {-1.0, 0.0, 1.0}), std::domain_error);
}

TEST_CASE("level-set integral on a single edge") {
    Graph g = generate(Family::path, 2);
    CHECK(level_set_matching_integral(g, {0.0, 1.0}) == doctest::Approx(1.0));
    CHECK(level_set_matching_integral(g, {1.0, 1.0}) == doctest::Approx(0.0));
    CHECK_THROWS_AS(level_set_matching_integral(g, {0.0, -1.0}), std::domain_error);
}

TEST_CASE("sweep cut scans the level sets of f squared") {
    Graph g = generate(Family::path, 4);
    Embedding1D emb{{1.0, 1.0, 0.0, 0.0}, {1.0, 1.0, 1.0, 1.0}};
    auto cert = sweep_cut(g, emb);
    CHECK(cert.set == std::vector<int>{0, 1});
    CHECK(cert.matching_cond == Rat(1, 2));
    CHECK(cert.exact);

    CHECK_THROWS_AS(sweep_cut(g, Embedding1D{{0, 0, 0, 0}, {1, 1, 1, 1}}), std::domain_error);
    CHECK_THROWS_AS(sweep_cut(g, Embedding1D{{-1, 0, 0, 1}, {1, 1, 1, 1}}), std::domain_error);
    CHECK_THROWS_WITH_AS(sweep_cut(g, Embedding1D{{3, 0, 0, 0}, {1, 1, 1, 1}}),
                         "certificate infeasible on edge 0-1", std::domain_error);
    CHECK_THROWS_WITH_AS(sweep_cut(g, Embedding1D{{1, 1, 0, 0}, {-1, 1, 1, 1}}),
                         "negative certificate entry", std::domain_error);
}

TEST_CASE("median rounding keeps the lighter side") {
    Graph g = generate(Family::path, 4);
    Embedding1D emb{{-1.0, -1.0, 1.0, 1.0}, {2.0, 2.0, 2.0, 2.0}};
    auto cert = cheeger_round(g, emb);
    CHECK(2 * static_cast<int>(cert.set.size()) <= g.vertex_count());
    double value = embedding_value(emb);
    CHECK(to_double(cert.matching_cond) <= 16.0 * std::sqrt(value) + 1e-9);

    CHECK_THROWS_WITH_AS(cheeger_round(g, Embedding1D{{1, 1, 2, 2}, {9, 9, 9, 9}}),
                         "embedding is not mean-zero", std::domain_error);
}

TEST_CASE("global conductances match the oracle inside the caps") {
    Graph g = generate(Family::path, 6);
    auto all = {CutQuantity::edge, CutQuantity::vertex, CutQuantity::matching};
    auto exact = global_conductances(g, all);
    CHECK(exact.edge->exact);
    CHECK(exact.edge->edge_cond == oracle::exact_conductance(g, CutQuantity::edge).edge_cond);
    CHECK(exact.matching->matching_cond == Rat(1, 3));

    auto heuristic = global_conductances(g, all, 0);
    CHECK_FALSE(heuristic.edge->exact);
    CHECK(heuristic.edge->edge_cond >= exact.edge->edge_cond);
    CHECK(heuristic.vertex->vertex_cond >= exact.vertex->vertex_cond);
    CHECK(heuristic.matching->matching_cond >= exact.matching->matching_cond);

    CHECK_THROWS_AS(global_conductances(Graph(2, {}), all), std::domain_error);
    CHECK_THROWS_AS(global_conductances(graph_from_edge_list("n 1\n"), all), std::domain_error);
}

TEST_CASE("one-dimensional embeddings round by recentring only") {
    Graph g = generate(Family::path, 2);
    VectorEmbedding emb{{{0.0}, {2.0}}, {2.0, 2.0}};
    auto res = round_embedding(g, emb, 1);
    CHECK(res.projection_dim == 1);
    CHECK(res.attempts == 1);
    CHECK(res.feasible);
    CHECK_FALSE(res.zero_warning);
    CHECK(res.embedding.f[0] == doctest::Approx(-1.0));
    CHECK(res.embedding.f[1] == doctest::Approx(1.0));

    VectorEmbedding zero{{{0.0}, {0.0}}, {1.0, 1.0}};
    res = round_embedding(g, zero, 1);
    CHECK(res.zero_warning);
    CHECK_FALSE(res.feasible);

    CHECK_THROWS_AS(round_embedding(g, VectorEmbedding{{{1.0}, {}}, {1.0, 1.0}}, 1),
                    std::invalid_argument);
}

TEST_CASE("gaussian projection rounds a cycle embedding") {
    Graph g = generate(Family::cycle, 8);
    Rng rng(11);
    auto emb = corpus::random_feasible_vector_embedding(rng, g, 4);
    auto res = round_embedding(g, emb, 3);
    CHECK(res.feasible);
    CHECK(res.projection_dim == static_cast<int>(std::ceil(8.0 * std::log(8.0))));
    CHECK_FALSE(embedding_violation(g, res.embedding, 1e-9));
}

}  // TEST_SUITE

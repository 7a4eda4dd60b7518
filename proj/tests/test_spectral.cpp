#include "doctest.h"

#include <cmath>

#include "fastmix/chain_builders.hpp"
#include "fastmix/corpus.hpp"
#include "fastmix/generators.hpp"
#include "fastmix/rng.hpp"
#include "fastmix/spectral.hpp"

using namespace fastmix;

TEST_SUITE("spectral") {

TEST_CASE("walk on a weighting divides by vertex weight") {
    Graph g = generate(Family::path, 3);
    WeightedGraph wg(g, {2.0, 1.0}, {0.0, 1.0, 0.0});
    auto t = chain_from_weighting(wg);
    CHECK(t.at(0, 1) == doctest::Approx(1.0));
    CHECK(t.at(1, 0) == doctest::Approx(0.5));
    CHECK(t.at(1, 1) == doctest::Approx(0.25));
    CHECK(t.at(1, 2) == doctest::Approx(0.25));
    CHECK(t.at(2, 1) == doctest::Approx(1.0));
    auto pi = wg.stationary();
    for (int v = 0; v < 3; ++v) CHECK(t.pi[v] == doctest::Approx(pi[v]));
    CHECK_NOTHROW(require_reversible(t));

    CHECK_THROWS_WITH_AS(chain_from_weighting(WeightedGraph(g, {0.0, 1.0}, {0.0, 0.0, 0.0})),
                         "vertex 0 has zero weight", std::domain_error);
}

TEST_CASE("chain diagnostics flag each defect") {
    auto t = uniform_max_degree_chain(generate(Family::path, 3));
    auto d = diagnose_chain(t);
    CHECK(d.rows_ok);
    CHECK(d.nonneg_ok);
    CHECK(d.reversible_ok);
    CHECK(d.lazy);
    CHECK(d.min_diagonal == doctest::Approx(0.5));

    auto broken_rows = t;
    broken_rows.at(0, 0) += 0.1;
    CHECK_FALSE(diagnose_chain(broken_rows).rows_ok);
    CHECK_THROWS_AS(require_reversible(broken_rows), std::domain_error);

    auto negative = t;
    negative.at(0, 1) -= 0.5;
    negative.at(0, 0) += 0.5;
    CHECK_FALSE(diagnose_chain(negative).nonneg_ok);
    CHECK_THROWS_WITH_AS(require_reversible(negative), "negative transition probability",
                         std::domain_error);

    auto skewed = t;
    skewed.at(0, 1) += 0.25;
    skewed.at(0, 0) -= 0.25;
    CHECK(diagnose_chain(skewed).rows_ok);
    CHECK_FALSE(diagnose_chain(skewed).reversible_ok);
    CHECK_THROWS_AS(require_reversible(skewed), std::domain_error);

    CHECK_THROWS_WITH_AS(require_reversible(TransitionMatrix{}), "empty chain",
                         std::domain_error);
    TransitionMatrix mismatched{2, DenseMatrix::identity(2), {1.0}};
    CHECK_THROWS_AS(require_reversible(mismatched), std::invalid_argument);
    TransitionMatrix dead{1, DenseMatrix::identity(1), {0.0}};
    CHECK_THROWS_AS(require_reversible(dead), std::domain_error);
}

TEST_CASE("jacobi rotation sorts and reconstructs") {
    DenseMatrix a(2);
    a.at(0, 0) = 2.0;
    a.at(0, 1) = 1.0;
    a.at(1, 0) = 1.0;
    a.at(1, 1) = 2.0;
    auto eig = jacobi_eigen(a, true);
    REQUIRE(eig.values.size() == 2);
    CHECK(eig.values[0] == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(eig.values[1] == doctest::Approx(3.0).epsilon(1e-9));
    REQUIRE(eig.vectors);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            double rebuilt = 0.0;
            for (int k = 0; k < 2; ++k)
                rebuilt += eig.vectors->at(i, k) * eig.values[k] * eig.vectors->at(j, k);
            CHECK(rebuilt == doctest::Approx(a.at(i, j)).epsilon(1e-9));
        }

    DenseMatrix diag(3);
    diag.at(0, 0) = 5.0;
    diag.at(1, 1) = -1.0;
    diag.at(2, 2) = 2.0;
    auto sorted = jacobi_eigen(diag);
    CHECK(sorted.values == std::vector<double>{-1.0, 2.0, 5.0});
    CHECK(sorted.off_norm <= 1e-12);
}

TEST_CASE("discrete gap of the single-edge walk") {
    auto report = spectral_gap(uniform_max_degree_chain(generate(Family::path, 2)));
    CHECK(report.gap == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(report.relaxation);
    CHECK(*report.relaxation == doctest::Approx(1.0).epsilon(1e-9));
    REQUIRE(report.eigenvalues.size() == 2);
    CHECK(report.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(report.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-9));

    TransitionMatrix lone{1, DenseMatrix::identity(1), {1.0}};
    auto single = spectral_gap(lone);
    CHECK(single.gap == doctest::Approx(1.0));
    CHECK(*single.relaxation == doctest::Approx(1.0));
}

TEST_CASE("lazification averages with the identity and halves the gap") {
    auto t = uniform_max_degree_chain(generate(Family::cycle, 4));
    auto lz = lazify(t);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j)
            CHECK(lz.at(i, j) == doctest::Approx(0.5 * t.at(i, j) + (i == j ? 0.5 : 0.0)));
    CHECK(spectral_gap(lz).gap == doctest::Approx(0.5 * spectral_gap(t).gap).epsilon(1e-9));
}

TEST_CASE("laplacian gap of a unit edge") {
    Graph g = generate(Family::path, 2);
    auto report = laplacian_gap(WeightedGraph(g, {1.0}, {0.0, 0.0}));
    CHECK(report.gap == doctest::Approx(2.0).epsilon(1e-9));
    REQUIRE(report.average_rate);
    CHECK(*report.average_rate == doctest::Approx(1.0));
    REQUIRE(report.relaxation);
    CHECK(*report.relaxation == doctest::Approx(0.5).epsilon(1e-9));
    CHECK_FALSE(report.warning);

    auto isolated = laplacian_gap(WeightedGraph(Graph(2, {}), {}, {0.0, 0.0}));
    CHECK(isolated.gap == doctest::Approx(0.0));
    CHECK(isolated.warning);
    CHECK_FALSE(isolated.relaxation);
}

TEST_CASE("path systems route every unordered pair") {
    Graph star3 = generate(Family::star, 3);
    auto ps = shortest_path_system(star3);
    CHECK(ps.paths.size() == 6);
    CHECK(ps.path(1, 2) == std::vector<int>{1, 0, 2});
    CHECK(ps.path(0, 3) == std::vector<int>{0, 3});
    CHECK_THROWS_AS(ps.pair_index(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(ps.pair_index(-1, 0), std::invalid_argument);

    Graph p4 = generate(Family::path, 4);
    auto tree_ps = tree_path_system(bfs_tree(p4, 0));
    CHECK(tree_ps.path(0, 3) == std::vector<int>{0, 1, 2, 3});
    CHECK(tree_ps.path(1, 3) == std::vector<int>{1, 2, 3});
    for (const auto& path : tree_ps.paths)
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            CHECK(p4.has_edge(path[i], path[i + 1]));
}

TEST_CASE("congestion bound is tight on a single edge") {
    Graph g = generate(Family::path, 2);
    auto t = uniform_max_degree_chain(g);
    auto wg = base_weighting_from_chain(g, t);
    double bound = canonical_paths_bound(wg, shortest_path_system(g), TimeMode::discrete);
    CHECK(bound == doctest::Approx(spectral_gap(t).gap).epsilon(1e-9));

    Graph lone(1, {});
    CHECK_THROWS_AS(canonical_paths_bound(WeightedGraph(lone, {}, {1.0}),
                                          shortest_path_system(lone), TimeMode::discrete),
                    std::domain_error);

    Graph p4 = generate(Family::path, 4);
    auto wg4 = base_weighting_from_chain(p4, uniform_max_degree_chain(p4));
    auto broken = shortest_path_system(p4);
    broken.paths[broken.pair_index(0, 2)] = {0, 2};
    CHECK_THROWS_AS(canonical_paths_bound(wg4, broken, TimeMode::discrete),
                    std::invalid_argument);
    auto detached = shortest_path_system(p4);
    detached.paths[detached.pair_index(0, 1)] = {0, 1, 2};
    CHECK_THROWS_WITH_AS(canonical_paths_bound(wg4, detached, TimeMode::discrete),
                         "path for pair does not join its endpoints", std::invalid_argument);
}

TEST_CASE("continuous congestion bound stays below the laplacian gap") {
    auto rep = continuous_time_weighting(generate(Family::path, 3), 0);
    double bound = canonical_paths_bound(rep.rates, tree_path_system(rep.tree),
                                         TimeMode::continuous);
    CHECK(bound > 0.0);
    CHECK(bound <= laplacian_gap(rep.rates).gap + 1e-9);
}

TEST_CASE("tree congestion bound stays below the gap") {
    Graph g = generate(Family::path, 3);
    auto wg = base_weighting_from_chain(g, uniform_max_degree_chain(g));
    double bound = tree_canonical_bound(wg);
    CHECK(bound > 0.0);
    CHECK(bound <= spectral_gap(chain_from_weighting(wg)).gap + 1e-9);

    Graph c4 = generate(Family::cycle, 4);
    auto cyclic = base_weighting_from_chain(c4, uniform_max_degree_chain(c4));
    CHECK_THROWS_WITH_AS(tree_canonical_bound(cyclic), "support is not a spanning tree",
                         std::domain_error);
}

TEST_CASE("subtree-cut quantity of the unit edge") {
    Graph g = generate(Family::path, 2);
    WeightedGraph wg(g, {1.0}, {0.0, 0.0});
    CHECK(hat_conductance(wg, bfs_tree(g, 0)) == doctest::Approx(2.0));
}

TEST_CASE("mixing time scans point starts") {
    auto t = uniform_max_degree_chain(generate(Family::path, 2));
    auto tight = mixing_time(t, 0.25, DistanceMetric::tv);
    CHECK(tight.time == 1);
    CHECK_FALSE(tight.timed_out);
    CHECK(tight.distance <= 1e-12);
    CHECK(mixing_time(t, 0.6, DistanceMetric::tv).time == 0);
    CHECK(mixing_time(t, 0.25, DistanceMetric::linf).time == 1);
    CHECK_THROWS_WITH_AS(mixing_time(t, 0.0, DistanceMetric::tv), "threshold must be positive",
                         std::invalid_argument);
}

TEST_CASE("tree hitting times match the first-step solver") {
    Graph g = generate(Family::path, 3);
    WeightedGraph rates(g, {0.5, 0.25}, {0.0, 0.0, 0.0});
    auto tree = bfs_tree(g, 0);
    CHECK(hitting_time_tree(rates, tree, 2) == 8.0);
    CHECK(hitting_time_tree(rates, tree, 0) == 0.0);
    auto solved = hitting_times_to_target(rates, 0);
    CHECK(solved[0] == doctest::Approx(0.0));
    CHECK(solved[1] == doctest::Approx(4.0).epsilon(1e-9));
    CHECK(solved[2] == doctest::Approx(8.0).epsilon(1e-9));

    CHECK_THROWS_AS(hitting_time_tree(rates, tree, 3), std::invalid_argument);
    CHECK_THROWS_AS(hitting_times_to_target(rates, -1), std::invalid_argument);
    WeightedGraph stalled(g, {0.5, 0.0}, {0.0, 0.0, 0.0});
    CHECK_THROWS_WITH_AS(hitting_time_tree(stalled, tree, 2), "zero rate on a tree edge",
                         std::domain_error);
    CHECK_THROWS_AS(hitting_times_to_target(stalled, 0), std::domain_error);
    WeightedGraph split(Graph(2, {}), {}, {0.0, 0.0});
    CHECK_THROWS_WITH_AS(hitting_times_to_target(split, 0), "graph is not connected",
                         std::domain_error);
}

TEST_CASE("random tree rates agree between formula and solver") {
    Rng rng(19);
    for (int i = 0; i < 5; ++i) {
        auto rates = corpus::random_tree_weighting(rng, uniform_int(rng, 2, 10));
        auto tree = bfs_tree(rates.graph(), 0);
        auto solved = hitting_times_to_target(rates, 0);
        for (int v = 0; v < rates.vertex_count(); ++v)
            CHECK(hitting_time_tree(rates, tree, v) ==
                  doctest::Approx(solved[v]).epsilon(1e-9));
    }
}

}  // TEST_SUITE

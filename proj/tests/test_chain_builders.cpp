#include "doctest.h"

#include <cmath>

#include "fastmix/chain_builders.hpp"
#include "fastmix/corpus.hpp"
#include "fastmix/generators.hpp"
#include "fastmix/rng.hpp"

using namespace fastmix;

TEST_SUITE("chain_builders") {

TEST_CASE("target distributions are validated") {
    auto pi = uniform_distribution(4);
    CHECK(pi.p == std::vector<double>(4, 0.25));
    CHECK_THROWS_AS(uniform_distribution(0), std::invalid_argument);
    CHECK_THROWS_AS(validate_distribution(pi, 5), std::invalid_argument);
    CHECK_THROWS_AS(validate_distribution(TargetDistribution{{-0.5, 1.5}}, 2),
                    std::domain_error);
    CHECK_THROWS_AS(validate_distribution(TargetDistribution{{0.3, 0.3}}, 2),
                    std::domain_error);
}

TEST_CASE("max-degree baseline on a star") {
    Graph g = generate(Family::star, 4);
    auto t = uniform_max_degree_chain(g);
    CHECK(t.at(0, 1) == doctest::Approx(0.125));
    CHECK(t.at(0, 0) == doctest::Approx(0.5));
    CHECK(t.at(1, 0) == doctest::Approx(0.125));
    CHECK(t.at(1, 1) == doctest::Approx(0.875));
    CHECK(t.at(1, 2) == doctest::Approx(0.0));
    CHECK(t.pi == std::vector<double>(5, 0.2));
    CHECK_NOTHROW(require_reversible(t));
    CHECK_THROWS_AS(uniform_max_degree_chain(Graph(2, {})), std::domain_error);
}

TEST_CASE("weighting from a chain carries unit total weight") {
    Graph g = generate(Family::cycle, 4);
    auto t = uniform_max_degree_chain(g);
    auto w = base_weighting_from_chain(g, t);
    CHECK(w.total_weight() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.edge_weight_between(0, 1) == doctest::Approx(0.25 * 0.25));
    CHECK(w.loop_weight(0) == doctest::Approx(0.25 * 0.5));
    auto rebuilt = chain_from_weighting(w);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) CHECK(rebuilt.at(i, j) == doctest::Approx(t.at(i, j)));

    Graph p4 = generate(Family::path, 4);
    CHECK_THROWS_WITH_AS(base_weighting_from_chain(p4, t),
                         "chain moves across the non-edge 0-3", std::domain_error);
    auto skewed = t;
    skewed.at(0, 1) += 0.125;
    skewed.at(0, 0) -= 0.125;
    CHECK_THROWS_AS(base_weighting_from_chain(g, skewed), std::domain_error);
}

TEST_CASE("almost-mixing weighting on a single edge") {
    Graph g = generate(Family::path, 2);
    auto report = almost_mixing_weighting(g, uniform_distribution(2), 0.5, {}, 0);
    CHECK(report.eta == doctest::Approx(0.25));
    CHECK(report.tree_diameter == 1);
    CHECK(report.graph_diameter == 1);
    CHECK(report.total_weight == doctest::Approx(1.25));
    CHECK(report.min_ratio == doctest::Approx(1.0));
    CHECK(report.min_flow_ratio == doctest::Approx(0.8));
    CHECK(report.hat_cond == doctest::Approx(0.4));
    CHECK(report.pre_gap == doctest::Approx(0.4).epsilon(1e-9));
    CHECK(report.gap == doctest::Approx(0.2).epsilon(1e-9));
    CHECK(report.gap_bound == doctest::Approx(0.5 / 48.0));
    CHECK(report.pre_gap_bound == doctest::Approx(0.5 / 6.0));
    CHECK(report.weighting.edge_weight_between(0, 1) == doctest::Approx(0.125));
    CHECK_NOTHROW(require_reversible(report.chain));
}

TEST_CASE("almost-mixing input validation") {
    Graph g = generate(Family::path, 3);
    auto pi = uniform_distribution(3);
    CHECK_THROWS_AS(almost_mixing_weighting(g, pi, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(almost_mixing_weighting(g, pi, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(almost_mixing_weighting(Graph(3, {{0, 1}}), pi, 0.5), std::domain_error);
    CHECK_THROWS_AS(almost_mixing_weighting(g, pi, 0.5, {}, 3), std::invalid_argument);

    Graph other = generate(Family::cycle, 3);
    auto foreign = base_weighting_from_chain(other, uniform_max_degree_chain(other));
    CHECK_THROWS_AS(almost_mixing_weighting(g, pi, 0.5, foreign), std::invalid_argument);

    WeightedGraph heavy(g, {1.0, 1.0}, {0.0, 0.0, 0.0});
    CHECK_THROWS_WITH_AS(almost_mixing_weighting(g, pi, 0.5, heavy),
                         "base weighting must have unit total weight", std::domain_error);

    WeightedGraph lopsided(g, {0.375, 0.125}, {0.0, 0.0, 0.0});
    CHECK_THROWS_WITH_AS(almost_mixing_weighting(g, pi, 0.5, lopsided),
                         "base weighting induces a different distribution", std::domain_error);
}

TEST_CASE("almost-mixing degenerates gracefully on one vertex") {
    Graph g(1, {});
    auto report = almost_mixing_weighting(g, uniform_distribution(1), 0.5);
    CHECK(report.gap == doctest::Approx(1.0));
    CHECK(report.pre_gap == doctest::Approx(1.0));
    CHECK(report.min_ratio == doctest::Approx(1.0));
    CHECK(report.total_weight == doctest::Approx(1.0));
}

TEST_CASE("continuous-time rates on a path") {
    auto report = continuous_time_weighting(generate(Family::path, 3), 0);
    CHECK(report.rates.edge_weight_between(0, 1) == 0.5);
    CHECK(report.rates.edge_weight_between(1, 2) == 0.25);
    CHECK(report.total_rate == doctest::Approx(1.5));
    CHECK(report.average_rate == doctest::Approx(0.5));
    CHECK(report.average_rate <= 1.0 + 1e-12);
    CHECK(report.max_hitting == doctest::Approx(8.0));
    CHECK(report.hitting_bound == doctest::Approx(32.0));
    CHECK(report.gap_bound == doctest::Approx(1.0 / 64.0));
    CHECK(report.gap >= report.gap_bound - 1e-12);
    CHECK_THROWS_AS(continuous_time_weighting(Graph(2, {})), std::domain_error);
}

TEST_CASE("perfect-mixing schedule lands exactly on the target") {
    Graph g = generate(Family::path, 3);
    auto pi = uniform_distribution(3);
    auto schedule = perfect_mixing_schedule(g, pi, 0);
    CHECK(schedule.steps.size() == 4);
    CHECK(schedule.diam == 2);
    for (const auto& step : schedule.steps)
        for (int i = 0; i < step.n; ++i) {
            double row = 0.0;
            for (int j = 0; j < step.n; ++j) {
                CHECK(step.at(i, j) >= -1e-15);
                row += step.at(i, j);
            }
            CHECK(row == doctest::Approx(1.0).epsilon(1e-12));
        }
    CHECK(schedule_tv_error(schedule) <= 1e-12);

    std::vector<double> point(3, 0.0);
    point[2] = 1.0;
    auto out = run_schedule(schedule, point);
    for (int v = 0; v < 3; ++v) CHECK(out[v] == doctest::Approx(pi.p[v]).epsilon(1e-12));
    CHECK_THROWS_AS(run_schedule(schedule, {1.0}), std::invalid_argument);
}

TEST_CASE("perfect mixing handles one vertex and skewed targets") {
    auto lone = perfect_mixing_schedule(Graph(1, {}), uniform_distribution(1));
    CHECK(lone.steps.empty());
    CHECK(lone.diam == 0);

    Rng rng(5);
    Graph g = generate(Family::binary_tree, 2);
    auto pi = corpus::random_distribution(rng, g.vertex_count());
    auto schedule = perfect_mixing_schedule(g, pi);
    CHECK(schedule.steps.size() == 2 * static_cast<std::size_t>(diameter(g)));
    CHECK(schedule_tv_error(schedule) <= 1e-12);
}

}  // TEST_SUITE

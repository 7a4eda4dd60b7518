#include "fastmix/verification.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <functional>
#include <optional>
#include <tuple>

#include "fastmix/chain_builders.hpp"
#include "fastmix/conductance.hpp"
#include "fastmix/constants.hpp"
#include "fastmix/corpus.hpp"
#include "fastmix/generators.hpp"
#include "fastmix/io.hpp"
#include "fastmix/matching.hpp"
#include "fastmix/oracle.hpp"
#include "fastmix/parallel.hpp"
#include "fastmix/rng.hpp"
#include "fastmix/spectral.hpp"

namespace fastmix::verification {

bool SuiteReport::passed() const {
    return !checks.empty() &&
           std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

std::uint64_t instance_seed(std::uint64_t seed, int i) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(i) + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

struct Tally {
    int total = 0, failures = 0;
    std::string first;

    void add(bool ok, const std::string& msg) {
        ++total;
        if (!ok && failures++ == 0) first = msg;
    }
    CheckResult result(const std::string& name) const {
        CheckResult r;
        r.name = name;
        if (total == 0) {
            r.passed = false;
            r.detail = "no instances";
        } else if (failures > 0) {
            r.passed = false;
            r.detail = std::to_string(failures) + "/" + std::to_string(total) +
                       " failed; first: " + first;
        } else {
            r.passed = true;
            r.detail = "checked " + std::to_string(total);
        }
        return r;
    }
};

// (check id, passed, failure message); id 0 is reserved for "no exceptions".
using Outcome = std::tuple<int, bool, std::string>;
using OutcomeList = std::vector<Outcome>;

std::vector<OutcomeList> run_instances(int count, const std::function<OutcomeList(int)>& body) {
    std::vector<OutcomeList> slots(count);
    parallel_for(count, [&](int i) {
        try {
            slots[i] = body(i);
            slots[i].emplace_back(0, true, "");
        } catch (const std::exception& e) {
            slots[i].emplace_back(0, false,
                                  "instance " + std::to_string(i) + " threw: " + e.what());
        }
    });
    return slots;
}

SuiteReport finish(std::string suite, const std::vector<std::string>& names,
                   const std::vector<OutcomeList>& slots, std::vector<CheckResult> extra = {}) {
    std::vector<Tally> tallies(names.size());
    for (const auto& list : slots)
        for (const auto& [id, ok, msg] : list) tallies[id].add(ok, msg);
    SuiteReport report;
    report.suite = std::move(suite);
    for (std::size_t i = 0; i < names.size(); ++i)
        report.checks.push_back(tallies[i].result(names[i]));
    for (auto& c : extra) report.checks.push_back(std::move(c));
    return report;
}

std::string describe(const Graph& g, int instance) {
    return "instance " + std::to_string(instance) + " (n=" + std::to_string(g.vertex_count()) +
           ", m=" + std::to_string(g.edge_count()) + ")";
}

CheckResult guarded_check(const std::string& name, const std::function<bool(std::string&)>& body) {
    CheckResult r;
    r.name = name;
    std::string detail;
    try {
        r.passed = body(detail);
    } catch (const std::exception& e) {
        r.passed = false;
        detail = std::string("threw: ") + e.what();
    }
    r.detail = detail.empty() ? std::string(r.passed ? "checked" : "failed") : detail;
    return r;
}

}  // namespace

SuiteReport suite_sandwich(std::uint64_t seed) {
    std::vector<Graph> graphs;
    for (int n = 2; n <= 5; ++n)
        for (auto& g : corpus::all_connected_graphs(n)) graphs.push_back(std::move(g));
    int exhaustive = static_cast<int>(graphs.size());
    for (int i = 0; i < 500; ++i) {
        Rng rng(instance_seed(seed, i));
        graphs.push_back(corpus::random_connected_graph(rng, 2, 10));
    }
    // Deterministic members with 4 * matching conductance <= 1, so the
    // constructive check always has instances.
    graphs.push_back(generate(Family::star, 8));
    graphs.push_back(generate(Family::dumbbell, 6));
    graphs.push_back(generate(Family::path, 12));

    auto slots = run_instances(static_cast<int>(graphs.size()), [&](int i) {
        const Graph& g = graphs[i];
        OutcomeList out;
        auto vcert = oracle::exact_conductance(g, CutQuantity::vertex);
        auto mcert = oracle::exact_conductance(g, CutQuantity::matching);
        Rat psi = vcert.vertex_cond, ups = mcert.matching_cond;
        std::string tag = describe(g, i) + (i < exhaustive ? " exhaustive" : "");
        out.emplace_back(1, ups <= psi,
                         tag + ": " + to_string(ups) + " > " + to_string(psi));
        out.emplace_back(2, psi <= Rat(4) * ups,
                         tag + ": " + to_string(psi) + " > 4 * " + to_string(ups));
        if (Rat(4) * ups <= Rat(1)) {
            auto rest = matching_to_vertex_cut(g, mcert);
            Rat rest_psi = vertex_conductance_of_set(g, rest);
            bool ok = rest_psi <= Rat(4) * ups &&
                      2 * static_cast<int>(rest.size()) <= g.vertex_count();
            out.emplace_back(3, ok, tag + ": remainder gives " + to_string(rest_psi));
        }
        return out;
    });
    return finish("sandwich",
                  {"instances evaluate without errors",
                   "matching conductance at most vertex conductance",
                   "vertex conductance at most four times matching conductance",
                   "unmatched remainder certifies the factor-four bound"},
                  slots);
}

SuiteReport suite_directed_matching(std::uint64_t seed) {
    auto slots = run_instances(200, [&](int i) {
        Rng rng(instance_seed(seed, 9000 + i));
        int n = uniform_int(rng, 2, 10);
        auto edges = corpus::random_weighted_edges(rng, n, 20);
        std::vector<Arc> arcs;
        for (const auto& e : edges) {
            if (uniform01(rng) < 0.5)
                arcs.push_back({e.u, e.v, e.w});
            else
                arcs.push_back({e.v, e.u, e.w});
        }
        double nu = oracle::exact_max_matching(n, edges).weight;
        double nu_dir = oracle::exact_max_directed_matching(n, arcs).weight;
        double greedy = greedy_matching(edges).weight;
        double greedy_dir = greedy_directed_matching(arcs).weight;
        std::string tag = "instance " + std::to_string(i);
        OutcomeList out;
        out.emplace_back(1, nu_dir <= 4.0 * nu + kCrossCheckTol,
                         tag + ": directed " + std::to_string(nu_dir) + " vs undirected " +
                             std::to_string(nu));
        out.emplace_back(2, nu_dir <= 2.0 * greedy_dir + kCrossCheckTol,
                         tag + ": directed optimum " + std::to_string(nu_dir) + " vs greedy " +
                             std::to_string(greedy_dir));
        out.emplace_back(3, greedy_dir <= nu_dir + kCrossCheckTol, tag);
        out.emplace_back(4, nu <= 2.0 * greedy + kCrossCheckTol, tag);
        out.emplace_back(5, greedy <= nu + kCrossCheckTol, tag);
        return out;
    });
    return finish("directed-matching",
                  {"instances evaluate without errors",
                   "directed matching number at most four times the undirected one",
                   "greedy directed matching is within half of optimal",
                   "greedy directed matching stays feasible",
                   "greedy matching is within half of optimal",
                   "greedy matching stays feasible"},
                  slots);
}

SuiteReport suite_sweep(std::uint64_t seed) {
    auto slots = run_instances(200, [&](int i) {
        Rng rng(instance_seed(seed, 21000 + i));
        Graph g = corpus::random_connected_graph(rng, 2, 10);
        auto emb = corpus::random_feasible_embedding(rng, g, false);
        double value = embedding_value(emb);
        auto cert = sweep_cut(g, emb);
        double target = 8.0 * std::sqrt(2.0 * value);
        std::string tag = describe(g, i);
        OutcomeList out;
        out.emplace_back(1, to_double(cert.matching_cond) <= target + kCrossCheckTol,
                         tag + ": " + to_string(cert.matching_cond) + " vs 8 sqrt(2 * " +
                             std::to_string(value) + ")");
        auto recomputed = matching_conductance_of_set(g, cert.set);
        out.emplace_back(2, recomputed.matching_cond == cert.matching_cond, tag);
        return out;
    });
    return finish("sweep",
                  {"instances evaluate without errors",
                   "sweep set achieves 8 sqrt(2 value)",
                   "sweep certificate quantities recompute"},
                  slots);
}

SuiteReport suite_easy_side() {
    auto graphs = corpus::small_family_corpus();
    auto slots = run_instances(static_cast<int>(graphs.size()), [&](int i) {
        const Graph& g = graphs[i];
        auto mcert = oracle::exact_conductance(g, CutQuantity::matching);
        auto emb = easy_side_certificate(g, mcert.set);
        std::string tag = describe(g, i);
        OutcomeList out;
        out.emplace_back(1, !embedding_violation(g, emb, kFeasibilityTol), tag);
        double value = embedding_value(emb);
        double expect = 2.0 * to_double(mcert.matching_cond);
        out.emplace_back(2, std::fabs(value - expect) <= kCrossCheckTol,
                         tag + ": value " + std::to_string(value) + " vs " +
                             std::to_string(expect));
        return out;
    });

    auto pinned = [](const Graph& g, double expect) {
        auto mcert = oracle::exact_conductance(g, CutQuantity::matching);
        auto emb = easy_side_certificate(g, mcert.set);
        return std::fabs(embedding_value(emb) - expect) <= kFeasibilityTol;
    };
    CheckResult examples = guarded_check(
        "pinned certificate values (4-cycle gives 2, source-linked cliques give 1/2)",
        [&](std::string& detail) {
            bool ok = pinned(generate(Family::cycle, 4), 2.0) &&
                      pinned(generate(Family::clique_source, 4, 3), 0.5);
            detail = ok ? "checked 2" : "a pinned example value moved";
            return ok;
        });
    return finish("easy-side",
                  {"instances evaluate without errors",
                   "one-sided certificate is feasible",
                   "one-sided certificate value doubles the matching conductance"},
                  slots, {examples});
}

SuiteReport suite_almost_mixing() {
    struct Job {
        Graph g;
        double eps;
        TargetDistribution pi;
        std::optional<WeightedGraph> base;
        bool pin_dumbbell = false;
    };
    std::vector<Job> jobs;
    for (auto& g : corpus::family_corpus())
        for (double eps : {0.5, 0.1, 0.01}) {
            Job job;
            job.g = g;
            job.eps = eps;
            job.pi = uniform_distribution(g.vertex_count());
            job.pin_dumbbell = g.vertex_count() == 101 && diameter(g) == 4 && eps == 0.1;
            jobs.push_back(std::move(job));
        }
    {
        Job random_pi;
        random_pi.g = generate(Family::dumbbell, 50);
        random_pi.eps = 0.1;
        Rng rng(instance_seed(42, 0));
        random_pi.pi = corpus::random_distribution(rng, random_pi.g.vertex_count());
        jobs.push_back(std::move(random_pi));

        Job with_base;
        with_base.g = generate(Family::cycle, 16);
        with_base.eps = 0.25;
        with_base.pi = uniform_distribution(16);
        with_base.base =
            base_weighting_from_chain(with_base.g, uniform_max_degree_chain(with_base.g));
        jobs.push_back(std::move(with_base));

        Job limiting;
        limiting.g = generate(Family::path, 2);
        limiting.eps = 1e-6;
        limiting.pi = uniform_distribution(2);
        jobs.push_back(std::move(limiting));
    }

    auto slots = run_instances(static_cast<int>(jobs.size()), [&](int i) {
        const Job& job = jobs[i];
        auto rep = almost_mixing_weighting(job.g, job.pi, job.eps, job.base);
        std::string tag = describe(job.g, i) + " eps=" + std::to_string(job.eps);
        OutcomeList out;
        out.emplace_back(1, rep.min_ratio >= 1.0 / (1.0 + job.eps) - kFeasibilityTol,
                         tag + ": min ratio " + std::to_string(rep.min_ratio));
        out.emplace_back(2, rep.total_weight <= 1.0 + job.eps + kFeasibilityTol,
                         tag + ": total weight " + std::to_string(rep.total_weight));
        out.emplace_back(3, rep.min_flow_ratio >= 1.0 - job.eps - kFeasibilityTol,
                         tag + ": flow ratio " + std::to_string(rep.min_flow_ratio));
        out.emplace_back(4, rep.gap >= rep.gap_bound - kCrossCheckTol,
                         tag + ": gap " + std::to_string(rep.gap) + " vs bound " +
                             std::to_string(rep.gap_bound));
        out.emplace_back(5, rep.pre_gap >= rep.pre_gap_bound - kCrossCheckTol,
                         tag + ": pre-gap " + std::to_string(rep.pre_gap) + " vs bound " +
                             std::to_string(rep.pre_gap_bound));
        out.emplace_back(6,
                         rep.hat_cond >=
                             job.eps / (6.0 * rep.tree_diameter) - kFeasibilityTol,
                         tag + ": subtree-cut quantity " + std::to_string(rep.hat_cond));
        if (job.pin_dumbbell)
            out.emplace_back(7, std::fabs(rep.gap_bound - 0.1 / 768.0) <= 1e-15,
                             tag + ": bound " + std::to_string(rep.gap_bound));
        return out;
    });
    return finish("almost-mixing",
                  {"instances evaluate without errors",
                   "stationary masses keep a 1/(1+epsilon) share",
                   "total weight stays within 1+epsilon",
                   "existing flows keep a 1-epsilon share",
                   "lazified walk gap meets epsilon over 48 diameter squared",
                   "raw walk gap meets epsilon over 6 tree-diameter squared",
                   "subtree-cut quantity meets epsilon over 6 tree diameter",
                   "bridged-cliques bound value pins at 0.1/768"},
                  slots);
}

SuiteReport suite_continuous_time() {
    auto graphs = corpus::family_corpus();
    graphs.push_back(generate(Family::path, 2));
    graphs.push_back(generate(Family::binary_tree, 4));

    auto slots = run_instances(static_cast<int>(graphs.size()), [&](int i) {
        const Graph& g = graphs[i];
        auto rep = continuous_time_weighting(g);
        std::string tag = describe(g, i);
        OutcomeList out;
        out.emplace_back(1, rep.average_rate <= 1.0 + kFeasibilityTol,
                         tag + ": average rate " + std::to_string(rep.average_rate));
        out.emplace_back(2, rep.gap >= rep.gap_bound - kCrossCheckTol,
                         tag + ": gap " + std::to_string(rep.gap) + " vs bound " +
                             std::to_string(rep.gap_bound));
        out.emplace_back(3, rep.max_hitting <= rep.hitting_bound + kCrossCheckTol,
                         tag + ": hitting " + std::to_string(rep.max_hitting));
        auto solved = hitting_times_to_target(rep.rates, rep.tree.root);
        double worst = 0.0;
        for (int x = 0; x < g.vertex_count(); ++x)
            worst = std::max(worst,
                             std::fabs(solved[x] - hitting_time_tree(rep.rates, rep.tree, x)));
        out.emplace_back(4, worst <= kCrossCheckTol,
                         tag + ": formula vs solve differ by " + std::to_string(worst));
        auto spectral = laplacian_gap(rep.rates);
        bool rate_agrees = spectral.average_rate &&
                           std::fabs(*spectral.average_rate - rep.average_rate) <= kFeasibilityTol;
        out.emplace_back(5, rate_agrees, tag + ": reported average rates disagree");
        if (g.vertex_count() == 2)
            out.emplace_back(6, rep.rates.edge_weight(0) == 0.5,
                             tag + ": rate " + std::to_string(rep.rates.edge_weight(0)));
        return out;
    });
    return finish("continuous-time",
                  {"instances evaluate without errors",
                   "average leave rate at most one",
                   "generator gap meets one over 16 diameter squared",
                   "hitting times bounded by 8 diameter squared",
                   "tree hitting formula matches the linear solve",
                   "spectral report repeats the average rate",
                   "two-vertex rate pins at one half"},
                  slots);
}

SuiteReport suite_perfect_mixing(std::uint64_t seed) {
    auto slots = run_instances(101, [&](int i) {
        Rng rng(instance_seed(seed, 33000 + i));
        Graph g = i < 100 ? corpus::random_connected_graph(rng, 1, 50)
                          : generate(Family::binary_tree, 4);
        auto pi = corpus::random_distribution(rng, g.vertex_count());
        auto schedule = perfect_mixing_schedule(g, pi);
        std::string tag = describe(g, i);
        OutcomeList out;
        out.emplace_back(1, static_cast<int>(schedule.steps.size()) == 2 * diameter(g),
                         tag + ": " + std::to_string(schedule.steps.size()) + " steps");
        bool stochastic = true;
        for (const auto& step : schedule.steps) {
            for (int x = 0; x < step.n && stochastic; ++x) {
                double row = 0.0;
                for (int y = 0; y < step.n; ++y) {
                    row += step.at(x, y);
                    if (step.at(x, y) < 0.0) stochastic = false;
                }
                if (std::fabs(row - 1.0) > kRowSumTol) stochastic = false;
            }
        }
        out.emplace_back(2, stochastic, tag + ": a step row is not stochastic");
        double tv = schedule_tv_error(schedule);
        out.emplace_back(3, tv <= kScheduleTvTol,
                         tag + ": worst TV " + std::to_string(tv));
        return out;
    });
    return finish("perfect-mixing",
                  {"instances evaluate without errors",
                   "schedule length is exactly twice the diameter",
                   "every step is a stochastic matrix",
                   "every point start lands on the target"},
                  slots);
}

SuiteReport suite_canonical_paths(std::uint64_t seed) {
    struct Item {
        WeightedGraph wg;           // discrete-time weighting
        bool tree_weighting = false;
        Graph graph;
    };
    std::vector<Item> items;
    for (int i = 0; i < 100; ++i) {
        Rng rng(instance_seed(seed, 47000 + i));
        Item item;
        item.wg = corpus::random_tree_weighting(rng, uniform_int(rng, 2, 16));
        item.graph = item.wg.graph();
        item.tree_weighting = true;
        items.push_back(std::move(item));
    }
    std::vector<Graph> walk_graphs = {
        generate(Family::path, 8),          generate(Family::cycle, 8),
        generate(Family::star, 6),          generate(Family::complete, 5),
        generate(Family::binary_tree, 3),   generate(Family::dumbbell, 3),
        generate(Family::clique_matching, 4), generate(Family::clique_source, 4, 3),
    };
    for (auto& g : walk_graphs) {
        Item item;
        item.wg = base_weighting_from_chain(g, uniform_max_degree_chain(g));
        item.graph = g;
        items.push_back(std::move(item));
    }

    auto slots = run_instances(static_cast<int>(items.size()), [&](int i) {
        const Item& item = items[i];
        const Graph& g = item.graph;
        double gap = spectral_gap(chain_from_weighting(item.wg)).gap;
        std::string tag = describe(g, i);
        OutcomeList out;
        if (item.tree_weighting) {
            auto tree = bfs_tree(g, 0);
            double bound = canonical_paths_bound(item.wg, tree_path_system(tree),
                                                 TimeMode::discrete);
            out.emplace_back(1, bound <= gap + kCrossCheckTol,
                             tag + ": bound " + std::to_string(bound) + " vs gap " +
                                 std::to_string(gap));
            double cut_bound = tree_canonical_bound(item.wg);
            out.emplace_back(2, cut_bound <= gap + kCrossCheckTol,
                             tag + ": cut bound " + std::to_string(cut_bound) + " vs gap " +
                                 std::to_string(gap));
        } else {
            double bound =
                canonical_paths_bound(item.wg, shortest_path_system(g), TimeMode::discrete);
            out.emplace_back(3, bound <= gap + kCrossCheckTol,
                             tag + ": bound " + std::to_string(bound) + " vs gap " +
                                 std::to_string(gap));
            auto rep = continuous_time_weighting(g);
            double cont_bound = canonical_paths_bound(rep.rates, tree_path_system(rep.tree),
                                                      TimeMode::continuous);
            out.emplace_back(4, cont_bound <= rep.gap + kCrossCheckTol,
                             tag + ": continuous bound " + std::to_string(cont_bound) +
                                 " vs gap " + std::to_string(rep.gap));
        }
        return out;
    });

    CheckResult pinned = guarded_check(
        "two-vertex lazy swap pins bound and gap at one", [&](std::string& detail) {
            Graph k2 = generate(Family::path, 2);
            auto wg = base_weighting_from_chain(k2, uniform_max_degree_chain(k2));
            double bound =
                canonical_paths_bound(wg, shortest_path_system(k2), TimeMode::discrete);
            double gap = spectral_gap(chain_from_weighting(wg)).gap;
            bool ok = std::fabs(bound - 1.0) <= kFeasibilityTol &&
                      std::fabs(gap - 1.0) <= kFeasibilityTol;
            detail = ok ? "checked 1"
                        : "bound " + std::to_string(bound) + ", gap " + std::to_string(gap);
            return ok;
        });
    return finish("canonical-paths",
                  {"instances evaluate without errors",
                   "congestion bound stays below the gap on tree weightings",
                   "tree-cut form stays below the gap",
                   "congestion bound stays below the gap on graph walks",
                   "continuous congestion bound stays below the generator gap"},
                  slots, {pinned});
}

SuiteReport suite_eigensolver() {
    const std::vector<int> sizes = {4, 8, 16, 32, 64};
    auto slots = run_instances(static_cast<int>(sizes.size()) + 1, [&](int i) {
        OutcomeList out;
        if (i < static_cast<int>(sizes.size())) {
            int n = sizes[i];
            auto report = spectral_gap(uniform_max_degree_chain(generate(Family::cycle, n)));
            double expect = (1.0 - std::cos(2.0 * std::acos(-1.0) / n)) / 2.0;
            out.emplace_back(1, std::fabs(report.gap - expect) <= kCrossCheckTol,
                             "cycle n=" + std::to_string(n) + ": gap " +
                                 std::to_string(report.gap) + " vs " + std::to_string(expect));
            bool relaxation_ok =
                report.relaxation && std::fabs(*report.relaxation * report.gap - 1.0) <= 1e-9;
            out.emplace_back(2, relaxation_ok, "cycle n=" + std::to_string(n));
        } else {
            auto report = spectral_gap(uniform_max_degree_chain(generate(Family::complete, 4)));
            out.emplace_back(3, std::fabs(report.gap - 2.0 / 3.0) <= kCrossCheckTol,
                             "complete n=4: gap " + std::to_string(report.gap));
        }
        return out;
    });
    return finish("eigensolver",
                  {"instances evaluate without errors",
                   "lazy cycle walk gap matches (1 - cos(2 pi / n)) / 2",
                   "relaxation time is the inverse gap",
                   "lazy complete-graph walk gap matches 2/3"},
                  slots);
}

SuiteReport suite_hitting_example() {
    auto slots = run_instances(1, [&](int) {
        Graph p3 = generate(Family::path, 3);
        auto rep = continuous_time_weighting(p3, 0);
        OutcomeList out;
        double far = hitting_time_tree(rep.rates, rep.tree, 2);
        out.emplace_back(1, far == 8.0, "far endpoint expects " + std::to_string(far));
        auto solved = hitting_times_to_target(rep.rates, 0);
        out.emplace_back(2, std::fabs(solved[2] - 8.0) <= kCrossCheckTol,
                         "linear solve gives " + std::to_string(solved[2]));
        bool rates_ok = rep.rates.edge_weight_between(0, 1) == 0.5 &&
                        rep.rates.edge_weight_between(1, 2) == 0.25;
        out.emplace_back(3, rates_ok, "rates are not (1/2, 1/4)");
        return out;
    });
    return finish("hitting-example",
                  {"instances evaluate without errors",
                   "far endpoint of the 3-path expects exactly eight",
                   "first-step linear solve agrees",
                   "3-path rates pin at one half and one quarter"},
                  slots);
}

SuiteReport suite_gap_scaling() {
    std::vector<int> sizes = {16, 32, 64};
    std::vector<double> ratios(sizes.size());
    std::vector<OutcomeList> slots = run_instances(static_cast<int>(sizes.size()), [&](int i) {
        Graph g = generate(Family::cycle, sizes[i]);
        auto rep = almost_mixing_weighting(g, uniform_distribution(sizes[i]), 0.1);
        double d = diameter(g);
        ratios[i] = rep.gap * d * d / 0.1;
        return OutcomeList{};
    });
    auto [lo, hi] = std::minmax_element(ratios.begin(), ratios.end());
    CheckResult scaling;
    scaling.name = "gap times diameter squared stays within factor four across cycle sizes";
    scaling.passed = *lo > 0.0 && *hi / *lo <= 4.0 + kCrossCheckTol;
    scaling.detail = "ratios";
    for (std::size_t i = 0; i < sizes.size(); ++i)
        scaling.detail += " n=" + std::to_string(sizes[i]) + ":" + std::to_string(ratios[i]);
    return finish("gap-scaling", {"instances evaluate without errors"}, slots, {scaling});
}

SuiteReport suite_coarea(std::uint64_t seed) {
    auto slots = run_instances(200, [&](int i) {
        Rng rng(instance_seed(seed, 61000 + i));
        Graph g = corpus::random_connected_graph(rng, 2, 8);
        while (g.edge_count() > kExactMatchingEdgeCap)
            g = corpus::random_connected_graph(rng, 2, 8);
        auto emb = corpus::random_feasible_embedding(rng, g, false);
        auto oriented = orient_by_embedding(g, emb.f);
        double integral = level_set_matching_integral(g, emb.f);
        double nu_dir = oracle::exact_max_directed_matching(g.vertex_count(), oriented.arcs).weight;
        std::vector<WeightedEdge> weighted;
        for (auto [u, v] : g.edges())
            weighted.push_back(
                {u, v, std::fabs(emb.f[u] * emb.f[u] - emb.f[v] * emb.f[v])});
        double nu = oracle::exact_max_matching(g.vertex_count(), weighted).weight;
        double greedy_dir = greedy_directed_matching(oriented.arcs).weight;
        std::string tag = describe(g, i);
        OutcomeList out;
        out.emplace_back(1, integral <= 2.0 * nu_dir + kCrossCheckTol,
                         tag + ": integral " + std::to_string(integral) + " vs 2 * " +
                             std::to_string(nu_dir));
        out.emplace_back(2, nu_dir <= 4.0 * nu + kCrossCheckTol,
                         tag + ": directed " + std::to_string(nu_dir) + " vs undirected " +
                             std::to_string(nu));
        out.emplace_back(3, nu_dir <= 2.0 * greedy_dir + kCrossCheckTol, tag);
        return out;
    });
    return finish("coarea",
                  {"instances evaluate without errors",
                   "level-set matching integral at most twice the directed matching number",
                   "orientation by squares keeps the factor-four matching relation",
                   "greedy directed matching is within half on oriented level graphs"},
                  slots);
}

SuiteReport suite_cheeger_rounding(std::uint64_t seed) {
    auto slots = run_instances(200, [&](int i) {
        Rng rng(instance_seed(seed, 71000 + i));
        Graph g = corpus::random_connected_graph(rng, 2, 10);
        auto emb = corpus::random_feasible_embedding(rng, g, true);
        double value = embedding_value(emb);
        auto cert = cheeger_round(g, emb);
        std::string tag = describe(g, i);
        OutcomeList out;
        out.emplace_back(1,
                         to_double(cert.matching_cond) <=
                             16.0 * std::sqrt(value) + kCrossCheckTol,
                         tag + ": " + to_string(cert.matching_cond) + " vs 16 sqrt(" +
                             std::to_string(value) + ")");
        out.emplace_back(2, 2 * static_cast<int>(cert.set.size()) <= g.vertex_count(), tag);
        auto recomputed = matching_conductance_of_set(g, cert.set);
        out.emplace_back(3, recomputed.matching_cond == cert.matching_cond, tag);
        return out;
    });
    return finish("cheeger-rounding",
                  {"instances evaluate without errors",
                   "median rounding achieves 16 sqrt(value)",
                   "median rounding returns an admissible set",
                   "rounded certificate quantities recompute"},
                  slots);
}

SuiteReport suite_embedding_rounding(std::uint64_t seed) {
    Graph g = generate(Family::cycle, 8);
    std::vector<char> feasible(200, 0), within(200, 0);
    auto slots = run_instances(200, [&](int i) {
        Rng rng(instance_seed(seed, 83000 + i));
        auto emb = corpus::random_feasible_vector_embedding(rng, g, 5);
        auto res = round_embedding(g, emb, instance_seed(seed, 84000 + i));
        feasible[i] = res.feasible ? 1 : 0;
        if (res.feasible) {
            double flat = embedding_value(res.embedding);
            double vector_value = embedding_value(emb);
            within[i] = flat <= 2.0 * res.projection_dim * vector_value + kCrossCheckTol ? 1 : 0;
        }
        OutcomeList out;
        out.emplace_back(1, feasible[i] == 1, "instance " + std::to_string(i) + " infeasible");
        return out;
    });
    int hits = 0;
    for (char c : within) hits += c;
    CheckResult stat;
    stat.name = "projected value stays within twice the dimension for at least 90%";
    stat.passed = hits >= 180;
    stat.detail = std::to_string(hits) + "/200 within the factor";
    return finish("embedding-rounding",
                  {"instances evaluate without errors",
                   "projection retries reach a feasible certificate"},
                  slots, {stat});
}

SuiteReport suite_fractional_duality(std::uint64_t seed) {
    auto slots = run_instances(100, [&](int i) {
        Rng rng(instance_seed(seed, 92000 + i));
        int n = uniform_int(rng, 2, 8);
        int m = uniform_int(rng, 1, kExactFractionalEdgeCap);
        std::vector<oracle::RatEdge> edges;
        std::vector<WeightedEdge> doubled;
        std::vector<std::pair<int, int>> seen;
        int guard = 0;
        while (static_cast<int>(edges.size()) < m && ++guard < 200) {
            int u = uniform_int(rng, 0, n - 1), v = uniform_int(rng, 0, n - 1);
            if (u == v) continue;
            std::pair<int, int> key = std::minmax(u, v);
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
            seen.push_back(key);
            Rat w(uniform_int(rng, 1, 16), 8);
            edges.push_back({key.first, key.second, w});
            doubled.push_back({key.first, key.second, to_double(w)});
        }
        auto cert = oracle::exact_fractional_matching(n, edges);
        std::string tag = "instance " + std::to_string(i);
        OutcomeList out;
        bool covers = true;
        for (const auto& e : edges)
            if (cert.cover[e.u] + cert.cover[e.v] < e.w) covers = false;
        out.emplace_back(1, covers, tag + ": cover misses an edge");
        Rat cover_total(0);
        for (const auto& c : cert.cover) cover_total += c;
        out.emplace_back(2, cover_total == cert.value,
                         tag + ": cover " + to_string(cover_total) + " vs value " +
                             to_string(cert.value));
        auto integral = oracle::exact_max_matching(n, doubled);
        Rat integral_value(0);
        for (auto [u, v] : integral.edges) {
            std::pair<int, int> key = std::minmax(u, v);
            for (const auto& e : edges)
                if (std::pair<int, int>(e.u, e.v) == key) integral_value += e.w;
        }
        out.emplace_back(3, integral_value <= cert.value,
                         tag + ": integral " + to_string(integral_value) + " vs fractional " +
                             to_string(cert.value));
        std::vector<Rat> load(n, Rat(0));
        for (std::size_t e = 0; e < edges.size(); ++e) {
            load[edges[e].u] += cert.edge_value[e];
            load[edges[e].v] += cert.edge_value[e];
        }
        bool loads_ok = std::all_of(load.begin(), load.end(),
                                    [](const Rat& l) { return l <= Rat(1); });
        out.emplace_back(4, loads_ok, tag + ": a vertex load exceeds one");
        return out;
    });
    return finish("fractional-duality",
                  {"instances evaluate without errors",
                   "dual cover dominates every edge",
                   "dual cover total equals the primal value",
                   "integral matching at most the fractional optimum",
                   "primal loads stay within capacity"},
                  slots);
}

SuiteReport suite_tree_structure(std::uint64_t seed) {
    auto slots = run_instances(150, [&](int i) {
        Rng rng(instance_seed(seed, 101000 + i));
        OutcomeList out;
        std::string tag = "instance " + std::to_string(i);
        if (i < 100) {
            int n = uniform_int(rng, 2, 30);
            Graph tree = corpus::random_tree(rng, n);
            auto pi = corpus::random_distribution(rng, n);
            auto rooted = bfs_tree(tree, uniform_int(rng, 0, n - 1), pi.p);
            // S(x) = sum of subtree masses over T_x, bottom-up.
            std::vector<double> cascade(n, 0.0);
            for (auto it = rooted.bfs_order.rbegin(); it != rooted.bfs_order.rend(); ++it) {
                cascade[*it] = rooted.subtree_mass[*it];
                for (int c : rooted.children[*it]) cascade[*it] += cascade[c];
            }
            bool counting = true;
            for (int x = 0; x < n; ++x)
                if (cascade[x] - rooted.subtree_mass[x] >
                    rooted.diameter * rooted.subtree_mass[x] + kFeasibilityTol)
                    counting = false;
            out.emplace_back(1, counting, tag + ": cascade exceeds diameter times mass");
            bool sizes = true;
            for (int x = 0; x < n; ++x) {
                int total = 1;
                for (int c : rooted.children[x]) total += rooted.subtree_size[c];
                if (total != rooted.subtree_size[x]) sizes = false;
            }
            out.emplace_back(2, sizes, tag + ": subtree sizes inconsistent");
        } else {
            Graph g = corpus::random_connected_graph(rng, 2, 20);
            int root = uniform_int(rng, 0, g.vertex_count() - 1);
            auto rooted = bfs_tree(g, root);
            auto dist = g.bfs_distances(root);
            bool depths = true;
            for (int x = 0; x < g.vertex_count(); ++x)
                if (rooted.depth[x] != dist[x]) depths = false;
            out.emplace_back(3, depths, describe(g, i) + ": a BFS depth is off");
        }
        return out;
    });

    CheckResult diameters = guarded_check("family diameters pin", [&](std::string& detail) {
        bool ok = diameter(generate(Family::dumbbell, 50)) == 4 &&
                  diameter(generate(Family::binary_tree, 6)) == 10 &&
                  diameter(generate(Family::path, 50)) == 49 &&
                  diameter(generate(Family::cycle, 64)) == 32 &&
                  diameter(generate(Family::star, 100)) == 2 &&
                  diameter(generate(Family::complete, 32)) == 1 &&
                  diameter(generate(Family::clique_matching, 50)) == 2 &&
                  diameter(generate(Family::clique_source, 50, 7)) == 3;
        detail = ok ? "checked 8" : "a family diameter moved";
        return ok;
    });
    return finish("tree-structure",
                  {"instances evaluate without errors",
                   "subtree masses below a vertex stay within diameter times its mass",
                   "subtree sizes are consistent",
                   "BFS tree depths equal hop distances"},
                  slots, {diameters});
}

SuiteReport suite_conductance_relations(std::uint64_t seed) {
    auto slots = run_instances(100, [&](int i) {
        Rng rng(instance_seed(seed, 111000 + i));
        Graph g = corpus::random_connected_graph(rng, 2, 8);
        int n = g.vertex_count();
        long long total_volume = 2LL * g.edge_count();
        std::string tag = describe(g, i);
        OutcomeList out;
        bool adjusted_ok = true, matching_ok = true;
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<int> set;
            long long volume = 0;
            for (int v = 0; v < n; ++v)
                if (mask >> v & 1u) {
                    set.push_back(v);
                    volume += g.degree(v);
                }
            if (volume == 0 || 2 * volume > total_volume) continue;
            Rat plain = edge_conductance_exact(g, set);
            Rat adjusted = adjusted_edge_conductance_exact(g, set);
            if (!(plain <= adjusted && adjusted <= Rat(2) * plain)) adjusted_ok = false;
            if (2 * static_cast<int>(set.size()) <= n) {
                auto cert = matching_conductance_of_set(g, set);
                if (!(cert.matching_cond <= vertex_conductance_of_set(g, set)))
                    matching_ok = false;
                if (cert.matching_cond != Rat(static_cast<long long>(cert.witness.size()),
                                              static_cast<long long>(set.size())))
                    matching_ok = false;
            }
        }
        out.emplace_back(1, adjusted_ok, tag + ": adjusted form left [1,2] times plain");
        out.emplace_back(2, matching_ok, tag + ": matching certificate inconsistent");

        auto oracle_edge = oracle::exact_conductance(g, CutQuantity::edge);
        auto oracle_vertex = oracle::exact_conductance(g, CutQuantity::vertex);
        auto oracle_matching = oracle::exact_conductance(g, CutQuantity::matching);
        auto heuristic = global_conductances(
            g, {CutQuantity::edge, CutQuantity::vertex, CutQuantity::matching}, 0);
        bool heuristic_ok = heuristic.edge && heuristic.vertex && heuristic.matching &&
                            !heuristic.edge->exact && !heuristic.vertex->exact &&
                            !heuristic.matching->exact &&
                            heuristic.edge->edge_cond >= oracle_edge.edge_cond &&
                            heuristic.vertex->vertex_cond >= oracle_vertex.vertex_cond &&
                            heuristic.matching->matching_cond >= oracle_matching.matching_cond;
        if (heuristic_ok) {
            heuristic_ok =
                heuristic.edge->edge_cond == edge_conductance_exact(g, heuristic.edge->set) &&
                heuristic.vertex->vertex_cond ==
                    vertex_conductance_of_set(g, heuristic.vertex->set) &&
                heuristic.matching->matching_cond ==
                    matching_conductance_of_set(g, heuristic.matching->set).matching_cond;
        }
        out.emplace_back(3, heuristic_ok, tag + ": sweep heuristic certificate invalid");
        return out;
    });
    return finish("conductance-relations",
                  {"instances evaluate without errors",
                   "adjusted edge conductance lies within one to two times the plain form",
                   "matching conductance at most vertex conductance on every admissible set",
                   "sweep heuristic returns valid non-exact upper-bound certificates"},
                  slots);
}

SuiteReport suite_goldens(const std::string& fixtures_dir) {
    SuiteReport report;
    report.suite = "goldens";
    std::vector<std::string> files;
    std::error_code ec;
    for (const auto& entry : std::filesystem::directory_iterator(fixtures_dir, ec))
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    if (ec || files.empty()) {
        report.checks.push_back(
            {"fixtures present", false, "missing fixtures at " + fixtures_dir});
        return report;
    }

    Tally tally;
    for (const auto& file : files) {
        try {
            auto golden = io::golden_from_json(io::read_text_file(file));
            Graph g = graph_from_edge_list(golden.graph);
            Rat expect = rat_from_string(golden.value);
            bool ok = false;
            if (golden.quantity == "edge-conductance")
                ok = oracle::exact_conductance(g, CutQuantity::edge).edge_cond == expect;
            else if (golden.quantity == "vertex-conductance")
                ok = oracle::exact_conductance(g, CutQuantity::vertex).vertex_cond == expect;
            else if (golden.quantity == "matching-conductance")
                ok = oracle::exact_conductance(g, CutQuantity::matching).matching_cond == expect;
            else if (golden.quantity == "best-gap-floor")
                ok = oracle::best_gap_search(g, uniform_distribution(g.vertex_count()).p, 6, 0)
                         .gap >= to_double(expect) - kCrossCheckTol;
            tally.add(ok, file + " (" + golden.quantity + " = " + golden.value + ")");
        } catch (const std::exception& e) {
            tally.add(false, file + ": " + e.what());
        }
    }
    report.checks.push_back({"fixtures present", true, std::to_string(files.size()) + " files"});
    report.checks.push_back(tally.result("pinned values reproduce"));
    return report;
}

std::vector<SuiteReport> acceptance_suites(std::uint64_t seed) {
    return {
        suite_sandwich(seed),        suite_directed_matching(seed),
        suite_sweep(seed),           suite_easy_side(),
        suite_almost_mixing(),       suite_continuous_time(),
        suite_perfect_mixing(seed),  suite_canonical_paths(seed),
        suite_eigensolver(),         suite_hitting_example(),
        suite_gap_scaling(),
    };
}

std::vector<SuiteReport> all_suites(std::uint64_t seed, const std::string& fixtures_dir) {
    auto reports = acceptance_suites(seed);
    reports.push_back(suite_coarea(seed));
    reports.push_back(suite_cheeger_rounding(seed));
    reports.push_back(suite_embedding_rounding(seed));
    reports.push_back(suite_fractional_duality(seed));
    reports.push_back(suite_tree_structure(seed));
    reports.push_back(suite_conductance_relations(seed));
    if (!fixtures_dir.empty()) reports.push_back(suite_goldens(fixtures_dir));
    return reports;
}

}  // namespace fastmix::verification

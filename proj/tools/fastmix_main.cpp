#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fastmix/chain_builders.hpp"
#include "fastmix/conductance.hpp"
#include "fastmix/constants.hpp"
#include "fastmix/generators.hpp"
#include "fastmix/graph.hpp"
#include "fastmix/io.hpp"
#include "fastmix/oracle.hpp"
#include "fastmix/rat.hpp"
#include "fastmix/spectral.hpp"
#include "fastmix/verification.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBound = 3;

struct GoldenSpec {
    const char* file;
    fastmix::Family family;
    int primary;
    int secondary;
    const char* quantity;
    const char* value;  // pinned "p/q"
};

const GoldenSpec kGoldenTable[] = {
    {"c4_matching.json", fastmix::Family::cycle, 4, 0, "matching-conductance", "1/1"},
    {"c6_matching.json", fastmix::Family::cycle, 6, 0, "matching-conductance", "2/3"},
    {"star4_vertex.json", fastmix::Family::star, 4, 0, "vertex-conductance", "1/2"},
    {"dumbbell3_vertex.json", fastmix::Family::dumbbell, 3, 0, "vertex-conductance", "1/3"},
    {"p2_bestgap.json", fastmix::Family::path, 2, 0, "best-gap-floor", "1/1"},
    {"c4_bestgap.json", fastmix::Family::cycle, 4, 0, "best-gap-floor", "1/2"},
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty())
        std::cout << text;
    else
        fastmix::io::write_text_file(out_path, text);
}

fastmix::Graph load_graph(const std::string& path) {
    fastmix::Graph g = fastmix::io::read_graph_file(path);
    if (!g.connected()) throw std::domain_error(path + ": graph is not connected");
    return g;
}

int run_gen(const std::string& family, int n, int k, const std::string& out_path) {
    fastmix::Graph g = fastmix::generate(fastmix::family_from_string(family), n, k);
    emit(fastmix::graph_to_edge_list(g), out_path);
    return kExitOk;
}

ordered_json certificate_json(const fastmix::CutCertificate& cert) {
    return ordered_json::parse(fastmix::io::certificate_to_json(cert));
}

int run_analyze(const std::string& graph_path, bool as_json, std::optional<int> exact_limit,
                const std::string& out_path) {
    fastmix::Graph g = load_graph(graph_path);
    auto all = {fastmix::CutQuantity::edge, fastmix::CutQuantity::vertex,
                fastmix::CutQuantity::matching};
    auto result = fastmix::global_conductances(g, all, exact_limit);
    const auto& edge = *result.edge;
    const auto& vertex = *result.vertex;
    const auto& matching = *result.matching;
    bool exact = edge.exact && vertex.exact && matching.exact;
    bool m_le_v = matching.matching_cond <= vertex.vertex_cond;
    bool v_le_4m = vertex.vertex_cond <= fastmix::Rat(4) * matching.matching_cond;

    std::string text;
    if (as_json) {
        ordered_json doc;
        doc["schema"] = "fastmix.analysis/1";
        doc["n"] = g.vertex_count();
        doc["m"] = g.edge_count();
        doc["diameter"] = fastmix::diameter(g);
        doc["edge"] = certificate_json(edge);
        doc["vertex"] = certificate_json(vertex);
        doc["matching"] = certificate_json(matching);
        ordered_json sandwich;
        sandwich["checked"] = exact;
        if (exact) {
            sandwich["matching_le_vertex"] = m_le_v;
            sandwich["vertex_le_four_matching"] = v_le_4m;
        }
        doc["sandwich"] = sandwich;
        text = doc.dump(2) + "\n";
    } else {
        auto describe_set = [](const std::vector<int>& set) {
            std::string s = "{";
            for (std::size_t i = 0; i < set.size(); ++i)
                s += (i ? " " : "") + std::to_string(set[i]);
            return s + "}";
        };
        text += "n: " + std::to_string(g.vertex_count()) + "\n";
        text += "m: " + std::to_string(g.edge_count()) + "\n";
        text += "diameter: " + std::to_string(fastmix::diameter(g)) + "\n";
        text += "edge-conductance: " + fastmix::to_string(edge.edge_cond) +
                (edge.exact ? "" : " (heuristic)") + " set=" + describe_set(edge.set) + "\n";
        text += "vertex-conductance: " + fastmix::to_string(vertex.vertex_cond) +
                (vertex.exact ? "" : " (heuristic)") + " set=" + describe_set(vertex.set) + "\n";
        text += "matching-conductance: " + fastmix::to_string(matching.matching_cond) +
                (matching.exact ? "" : " (heuristic)") + " set=" + describe_set(matching.set) +
                "\n";
        if (exact)
            text += std::string("sandwich: ") + (m_le_v && v_le_4m ? "ok" : "VIOLATED") + "\n";
        else
            text += "sandwich: skipped (heuristic certificates)\n";
    }
    emit(text, out_path);
    if (exact && !(m_le_v && v_le_4m)) return kExitBound;
    return kExitOk;
}

fastmix::TargetDistribution load_distribution(const std::string& spec, int n) {
    if (spec == "uniform") return fastmix::uniform_distribution(n);
    fastmix::TargetDistribution pi{fastmix::io::read_distribution_file(spec, n)};
    fastmix::validate_distribution(pi, n);
    return pi;
}

int run_build(const std::string& graph_path, const std::string& mode, double epsilon,
              const std::string& pi_spec, std::optional<int> root, const std::string& out_dir) {
    fastmix::Graph g = load_graph(graph_path);
    auto pi = load_distribution(pi_spec, g.vertex_count());
    std::filesystem::create_directories(out_dir);
    auto path_in = [&](const std::string& name) {
        return (std::filesystem::path(out_dir) / name).string();
    };

    ordered_json report;
    report["schema"] = "fastmix.build/1";
    report["mode"] = mode;
    report["n"] = g.vertex_count();
    bool bounds_ok = true;

    if (mode == "almost-mix") {
        auto rep = fastmix::almost_mixing_weighting(g, pi, epsilon, {}, root);
        fastmix::io::write_text_file(path_in("weighting.tsv"),
                                     fastmix::io::weighting_to_tsv(rep.weighting));
        fastmix::io::write_text_file(path_in("chain.tsv"), fastmix::io::chain_to_tsv(rep.chain));
        bounds_ok = rep.min_ratio >= 1.0 / (1.0 + epsilon) - fastmix::kFeasibilityTol &&
                    rep.total_weight <= 1.0 + epsilon + fastmix::kFeasibilityTol &&
                    rep.min_flow_ratio >= 1.0 - epsilon - fastmix::kFeasibilityTol &&
                    rep.gap >= rep.gap_bound - fastmix::kCrossCheckTol &&
                    rep.pre_gap >= rep.pre_gap_bound - fastmix::kCrossCheckTol;
        report["epsilon"] = epsilon;
        report["graph_diameter"] = rep.graph_diameter;
        report["tree_diameter"] = rep.tree_diameter;
        report["total_weight"] = rep.total_weight;
        report["min_ratio"] = rep.min_ratio;
        report["min_flow_ratio"] = rep.min_flow_ratio;
        report["hat_cond"] = rep.hat_cond;
        report["gap"] = rep.gap;
        report["gap_bound"] = rep.gap_bound;
        report["pre_gap"] = rep.pre_gap;
        report["pre_gap_bound"] = rep.pre_gap_bound;
        std::cout << "gap " << rep.gap << " vs bound " << rep.gap_bound << ", min ratio "
                  << rep.min_ratio << "\n";
    } else if (mode == "continuous") {
        auto rep = fastmix::continuous_time_weighting(g, root);
        fastmix::io::write_text_file(path_in("rates.tsv"),
                                     fastmix::io::weighting_to_tsv(rep.rates));
        bounds_ok = rep.average_rate <= 1.0 + fastmix::kFeasibilityTol &&
                    rep.gap >= rep.gap_bound - fastmix::kCrossCheckTol &&
                    rep.max_hitting <= rep.hitting_bound + fastmix::kCrossCheckTol;
        report["root"] = rep.tree.root;
        report["graph_diameter"] = rep.graph_diameter;
        report["tree_diameter"] = rep.tree_diameter;
        report["average_rate"] = rep.average_rate;
        report["gap"] = rep.gap;
        report["gap_bound"] = rep.gap_bound;
        report["max_hitting"] = rep.max_hitting;
        report["hitting_bound"] = rep.hitting_bound;
        std::cout << "generator gap " << rep.gap << " vs bound " << rep.gap_bound
                  << ", average rate " << rep.average_rate << "\n";
    } else {
        auto schedule = fastmix::perfect_mixing_schedule(g, pi, root);
        fastmix::io::write_schedule(out_dir, schedule);
        double tv = fastmix::schedule_tv_error(schedule);
        bounds_ok = tv <= fastmix::kScheduleTvTol;
        report["steps"] = schedule.steps.size();
        report["diameter"] = schedule.diam;
        report["root"] = schedule.root;
        report["tv_error"] = tv;
        std::cout << schedule.steps.size() << " steps, worst TV " << tv << "\n";
    }
    report["bounds_ok"] = bounds_ok;
    fastmix::io::write_text_file(path_in("report.json"), report.dump(2) + "\n");
    if (!bounds_ok) {
        std::cerr << "error: a guaranteed bound failed; see " << path_in("report.json") << "\n";
        return kExitBound;
    }
    return kExitOk;
}

void write_goldens(const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& spec : kGoldenTable) {
        fastmix::io::Golden golden;
        golden.graph =
            fastmix::graph_to_edge_list(fastmix::generate(spec.family, spec.primary, spec.secondary));
        golden.quantity = spec.quantity;
        golden.value = spec.value;
        fastmix::io::write_text_file((std::filesystem::path(dir) / spec.file).string(),
                                     fastmix::io::golden_to_json(golden));
    }
}

int run_verify(const std::string& fixtures_dir, std::uint64_t seed, bool regen) {
    if (regen) write_goldens(fixtures_dir);
    bool have_fixtures = false;
    if (std::filesystem::is_directory(fixtures_dir))
        for (const auto& entry : std::filesystem::directory_iterator(fixtures_dir))
            if (entry.path().extension() == ".json") have_fixtures = true;
    if (!have_fixtures) {
        std::cerr << "error: missing fixtures at " << fixtures_dir
                  << " (run with --regen-golden to create them)\n";
        return kExitUsage;
    }

    auto reports = fastmix::verification::all_suites(seed, fixtures_dir);
    int failures = 0;
    for (const auto& suite : reports)
        for (const auto& check : suite.checks) {
            if (!check.passed) ++failures;
            std::cout << "[" << suite.suite << "] " << check.name << ": "
                      << (check.passed ? "ok" : "FAIL") << " (" << check.detail << ")\n";
        }
    if (failures > 0) {
        std::cout << failures << " checks failed\n";
        return kExitBound;
    }
    std::cout << "all checks passed\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Fast-mixing chain construction and conductance certificates"};
    app.require_subcommand(1);

    auto* gen = app.add_subcommand("gen", "Generate a named family instance as an edge list");
    std::string gen_family;
    int gen_n = 0, gen_k = 0;
    std::string gen_out;
    gen->add_option("--family", gen_family,
                    "path, cycle, star, complete, binary_tree, dumbbell, clique_matching, "
                    "clique_source")
        ->required()
        ->check(CLI::IsMember({"path", "cycle", "star", "complete", "binary_tree", "dumbbell",
                               "clique_matching", "clique_source"}));
    gen->add_option("--n", gen_n, "primary size parameter")->required();
    gen->add_option("--k", gen_k, "secondary parameter (clique_source sources)");
    gen->add_option("--out", gen_out, "output file (default stdout)");

    auto* analyze = app.add_subcommand("analyze", "Conductance certificates for a graph file");
    std::string analyze_graph, analyze_out;
    bool analyze_json = false;
    int analyze_limit = -1;
    analyze->add_option("graph", analyze_graph, "edge-list file")->required();
    analyze->add_flag("--json", analyze_json, "emit a JSON report");
    analyze->add_option("--exact-limit", analyze_limit,
                        "largest n still enumerated exhaustively");
    analyze->add_option("--out", analyze_out, "output file (default stdout)");

    auto* build = app.add_subcommand("build", "Construct a fast-mixing chain for a graph file");
    std::string build_graph, build_mode, build_pi = "uniform", build_out;
    double build_eps = 0.0;
    int build_root = 0;
    build->add_option("graph", build_graph, "edge-list file")->required();
    build->add_option("--mode", build_mode, "almost-mix, continuous, or schedule")
        ->required()
        ->check(CLI::IsMember({"almost-mix", "continuous", "schedule"}));
    auto* eps_opt = build->add_option("--epsilon", build_eps, "almost-mix accuracy in (0,1)");
    build->add_option("--pi", build_pi, "target distribution file or 'uniform'");
    auto* root_opt = build->add_option("--root", build_root, "tree root (default: center)");
    build->add_option("--out", build_out, "output directory")->required();

    auto* verify = app.add_subcommand("verify", "Replay every property suite on a fixed seed");
    std::string verify_fixtures = "fixtures/golden";
    std::uint64_t verify_seed = 0;
    bool verify_regen = false;
    verify->add_option("--fixtures", verify_fixtures, "golden fixture directory");
    verify->add_option("--seed", verify_seed, "suite seed");
    verify->add_flag("--regen-golden", verify_regen, "rewrite the pinned fixtures first");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (gen->parsed()) return run_gen(gen_family, gen_n, gen_k, gen_out);
        if (analyze->parsed()) {
            std::optional<int> limit;
            if (analyze_limit >= 0) limit = analyze_limit;
            return run_analyze(analyze_graph, analyze_json, limit, analyze_out);
        }
        if (build->parsed()) {
            if (build_mode == "almost-mix" && eps_opt->count() == 0) {
                std::cerr << "error: --epsilon is required for --mode almost-mix\n";
                return kExitUsage;
            }
            std::optional<int> root;
            if (root_opt->count() > 0) root = build_root;
            return run_build(build_graph, build_mode, build_eps, build_pi, root, build_out);
        }
        return run_verify(verify_fixtures, verify_seed, verify_regen);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
}

#include "doctest.h"

#include <sys/wait.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "fastmix/chain_builders.hpp"
#include "fastmix/generators.hpp"
#include "fastmix/io.hpp"
#include "fastmix/oracle.hpp"

using namespace fastmix;
namespace fs = std::filesystem;

namespace {

fs::path unique_temp_dir(const std::string& tag) {
    static std::atomic<int> counter{0};
    auto dir = fs::temp_directory_path() /
               ("fastmix_test_" + tag + "_" + std::to_string(counter++));
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("weighting TSV round trip is exact") {
    Graph g = generate(Family::path, 3);
    WeightedGraph wg(g, {0.1, 0.25}, {0.7, 0.0, 0.3});
    auto round = io::weighting_from_tsv(io::weighting_to_tsv(wg));
    CHECK(round.graph().edges() == g.edges());
    CHECK(round.edge_weight_between(0, 1) == 0.1);
    CHECK(round.edge_weight_between(1, 2) == 0.25);
    CHECK(round.loop_weight(0) == 0.7);
    CHECK(round.loop_weight(1) == 0.0);
    CHECK(round.loop_weight(2) == 0.3);
    CHECK(round.total_weight() == wg.total_weight());
}

TEST_CASE("weighting TSV rejects malformed input") {
    CHECK_THROWS_AS(io::weighting_from_tsv(""), ParseError);
    CHECK_THROWS_AS(io::weighting_from_tsv("0 1 0.5\n"), ParseError);
    CHECK_THROWS_AS(io::weighting_from_tsv("n 2\n0 1 -0.5\n"), ParseError);
    CHECK_THROWS_AS(io::weighting_from_tsv("n 2\n0 1 0.5\n1 0 0.5\n"), ParseError);
    CHECK_THROWS_AS(io::weighting_from_tsv("n 2\n0 1 0.5 9\n"), ParseError);
    CHECK_THROWS_AS(io::weighting_from_tsv("n 2\n0 2 0.5\n"), ParseError);
    CHECK_THROWS_AS(io::weighting_from_tsv("n 2\n0 x 0.5\n"), ParseError);
}

TEST_CASE("chain TSV round trip is exact") {
    auto t = uniform_max_degree_chain(generate(Family::star, 3));
    auto round = io::chain_from_tsv(io::chain_to_tsv(t));
    CHECK(round.n == t.n);
    CHECK(round.pi == t.pi);
    for (int i = 0; i < t.n; ++i)
        for (int j = 0; j < t.n; ++j) CHECK(round.at(i, j) == t.at(i, j));

    CHECK_THROWS_AS(io::chain_from_tsv(""), ParseError);
    CHECK_THROWS_AS(io::chain_from_tsv("0\n"), ParseError);
    CHECK_THROWS_AS(io::chain_from_tsv("2 0.5\n1 0\n0 1\n"), ParseError);
    CHECK_THROWS_AS(io::chain_from_tsv("2 0.5 0.5 0.5\n1 0\n0 1\n"), ParseError);
    CHECK_THROWS_AS(io::chain_from_tsv("2 0.5 0.5\n1 0\n"), ParseError);
    CHECK_THROWS_AS(io::chain_from_tsv("2 0.5 0.5\n1\n0 1\n"), ParseError);
    CHECK_THROWS_AS(io::chain_from_tsv("2 0.5 0.5\n1 0 0\n0 1\n"), ParseError);
}

TEST_CASE("certificate JSON keeps the exact rationals") {
    Graph g = generate(Family::dumbbell, 3);
    auto cert = cut_certificate(g, {0, 1, 2});
    cert.exact = false;
    auto round = io::certificate_from_json(io::certificate_to_json(cert));
    CHECK(round.set == cert.set);
    CHECK(round.witness == cert.witness);
    CHECK(round.edge_cond == cert.edge_cond);
    CHECK(round.vertex_cond == cert.vertex_cond);
    CHECK(round.matching_cond == cert.matching_cond);
    CHECK_FALSE(round.exact);

    CHECK_THROWS_AS(io::certificate_from_json("{"), ParseError);
    CHECK_THROWS_AS(io::certificate_from_json("{}"), ParseError);
}

TEST_CASE("spectral report JSON preserves optional fields") {
    auto report = spectral_gap(uniform_max_degree_chain(generate(Family::path, 3)));
    auto round = io::spectral_report_from_json(io::spectral_report_to_json(report));
    CHECK(round.gap == report.gap);
    CHECK(round.eigenvalues == report.eigenvalues);
    CHECK(round.method == report.method);
    REQUIRE(round.relaxation);
    CHECK(*round.relaxation == *report.relaxation);
    CHECK_FALSE(round.average_rate);
    CHECK_FALSE(round.warning);

    auto lap = laplacian_gap(WeightedGraph(Graph(2, {}), {}, {0.0, 0.0}));
    auto lap_round = io::spectral_report_from_json(io::spectral_report_to_json(lap));
    CHECK_FALSE(lap_round.relaxation);
    REQUIRE(lap_round.average_rate);
    CHECK(lap_round.warning);
}

TEST_CASE("schedule directories round trip") {
    Graph g = generate(Family::path, 3);
    auto schedule = perfect_mixing_schedule(g, uniform_distribution(3), 0);
    auto dir = unique_temp_dir("schedule");
    io::write_schedule(dir.string(), schedule);
    auto round = io::read_schedule(dir.string());
    CHECK(round.n == schedule.n);
    CHECK(round.diam == schedule.diam);
    CHECK(round.root == schedule.root);
    CHECK(round.pi == schedule.pi);
    REQUIRE(round.steps.size() == schedule.steps.size());
    for (std::size_t s = 0; s < schedule.steps.size(); ++s)
        for (int i = 0; i < schedule.n; ++i)
            for (int j = 0; j < schedule.n; ++j)
                CHECK(round.steps[s].at(i, j) == schedule.steps[s].at(i, j));

    fs::remove(dir / "step_000.tsv");
    CHECK_THROWS_AS(io::read_schedule(dir.string()), ParseError);
    fs::remove_all(dir);
}

TEST_CASE("golden records round trip") {
    io::Golden golden{"cycle 4", "matching-conductance", "1/1"};
    auto round = io::golden_from_json(io::golden_to_json(golden));
    CHECK(round.graph == golden.graph);
    CHECK(round.quantity == golden.quantity);
    CHECK(round.value == golden.value);
    CHECK_THROWS_AS(io::golden_from_json("{\"graph\": \"cycle 4\"}"), ParseError);
}

TEST_CASE("distribution files skip comments and validate counts") {
    auto dir = unique_temp_dir("dist");
    auto path = (dir / "pi.txt").string();
    io::write_text_file(path, "# stationary masses\n\n0.5\n0.25\n0.25\n");
    CHECK(io::read_distribution_file(path, 3) == std::vector<double>{0.5, 0.25, 0.25});
    CHECK_THROWS_AS(io::read_distribution_file(path, 4), ParseError);
    io::write_text_file(path, "0.5 0.5\n");
    CHECK_THROWS_AS(io::read_distribution_file(path, 2), ParseError);
    io::write_text_file(path, "0.5\nabc\n");
    CHECK_THROWS_AS(io::read_distribution_file(path, 2), ParseError);
    CHECK_THROWS_AS(io::read_distribution_file((dir / "absent.txt").string(), 2), ParseError);
    fs::remove_all(dir);
}

TEST_CASE("missing graph files name the path") {
    CHECK_THROWS_AS(io::read_graph_file("/nonexistent/fastmix-graph.txt"), ParseError);
}

}  // TEST_SUITE

namespace {

struct CliResult {
    int status = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("FASTMIX_BIN");
    REQUIRE_MESSAGE(bin != nullptr, "FASTMIX_BIN must point at the CLI binary");
    CliResult result;
    std::string cmd = std::string(bin) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe))
        result.output.append(buf, got);
    int raw = pclose(pipe);
    result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return result;
}

}  // namespace

TEST_SUITE("cli_smoke") {

TEST_CASE("gen prints an edge list") {
    auto res = run_cli("gen --family path --n 2");
    CHECK(res.status == 0);
    CHECK(res.output == "n 2\n0 1\n");
}

TEST_CASE("gen writes a file that analyze accepts") {
    auto dir = unique_temp_dir("cli_gen");
    auto graph = (dir / "p4.txt").string();
    CHECK(run_cli("gen --family path --n 4 --out " + graph).status == 0);
    auto res = run_cli("analyze " + graph);
    CHECK(res.status == 0);
    CHECK(res.output.find("edge-conductance:") != std::string::npos);
    CHECK(res.output.find("sandwich: ok") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("bad invocations exit with a usage error") {
    CHECK(run_cli("gen --bogus").status == 2);
    CHECK(run_cli("").status == 2);
    CHECK(run_cli("build missing.txt --mode nosuch --out x").status == 2);
}

TEST_CASE("runtime failures exit with one") {
    CHECK(run_cli("analyze /nonexistent/graph.txt").status == 1);
    auto dir = unique_temp_dir("cli_disc");
    auto graph = (dir / "split.txt").string();
    io::write_text_file(graph, "0 1\n2 3\n");
    auto res = run_cli("analyze " + graph);
    CHECK(res.status == 1);
    CHECK(res.output.find("error:") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("analyze emits schema-tagged JSON") {
    auto dir = unique_temp_dir("cli_json");
    auto graph = (dir / "c4.txt").string();
    REQUIRE(run_cli("gen --family cycle --n 4 --out " + graph).status == 0);
    auto res = run_cli("analyze " + graph + " --json");
    REQUIRE(res.status == 0);
    auto j = nlohmann::json::parse(res.output);
    CHECK(j["schema"] == "fastmix.analysis/1");
    CHECK(j["n"] == 4);
    CHECK(j["edge"]["edge_exact"] == "1/2");
    CHECK(j["sandwich"]["checked"] == true);
    fs::remove_all(dir);
}

TEST_CASE("build almost-mix writes a weighting, a chain, and a report") {
    auto dir = unique_temp_dir("cli_build");
    auto graph = (dir / "p4.txt").string();
    REQUIRE(run_cli("gen --family path --n 4 --out " + graph).status == 0);
    auto out = (dir / "out").string();
    auto res = run_cli("build " + graph + " --mode almost-mix --epsilon 0.5 --out " + out);
    CHECK(res.status == 0);
    CHECK(fs::exists(fs::path(out) / "weighting.tsv"));
    CHECK(fs::exists(fs::path(out) / "chain.tsv"));
    REQUIRE(fs::exists(fs::path(out) / "report.json"));
    std::ifstream in(fs::path(out) / "report.json");
    auto j = nlohmann::json::parse(in);
    CHECK(j["schema"] == "fastmix.build/1");
    CHECK(j["bounds_ok"] == true);

    CHECK(run_cli("build " + graph + " --mode almost-mix --out " + out).status == 2);
    fs::remove_all(dir);
}

TEST_CASE("build schedule writes one TSV per step") {
    auto dir = unique_temp_dir("cli_schedule");
    auto graph = (dir / "p3.txt").string();
    REQUIRE(run_cli("gen --family path --n 3 --out " + graph).status == 0);
    auto out = (dir / "sched").string();
    CHECK(run_cli("build " + graph + " --mode schedule --out " + out).status == 0);
    CHECK(fs::exists(fs::path(out) / "manifest.json"));
    CHECK(fs::exists(fs::path(out) / "step_000.tsv"));
    CHECK(fs::exists(fs::path(out) / "step_003.tsv"));
    CHECK_FALSE(fs::exists(fs::path(out) / "step_004.tsv"));
    fs::remove_all(dir);
}

TEST_CASE("build continuous writes rates") {
    auto dir = unique_temp_dir("cli_cont");
    auto graph = (dir / "p3.txt").string();
    REQUIRE(run_cli("gen --family path --n 3 --out " + graph).status == 0);
    auto out = (dir / "rates").string();
    auto res = run_cli("build " + graph + " --mode continuous --out " + out);
    CHECK(res.status == 0);
    CHECK(fs::exists(fs::path(out) / "rates.tsv"));
    CHECK(fs::exists(fs::path(out) / "report.json"));
    fs::remove_all(dir);
}

TEST_CASE("verify requires fixtures unless regenerating") {
    auto dir = unique_temp_dir("cli_verify_missing");
    auto res = run_cli("verify --fixtures " + (dir / "golden").string());
    CHECK(res.status == 2);
    CHECK(res.output.find("--regen-golden") != std::string::npos);
    fs::remove_all(dir);
}

TEST_CASE("verify accepts the committed fixtures") {
    const char* fixtures = std::getenv("FASTMIX_FIXTURES");
    REQUIRE_MESSAGE(fixtures != nullptr, "FASTMIX_FIXTURES must point at the fixtures dir");
    auto res = run_cli("verify --fixtures " + (fs::path(fixtures) / "golden").string());
    CHECK(res.status == 0);
    CHECK(res.output.find("all checks passed") != std::string::npos);
}

TEST_CASE("verify regenerates fixtures and passes end to end") {
    auto dir = unique_temp_dir("cli_verify_full");
    auto fixtures = (dir / "golden").string();
    auto res = run_cli("verify --regen-golden --fixtures " + fixtures);
    CHECK(res.status == 0);
    CHECK(res.output.find("all checks passed") != std::string::npos);
    CHECK(fs::exists(fs::path(fixtures) / "c4_matching.json"));
    CHECK(fs::exists(fs::path(fixtures) / "p2_bestgap.json"));
    fs::remove_all(dir);
}

}  // TEST_SUITE

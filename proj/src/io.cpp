#include "fastmix/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fastmix/rat.hpp"
#include "json.hpp"

namespace fastmix::io {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(const std::string& token, const std::string& what) {
    try {
        std::size_t pos = 0;
        double x = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return x;
    } catch (const std::exception&) {
        throw ParseError("malformed " + what + ": " + token);
    }
}

// Strips '#' comments and returns nonempty lines.
std::vector<std::string> content_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream stream(text);
    std::string line;
    while (std::getline(stream, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream probe(line);
        std::string token;
        if (probe >> token) lines.push_back(line);
    }
    return lines;
}

ordered_json parse_json(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw ParseError("malformed " + what + " JSON: " + e.what());
    }
}

template <class F>
auto json_field(const ordered_json& j, const std::string& key, const std::string& what, F get) {
    if (!j.contains(key)) throw ParseError(what + " JSON missing field \"" + key + "\"");
    try {
        return get(j.at(key));
    } catch (const std::exception& e) {
        throw ParseError(what + " JSON field \"" + key + "\": " + e.what());
    }
}

}  // namespace

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw ParseError("cannot write " + path);
    out << content;
    if (!out.flush()) throw ParseError("cannot write " + path);
}

Graph read_graph_file(const std::string& path) {
    try {
        return graph_from_edge_list(read_text_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::string weighting_to_tsv(const WeightedGraph& w) {
    const Graph& g = w.graph();
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges()[e];
        out << u << "\t" << v << "\t" << format_double(w.edge_weight(e)) << "\n";
    }
    for (int x = 0; x < g.vertex_count(); ++x)
        out << x << "\t" << x << "\t" << format_double(w.loop_weight(x)) << "\n";
    return out.str();
}

WeightedGraph weighting_from_tsv(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty weighting");
    std::istringstream head(lines[0]);
    std::string directive;
    int n = 0;
    if (!(head >> directive >> n) || directive != "n" || n <= 0)
        throw ParseError("weighting must start with an \"n N\" directive");

    std::vector<std::pair<int, int>> edges;
    std::vector<double> edge_weights;
    std::vector<double> loops(n, 0.0);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        std::istringstream row(lines[i]);
        int u = 0, v = 0;
        std::string wtoken;
        if (!(row >> u >> v >> wtoken)) throw ParseError("malformed weighting line: " + lines[i]);
        std::string extra;
        if (row >> extra) throw ParseError("trailing token on weighting line: " + lines[i]);
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("vertex id out of range on line: " + lines[i]);
        double w = parse_double(wtoken, "weight");
        if (w < 0.0) throw ParseError("negative weight on line: " + lines[i]);
        if (u == v) {
            loops[u] = w;
        } else {
            edges.emplace_back(std::min(u, v), std::max(u, v));
            edge_weights.push_back(w);
        }
    }
    Graph g(n, edges);
    if (g.edge_count() != static_cast<int>(edge_weights.size()))
        throw ParseError("duplicate edge in weighting");
    std::vector<double> aligned(g.edge_count(), 0.0);
    for (std::size_t i = 0; i < edges.size(); ++i)
        aligned[g.edge_index(edges[i].first, edges[i].second)] = edge_weights[i];
    return WeightedGraph(std::move(g), std::move(aligned), std::move(loops));
}

std::string chain_to_tsv(const TransitionMatrix& t) {
    std::ostringstream out;
    out << t.n;
    for (double mass : t.pi) out << "\t" << format_double(mass);
    out << "\n";
    for (int i = 0; i < t.n; ++i) {
        for (int j = 0; j < t.n; ++j) out << (j ? "\t" : "") << format_double(t.at(i, j));
        out << "\n";
    }
    return out.str();
}

TransitionMatrix chain_from_tsv(const std::string& text) {
    auto lines = content_lines(text);
    if (lines.empty()) throw ParseError("empty chain");
    std::istringstream head(lines[0]);
    int n = 0;
    if (!(head >> n) || n <= 0) throw ParseError("chain header must start with the size");
    TransitionMatrix t;
    t.n = n;
    t.p = DenseMatrix(n);
    std::string token;
    for (int i = 0; i < n; ++i) {
        if (!(head >> token)) throw ParseError("chain header has too few masses");
        t.pi.push_back(parse_double(token, "stationary mass"));
    }
    if (head >> token) throw ParseError("chain header has too many masses");
    if (static_cast<int>(lines.size()) != n + 1)
        throw ParseError("chain needs exactly " + std::to_string(n) + " rows");
    for (int i = 0; i < n; ++i) {
        std::istringstream row(lines[i + 1]);
        for (int j = 0; j < n; ++j) {
            if (!(row >> token)) throw ParseError("short chain row: " + lines[i + 1]);
            t.at(i, j) = parse_double(token, "transition probability");
        }
        if (row >> token) throw ParseError("long chain row: " + lines[i + 1]);
    }
    return t;
}

std::string certificate_to_json(const CutCertificate& cert) {
    ordered_json j;
    j["schema"] = "fastmix.cut/1";
    j["set"] = cert.set;
    j["edge"] = to_double(cert.edge_cond);
    j["vertex"] = to_double(cert.vertex_cond);
    j["matching"] = to_double(cert.matching_cond);
    j["edge_exact"] = to_string(cert.edge_cond);
    j["vertex_exact"] = to_string(cert.vertex_cond);
    j["matching_exact"] = to_string(cert.matching_cond);
    j["witness"] = ordered_json::array();
    for (const auto& [u, v] : cert.witness) j["witness"].push_back({u, v});
    j["exact"] = cert.exact;
    return j.dump(2) + "\n";
}

CutCertificate certificate_from_json(const std::string& text) {
    auto j = parse_json(text, "certificate");
    CutCertificate cert;
    cert.set = json_field(j, "set", "certificate",
                          [](const ordered_json& v) { return v.get<std::vector<int>>(); });
    cert.edge_cond = rat_from_string(json_field(
        j, "edge_exact", "certificate", [](const ordered_json& v) { return v.get<std::string>(); }));
    cert.vertex_cond = rat_from_string(json_field(
        j, "vertex_exact", "certificate",
        [](const ordered_json& v) { return v.get<std::string>(); }));
    cert.matching_cond = rat_from_string(json_field(
        j, "matching_exact", "certificate",
        [](const ordered_json& v) { return v.get<std::string>(); }));
    auto witness = json_field(j, "witness", "certificate", [](const ordered_json& v) {
        return v.get<std::vector<std::vector<int>>>();
    });
    for (const auto& pair : witness) {
        if (pair.size() != 2) throw ParseError("witness entries must be vertex pairs");
        cert.witness.emplace_back(pair[0], pair[1]);
    }
    cert.exact =
        json_field(j, "exact", "certificate", [](const ordered_json& v) { return v.get<bool>(); });
    return cert;
}

std::string spectral_report_to_json(const SpectralReport& report) {
    ordered_json j;
    j["schema"] = "fastmix.spectral/1";
    j["gap"] = report.gap;
    j["relaxation"] = report.relaxation ? ordered_json(*report.relaxation) : ordered_json();
    j["eigenvalues"] = report.eigenvalues;
    j["method"] = report.method;
    j["average_rate"] = report.average_rate ? ordered_json(*report.average_rate) : ordered_json();
    j["warning"] = report.warning;
    return j.dump(2) + "\n";
}

SpectralReport spectral_report_from_json(const std::string& text) {
    auto j = parse_json(text, "spectral report");
    SpectralReport report;
    report.gap =
        json_field(j, "gap", "spectral report", [](const ordered_json& v) { return v.get<double>(); });
    if (j.contains("relaxation") && !j.at("relaxation").is_null())
        report.relaxation = j.at("relaxation").get<double>();
    report.eigenvalues = json_field(j, "eigenvalues", "spectral report", [](const ordered_json& v) {
        return v.get<std::vector<double>>();
    });
    report.method = json_field(j, "method", "spectral report",
                               [](const ordered_json& v) { return v.get<std::string>(); });
    if (j.contains("average_rate") && !j.at("average_rate").is_null())
        report.average_rate = j.at("average_rate").get<double>();
    if (j.contains("warning")) report.warning = j.at("warning").get<bool>();
    return report;
}

namespace {

std::string step_file_name(int index) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "step_%03d.tsv", index);
    return buf;
}

}  // namespace

void write_schedule(const std::string& dir, const ChainSchedule& schedule) {
    std::filesystem::create_directories(dir);
    ordered_json manifest;
    manifest["schema"] = "fastmix.schedule/1";
    manifest["steps"] = static_cast<int>(schedule.steps.size());
    manifest["diam"] = schedule.diam;
    manifest["root"] = schedule.root;
    manifest["n"] = schedule.n;
    manifest["pi"] = schedule.pi;
    manifest["files"] = ordered_json::array();
    for (std::size_t i = 0; i < schedule.steps.size(); ++i) {
        auto name = step_file_name(static_cast<int>(i));
        manifest["files"].push_back(name);
        write_text_file(dir + "/" + name, chain_to_tsv(schedule.steps[i]));
    }
    write_text_file(dir + "/manifest.json", manifest.dump(2) + "\n");
}

ChainSchedule read_schedule(const std::string& dir) {
    auto manifest = parse_json(read_text_file(dir + "/manifest.json"), "schedule manifest");
    ChainSchedule schedule;
    schedule.n = json_field(manifest, "n", "schedule manifest",
                            [](const ordered_json& v) { return v.get<int>(); });
    schedule.diam = json_field(manifest, "diam", "schedule manifest",
                               [](const ordered_json& v) { return v.get<int>(); });
    schedule.root = json_field(manifest, "root", "schedule manifest",
                               [](const ordered_json& v) { return v.get<int>(); });
    schedule.pi = json_field(manifest, "pi", "schedule manifest", [](const ordered_json& v) {
        return v.get<std::vector<double>>();
    });
    auto files = json_field(manifest, "files", "schedule manifest", [](const ordered_json& v) {
        return v.get<std::vector<std::string>>();
    });
    int steps = json_field(manifest, "steps", "schedule manifest",
                           [](const ordered_json& v) { return v.get<int>(); });
    if (steps != static_cast<int>(files.size()))
        throw ParseError("schedule manifest step count disagrees with its file list");
    for (const auto& name : files) {
        auto step = chain_from_tsv(read_text_file(dir + "/" + name));
        if (step.n != schedule.n) throw ParseError("schedule step size mismatch in " + name);
        schedule.steps.push_back(std::move(step));
    }
    return schedule;
}

std::string golden_to_json(const Golden& golden) {
    ordered_json j;
    j["schema"] = "fastmix.golden/1";
    j["graph"] = golden.graph;
    j["quantity"] = golden.quantity;
    j["value"] = golden.value;
    return j.dump(2) + "\n";
}

Golden golden_from_json(const std::string& text) {
    auto j = parse_json(text, "golden");
    Golden golden;
    golden.graph = json_field(j, "graph", "golden",
                              [](const ordered_json& v) { return v.get<std::string>(); });
    golden.quantity = json_field(j, "quantity", "golden",
                                 [](const ordered_json& v) { return v.get<std::string>(); });
    golden.value = json_field(j, "value", "golden",
                              [](const ordered_json& v) { return v.get<std::string>(); });
    return golden;
}

std::vector<double> read_distribution_file(const std::string& path, int n) {
    auto lines = content_lines(read_text_file(path));
    if (static_cast<int>(lines.size()) != n)
        throw ParseError(path + ": expected " + std::to_string(n) + " masses, found " +
                         std::to_string(lines.size()));
    std::vector<double> masses;
    for (const auto& line : lines) {
        std::istringstream row(line);
        std::string token, extra;
        row >> token;
        if (row >> extra) throw ParseError(path + ": one mass per line, got: " + line);
        masses.push_back(parse_double(token, "stationary mass"));
    }
    return masses;
}

}  // namespace fastmix::io

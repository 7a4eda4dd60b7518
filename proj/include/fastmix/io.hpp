#pragma once

#include <string>
#include <vector>

#include "fastmix/chain_builders.hpp"
#include "fastmix/conductance.hpp"
#include "fastmix/graph.hpp"
#include "fastmix/spectral.hpp"

namespace fastmix::io {

// File helpers; failures surface as ParseError with the path in the message.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);
Graph read_graph_file(const std::string& path);

// Weighting: "n N" directive, then one "u v w" line per edge and one
// "x x w" line per vertex loop. Doubles round-trip exactly.
std::string weighting_to_tsv(const WeightedGraph& w);
WeightedGraph weighting_from_tsv(const std::string& text);

// Chain: header "n pi(0) ... pi(n-1)", then the n transition rows.
std::string chain_to_tsv(const TransitionMatrix& t);
TransitionMatrix chain_from_tsv(const std::string& text);

// JSON with schema tags and fixed key order. Conductances appear both as
// doubles and as exact "p/q" strings.
std::string certificate_to_json(const CutCertificate& cert);
CutCertificate certificate_from_json(const std::string& text);
std::string spectral_report_to_json(const SpectralReport& report);
SpectralReport spectral_report_from_json(const std::string& text);

// Schedule directory: manifest.json {steps, diam, root, n, pi, files} plus
// one chain TSV per step.
void write_schedule(const std::string& dir, const ChainSchedule& schedule);
ChainSchedule read_schedule(const std::string& dir);

// Pinned regression value for one graph/quantity pair; value is "p/q".
struct Golden {
    std::string graph;
    std::string quantity;
    std::string value;
};
std::string golden_to_json(const Golden& golden);
Golden golden_from_json(const std::string& text);

// One stationary mass per line; '#' comments and blank lines are skipped.
std::vector<double> read_distribution_file(const std::string& path, int n);

}  // namespace fastmix::io

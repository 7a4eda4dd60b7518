#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace fastmix {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on dense 0-based vertex ids. Edges are stored
// normalized (u < v), sorted, and deduplicated; self-loops are rejected.
class Graph {
  public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    // (neighbor, edge index) pairs, ascending by neighbor id.
    const std::vector<std::pair<int, int>>& incident(int v) const { return inc_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;
    // Index into edges() for {u, v}, or -1.
    int edge_index(int u, int v) const;
    bool connected() const { return connected_; }

    // Hop distances from src; unreachable vertices get -1.
    std::vector<int> bfs_distances(int src) const;

  private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<std::vector<std::pair<int, int>>> inc_;
    bool connected_ = true;
};

// Parses "u v" lines. '#' starts a comment, blank lines are skipped, and an
// optional leading "n N" directive pins the vertex count (required only for
// the edgeless single-vertex graph). Every id in [0, n) must occur.
Graph graph_from_edge_list(const std::string& text);

// Inverse of graph_from_edge_list; emits the "n N" directive first.
std::string graph_to_edge_list(const Graph& g);

// Nonnegative weights on the edges of an underlying graph plus per-vertex
// self-loop weights. vertex_weight(x) is loop(x) + sum of incident edge
// weights; total_weight() sums vertex weights (each edge counts twice).
class WeightedGraph {
  public:
    WeightedGraph() = default;
    explicit WeightedGraph(Graph g);
    WeightedGraph(Graph g, std::vector<double> edge_weights, std::vector<double> loop_weights);

    const Graph& graph() const { return g_; }
    int vertex_count() const { return g_.vertex_count(); }
    double edge_weight(int edge_index) const { return edge_w_.at(edge_index); }
    double edge_weight_between(int u, int v) const;
    double loop_weight(int v) const { return loop_w_.at(v); }
    void set_edge_weight(int edge_index, double w);
    void add_edge_weight(int edge_index, double w);
    void set_loop_weight(int v, double w);
    double vertex_weight(int v) const;
    double total_weight() const;
    // Stationary distribution of the induced walk: vertex_weight / total.
    std::vector<double> stationary() const;

  private:
    Graph g_;
    std::vector<double> edge_w_;
    std::vector<double> loop_w_;
};

// BFS spanning tree with subtree bookkeeping. subtree_mass uses the supplied
// per-vertex measure; subtree_size counts vertices. diameter is the hop
// diameter of the tree itself.
struct RootedSpanningTree {
    int root = 0;
    std::vector<int> parent;   // -1 at the root
    std::vector<int> depth;
    std::vector<std::vector<int>> children;
    std::vector<int> bfs_order;
    std::vector<std::pair<int, int>> tree_edges;  // (child, parent)
    std::vector<double> subtree_mass;
    std::vector<int> subtree_size;
    int diameter = 0;

    int max_depth() const;
    // Path root -> ... -> v.
    std::vector<int> path_from_root(int v) const;
};

RootedSpanningTree bfs_tree(const Graph& g, int root, const std::vector<double>& measure = {});

int diameter(const Graph& g);
int eccentricity(const Graph& g, int v);
// Default root choice: minimum eccentricity, smallest id on ties.
int min_eccentricity_vertex(const Graph& g);

}  // namespace fastmix

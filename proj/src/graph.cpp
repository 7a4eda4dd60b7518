#include "fastmix/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "fastmix/parallel.hpp"

namespace fastmix {

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop on vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    adj_.assign(n_, {});
    inc_.assign(n_, {});
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        auto [u, v] = edges_[e];
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        inc_[u].push_back({v, e});
        inc_[v].push_back({u, e});
    }
    for (int v = 0; v < n_; ++v) {
        std::sort(adj_[v].begin(), adj_[v].end());
        std::sort(inc_[v].begin(), inc_[v].end());
    }

    connected_ = true;
    if (n_ > 1) {
        auto dist = bfs_distances(0);
        connected_ = std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
    }
}

bool Graph::has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

int Graph::edge_index(int u, int v) const {
    if (u == v || u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::vector<int> Graph::bfs_distances(int src) const {
    if (src < 0 || src >= n_) throw std::invalid_argument("bfs source out of range");
    std::vector<int> dist(n_, -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        for (int y : adj_[x]) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

Graph graph_from_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::optional<int> declared;
    int max_id = -1;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;
        auto where = [&] { return " (line " + std::to_string(lineno) + ")"; };
        if (first == "n") {
            long long count;
            std::string extra;
            if (!(ls >> count) || (ls >> extra) || count < 1)
                throw ParseError("malformed vertex count directive" + where());
            if (declared) throw ParseError("duplicate vertex count directive" + where());
            declared = static_cast<int>(count);
            continue;
        }
        long long u, v;
        std::string extra;
        try {
            u = std::stoll(first);
        } catch (const std::exception&) {
            throw ParseError("expected vertex id, got '" + first + "'" + where());
        }
        if (!(ls >> v) || (ls >> extra))
            throw ParseError("expected exactly two vertex ids" + where());
        if (u < 0 || v < 0) throw ParseError("negative vertex id" + where());
        if (u == v) throw ParseError("self-loop on vertex " + std::to_string(u) + where());
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
        max_id = std::max({max_id, static_cast<int>(u), static_cast<int>(v)});
    }
    int n = max_id + 1;
    if (declared) {
        if (*declared < n)
            throw ParseError("vertex count directive " + std::to_string(*declared) +
                             " below largest id " + std::to_string(max_id));
        n = *declared;
    }
    if (n == 0) throw ParseError("no edges and no vertex count directive");
    std::vector<bool> seen(n, false);
    for (auto [u, v] : edges) seen[u] = seen[v] = true;
    if (n > 1) {
        for (int v = 0; v < n; ++v)
            if (!seen[v])
                throw ParseError("vertex id " + std::to_string(v) +
                                 " missing; ids must be dense");
    }
    return Graph(n, std::move(edges));
}

std::string graph_to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << u << " " << v << "\n";
    return out.str();
}

WeightedGraph::WeightedGraph(Graph g)
    : g_(std::move(g)),
      edge_w_(g_.edge_count(), 0.0),
      loop_w_(g_.vertex_count(), 0.0) {}

WeightedGraph::WeightedGraph(Graph g, std::vector<double> edge_weights,
                             std::vector<double> loop_weights)
    : g_(std::move(g)), edge_w_(std::move(edge_weights)), loop_w_(std::move(loop_weights)) {
    if (static_cast<int>(edge_w_.size()) != g_.edge_count())
        throw std::invalid_argument("edge weight count mismatch");
    if (static_cast<int>(loop_w_.size()) != g_.vertex_count())
        throw std::invalid_argument("loop weight count mismatch");
    for (double w : edge_w_)
        if (!(w >= 0.0)) throw std::invalid_argument("negative edge weight");
    for (double w : loop_w_)
        if (!(w >= 0.0)) throw std::invalid_argument("negative loop weight");
}

double WeightedGraph::edge_weight_between(int u, int v) const {
    int e = g_.edge_index(u, v);
    return e < 0 ? 0.0 : edge_w_[e];
}

void WeightedGraph::set_edge_weight(int edge_index, double w) {
    if (!(w >= 0.0)) throw std::invalid_argument("negative edge weight");
    edge_w_.at(edge_index) = w;
}

void WeightedGraph::add_edge_weight(int edge_index, double w) {
    set_edge_weight(edge_index, edge_w_.at(edge_index) + w);
}

void WeightedGraph::set_loop_weight(int v, double w) {
    if (!(w >= 0.0)) throw std::invalid_argument("negative loop weight");
    loop_w_.at(v) = w;
}

double WeightedGraph::vertex_weight(int v) const {
    double s = loop_w_.at(v);
    for (auto [_, e] : g_.incident(v)) s += edge_w_[e];
    return s;
}

double WeightedGraph::total_weight() const {
    double s = std::accumulate(loop_w_.begin(), loop_w_.end(), 0.0);
    for (double w : edge_w_) s += 2.0 * w;
    return s;
}

std::vector<double> WeightedGraph::stationary() const {
    double total = total_weight();
    if (total <= 0.0) throw std::domain_error("weighting has zero total weight");
    std::vector<double> pi(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) pi[v] = vertex_weight(v) / total;
    return pi;
}

int RootedSpanningTree::max_depth() const {
    return depth.empty() ? 0 : *std::max_element(depth.begin(), depth.end());
}

std::vector<int> RootedSpanningTree::path_from_root(int v) const {
    std::vector<int> path;
    for (int x = v; x >= 0; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    return path;
}

RootedSpanningTree bfs_tree(const Graph& g, int root, const std::vector<double>& measure) {
    int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");
    if (!g.connected()) throw std::domain_error("graph is not connected");
    if (!measure.empty() && static_cast<int>(measure.size()) != n)
        throw std::invalid_argument("measure size mismatch");

    RootedSpanningTree t;
    t.root = root;
    t.parent.assign(n, -1);
    t.depth.assign(n, -1);
    t.children.assign(n, {});
    t.bfs_order.reserve(n);
    std::deque<int> queue{root};
    t.depth[root] = 0;
    while (!queue.empty()) {
        int x = queue.front();
        queue.pop_front();
        t.bfs_order.push_back(x);
        for (int y : g.neighbors(x)) {
            if (t.depth[y] < 0) {
                t.depth[y] = t.depth[x] + 1;
                t.parent[y] = x;
                t.children[x].push_back(y);
                queue.push_back(y);
            }
        }
    }
    for (int v : t.bfs_order)
        if (v != root) t.tree_edges.push_back({v, t.parent[v]});

    t.subtree_mass.assign(n, 0.0);
    t.subtree_size.assign(n, 0);
    for (auto it = t.bfs_order.rbegin(); it != t.bfs_order.rend(); ++it) {
        int v = *it;
        t.subtree_mass[v] += measure.empty() ? 1.0 : measure[v];
        t.subtree_size[v] += 1;
        if (t.parent[v] >= 0) {
            t.subtree_mass[t.parent[v]] += t.subtree_mass[v];
            t.subtree_size[t.parent[v]] += t.subtree_size[v];
        }
    }

    if (n == 1) {
        t.diameter = 0;
    } else {
        Graph tree_graph(n, t.tree_edges);
        auto d0 = tree_graph.bfs_distances(root);
        int far = static_cast<int>(std::max_element(d0.begin(), d0.end()) - d0.begin());
        auto d1 = tree_graph.bfs_distances(far);
        t.diameter = *std::max_element(d1.begin(), d1.end());
    }
    return t;
}

int eccentricity(const Graph& g, int v) {
    auto dist = g.bfs_distances(v);
    int ecc = 0;
    for (int d : dist) {
        if (d < 0) throw std::domain_error("graph is not connected");
        ecc = std::max(ecc, d);
    }
    return ecc;
}

int diameter(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::domain_error("empty graph has no diameter");
    if (!g.connected()) throw std::domain_error("graph is not connected");
    std::vector<int> ecc(n, 0);
    parallel_for(n, [&](int v) { ecc[v] = eccentricity(g, v); });
    return *std::max_element(ecc.begin(), ecc.end());
}

int min_eccentricity_vertex(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) throw std::domain_error("empty graph has no root");
    if (!g.connected()) throw std::domain_error("graph is not connected");
    std::vector<int> ecc(n, 0);
    parallel_for(n, [&](int v) { ecc[v] = eccentricity(g, v); });
    return static_cast<int>(std::min_element(ecc.begin(), ecc.end()) - ecc.begin());
}

}  // namespace fastmix

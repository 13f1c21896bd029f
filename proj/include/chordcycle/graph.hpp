#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chordcycle/vertex_set.hpp"

namespace chordcycle {

using Edge = std::pair<int, int>;

// Immutable simple undirected graph on vertices 0..n-1. Adjacency is kept as
// one VertexSet per vertex; every operation that "modifies" a graph returns a
// new one, so graphs can be shared freely across scan workers.
class Graph {
public:
    Graph() = default;

    // Rejects out-of-range endpoints and self-loops; duplicate edges collapse.
    static Graph from_edge_list(int n, std::span<const Edge> edges);
    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.end()));
    }

    static Graph empty(int n);
    static Graph complete(int n);
    static Graph cycle(int n);  // C_n, n >= 3
    static Graph path(int n);
    static Graph complete_bipartite(int a, int b);

    int order() const { return n_; }
    int edge_count() const;
    bool adjacent(int u, int v) const { return adj_[u].contains(v); }
    int degree(int v) const { return adj_[v].size(); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    std::vector<Edge> edges() const;

    // Induced subgraph on `keep`; old_label maps new ids back to old ones.
    Graph induced(const VertexSet& keep, std::vector<int>* old_label = nullptr) const;

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;
    int n_ = 0;
    std::vector<VertexSet> adj_;
};

// The one mutable entry point; everything public hands out finished graphs.
class GraphBuilder {
public:
    explicit GraphBuilder(int n);
    void add_edge(int u, int v);
    bool adjacent(int u, int v) const { return g_.adj_[u].contains(v); }
    int order() const { return g_.n_; }
    Graph build() { return std::move(g_); }

private:
    Graph g_;
};

struct ContractionResult {
    Graph graph;
    // old vertex id -> new vertex id; both contracted endpoints map to the
    // merged vertex.
    std::vector<int> vertex_map;
    int merged_vertex;
};

// G/uv for an edge uv: endpoints merge into one vertex adjacent to
// N(u) u N(v) \ {u,v}. Throws when uv is not an edge.
ContractionResult contract_edge(const Graph& g, int u, int v);

// Disjoint union plus all cross edges; h's vertices are shifted by g.order().
Graph join(const Graph& g, const Graph& h);

int min_degree(const Graph& g);

bool is_connected(const Graph& g);

struct TwoConnectivity {
    bool two_connected = false;
    std::optional<int> cut_vertex;  // set when a single cut vertex exists
    explicit operator bool() const { return two_connected; }
};

struct ThreeConnectivity {
    bool three_connected = false;
    std::optional<std::pair<int, int>> two_cut;  // set when a 2-cut exists
    explicit operator bool() const { return three_connected; }
};

TwoConnectivity is_two_connected(const Graph& g);
ThreeConnectivity is_three_connected(const Graph& g);

struct DistanceLayers {
    std::vector<VertexSet> layers;  // layers[0] == s
    VertexSet unreachable;
};

// BFS layers L_i = { u : d(u, s) = i }. Throws on empty s.
DistanceLayers distance_layers(const Graph& g, const VertexSet& s);

// Connected components of the induced subgraph on V \ s, as vertex sets of
// the original graph, ordered by smallest member.
std::vector<VertexSet> components_minus(const Graph& g, const VertexSet& s);

}  // namespace chordcycle

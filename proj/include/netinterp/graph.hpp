#pragma once

#include <cstdint>
#include <unordered_set>
#include <vector>

namespace netinterp {

using Vertex = int32_t;

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    bool operator==(const Edge&) const = default;
    bool operator<(const Edge& o) const { return u != o.u ? u < o.u : v < o.v; }
};

// Simple graph on a fixed vertex set {0, ..., n-1}. Undirected edges are
// stored canonically (smaller endpoint first); directed graphs use ordered
// pairs over the same code paths. No self-loops, no multi-edges.
class Graph {
public:
    explicit Graph(int n, bool directed = false);

    int vertex_count() const { return n_; }
    bool directed() const { return directed_; }
    int64_t edge_count() const { return static_cast<int64_t>(keys_.size()); }

    bool has_edge(Vertex u, Vertex v) const;
    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    // Present becomes absent and vice versa.
    void toggle_edge(Vertex u, Vertex v);

    // Neighbor list (out-neighbors when directed). Order is not specified.
    const std::vector<Vertex>& neighbors(Vertex v) const;
    int64_t degree(Vertex v) const;

    // Canonical (u, v) with u < v when undirected.
    Edge canonical(Vertex u, Vertex v) const;

    // Edges sorted canonically; used by serialization and equality.
    std::vector<Edge> sorted_edges() const;

    bool operator==(const Graph& other) const;

    // Size of the edge universe: C(n,2) undirected, n(n-1) directed.
    int64_t max_edit_distance() const;

    // Bijection between canonical edges and [0, max_edit_distance()).
    int64_t edge_index(Vertex u, Vertex v) const;
    Edge edge_at(int64_t index) const;

private:
    void check_pair(Vertex u, Vertex v) const;
    int64_t key(const Edge& e) const { return static_cast<int64_t>(e.u) * n_ + e.v; }

    int n_;
    bool directed_;
    std::vector<std::vector<Vertex>> adj_;
    std::unordered_set<int64_t> keys_;
};

int64_t max_edit_distance(int n, bool directed);

// Bijection between canonical edges and [0, max_edit_distance(n, directed)).
int64_t edge_linear_index(int n, bool directed, const Edge& e);
Edge edge_from_linear_index(int n, bool directed, int64_t index);

// Number of edge edits separating a from b: the size of the symmetric
// difference of their edge sets (Hamming distance of indicator vectors).
int64_t edit_distance(const Graph& a, const Graph& b);

}  // namespace netinterp

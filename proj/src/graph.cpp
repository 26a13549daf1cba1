#include "netinterp/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace netinterp {

Graph::Graph(int n, bool directed) : n_(n), directed_(directed), adj_(static_cast<size_t>(n)) {
    if (n < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
}

void Graph::check_pair(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("Graph: vertex out of range: (" + std::to_string(u) + ", " +
                                    std::to_string(v) + ") on n=" + std::to_string(n_));
    if (u == v) throw std::invalid_argument("Graph: self-loops are not allowed");
}

Edge Graph::canonical(Vertex u, Vertex v) const {
    check_pair(u, v);
    if (!directed_ && u > v) std::swap(u, v);
    return Edge{u, v};
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    return keys_.count(key(canonical(u, v))) > 0;
}

void Graph::add_edge(Vertex u, Vertex v) {
    Edge e = canonical(u, v);
    if (!keys_.insert(key(e)).second) return;
    adj_[e.u].push_back(e.v);
    if (!directed_) adj_[e.v].push_back(e.u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
    Edge e = canonical(u, v);
    if (keys_.erase(key(e)) == 0) return;
    auto drop = [](std::vector<Vertex>& list, Vertex x) {
        auto it = std::find(list.begin(), list.end(), x);
        *it = list.back();
        list.pop_back();
    };
    drop(adj_[e.u], e.v);
    if (!directed_) drop(adj_[e.v], e.u);
}

void Graph::toggle_edge(Vertex u, Vertex v) {
    if (has_edge(u, v))
        remove_edge(u, v);
    else
        add_edge(u, v);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("Graph: vertex out of range");
    return adj_[v];
}

int64_t Graph::degree(Vertex v) const { return static_cast<int64_t>(neighbors(v).size()); }

std::vector<Edge> Graph::sorted_edges() const {
    std::vector<Edge> out;
    out.reserve(keys_.size());
    for (int64_t k : keys_) out.push_back(Edge{static_cast<Vertex>(k / n_), static_cast<Vertex>(k % n_)});
    std::sort(out.begin(), out.end());
    return out;
}

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && directed_ == other.directed_ && keys_ == other.keys_;
}

int64_t Graph::max_edit_distance() const { return netinterp::max_edit_distance(n_, directed_); }

int64_t Graph::edge_index(Vertex u, Vertex v) const { return edge_linear_index(n_, directed_, canonical(u, v)); }

Edge Graph::edge_at(int64_t index) const { return edge_from_linear_index(n_, directed_, index); }

int64_t max_edit_distance(int n, bool directed) {
    if (n < 1) throw std::invalid_argument("max_edit_distance: n must be >= 1");
    int64_t nn = n;
    return directed ? nn * (nn - 1) : nn * (nn - 1) / 2;
}

int64_t edge_linear_index(int n, bool directed, const Edge& e) {
    if (directed) return static_cast<int64_t>(e.u) * (n - 1) + (e.v < e.u ? e.v : e.v - 1);
    // row-major upper triangle: row u holds n-1-u slots
    int64_t a = e.u;
    return a * n - a * (a + 1) / 2 + (e.v - e.u - 1);
}

Edge edge_from_linear_index(int n, bool directed, int64_t index) {
    if (index < 0 || index >= max_edit_distance(n, directed))
        throw std::invalid_argument("edge_from_linear_index: index out of range");
    if (directed) {
        Vertex u = static_cast<Vertex>(index / (n - 1));
        Vertex r = static_cast<Vertex>(index % (n - 1));
        Vertex v = r < u ? r : r + 1;
        return Edge{u, v};
    }
    // invert the triangular row offset; float guess corrected by a short walk
    double nn = static_cast<double>(n);
    int64_t u = static_cast<int64_t>(std::floor(nn - 0.5 - std::sqrt((nn - 0.5) * (nn - 0.5) - 2.0 * static_cast<double>(index))));
    if (u < 0) u = 0;
    if (u > n - 2) u = n - 2;
    auto row_start = [&](int64_t a) { return a * n - a * (a + 1) / 2; };
    while (u > 0 && row_start(u) > index) --u;
    while (u + 1 < n - 1 && row_start(u + 1) <= index) ++u;
    Vertex v = static_cast<Vertex>(u + 1 + (index - row_start(u)));
    return Edge{static_cast<Vertex>(u), v};
}

int64_t edit_distance(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.directed() != b.directed())
        throw std::invalid_argument("edit_distance: graphs must share vertex count and directedness");
    int64_t d = 0;
    for (const Edge& e : a.sorted_edges())
        if (!b.has_edge(e.u, e.v)) ++d;
    for (const Edge& e : b.sorted_edges())
        if (!a.has_edge(e.u, e.v)) ++d;
    return d;
}

}  // namespace netinterp

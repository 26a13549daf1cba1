#include "netinterp/graph_stats.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netinterp {

namespace {

void require_undirected(const Graph& g, const char* who) {
    if (g.directed()) throw std::invalid_argument(std::string(who) + ": undirected graphs only");
}

int64_t common_neighbors(const Graph& g, Vertex u, Vertex v) {
    const auto& nu = g.neighbors(u);
    const auto& nv = g.neighbors(v);
    const auto& small = nu.size() <= nv.size() ? nu : nv;
    Vertex other = nu.size() <= nv.size() ? v : u;
    int64_t c = 0;
    for (Vertex w : small)
        if (w != other && g.has_edge(w, other)) ++c;
    return c;
}

}  // namespace

int64_t triangles_through(const Graph& g, Vertex v) {
    require_undirected(g, "triangles_through");
    const auto& nv = g.neighbors(v);
    int64_t t = 0;
    for (size_t i = 0; i < nv.size(); ++i)
        for (size_t j = i + 1; j < nv.size(); ++j)
            if (g.has_edge(nv[i], nv[j])) ++t;
    return t;
}

double local_clustering(const Graph& g, Vertex v) {
    require_undirected(g, "local_clustering");
    int64_t deg = g.degree(v);
    if (deg <= 1) return 0.0;
    int64_t pairs = deg * (deg - 1) / 2;
    return static_cast<double>(triangles_through(g, v)) / static_cast<double>(pairs);
}

double mean_clustering(const Graph& g) {
    require_undirected(g, "mean_clustering");
    double sum = 0.0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) sum += local_clustering(g, v);
    return sum / static_cast<double>(g.vertex_count());
}

int64_t triangle_count(const Graph& g) {
    require_undirected(g, "triangle_count");
    int64_t total = 0;
    for (const Edge& e : g.sorted_edges()) total += common_neighbors(g, e.u, e.v);
    return total / 3;
}

int64_t wedge_count(const Graph& g) {
    require_undirected(g, "wedge_count");
    int64_t total = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        int64_t deg = g.degree(v);
        total += deg * (deg - 1) / 2;
    }
    return total;
}

double global_clustering(const Graph& g) {
    int64_t wedges = wedge_count(g);
    if (wedges == 0) return 0.0;
    return 3.0 * static_cast<double>(triangle_count(g)) / static_cast<double>(wedges);
}

TrackedGraph::TrackedGraph(Graph g) : g_(std::move(g)), tri_(static_cast<size_t>(g_.vertex_count()), 0) {
    require_undirected(g_, "TrackedGraph");
    for (Vertex v = 0; v < g_.vertex_count(); ++v) tri_[static_cast<size_t>(v)] = triangles_through(g_, v);
    triangles_ = triangle_count(g_);
    wedges_ = wedge_count(g_);
}

void TrackedGraph::toggle_edge(Vertex u, Vertex v) {
    bool adding = !g_.has_edge(u, v);
    // common neighbors are unaffected by the (u,v) edge itself
    const auto& nu = g_.neighbors(u);
    const auto& nv = g_.neighbors(v);
    const auto& small = nu.size() <= nv.size() ? nu : nv;
    Vertex other = nu.size() <= nv.size() ? v : u;
    int64_t cn = 0;
    int64_t sgn = adding ? 1 : -1;
    for (Vertex w : small) {
        if (w != other && g_.has_edge(w, other)) {
            tri_[static_cast<size_t>(w)] += sgn;
            ++cn;
        }
    }
    tri_[static_cast<size_t>(u)] += sgn * cn;
    tri_[static_cast<size_t>(v)] += sgn * cn;
    triangles_ += sgn * cn;
    if (adding) {
        wedges_ += g_.degree(u) + g_.degree(v);
        g_.add_edge(u, v);
    } else {
        g_.remove_edge(u, v);
        wedges_ -= g_.degree(u) + g_.degree(v);
    }
}

double TrackedGraph::mean_clustering() const {
    double sum = 0.0;
    for (Vertex v = 0; v < g_.vertex_count(); ++v) {
        int64_t deg = g_.degree(v);
        if (deg <= 1) continue;
        sum += static_cast<double>(tri_[static_cast<size_t>(v)]) / static_cast<double>(deg * (deg - 1) / 2);
    }
    return sum / static_cast<double>(g_.vertex_count());
}

double TrackedGraph::global_clustering() const {
    if (wedges_ == 0) return 0.0;
    return 3.0 * static_cast<double>(triangles_) / static_cast<double>(wedges_);
}

StatRow stat_row_for(const Graph& g, int64_t step, int64_t d) {
    StatRow row;
    row.step = step;
    row.d = d;
    row.edges = g.edge_count();
    row.mean_cc = mean_clustering(g);
    row.global_cc = global_clustering(g);
    return row;
}

std::vector<StatRow> stats_along_trace(const Graph& start, const Trace& trace, int64_t every) {
    if (every < 1) throw std::invalid_argument("stats_along_trace: stride must be >= 1");
    if (start.vertex_count() != trace.n || start.directed() != trace.directed)
        throw std::invalid_argument("stats_along_trace: start graph does not match trace header");

    TrackedGraph tracked(start);
    std::vector<StatRow> rows;
    auto emit = [&](int64_t step, int64_t d) {
        StatRow row;
        row.step = step;
        row.d = d;
        row.edges = tracked.graph().edge_count();
        row.mean_cc = tracked.mean_clustering();
        row.global_cc = tracked.global_clustering();
        rows.push_back(std::move(row));
    };

    emit(0, trace.initial_distance);
    int64_t step_idx = 0;
    for (const TraceStep& s : trace.steps) {
        bool required_present = (s.advancing == (s.sign == -1));
        if (tracked.graph().has_edge(s.edge.u, s.edge.v) != required_present)
            throw std::runtime_error("stats_along_trace: trace step inconsistent with graph state");
        tracked.toggle_edge(s.edge.u, s.edge.v);
        ++step_idx;
        if (step_idx % every == 0 && step_idx != static_cast<int64_t>(trace.steps.size()))
            emit(step_idx, s.d_after);
    }
    if (!trace.steps.empty()) emit(static_cast<int64_t>(trace.steps.size()), trace.steps.back().d_after);
    return rows;
}

std::string stats_to_csv(const std::vector<StatRow>& rows) {
    std::set<std::string> extra_keys;
    for (const StatRow& r : rows)
        for (const auto& [k, _] : r.extra) extra_keys.insert(k);

    std::ostringstream os;
    os.precision(12);
    os << "step,d,edges,mean_cc,global_cc";
    for (const auto& k : extra_keys) os << ',' << k;
    os << '\n';
    for (const StatRow& r : rows) {
        os << r.step << ',' << r.d << ',' << r.edges << ',' << r.mean_cc << ',' << r.global_cc;
        for (const auto& k : extra_keys) {
            auto it = r.extra.find(k);
            os << ',';
            if (it != r.extra.end()) os << it->second;
        }
        os << '\n';
    }
    return os.str();
}

}  // namespace netinterp

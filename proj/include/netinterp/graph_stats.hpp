#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "netinterp/graph.hpp"
#include "netinterp/interpolation.hpp"

namespace netinterp {

struct StatRow {
    int64_t step = 0;
    int64_t d = 0;
    int64_t edges = 0;
    double mean_cc = 0.0;
    double global_cc = 0.0;
    std::map<std::string, double> extra;
};

// Connected neighbor pairs of v over all neighbor pairs; 0 for degree <= 1.
double local_clustering(const Graph& g, Vertex v);
// Arithmetic mean of local coefficients over all n vertices.
double mean_clustering(const Graph& g);
// 3 * triangles / wedges; 0 when the graph has no wedges.
double global_clustering(const Graph& g);

int64_t triangle_count(const Graph& g);
int64_t wedge_count(const Graph& g);
int64_t triangles_through(const Graph& g, Vertex v);

// Graph plus exact integer triangle/wedge counters maintained across edge
// toggles (O(min degree) per edit). Coefficients are derived on demand, so
// millions of updates accumulate no floating-point drift.
class TrackedGraph {
public:
    explicit TrackedGraph(Graph g);

    const Graph& graph() const { return g_; }
    void toggle_edge(Vertex u, Vertex v);

    int64_t triangle_total() const { return triangles_; }
    int64_t wedge_total() const { return wedges_; }
    double mean_clustering() const;    // O(n)
    double global_clustering() const;  // O(1)

private:
    Graph g_;
    std::vector<int64_t> tri_;  // triangles through each vertex
    int64_t triangles_ = 0;
    int64_t wedges_ = 0;
};

// Incremental replay of a trace with statistics sampled at step 0, every
// `every` steps, and the final step.
std::vector<StatRow> stats_along_trace(const Graph& start, const Trace& trace, int64_t every);

StatRow stat_row_for(const Graph& g, int64_t step, int64_t d);

// CSV with header step,d,edges,mean_cc,global_cc (extra keys become
// additional columns when present in any row).
std::string stats_to_csv(const std::vector<StatRow>& rows);

}  // namespace netinterp

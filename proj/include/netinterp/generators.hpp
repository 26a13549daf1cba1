#pragma once

#include <cstdint>
#include <vector>

#include "netinterp/graph.hpp"
#include "netinterp/graph_stats.hpp"
#include "netinterp/rng.hpp"

namespace netinterp {

Graph erdos_renyi(int n, double p, uint64_t seed, bool directed = false);

struct SbmSpec {
    std::vector<int> block_sizes;
    double p = 0.0;  // in-block
    double q = 0.0;  // cross-block
};

struct SbmSample {
    Graph graph{1, false};
    std::vector<int> labels;
};

SbmSample sbm(const SbmSpec& spec, uint64_t seed);

enum class GrowthModel { Uniform, Preferential, TriangleClosing };

struct GrowthSpec {
    GrowthModel model = GrowthModel::Uniform;
    int m = 1;        // attachment count (uniform / preferential)
    int m_r = 0;      // triangle closing: parent draws
    double p_r = 0.0; // connect-to-parent probability
    int m_n = 0;      // neighbor draws
    double p_n = 0.0; // connect-to-neighbor probability
};

const char* to_string(GrowthModel model);
GrowthModel growth_model_from_string(const std::string& s);

// Starting clique size the growth models use: m, or m_r + m_n + 1.
int default_clique_size(const GrowthSpec& spec);

// Edges the next node (index `active`) would receive. Pure given the RNG.
std::vector<Edge> choose_growth_edges(const Graph& g, int active, const GrowthSpec& spec, Rng& rng);

// Adds node `active` with its edges; returns the new active count.
int grow_step(Graph& g, int active, const GrowthSpec& spec, Rng& rng);

// The edge a decay step removes: a uniformly random node (re-drawn until it
// has a neighbor) severs one neighbor, weighted per the model. Throws when
// the graph has no edges.
Edge choose_decay_edge(const Graph& g, const GrowthSpec& spec, Rng& rng);
void decay_step(Graph& g, const GrowthSpec& spec, Rng& rng);

// Growth / decay record toward one or more target snapshots. Grows by node
// bursts (or decays edge by edge) until the edge count matches the current
// target's, recording statistics per edge edit.
class BaselineRun {
public:
    BaselineRun(int n_universe, int clique_size, const GrowthSpec& spec, uint64_t seed);

    // Grows or decays toward the target's edge count, per the direction of
    // the difference. Appends stat rows every `stat_every` edits.
    void extend_to(const Graph& target, int64_t stat_every = 1);

    const Graph& graph() const { return tracked_.graph(); }
    int active() const { return active_; }
    int64_t steps() const { return steps_; }
    const std::vector<StatRow>& rows() const { return rows_; }
    bool overshoot() const { return overshoot_; }        // burst passed the target count
    bool exhausted_nodes() const { return exhausted_; }  // ran out of fresh nodes while growing

private:
    void record(int64_t d_to_target);
    void apply_edge(Vertex u, Vertex v, bool add, const Graph& target, int64_t& d, int64_t stat_every);

    GrowthSpec spec_;
    Rng rng_;
    TrackedGraph tracked_;
    int active_ = 0;
    int64_t steps_ = 0;
    std::vector<StatRow> rows_;
    bool overshoot_ = false;
    bool exhausted_ = false;
};

struct ExtrapolationRecord {
    std::vector<StatRow> rows;
    bool overshoot = false;
    bool exhausted_nodes = false;
    int64_t steps = 0;
    Graph final_graph{1, false};
};

// Single-target convenience wrapper around BaselineRun.
ExtrapolationRecord extrapolate(int start_clique_size, const GrowthSpec& spec, const Graph& target,
                                uint64_t seed, int64_t stat_every = 1);

}  // namespace netinterp

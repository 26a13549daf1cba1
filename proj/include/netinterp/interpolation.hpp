#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netinterp/graph.hpp"
#include "netinterp/move_ledger.hpp"
#include "netinterp/rng.hpp"

namespace netinterp {

// Probability of making an advancing move at edit distance d: the standard
// logistic of (d - d_t)/s, clamped to 0 at d = 0 and 1 at d = d_m. The clamps
// are definitional, not numeric; phi(d_t) is exactly 1/2 for interior d_t.
struct AdvancingProbability {
    double rate = 1.0;          // s > 0
    int64_t target_distance = 0;  // d_t
    int64_t max_distance = 0;     // d_m

    double operator()(int64_t d) const;
};

enum class StopMode { FixedSteps, UntilDistance, UntilTarget };

struct InterpolationConfig {
    double rate = 1.0;
    int64_t target_distance = 0;
    StopMode mode = StopMode::UntilTarget;
    int64_t steps = 0;  // used by FixedSteps
    bool allow_false_edges = true;
    uint64_t seed = 0;
    int64_t max_steps = 0;         // optional safety cap, 0 = unbounded
    int64_t stat_sample_every = 0;  // 0 = default_stat_stride
    bool operator==(const InterpolationConfig&) const = default;
};

struct TraceStep {
    Edge edge;
    int sign = 0;       // U entry the move consumed (advancing) or created (regressing)
    bool advancing = false;
    bool fallback = false;  // regressing draw was exhausted and redrawn as advancing
    int64_t d_after = 0;
    bool operator==(const TraceStep&) const = default;
};

// Edit trajectory: replaying `steps` from the initial graph reproduces the
// final graph exactly; consecutive d values differ by exactly 1.
struct Trace {
    int n = 0;
    bool directed = false;
    InterpolationConfig config;
    int64_t initial_distance = 0;
    std::vector<TraceStep> steps;

    int64_t final_distance() const { return steps.empty() ? initial_distance : steps.back().d_after; }
    int64_t fallback_count() const;
    bool operator==(const Trace&) const = default;
};

struct StepOutcome {
    SignedEdge move;
    bool advancing = false;
    bool fallback = false;
};

// One chain step: draw the direction from Bernoulli(phi(d)), sample the move,
// toggle the edge and update the ledger. When no legal regressing move exists
// (false edges disallowed, no shared edge) the step is redrawn as advancing.
StepOutcome step(Graph& g, MoveLedger& ledger, const AdvancingProbability& phi, Rng& rng,
                 bool allow_false_edges);

Trace interpolate(const Graph& start, const Graph& target, const InterpolationConfig& cfg);

// One trace per consecutive snapshot pair; pair i runs with seed cfg.seed + i.
std::vector<Trace> interpolate_sequence(const std::vector<Graph>& snapshots, const InterpolationConfig& cfg);

// Applies the trace to a copy of `start`, validating every toggle.
Graph replay(const Graph& start, const Trace& trace);

// Stat sampling stride: every step for small graphs, ~2000 samples otherwise.
int64_t default_stat_stride(int n, int64_t total_steps);

const char* to_string(StopMode mode);
StopMode stop_mode_from_string(const std::string& s);

}  // namespace netinterp

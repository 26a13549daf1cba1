#include "netinterp/interpolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace netinterp {

double AdvancingProbability::operator()(int64_t d) const {
    if (d <= 0) return 0.0;
    if (d >= max_distance) return 1.0;
    double x = (static_cast<double>(d) - static_cast<double>(target_distance)) / rate;
    return 1.0 / (1.0 + std::exp(-x));
}

int64_t Trace::fallback_count() const {
    int64_t c = 0;
    for (const TraceStep& s : steps) c += s.fallback ? 1 : 0;
    return c;
}

StepOutcome step(Graph& g, MoveLedger& ledger, const AdvancingProbability& phi, Rng& rng,
                 bool allow_false_edges) {
    int64_t d = ledger.distance();
    bool advancing = rng.bernoulli(phi(d));
    bool fallback = false;
    SignedEdge move;
    if (advancing) {
        move = ledger.sample_advancing(rng);
    } else {
        auto reg = ledger.sample_regressing(rng, allow_false_edges);
        if (reg) {
            move = *reg;
        } else {
            if (d == 0)
                throw std::runtime_error(
                    "step: no legal move (distance 0, false edges disallowed, empty target)");
            advancing = true;
            fallback = true;
            move = ledger.sample_advancing(rng);
        }
    }
    ledger.apply(move, advancing);
    g.toggle_edge(move.edge.u, move.edge.v);
    return StepOutcome{move, advancing, fallback};
}

Trace interpolate(const Graph& start, const Graph& target, const InterpolationConfig& cfg) {
    if (cfg.rate <= 0.0) throw std::invalid_argument("interpolate: rate must be positive");
    Graph g = start;
    MoveLedger ledger(g, target);
    int64_t d_m = g.max_edit_distance();
    if (cfg.target_distance < 0 || cfg.target_distance > d_m)
        throw std::invalid_argument("interpolate: target distance out of [0, d_m]");

    AdvancingProbability phi{cfg.rate, cfg.target_distance, d_m};
    Rng rng(cfg.seed);

    Trace trace;
    trace.n = g.vertex_count();
    trace.directed = g.directed();
    trace.config = cfg;
    trace.initial_distance = ledger.distance();

    auto done = [&]() {
        switch (cfg.mode) {
        case StopMode::FixedSteps: return static_cast<int64_t>(trace.steps.size()) >= cfg.steps;
        case StopMode::UntilDistance: return ledger.distance() == cfg.target_distance;
        case StopMode::UntilTarget: return ledger.distance() == 0;
        }
        return true;
    };

    while (!done()) {
        if (cfg.max_steps > 0 && static_cast<int64_t>(trace.steps.size()) >= cfg.max_steps)
            throw std::runtime_error("interpolate: max_steps reached before stop condition");
        StepOutcome out = step(g, ledger, phi, rng, cfg.allow_false_edges);
        trace.steps.push_back(TraceStep{out.move.edge, out.move.sign, out.advancing, out.fallback,
                                        ledger.distance()});
    }
    return trace;
}

std::vector<Trace> interpolate_sequence(const std::vector<Graph>& snapshots,
                                        const InterpolationConfig& cfg) {
    if (snapshots.size() < 2) throw std::invalid_argument("interpolate_sequence: need at least 2 snapshots");
    std::vector<Trace> traces;
    traces.reserve(snapshots.size() - 1);
    for (size_t i = 0; i + 1 < snapshots.size(); ++i) {
        InterpolationConfig pair_cfg = cfg;
        pair_cfg.seed = cfg.seed + i;
        traces.push_back(interpolate(snapshots[i], snapshots[i + 1], pair_cfg));
    }
    return traces;
}

Graph replay(const Graph& start, const Trace& trace) {
    if (start.vertex_count() != trace.n || start.directed() != trace.directed)
        throw std::invalid_argument("replay: start graph does not match trace header");
    Graph g = start;
    int64_t d = trace.initial_distance;
    for (const TraceStep& s : trace.steps) {
        bool required_present = (s.advancing == (s.sign == -1));
        if (g.has_edge(s.edge.u, s.edge.v) != required_present)
            throw std::runtime_error("replay: trace step inconsistent with graph state");
        g.toggle_edge(s.edge.u, s.edge.v);
        d += s.advancing ? -1 : +1;
        if (d != s.d_after) throw std::runtime_error("replay: edit distance chain corrupted");
    }
    return g;
}

int64_t default_stat_stride(int n, int64_t total_steps) {
    if (n <= 200) return 1;
    return std::max<int64_t>(1, total_steps / 2000);
}

const char* to_string(StopMode mode) {
    switch (mode) {
    case StopMode::FixedSteps: return "fixed_steps";
    case StopMode::UntilDistance: return "until_distance";
    case StopMode::UntilTarget: return "until_target";
    }
    return "until_target";
}

StopMode stop_mode_from_string(const std::string& s) {
    if (s == "fixed_steps") return StopMode::FixedSteps;
    if (s == "until_distance") return StopMode::UntilDistance;
    if (s == "until_target") return StopMode::UntilTarget;
    throw std::invalid_argument("unknown stop mode: " + s);
}

}  // namespace netinterp

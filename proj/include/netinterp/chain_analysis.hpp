#pragma once

#include <cstdint>
#include <vector>

#include "netinterp/graph.hpp"
#include "netinterp/interpolation.hpp"

namespace netinterp {

// Birth-death chain on edit distances 0..d_m with down-probability phi(i):
// subdiagonal phi(i), superdiagonal 1 - phi(i), reflecting unit moves at the
// boundary rows 0 and d_m.
struct DistanceChain {
    int64_t max_distance = 0;
    double rate = 1.0;
    int64_t target_distance = 0;

    AdvancingProbability phi() const { return AdvancingProbability{rate, target_distance, max_distance}; }
};

struct LimitingDistribution {
    enum class Method { ExactEigenvector, ClosedFormApprox };
    Method method = Method::ExactEigenvector;
    int64_t first_state = 0;           // state index of weights[0]
    std::vector<double> weights;       // nonnegative; exact form sums to 1
    bool hypothesis_ok = true;         // approx only: d_m >= 2 d_t and d_t >= 2
};

// Time-averaged limiting distribution: the left unit eigenvector of the
// transition matrix, built by the product recursion in log space and
// normalized by log-sum-exp. Covers states 0..d_m.
LimitingDistribution exact_limiting_distribution(const DistanceChain& chain);

// Closed-form approximation around d_t, states d_t - k_max .. d_t + k_max.
// Computed even when the hypotheses fail; hypothesis_ok is cleared then.
LimitingDistribution approx_limiting_distribution(int64_t d_t, double s, int64_t k_max, int64_t d_m);

struct HittingTime {
    double value = 0.0;
    int64_t terms_used = 0;
};

// Expected number of steps for the chain to first reach d_t from d_o >= d_t.
// Exact closed form (the series is summed with the tail bracket capped at
// d_m - d_t - k, which keeps it exact for d_o near d_m). Terms are added
// until one falls below tol (absolute; default machine epsilon); that final
// term is counted. tol = 0 sums everything.
HittingTime expected_hitting_time(int64_t d_o, int64_t d_t, int64_t d_m, double s, double tol = -1.0);

struct HittingTimeSamples {
    std::vector<int64_t> steps;  // per-trial first-passage step counts, trial order
    double mean() const;
    double variance() const;  // unbiased
    int64_t quantile(double q) const;
};

// First-passage times to d == cfg.target_distance over independently seeded
// trials (trial i uses cfg.seed + i). Trials run in parallel; results do not
// depend on the thread count.
HittingTimeSamples empirical_hitting_time(const Graph& start, const Graph& target,
                                          const InterpolationConfig& cfg, int trials, int threads = 0);

// Multiple of grid_step whose expected hitting time is closest to
// target_steps; ties break toward the smaller rate.
double fit_rate(int64_t d_o, int64_t d_t, int64_t d_m, double target_steps, double grid_step = 50.0);

// Brute-force check of the full graph-space chain (n <= 4): stationary mass
// must be uniform within every layer; with false edges disallowed it must be
// supported on subgraphs of the target only.
struct LayerUniformityReport {
    int64_t state_count = 0;
    std::vector<double> stationary;    // indexed by edge-set bitmask
    std::vector<int> layer;            // Hamming distance to the target mask
    bool uniform_within_layers = false;
    double max_within_layer_spread = 0.0;  // over recurrent states
    bool supported_on_target_subgraphs = true;
    double max_off_support_mass = 0.0;     // only meaningful without false edges
};

LayerUniformityReport layer_uniformity_oracle(const Graph& target, double rate, int64_t target_distance,
                                              bool allow_false_edges);

}  // namespace netinterp

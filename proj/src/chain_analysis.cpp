#include "netinterp/chain_analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <thread>

#include "netinterp/move_ledger.hpp"

namespace netinterp {

namespace {

double softplus(double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); }

// log phi(d) and log(1 - phi(d)) for interior d, without underflow:
// log f(x) = -softplus(-x), log(1 - f(x)) = -softplus(x).
double log_phi(int64_t d, const DistanceChain& c) {
    double x = (static_cast<double>(d) - static_cast<double>(c.target_distance)) / c.rate;
    return -softplus(-x);
}

double log_one_minus_phi(int64_t d, const DistanceChain& c) {
    double x = (static_cast<double>(d) - static_cast<double>(c.target_distance)) / c.rate;
    return -softplus(x);
}

}  // namespace

LimitingDistribution exact_limiting_distribution(const DistanceChain& chain) {
    int64_t d_m = chain.max_distance;
    if (d_m < 1) throw std::invalid_argument("exact_limiting_distribution: d_m must be >= 1");
    if (chain.rate <= 0) throw std::invalid_argument("exact_limiting_distribution: rate must be positive");

    // v_{i+1} = (1 - phi(i)) / phi(i+1) * v_i, with phi(0) = 0, phi(d_m) = 1
    std::vector<double> logw(static_cast<size_t>(d_m) + 1, 0.0);
    for (int64_t i = 0; i < d_m; ++i) {
        double lnum = (i == 0) ? 0.0 : log_one_minus_phi(i, chain);
        double lden = (i + 1 == d_m) ? 0.0 : log_phi(i + 1, chain);
        logw[i + 1] = logw[i] + lnum - lden;
    }
    double m = *std::max_element(logw.begin(), logw.end());
    double sum = 0.0;
    for (double lw : logw) sum += std::exp(lw - m);
    LimitingDistribution out;
    out.method = LimitingDistribution::Method::ExactEigenvector;
    out.first_state = 0;
    out.weights.resize(logw.size());
    double log_norm = m + std::log(sum);
    for (size_t i = 0; i < logw.size(); ++i) out.weights[i] = std::exp(logw[i] - log_norm);
    return out;
}

LimitingDistribution approx_limiting_distribution(int64_t d_t, double s, int64_t k_max, int64_t d_m) {
    if (s <= 0) throw std::invalid_argument("approx_limiting_distribution: rate must be positive");
    if (k_max < 0 || k_max >= std::max<int64_t>(d_t, 1))
        k_max = std::max<int64_t>(d_t - 1, 0);

    LimitingDistribution out;
    out.method = LimitingDistribution::Method::ClosedFormApprox;
    out.hypothesis_ok = (d_m >= 2 * d_t) && (d_t >= 2);
    out.first_state = d_t - k_max;
    out.weights.assign(static_cast<size_t>(2 * k_max) + 1, 0.0);

    double denom = std::exp(-static_cast<double>((d_t - 1) * d_t) / (2 * s));
    for (int64_t i = 0; i <= d_t - 2; ++i) denom += 2.0 * std::exp(-static_cast<double>(i * (i + 1)) / (2 * s));

    for (int64_t k = 0; k <= k_max; ++k) {
        double num = std::exp(-static_cast<double>(k * (k - 1)) / (2 * s)) +
                     std::exp(-static_cast<double>(k * (k + 1)) / (2 * s));
        double v = num / (2.0 * denom);
        out.weights[static_cast<size_t>(k_max + k)] = v;
        out.weights[static_cast<size_t>(k_max - k)] = v;
    }
    return out;
}

HittingTime expected_hitting_time(int64_t d_o, int64_t d_t, int64_t d_m, double s, double tol) {
    if (s <= 0) throw std::invalid_argument("expected_hitting_time: rate must be positive");
    if (d_t < 0 || d_o > d_m) throw std::invalid_argument("expected_hitting_time: need 0 <= d_t <= d_o <= d_m");
    if (d_o < d_t)
        throw std::invalid_argument("expected_hitting_time: d_o < d_t is outside the supported regime");
    if (d_o == d_t) return HittingTime{0.0, 0};
    if (tol < 0) tol = std::numeric_limits<double>::epsilon();

    double delta = static_cast<double>(d_o - d_t);
    double total = 0.0;
    int64_t terms = 0;
    for (int64_t k = 1; k <= d_m - 1 - d_t; ++k) {
        // bracket capped at d_m - d_t - k: exact for every d_o, and identical
        // to the uncapped series whenever k <= d_m - d_o
        double cap = std::min(delta, static_cast<double>(d_m - d_t - k));
        double kk = static_cast<double>(k);
        double term = std::exp(-kk * (kk + 1) / (2 * s)) * (-std::expm1(-kk * cap / s)) /
                      (-std::expm1(-kk / s));
        total += term;
        ++terms;
        if (tol > 0 && term < tol) break;
    }
    return HittingTime{delta + 2.0 * total, terms};
}

double HittingTimeSamples::mean() const {
    if (steps.empty()) return 0.0;
    double s = 0.0;
    for (int64_t v : steps) s += static_cast<double>(v);
    return s / static_cast<double>(steps.size());
}

double HittingTimeSamples::variance() const {
    if (steps.size() < 2) return 0.0;
    double m = mean(), s = 0.0;
    for (int64_t v : steps) s += (static_cast<double>(v) - m) * (static_cast<double>(v) - m);
    return s / static_cast<double>(steps.size() - 1);
}

int64_t HittingTimeSamples::quantile(double q) const {
    if (steps.empty()) return 0;
    std::vector<int64_t> sorted = steps;
    std::sort(sorted.begin(), sorted.end());
    double pos = q * static_cast<double>(sorted.size() - 1);
    return sorted[static_cast<size_t>(pos + 0.5)];
}

namespace {

int64_t run_hitting_trial(const Graph& start, const Graph& target, const InterpolationConfig& cfg,
                          uint64_t seed) {
    Graph g = start;
    MoveLedger ledger(g, target);
    AdvancingProbability phi{cfg.rate, cfg.target_distance, g.max_edit_distance()};
    Rng rng(seed);
    int64_t steps = 0;
    while (ledger.distance() != cfg.target_distance) {
        step(g, ledger, phi, rng, cfg.allow_false_edges);
        ++steps;
    }
    return steps;
}

}  // namespace

HittingTimeSamples empirical_hitting_time(const Graph& start, const Graph& target,
                                          const InterpolationConfig& cfg, int trials, int threads) {
    if (trials < 1) throw std::invalid_argument("empirical_hitting_time: trials must be >= 1");
    HittingTimeSamples out;
    out.steps.assign(static_cast<size_t>(trials), 0);
    if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
    if (threads < 1) threads = 1;
    threads = std::min(threads, trials);

    auto worker = [&](int first, int stride) {
        for (int t = first; t < trials; t += stride)
            out.steps[static_cast<size_t>(t)] =
                run_hitting_trial(start, target, cfg, cfg.seed + static_cast<uint64_t>(t));
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker, i, threads);
    for (auto& th : pool) th.join();
    return out;
}

double fit_rate(int64_t d_o, int64_t d_t, int64_t d_m, double target_steps, double grid_step) {
    if (grid_step <= 0) throw std::invalid_argument("fit_rate: grid step must be positive");
    if (target_steps < static_cast<double>(d_o - d_t))
        throw std::invalid_argument("fit_rate: target_steps below the minimum possible hitting time");

    double best_s = grid_step;
    double best_gap = std::abs(expected_hitting_time(d_o, d_t, d_m, grid_step).value - target_steps);
    for (int64_t j = 2;; ++j) {
        double s = grid_step * static_cast<double>(j);
        double h = expected_hitting_time(d_o, d_t, d_m, s).value;
        double gap = std::abs(h - target_steps);
        if (gap < best_gap) {
            best_gap = gap;
            best_s = s;
        }
        // hitting time is monotone in s: once past the target, gaps only grow
        if (h >= target_steps) break;
        if (j > 1000000) throw std::runtime_error("fit_rate: grid search did not bracket target_steps");
    }
    return best_s;
}

LayerUniformityReport layer_uniformity_oracle(const Graph& target, double rate, int64_t target_distance,
                                              bool allow_false_edges) {
    if (target.directed()) throw std::invalid_argument("layer_uniformity_oracle: undirected targets only");
    int n = target.vertex_count();
    if (n > 4) throw std::invalid_argument("layer_uniformity_oracle: refuses n > 4 (state space 2^C(n,2))");

    int64_t d_m = target.max_edit_distance();
    int64_t states = int64_t{1} << d_m;
    uint64_t target_mask = 0;
    for (const Edge& e : target.sorted_edges())
        target_mask |= uint64_t{1} << edge_linear_index(n, false, e);

    AdvancingProbability phi{rate, target_distance, d_m};

    // row-stochastic transition matrix of the full chain on graphs
    std::vector<double> P(static_cast<size_t>(states * states), 0.0);
    auto at = [&](int64_t r, int64_t c) -> double& { return P[static_cast<size_t>(r * states + c)]; };
    for (int64_t m = 0; m < states; ++m) {
        uint64_t diff = static_cast<uint64_t>(m) ^ target_mask;
        int d = std::popcount(diff);
        std::vector<int> advancing_bits, regressing_bits;
        for (int b = 0; b < d_m; ++b) {
            bool differs = (diff >> b) & 1;
            if (differs) {
                advancing_bits.push_back(b);
            } else {
                bool in_target = (target_mask >> b) & 1;
                if (allow_false_edges || in_target) regressing_bits.push_back(b);
            }
        }
        double p_adv = phi(d);
        if (regressing_bits.empty()) p_adv = advancing_bits.empty() ? 0.0 : 1.0;
        if (advancing_bits.empty()) p_adv = 0.0;
        if (advancing_bits.empty() && regressing_bits.empty()) {
            at(m, m) = 1.0;  // empty target without false edges: absorbing
            continue;
        }
        for (int b : advancing_bits) at(m, m ^ (int64_t{1} << b)) = p_adv / advancing_bits.size();
        for (int b : regressing_bits) at(m, m ^ (int64_t{1} << b)) = (1.0 - p_adv) / regressing_bits.size();
    }

    // stationary vector: solve pi (P - I) = 0 with sum(pi) = 1 by Gaussian
    // elimination on the transposed system
    int64_t dim = states;
    std::vector<double> A(static_cast<size_t>(dim * dim), 0.0);
    std::vector<double> b(static_cast<size_t>(dim), 0.0);
    for (int64_t r = 0; r < dim; ++r)
        for (int64_t c = 0; c < dim; ++c)
            A[static_cast<size_t>(r * dim + c)] = at(c, r) - (r == c ? 1.0 : 0.0);
    for (int64_t c = 0; c < dim; ++c) A[static_cast<size_t>((dim - 1) * dim + c)] = 1.0;
    b[static_cast<size_t>(dim - 1)] = 1.0;

    for (int64_t col = 0; col < dim; ++col) {
        int64_t piv = col;
        for (int64_t r = col + 1; r < dim; ++r)
            if (std::abs(A[static_cast<size_t>(r * dim + col)]) >
                std::abs(A[static_cast<size_t>(piv * dim + col)]))
                piv = r;
        if (piv != col) {
            for (int64_t c = 0; c < dim; ++c)
                std::swap(A[static_cast<size_t>(col * dim + c)], A[static_cast<size_t>(piv * dim + c)]);
            std::swap(b[static_cast<size_t>(col)], b[static_cast<size_t>(piv)]);
        }
        double pivot = A[static_cast<size_t>(col * dim + col)];
        if (std::abs(pivot) < 1e-300) throw std::runtime_error("layer_uniformity_oracle: singular system");
        for (int64_t r = 0; r < dim; ++r) {
            if (r == col) continue;
            double f = A[static_cast<size_t>(r * dim + col)] / pivot;
            if (f == 0.0) continue;
            for (int64_t c = col; c < dim; ++c)
                A[static_cast<size_t>(r * dim + c)] -= f * A[static_cast<size_t>(col * dim + c)];
            b[static_cast<size_t>(r)] -= f * b[static_cast<size_t>(col)];
        }
    }

    LayerUniformityReport report;
    report.state_count = states;
    report.stationary.resize(static_cast<size_t>(states));
    report.layer.resize(static_cast<size_t>(states));
    for (int64_t m = 0; m < states; ++m) {
        report.stationary[static_cast<size_t>(m)] =
            b[static_cast<size_t>(m)] / A[static_cast<size_t>(m * dim + m)];
        report.layer[static_cast<size_t>(m)] = std::popcount(static_cast<uint64_t>(m) ^ target_mask);
    }

    auto recurrent = [&](int64_t m) {
        if (allow_false_edges) return true;
        return (static_cast<uint64_t>(m) & ~target_mask) == 0;  // subgraph of the target
    };

    report.max_within_layer_spread = 0.0;
    for (int layer = 0; layer <= d_m; ++layer) {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (int64_t m = 0; m < states; ++m) {
            if (report.layer[static_cast<size_t>(m)] != layer || !recurrent(m)) continue;
            lo = std::min(lo, report.stationary[static_cast<size_t>(m)]);
            hi = std::max(hi, report.stationary[static_cast<size_t>(m)]);
        }
        if (hi >= lo) report.max_within_layer_spread = std::max(report.max_within_layer_spread, hi - lo);
    }
    report.uniform_within_layers = report.max_within_layer_spread < 1e-10;

    report.max_off_support_mass = 0.0;
    if (!allow_false_edges) {
        for (int64_t m = 0; m < states; ++m)
            if (!recurrent(m))
                report.max_off_support_mass =
                    std::max(report.max_off_support_mass, std::abs(report.stationary[static_cast<size_t>(m)]));
        report.supported_on_target_subgraphs = report.max_off_support_mass < 1e-12;
    }
    return report;
}

}  // namespace netinterp

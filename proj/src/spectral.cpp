#include "netinterp/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "netinterp/generators.hpp"
#include "netinterp/interpolation.hpp"
#include "netinterp/rng.hpp"

namespace netinterp {

Matrix Matrix::identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

Matrix Matrix::columns(int first, int count) const {
    Matrix out(rows, count);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
}

Matrix normalized_adjacency(const Graph& g) {
    if (g.directed()) throw std::invalid_argument("normalized_adjacency: undirected graphs only");
    int n = g.vertex_count();
    std::vector<double> dinv(static_cast<size_t>(n), 0.0);
    for (Vertex v = 0; v < n; ++v) {
        int64_t deg = g.degree(v);
        if (deg > 0) dinv[static_cast<size_t>(v)] = 1.0 / std::sqrt(static_cast<double>(deg));
    }
    Matrix m(n, n);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v : g.neighbors(u))
            m(u, v) = dinv[static_cast<size_t>(u)] * dinv[static_cast<size_t>(v)];
    return m;
}

SymmetricSpectrum eigen_symmetric(const Matrix& input) {
    if (input.rows != input.cols) throw std::invalid_argument("eigen_symmetric: matrix must be square");
    int n = input.rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (std::abs(input(i, j) - input(j, i)) > 1e-12)
                throw std::invalid_argument("eigen_symmetric: matrix is not symmetric");

    Matrix a = input;
    Matrix v = Matrix::identity(n);

    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
        return std::sqrt(2.0 * s);
    };

    const double target = 1e-12;
    for (int sweep = 0; sweep < 100 && off_norm() > target; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a(p, q);
                if (std::abs(apq) < 1e-300) continue;
                double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = a(p, p), aqq = a(q, q);
                a(p, p) = app - t * apq;
                a(q, q) = aqq + t * apq;
                a(p, q) = a(q, p) = 0.0;
                for (int r = 0; r < n; ++r) {
                    if (r != p && r != q) {
                        double arp = a(r, p), arq = a(r, q);
                        a(r, p) = a(p, r) = arp - s * (arq + tau * arp);
                        a(r, q) = a(q, r) = arq + s * (arp - tau * arq);
                    }
                    double vrp = v(r, p), vrq = v(r, q);
                    v(r, p) = vrp - s * (vrq + tau * vrp);
                    v(r, q) = vrq + s * (vrp - tau * vrq);
                }
            }
        }
    }
    if (off_norm() > target) throw std::runtime_error("eigen_symmetric: Jacobi sweeps did not converge");

    std::vector<int> order(static_cast<size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a(x, x) > a(y, y); });

    SymmetricSpectrum out;
    out.eigenvalues.resize(static_cast<size_t>(n));
    out.eigenvectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[static_cast<size_t>(j)] = a(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]);
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[static_cast<size_t>(j)]);
    }
    return out;
}

namespace {

void require_orthonormal(const Matrix& u, const char* who) {
    for (int i = 0; i < u.cols; ++i) {
        for (int j = i; j < u.cols; ++j) {
            double dot = 0.0;
            for (int r = 0; r < u.rows; ++r) dot += u(r, i) * u(r, j);
            double expect = i == j ? 1.0 : 0.0;
            if (std::abs(dot - expect) > 1e-8)
                throw std::invalid_argument(std::string(who) + ": columns are not orthonormal");
        }
    }
}

// singular values of a k x k matrix by one-sided Jacobi column orthogonalization
std::vector<double> singular_values(Matrix m) {
    int k = m.cols;
    for (int sweep = 0; sweep < 60; ++sweep) {
        bool rotated = false;
        for (int i = 0; i < k - 1; ++i) {
            for (int j = i + 1; j < k; ++j) {
                double aa = 0.0, bb = 0.0, ab = 0.0;
                for (int r = 0; r < m.rows; ++r) {
                    aa += m(r, i) * m(r, i);
                    bb += m(r, j) * m(r, j);
                    ab += m(r, i) * m(r, j);
                }
                if (std::abs(ab) <= 1e-15 * std::sqrt(aa * bb) || ab == 0.0) continue;
                rotated = true;
                double zeta = (bb - aa) / (2.0 * ab);
                double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = c * t;
                for (int r = 0; r < m.rows; ++r) {
                    double mi = m(r, i), mj = m(r, j);
                    m(r, i) = c * mi - s * mj;
                    m(r, j) = s * mi + c * mj;
                }
            }
        }
        if (!rotated) break;
    }
    std::vector<double> sv(static_cast<size_t>(k), 0.0);
    for (int j = 0; j < k; ++j) {
        double ss = 0.0;
        for (int r = 0; r < m.rows; ++r) ss += m(r, j) * m(r, j);
        sv[static_cast<size_t>(j)] = std::sqrt(ss);
    }
    std::sort(sv.rbegin(), sv.rend());
    return sv;
}

}  // namespace

double subspace_distance(const Matrix& u, const Matrix& v) {
    if (u.rows != v.rows || u.cols != v.cols)
        throw std::invalid_argument("subspace_distance: dimension mismatch");
    require_orthonormal(u, "subspace_distance");
    require_orthonormal(v, "subspace_distance");

    int k = u.cols;
    Matrix prod(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double s = 0.0;
            for (int r = 0; r < u.rows; ++r) s += u(r, i) * v(r, j);
            prod(i, j) = s;
        }
    double smin = singular_values(prod).back();
    double val = 1.0 - smin * smin;
    if (val < 0.0) val = 0.0;
    if (val > 1.0) val = 1.0;
    return std::sqrt(val);
}

namespace {

struct KmeansResult {
    std::vector<int> labels;
    double wcss = 0.0;
};

KmeansResult kmeans_once(const Matrix& x, int k, Rng& rng) {
    int n = x.rows, dim = x.cols;
    std::vector<std::vector<double>> centers;
    centers.reserve(static_cast<size_t>(k));

    auto dist2_to = [&](int row, const std::vector<double>& c) {
        double s = 0.0;
        for (int d = 0; d < dim; ++d) {
            double diff = x(row, d) - c[static_cast<size_t>(d)];
            s += diff * diff;
        }
        return s;
    };
    auto row_of = [&](int row) {
        std::vector<double> c(static_cast<size_t>(dim));
        for (int d = 0; d < dim; ++d) c[static_cast<size_t>(d)] = x(row, d);
        return c;
    };

    // k-means++ seeding
    centers.push_back(row_of(static_cast<int>(rng.uniform_index(static_cast<uint64_t>(n)))));
    std::vector<double> d2(static_cast<size_t>(n), 0.0);
    while (static_cast<int>(centers.size()) < k) {
        double total = 0.0;
        for (int i = 0; i < n; ++i) {
            double best = dist2_to(i, centers[0]);
            for (size_t c = 1; c < centers.size(); ++c) best = std::min(best, dist2_to(i, centers[c]));
            d2[static_cast<size_t>(i)] = best;
            total += best;
        }
        if (total <= 0.0) {
            centers.push_back(row_of(static_cast<int>(rng.uniform_index(static_cast<uint64_t>(n)))));
            continue;
        }
        double pick = rng.uniform_real() * total;
        int chosen = n - 1;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
            acc += d2[static_cast<size_t>(i)];
            if (acc >= pick) {
                chosen = i;
                break;
            }
        }
        centers.push_back(row_of(chosen));
    }

    std::vector<int> labels(static_cast<size_t>(n), 0);
    for (int iter = 0; iter < 100; ++iter) {
        bool changed = false;
        for (int i = 0; i < n; ++i) {
            int best = 0;
            double bestd = dist2_to(i, centers[0]);
            for (int c = 1; c < k; ++c) {
                double d = dist2_to(i, centers[static_cast<size_t>(c)]);
                if (d < bestd) {
                    bestd = d;
                    best = c;
                }
            }
            if (labels[static_cast<size_t>(i)] != best) {
                labels[static_cast<size_t>(i)] = best;
                changed = true;
            }
        }
        std::vector<std::vector<double>> sums(static_cast<size_t>(k),
                                              std::vector<double>(static_cast<size_t>(dim), 0.0));
        std::vector<int> counts(static_cast<size_t>(k), 0);
        for (int i = 0; i < n; ++i) {
            int c = labels[static_cast<size_t>(i)];
            ++counts[static_cast<size_t>(c)];
            for (int d = 0; d < dim; ++d) sums[static_cast<size_t>(c)][static_cast<size_t>(d)] += x(i, d);
        }
        for (int c = 0; c < k; ++c)
            if (counts[static_cast<size_t>(c)] > 0)
                for (int d = 0; d < dim; ++d)
                    centers[static_cast<size_t>(c)][static_cast<size_t>(d)] =
                        sums[static_cast<size_t>(c)][static_cast<size_t>(d)] / counts[static_cast<size_t>(c)];
        if (!changed) break;
    }

    KmeansResult res;
    res.labels = labels;
    for (int i = 0; i < n; ++i) res.wcss += dist2_to(i, centers[static_cast<size_t>(labels[static_cast<size_t>(i)])]);
    return res;
}

}  // namespace

ClusterAssignment spectral_cluster(const Graph& g, int k, uint64_t seed) {
    if (k < 1) throw std::invalid_argument("spectral_cluster: k must be >= 1");
    int n = g.vertex_count();
    ClusterAssignment out;
    out.k = k;
    out.labels.assign(static_cast<size_t>(n), 0);
    if (k == 1) return out;

    SymmetricSpectrum spec = eigen_symmetric(normalized_adjacency(g));
    Matrix x(n, k);
    for (int i = 0; i < n; ++i) {
        double norm = 0.0;
        for (int j = 0; j < k; ++j) norm += spec.eigenvectors(i, j) * spec.eigenvectors(i, j);
        norm = std::sqrt(norm);
        for (int j = 0; j < k; ++j) x(i, j) = norm > 0 ? spec.eigenvectors(i, j) / norm : 0.0;
    }

    KmeansResult best;
    best.wcss = -1.0;
    for (int restart = 0; restart < 10; ++restart) {
        Rng rng(seed + static_cast<uint64_t>(restart));
        KmeansResult res = kmeans_once(x, k, rng);
        if (best.wcss < 0 || res.wcss < best.wcss) best = res;
    }
    out.labels = best.labels;
    return out;
}

double recovery_rate(const ClusterAssignment& assignment, const std::vector<int>& truth) {
    if (assignment.labels.size() != truth.size())
        throw std::invalid_argument("recovery_rate: label vectors differ in length");
    if (truth.empty()) throw std::invalid_argument("recovery_rate: empty labeling");
    int k = assignment.k;
    for (int t : truth) k = std::max(k, t + 1);
    if (k > 5) throw std::invalid_argument("recovery_rate: k > 5 is out of scope");

    std::vector<int> perm(static_cast<size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    int64_t best = 0;
    do {
        int64_t agree = 0;
        for (size_t i = 0; i < truth.size(); ++i)
            if (perm[static_cast<size_t>(assignment.labels[i])] == truth[i]) ++agree;
        best = std::max(best, agree);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<double>(best) / static_cast<double>(truth.size());
}

SbmExperimentResult sbm_transition_experiment(SbmScenario scenario, const SbmExperimentConfig& cfg) {
    int n = cfg.n;
    if (scenario == SbmScenario::Split && n % 4 != 0)
        throw std::invalid_argument("sbm_transition_experiment: split scenario needs n divisible by 4");
    if (scenario == SbmScenario::Independent && n % 6 != 0)
        throw std::invalid_argument("sbm_transition_experiment: independent scenario needs n divisible by 6");

    SbmSample start = sbm(SbmSpec{{n / 2, n / 2}, cfg.p, cfg.q}, cfg.seed + 1);

    SbmSample target;
    if (scenario == SbmScenario::Split) {
        target = sbm(SbmSpec{{n / 2, n / 4, n / 4}, cfg.p, cfg.q}, cfg.seed + 2);
    } else {
        SbmSample block = sbm(SbmSpec{{n / 3, n / 3, n / 3}, cfg.p, cfg.q}, cfg.seed + 2);
        // shuffle vertex identities so the 3 blocks carry no relation to the
        // starting 2-block structure
        Rng rng(cfg.seed + 3);
        std::vector<int> perm(static_cast<size_t>(n));
        std::iota(perm.begin(), perm.end(), 0);
        for (int i = n - 1; i > 0; --i)
            std::swap(perm[static_cast<size_t>(i)], perm[rng.uniform_index(static_cast<uint64_t>(i) + 1)]);
        Graph shuffled(n, false);
        for (const Edge& e : block.graph.sorted_edges())
            shuffled.add_edge(perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)]);
        std::vector<int> labels(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) labels[static_cast<size_t>(perm[static_cast<size_t>(v)])] =
            block.labels[static_cast<size_t>(v)];
        target = SbmSample{std::move(shuffled), std::move(labels)};
    }

    InterpolationConfig icfg;
    icfg.rate = cfg.rate;
    icfg.target_distance = 0;
    icfg.mode = StopMode::UntilTarget;
    icfg.seed = cfg.seed + 4;
    Trace trace = interpolate(start.graph, target.graph, icfg);

    SbmExperimentResult result;
    result.total_steps = static_cast<int64_t>(trace.steps.size());
    result.truth = target.labels;

    SymmetricSpectrum target_spec = eigen_symmetric(normalized_adjacency(target.graph));
    Matrix target_basis = target_spec.eigenvectors.columns(0, cfg.top_k);

    std::vector<double> prev_eigs;
    Graph g = start.graph;
    int64_t step_idx = 0;
    auto sample = [&](int64_t step) {
        SymmetricSpectrum spec = eigen_symmetric(normalized_adjacency(g));
        ClusterAssignment labels = spectral_cluster(g, cfg.top_k, cfg.seed + 5);
        SbmExperimentRow row;
        row.step = step;
        row.recovery = recovery_rate(labels, result.truth);
        row.subspace_dist = subspace_distance(spec.eigenvectors.columns(0, cfg.top_k), target_basis);
        row.top_eigs.assign(spec.eigenvalues.begin(), spec.eigenvalues.begin() + cfg.top_k);
        result.rows.push_back(std::move(row));
        if (!prev_eigs.empty()) {
            for (size_t i = 0; i < spec.eigenvalues.size(); ++i)
                result.max_eigenvalue_jump =
                    std::max(result.max_eigenvalue_jump, std::abs(spec.eigenvalues[i] - prev_eigs[i]));
        }
        prev_eigs = spec.eigenvalues;
        result.spectra.emplace_back(step, spec.eigenvalues);
    };

    sample(0);
    for (const TraceStep& s : trace.steps) {
        g.toggle_edge(s.edge.u, s.edge.v);
        ++step_idx;
        if (step_idx % cfg.stride == 0 && step_idx != result.total_steps) sample(step_idx);
    }
    if (result.total_steps > 0) sample(result.total_steps);

    // equispaced linear interpolation between the endpoint matrices, with as
    // many increments as there are sampled rows
    Matrix n0 = normalized_adjacency(start.graph);
    Matrix n1 = normalized_adjacency(target.graph);
    size_t increments = result.rows.size();
    for (size_t j = 0; j < increments; ++j) {
        double t = increments > 1 ? static_cast<double>(j) / static_cast<double>(increments - 1) : 1.0;
        Matrix mix(n, n);
        for (size_t i = 0; i < mix.data.size(); ++i) mix.data[i] = (1.0 - t) * n0.data[i] + t * n1.data[i];
        SymmetricSpectrum spec = eigen_symmetric(mix);
        result.linear_spectra.emplace_back(t, spec.eigenvalues);
    }
    return result;
}

}  // namespace netinterp

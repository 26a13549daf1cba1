#include "netinterp/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace netinterp {

Graph erdos_renyi(int n, double p, uint64_t seed, bool directed) {
    if (p < 0.0 || p > 1.0) throw std::invalid_argument("erdos_renyi: p must be in [0,1]");
    Graph g(n, directed);
    Rng rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = directed ? 0 : u + 1; v < n; ++v) {
            if (u == v) continue;
            if (rng.bernoulli(p)) g.add_edge(u, v);
        }
    return g;
}

SbmSample sbm(const SbmSpec& spec, uint64_t seed) {
    if (spec.block_sizes.empty()) throw std::invalid_argument("sbm: need at least one block");
    if (spec.q > spec.p || spec.p > 1.0 || spec.q < 0.0)
        throw std::invalid_argument("sbm: need 0 <= q <= p <= 1");
    int n = 0;
    for (int b : spec.block_sizes) {
        if (b < 1) throw std::invalid_argument("sbm: block sizes must be positive");
        n += b;
    }
    std::vector<int> labels(static_cast<size_t>(n));
    int v = 0;
    for (size_t b = 0; b < spec.block_sizes.size(); ++b)
        for (int i = 0; i < spec.block_sizes[b]; ++i) labels[static_cast<size_t>(v++)] = static_cast<int>(b);

    Graph g(n, false);
    Rng rng(seed);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex w = u + 1; w < n; ++w) {
            double pr = labels[static_cast<size_t>(u)] == labels[static_cast<size_t>(w)] ? spec.p : spec.q;
            if (rng.bernoulli(pr)) g.add_edge(u, w);
        }
    return SbmSample{std::move(g), std::move(labels)};
}

const char* to_string(GrowthModel model) {
    switch (model) {
    case GrowthModel::Uniform: return "uniform";
    case GrowthModel::Preferential: return "preferential";
    case GrowthModel::TriangleClosing: return "triangle";
    }
    return "uniform";
}

GrowthModel growth_model_from_string(const std::string& s) {
    if (s == "uniform") return GrowthModel::Uniform;
    if (s == "preferential") return GrowthModel::Preferential;
    if (s == "triangle") return GrowthModel::TriangleClosing;
    throw std::invalid_argument("unknown growth model: " + s);
}

int default_clique_size(const GrowthSpec& spec) {
    return spec.model == GrowthModel::TriangleClosing ? spec.m_r + spec.m_n + 1 : spec.m;
}

namespace {

// up to `count` distinct uniform picks from [0, pool_size)
std::vector<int> distinct_uniform(int pool_size, int count, Rng& rng) {
    count = std::min(count, pool_size);
    std::vector<int> picks;
    picks.reserve(static_cast<size_t>(count));
    std::unordered_set<int> seen;
    while (static_cast<int>(picks.size()) < count) {
        int x = static_cast<int>(rng.uniform_index(static_cast<uint64_t>(pool_size)));
        if (seen.insert(x).second) picks.push_back(x);
    }
    return picks;
}

}  // namespace

std::vector<Edge> choose_growth_edges(const Graph& g, int active, const GrowthSpec& spec, Rng& rng) {
    if (active < 1 || active >= g.vertex_count())
        throw std::invalid_argument("choose_growth_edges: no room for a new node");
    Vertex fresh = active;
    std::vector<Edge> edges;
    auto attach = [&](Vertex w) {
        for (const Edge& e : edges)
            if (e.v == w) return;
        edges.push_back(Edge{fresh, w});
    };

    switch (spec.model) {
    case GrowthModel::Uniform: {
        for (int pick : distinct_uniform(active, spec.m, rng)) attach(static_cast<Vertex>(pick));
        break;
    }
    case GrowthModel::Preferential: {
        int64_t total_degree = 0;
        for (Vertex v = 0; v < active; ++v) total_degree += g.degree(v);
        for (int draw = 0; draw < spec.m; ++draw) {
            if (total_degree == 0) {
                attach(static_cast<Vertex>(rng.uniform_index(static_cast<uint64_t>(active))));
                continue;
            }
            int64_t r = static_cast<int64_t>(rng.uniform_index(static_cast<uint64_t>(total_degree)));
            for (Vertex v = 0; v < active; ++v) {
                r -= g.degree(v);
                if (r < 0) {
                    attach(v);
                    break;
                }
            }
        }
        break;
    }
    case GrowthModel::TriangleClosing: {
        std::vector<int> parents = distinct_uniform(active, spec.m_r, rng);
        std::unordered_set<Vertex> pool_set;
        for (int p : parents) {
            if (rng.bernoulli(spec.p_r)) attach(static_cast<Vertex>(p));
            for (Vertex w : g.neighbors(static_cast<Vertex>(p)))
                if (w < active) pool_set.insert(w);
        }
        std::vector<Vertex> pool(pool_set.begin(), pool_set.end());
        std::sort(pool.begin(), pool.end());
        int picks = std::min<int>(spec.m_n, static_cast<int>(pool.size()));
        for (int i = 0; i < picks; ++i) {
            size_t j = rng.uniform_index(pool.size() - static_cast<size_t>(i)) + static_cast<size_t>(i);
            std::swap(pool[static_cast<size_t>(i)], pool[j]);
            if (rng.bernoulli(spec.p_n)) attach(pool[static_cast<size_t>(i)]);
        }
        break;
    }
    }
    return edges;
}

int grow_step(Graph& g, int active, const GrowthSpec& spec, Rng& rng) {
    for (const Edge& e : choose_growth_edges(g, active, spec, rng))
        if (!g.has_edge(e.u, e.v)) g.add_edge(e.u, e.v);
    return active + 1;
}

Edge choose_decay_edge(const Graph& g, const GrowthSpec& spec, Rng& rng) {
    if (g.edge_count() == 0) throw std::invalid_argument("choose_decay_edge: graph has no edges");
    Vertex node;
    do {
        node = static_cast<Vertex>(rng.uniform_index(static_cast<uint64_t>(g.vertex_count())));
    } while (g.degree(node) == 0);

    const auto& nbrs = g.neighbors(node);
    switch (spec.model) {
    case GrowthModel::Uniform:
        return Edge{node, nbrs[rng.uniform_index(nbrs.size())]};
    case GrowthModel::Preferential: {
        double total = 0.0;
        for (Vertex w : nbrs) total += 1.0 / static_cast<double>(g.degree(w));
        double r = rng.uniform_real() * total;
        for (Vertex w : nbrs) {
            r -= 1.0 / static_cast<double>(g.degree(w));
            if (r <= 0) return Edge{node, w};
        }
        return Edge{node, nbrs.back()};
    }
    case GrowthModel::TriangleClosing: {
        // weight 1/(1 + triangles(w)) so triangle-free neighbors stay eligible
        double total = 0.0;
        std::vector<double> weight(nbrs.size());
        for (size_t i = 0; i < nbrs.size(); ++i) {
            weight[i] = 1.0 / (1.0 + static_cast<double>(triangles_through(g, nbrs[i])));
            total += weight[i];
        }
        double r = rng.uniform_real() * total;
        for (size_t i = 0; i < nbrs.size(); ++i) {
            r -= weight[i];
            if (r <= 0) return Edge{node, nbrs[i]};
        }
        return Edge{node, nbrs.back()};
    }
    }
    return Edge{node, nbrs.back()};
}

void decay_step(Graph& g, const GrowthSpec& spec, Rng& rng) {
    Edge e = choose_decay_edge(g, spec, rng);
    g.remove_edge(e.u, e.v);
}

BaselineRun::BaselineRun(int n_universe, int clique_size, const GrowthSpec& spec, uint64_t seed)
    : spec_(spec), rng_(seed), tracked_(Graph(n_universe, false)) {
    if (clique_size < 1 || clique_size > n_universe)
        throw std::invalid_argument("BaselineRun: clique size out of range");
    Graph seed_graph(n_universe, false);
    for (Vertex u = 0; u < clique_size; ++u)
        for (Vertex v = u + 1; v < clique_size; ++v) seed_graph.add_edge(u, v);
    tracked_ = TrackedGraph(std::move(seed_graph));
    active_ = clique_size;
}

void BaselineRun::record(int64_t d_to_target) {
    StatRow row;
    row.step = steps_;
    row.d = d_to_target;
    row.edges = tracked_.graph().edge_count();
    row.mean_cc = tracked_.mean_clustering();
    row.global_cc = tracked_.global_clustering();
    rows_.push_back(std::move(row));
}

void BaselineRun::apply_edge(Vertex u, Vertex v, bool add, const Graph& target, int64_t& d,
                             int64_t stat_every) {
    bool in_target = target.has_edge(u, v);
    if (add)
        d += in_target ? -1 : +1;
    else
        d += in_target ? +1 : -1;
    tracked_.toggle_edge(u, v);
    ++steps_;
    if (steps_ % stat_every == 0) record(d);
}

void BaselineRun::extend_to(const Graph& target, int64_t stat_every) {
    if (stat_every < 1) throw std::invalid_argument("BaselineRun: stride must be >= 1");
    if (target.vertex_count() != tracked_.graph().vertex_count() || target.directed())
        throw std::invalid_argument("BaselineRun: target must be undirected on the same vertex set");

    int64_t want = target.edge_count();
    int64_t d = edit_distance(tracked_.graph(), target);
    if (rows_.empty()) record(d);

    if (tracked_.graph().edge_count() < want) {
        while (tracked_.graph().edge_count() < want) {
            if (active_ >= tracked_.graph().vertex_count()) {
                exhausted_ = true;
                break;
            }
            std::vector<Edge> burst = choose_growth_edges(tracked_.graph(), active_, spec_, rng_);
            ++active_;
            for (const Edge& e : burst) {
                if (tracked_.graph().has_edge(e.u, e.v)) continue;
                apply_edge(e.u, e.v, true, target, d, stat_every);
                if (tracked_.graph().edge_count() >= want) break;  // stop at first step meeting the count
            }
        }
        if (tracked_.graph().edge_count() > want) overshoot_ = true;
    } else {
        while (tracked_.graph().edge_count() > want) {
            Edge e = choose_decay_edge(tracked_.graph(), spec_, rng_);
            apply_edge(e.u, e.v, false, target, d, stat_every);
        }
    }
    if (rows_.empty() || rows_.back().step != steps_) record(d);
}

ExtrapolationRecord extrapolate(int start_clique_size, const GrowthSpec& spec, const Graph& target,
                                uint64_t seed, int64_t stat_every) {
    BaselineRun run(target.vertex_count(), start_clique_size, spec, seed);
    run.extend_to(target, stat_every);
    ExtrapolationRecord rec;
    rec.rows = run.rows();
    rec.overshoot = run.overshoot();
    rec.exhausted_nodes = run.exhausted_nodes();
    rec.steps = run.steps();
    rec.final_graph = run.graph();
    return rec;
}

}  // namespace netinterp

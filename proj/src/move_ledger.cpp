#include "netinterp/move_ledger.hpp"

#include <algorithm>
#include <stdexcept>

namespace netinterp {

MoveLedger::MoveLedger(const Graph& current, const Graph& target)
    : n_(current.vertex_count()), directed_(current.directed()), universe_(current.max_edit_distance()) {
    if (current.vertex_count() != target.vertex_count() || current.directed() != target.directed())
        throw std::invalid_argument("MoveLedger: graphs must share vertex count and directedness");

    target_edges_ = target.sorted_edges();
    for (const Edge& e : target_edges_) target_keys_.insert(key(e));

    for (const Edge& e : current.sorted_edges()) {
        if (!target.has_edge(e.u, e.v)) {
            index_.emplace(key(e), entries_.size());
            entries_.push_back(SignedEdge{e, -1});
        }
    }
    for (const Edge& e : target_edges_) {
        if (!current.has_edge(e.u, e.v)) {
            index_.emplace(key(e), entries_.size());
            entries_.push_back(SignedEdge{e, +1});
            ++plus_count_;
        }
    }
}

Edge MoveLedger::canonical(Vertex u, Vertex v) const {
    if (!directed_ && u > v) std::swap(u, v);
    return Edge{u, v};
}

int64_t MoveLedger::regressing_move_count(bool allow_false_edges) const {
    return allow_false_edges ? universe_ - distance() : shared_edge_count();
}

const SignedEdge& MoveLedger::sample_advancing(Rng& rng) const {
    if (entries_.empty()) throw std::logic_error("MoveLedger: no advancing move at edit distance 0");
    return entries_[rng.uniform_index(entries_.size())];
}

std::optional<SignedEdge> MoveLedger::sample_regressing(Rng& rng, bool allow_false_edges) const {
    if (!allow_false_edges) return sample_shared(rng);

    int64_t zeros = universe_ - distance();
    if (zeros == 0) return std::nullopt;
    ++regressing_draws_;
    if (distance() <= universe_ / 2) {
        // sparse U: uniform edge draws hit a zero entry with probability >= 1/2
        for (int iter = 0; iter < kRejectionCap; ++iter) {
            Vertex u = static_cast<Vertex>(rng.uniform_index(static_cast<uint64_t>(n_)));
            Vertex v = static_cast<Vertex>(rng.uniform_index(static_cast<uint64_t>(n_)));
            if (u == v) {
                ++rejections_;
                continue;
            }
            Edge e = canonical(u, v);
            if (!contains(e)) return signed_zero_entry(e);
            ++rejections_;
        }
    }
    return sample_zero_dense(rng);
}

std::optional<SignedEdge> MoveLedger::sample_zero_dense(Rng& rng) const {
    int64_t zeros = universe_ - distance();
    if (zeros == 0) return std::nullopt;
    int64_t r = static_cast<int64_t>(rng.uniform_index(static_cast<uint64_t>(zeros)));

    // rank r among zero slots = r + (number of nonzero slots with linear
    // index <= resulting slot); locate via a sorted snapshot of the nonzeros
    std::vector<int64_t> nz;
    nz.reserve(entries_.size());
    for (const SignedEdge& se : entries_) nz.push_back(edge_linear_index(n_, directed_, se.edge));
    std::sort(nz.begin(), nz.end());
    int64_t lo = 0, hi = static_cast<int64_t>(nz.size());
    while (lo < hi) {
        int64_t mid = (lo + hi) / 2;
        if (nz[mid] - mid > r)
            hi = mid;
        else
            lo = mid + 1;
    }
    Edge e = edge_from_linear_index(n_, directed_, r + lo);
    return signed_zero_entry(e);
}

std::optional<SignedEdge> MoveLedger::sample_shared(Rng& rng) const {
    int64_t shared = shared_edge_count();
    if (shared == 0) return std::nullopt;
    ++regressing_draws_;
    if (plus_count_ <= static_cast<int64_t>(target_edges_.size()) / 2) {
        for (int iter = 0; iter < kRejectionCap; ++iter) {
            const Edge& e = target_edges_[rng.uniform_index(target_edges_.size())];
            if (!contains(e)) return SignedEdge{e, +1};
            ++rejections_;
        }
    }
    std::vector<Edge> pool;
    pool.reserve(static_cast<size_t>(shared));
    for (const Edge& e : target_edges_)
        if (!contains(e)) pool.push_back(e);
    return SignedEdge{pool[rng.uniform_index(pool.size())], +1};
}

void MoveLedger::apply(const SignedEdge& move, bool advancing) {
    int64_t k = key(move.edge);
    if (advancing) {
        auto it = index_.find(k);
        if (it == index_.end()) throw std::invalid_argument("MoveLedger::apply: advancing move not in ledger");
        size_t pos = it->second;
        if (entries_[pos].sign != move.sign)
            throw std::invalid_argument("MoveLedger::apply: advancing move sign mismatch");
        if (move.sign == +1) --plus_count_;
        index_.erase(it);
        if (pos + 1 != entries_.size()) {
            entries_[pos] = entries_.back();
            index_[key(entries_[pos].edge)] = pos;
        }
        entries_.pop_back();
    } else {
        if (index_.count(k)) throw std::invalid_argument("MoveLedger::apply: regressing move already in ledger");
        int expected = target_has(move.edge) ? +1 : -1;
        if (move.sign != expected)
            throw std::invalid_argument("MoveLedger::apply: regressing move sign inconsistent with target");
        index_.emplace(k, entries_.size());
        entries_.push_back(move);
        if (move.sign == +1) ++plus_count_;
    }
}

}  // namespace netinterp

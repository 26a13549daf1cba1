#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "netinterp/graph.hpp"
#include "netinterp/rng.hpp"

namespace netinterp {

// One nonzero of U = B - A: sign +1 means the edge is in the target but not
// the current graph (an advancing move adds it), sign -1 means it is in the
// current graph but not the target (an advancing move deletes it).
struct SignedEdge {
    Edge edge;
    int sign = 0;
    bool operator==(const SignedEdge&) const = default;
};

// Sampleable signed-edge set over the symmetric difference of the current and
// target graphs. Insert, delete, membership and uniform sampling are all
// amortized O(1): entries live in a dense array, a hash map holds each edge's
// slot, and deletion swap-removes. Regressing moves (edges where U is zero)
// are drawn by rejection against the edge universe, with a dense-rank
// fallback once the rejection loop stops paying off.
class MoveLedger {
public:
    MoveLedger(const Graph& current, const Graph& target);

    // Current edit distance d == number of advancing moves.
    int64_t distance() const { return static_cast<int64_t>(entries_.size()); }
    // Size of the edge universe d_m.
    int64_t universe() const { return universe_; }
    int64_t regressing_move_count(bool allow_false_edges) const;
    int64_t shared_edge_count() const { return static_cast<int64_t>(target_edges_.size()) - plus_count_; }

    bool contains(const Edge& e) const { return index_.count(key(e)) > 0; }
    bool target_has(const Edge& e) const { return target_keys_.count(key(e)) > 0; }
    const std::vector<SignedEdge>& entries() const { return entries_; }

    // Uniform over the nonzero entries of U. Throws when the ledger is empty.
    const SignedEdge& sample_advancing(Rng& rng) const;

    // Uniform over the zero entries of U (only those deleting a shared edge
    // when false edges are disallowed). The returned sign is the U entry the
    // move creates: +1 when the edge is in the target, -1 otherwise. Returns
    // nullopt when no legal regressing move exists.
    std::optional<SignedEdge> sample_regressing(Rng& rng, bool allow_false_edges) const;

    // Remove an entry (advancing) or insert the entry a regressing move
    // creates. Throws if the move is inconsistent with the ledger state.
    void apply(const SignedEdge& move, bool advancing);

    // Rejection-sampling statistics, for tests and benchmarks.
    int64_t total_rejections() const { return rejections_; }
    int64_t total_regressing_draws() const { return regressing_draws_; }

    static constexpr int kRejectionCap = 64;

private:
    int64_t key(const Edge& e) const { return static_cast<int64_t>(e.u) * n_ + e.v; }
    Edge canonical(Vertex u, Vertex v) const;
    SignedEdge signed_zero_entry(const Edge& e) const { return SignedEdge{e, target_has(e) ? +1 : -1}; }
    std::optional<SignedEdge> sample_zero_dense(Rng& rng) const;
    std::optional<SignedEdge> sample_shared(Rng& rng) const;

    int n_;
    bool directed_;
    int64_t universe_;
    std::vector<SignedEdge> entries_;
    std::unordered_map<int64_t, size_t> index_;
    std::vector<Edge> target_edges_;
    std::unordered_set<int64_t> target_keys_;
    int64_t plus_count_ = 0;  // entries with sign +1

    mutable int64_t rejections_ = 0;
    mutable int64_t regressing_draws_ = 0;
};

}  // namespace netinterp

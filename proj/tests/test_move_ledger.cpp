#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <map>
#include <set>

#include "netinterp/move_ledger.hpp"
#include "netinterp/rng.hpp"

using namespace netinterp;

namespace {

// chi-square critical values at significance 0.001
constexpr double kChi2_999_df1 = 10.827566170662733;
constexpr double kChi2_999_df2 = 13.815510557964274;

Graph random_graph(int n, double p, Rng& rng) {
    Graph g(n, false);
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v)
            if (rng.bernoulli(p)) g.add_edge(u, v);
    return g;
}

std::set<std::pair<int64_t, int>> ledger_set(const MoveLedger& ledger, int n) {
    std::set<std::pair<int64_t, int>> out;
    for (const SignedEdge& se : ledger.entries())
        out.insert({static_cast<int64_t>(se.edge.u) * n + se.edge.v, se.sign});
    return out;
}

double chi_square(const std::map<int64_t, int64_t>& counts, int64_t draws, int64_t categories) {
    double expected = static_cast<double>(draws) / static_cast<double>(categories);
    double stat = 0.0;
    for (const auto& [_, c] : counts) {
        double diff = static_cast<double>(c) - expected;
        stat += diff * diff / expected;
    }
    stat += expected * static_cast<double>(categories - static_cast<int64_t>(counts.size()));
    return stat;
}

}  // namespace

TEST_CASE("build collects the signed symmetric difference") {
    Graph a(3), b(3);
    CHECK(MoveLedger(a, b).distance() == 0);

    b.add_edge(0, 1);
    MoveLedger one(a, b);
    REQUIRE(one.distance() == 1);
    CHECK(one.entries()[0] == SignedEdge{Edge{0, 1}, +1});

    Graph c(3), d(3);
    c.add_edge(0, 1);
    d.add_edge(1, 2);
    MoveLedger two(c, d);
    CHECK(ledger_set(two, 3) ==
          std::set<std::pair<int64_t, int>>{{0 * 3 + 1, -1}, {1 * 3 + 2, +1}});

    Graph wrong(4);
    CHECK_THROWS_AS(MoveLedger(c, wrong), std::invalid_argument);
}

TEST_CASE("sample_advancing is uniform over entries") {
    Graph a(3), b(3);
    b.add_edge(0, 1);
    MoveLedger one(a, b);
    Rng rng(1);
    CHECK(one.sample_advancing(rng) == SignedEdge{Edge{0, 1}, +1});

    b.add_edge(1, 2);
    MoveLedger two(a, b);
    std::map<int64_t, int64_t> counts;
    const int64_t draws = 100000;
    for (int64_t i = 0; i < draws; ++i) {
        const SignedEdge& se = two.sample_advancing(rng);
        ++counts[static_cast<int64_t>(se.edge.u) * 3 + se.edge.v];
    }
    REQUIRE(counts.size() == 2);
    for (const auto& [_, c] : counts)
        CHECK(std::abs(static_cast<double>(c) / draws - 0.5) < 0.01);
    CHECK(chi_square(counts, draws, 2) < kChi2_999_df1);

    MoveLedger empty(a, a);
    CHECK_THROWS_AS(empty.sample_advancing(rng), std::logic_error);
}

TEST_CASE("sample_regressing draws uniformly from the zero entries") {
    SUBCASE("single zero entry, shared edge") {
        Graph g(2);
        g.add_edge(0, 1);
        MoveLedger ledger(g, g);
        Rng rng(2);
        for (int i = 0; i < 50; ++i) {
            auto se = ledger.sample_regressing(rng, true);
            REQUIRE(se.has_value());
            CHECK(*se == SignedEdge{Edge{0, 1}, +1});
        }
    }
    SUBCASE("empty graphs: uniform over all candidate edges, sign -1") {
        Graph g(3);
        MoveLedger ledger(g, g);
        Rng rng(3);
        std::map<int64_t, int64_t> counts;
        const int64_t draws = 100000;
        for (int64_t i = 0; i < draws; ++i) {
            auto se = ledger.sample_regressing(rng, true);
            REQUIRE(se.has_value());
            CHECK(se->sign == -1);
            ++counts[static_cast<int64_t>(se->edge.u) * 3 + se->edge.v];
        }
        REQUIRE(counts.size() == 3);
        for (const auto& [_, c] : counts)
            CHECK(std::abs(static_cast<double>(c) / draws - 1.0 / 3) < 0.01);
        CHECK(chi_square(counts, draws, 3) < kChi2_999_df2);
    }
    SUBCASE("no-false-edges exhaustion when current and target share nothing") {
        Graph cur(3), tgt(3);
        cur.add_edge(0, 1);
        tgt.add_edge(1, 2);
        MoveLedger ledger(cur, tgt);
        Rng rng(4);
        CHECK(!ledger.sample_regressing(rng, false).has_value());
        CHECK(ledger.sample_regressing(rng, true).has_value());
    }
    SUBCASE("no-false-edges draws only shared edges") {
        Rng rng(5);
        Graph cur = random_graph(8, 0.5, rng);
        Graph tgt = random_graph(8, 0.5, rng);
        MoveLedger ledger(cur, tgt);
        for (int i = 0; i < 2000; ++i) {
            auto se = ledger.sample_regressing(rng, false);
            REQUIRE(se.has_value());
            CHECK(se->sign == +1);
            CHECK(cur.has_edge(se->edge.u, se->edge.v));
            CHECK(tgt.has_edge(se->edge.u, se->edge.v));
        }
    }
}

TEST_CASE("apply keeps the ledger consistent") {
    Graph a(3), b(3);
    b.add_edge(0, 1);
    MoveLedger ledger(a, b);

    SUBCASE("advancing apply on a singleton empties the ledger") {
        ledger.apply(SignedEdge{Edge{0, 1}, +1}, true);
        CHECK(ledger.distance() == 0);
    }
    SUBCASE("regressing apply inserts") {
        MoveLedger empty(b, b);
        empty.apply(SignedEdge{Edge{0, 1}, +1}, false);
        CHECK(empty.distance() == 1);
        CHECK(empty.entries()[0] == SignedEdge{Edge{0, 1}, +1});
    }
    SUBCASE("advance then regress restores the original ledger") {
        auto before = ledger_set(ledger, 3);
        ledger.apply(SignedEdge{Edge{0, 1}, +1}, true);
        ledger.apply(SignedEdge{Edge{0, 1}, +1}, false);
        CHECK(ledger_set(ledger, 3) == before);
    }
    SUBCASE("illegal moves throw") {
        CHECK_THROWS_AS(ledger.apply(SignedEdge{Edge{1, 2}, +1}, true), std::invalid_argument);
        CHECK_THROWS_AS(ledger.apply(SignedEdge{Edge{0, 1}, -1}, true), std::invalid_argument);
        CHECK_THROWS_AS(ledger.apply(SignedEdge{Edge{0, 1}, +1}, false), std::invalid_argument);
        MoveLedger shared(b, b);
        CHECK_THROWS_AS(shared.apply(SignedEdge{Edge{0, 1}, -1}, false), std::invalid_argument);
    }
}

TEST_CASE("incremental ledger equals rebuild from scratch on random move sequences") {
    Rng rng(42);
    for (int rep = 0; rep < 25; ++rep) {
        int n = 4 + static_cast<int>(rng.uniform_index(5));  // 4..8
        Graph cur = random_graph(n, 0.5, rng);
        Graph tgt = random_graph(n, 0.5, rng);
        MoveLedger ledger(cur, tgt);
        for (int step = 0; step < 60; ++step) {
            bool advance = ledger.distance() > 0 && rng.bernoulli(0.5);
            if (advance) {
                SignedEdge move = ledger.sample_advancing(rng);
                ledger.apply(move, true);
                cur.toggle_edge(move.edge.u, move.edge.v);
            } else {
                auto move = ledger.sample_regressing(rng, true);
                if (!move) continue;
                ledger.apply(*move, false);
                cur.toggle_edge(move->edge.u, move->edge.v);
            }
            MoveLedger rebuilt(cur, tgt);
            REQUIRE(ledger_set(ledger, n) == ledger_set(rebuilt, n));
            REQUIRE(ledger.distance() == edit_distance(cur, tgt));
        }
    }
}

TEST_CASE("rejection sampling stays cheap while U is sparse") {
    Rng rng(9);
    Graph cur = random_graph(40, 0.5, rng);
    Graph tgt = cur;
    // flip ~d_m/4 slots so nonzeros < d_m/2
    int64_t d_m = cur.max_edit_distance();
    for (int64_t i = 0; i < d_m / 4; ++i) {
        Edge e = edge_from_linear_index(40, false, rng.uniform_index(static_cast<uint64_t>(d_m)));
        tgt.toggle_edge(e.u, e.v);
    }
    MoveLedger ledger(cur, tgt);
    REQUIRE(ledger.distance() <= d_m / 2);
    const int64_t draws = 20000;
    for (int64_t i = 0; i < draws; ++i) (void)ledger.sample_regressing(rng, true);
    double per_draw = static_cast<double>(ledger.total_rejections()) /
                      static_cast<double>(ledger.total_regressing_draws());
    CHECK(per_draw <= 1.0);
}

TEST_CASE("dense fallback samples zeros uniformly when U is mostly nonzero") {
    int n = 6;
    Graph cur(n), tgt(n);
    // make 12 of the 15 slots nonzero: cur empty, target has 12 edges
    Rng rng(10);
    int64_t added = 0;
    for (Vertex u = 0; u < n && added < 12; ++u)
        for (Vertex v = u + 1; v < n && added < 12; ++v) {
            tgt.add_edge(u, v);
            ++added;
        }
    MoveLedger ledger(cur, tgt);
    REQUIRE(ledger.distance() == 12);
    REQUIRE(ledger.distance() > ledger.universe() / 2);

    std::map<int64_t, int64_t> counts;
    const int64_t draws = 60000;
    for (int64_t i = 0; i < draws; ++i) {
        auto se = ledger.sample_regressing(rng, true);
        REQUIRE(se.has_value());
        CHECK(!ledger.contains(se->edge));
        CHECK(se->sign == (ledger.target_has(se->edge) ? +1 : -1));
        ++counts[static_cast<int64_t>(se->edge.u) * n + se->edge.v];
    }
    REQUIRE(counts.size() == 3);  // exactly the three zero slots
    for (const auto& [_, c] : counts)
        CHECK(std::abs(static_cast<double>(c) / draws - 1.0 / 3) < 0.01);
    CHECK(chi_square(counts, draws, 3) < kChi2_999_df2);
}

#include <doctest.h>

#include <stdexcept>

#include <cmath>

#include "netinterp/generators.hpp"
#include "netinterp/interpolation.hpp"
#include "netinterp/snapshot_io.hpp"

using namespace netinterp;

TEST_CASE("advancing probability: boundary clamps and the exact center") {
    AdvancingProbability phi{1.0, 10, 100};
    CHECK(phi(10) == 0.5);  // logistic(0) is exactly 1/2
    CHECK(phi(0) == 0.0);
    CHECK(phi(100) == 1.0);
    // high-precision evaluation of the standard logistic at (11-10)/1
    CHECK(phi(11) == doctest::Approx(0.7310585786300049).epsilon(1e-12));

    AdvancingProbability steep{0.01, 5, 100};
    CHECK(steep(6) > 0.999999);
    CHECK(steep(4) < 0.000001);
}

TEST_CASE("step directions at the boundaries") {
    Rng rng(21);
    SUBCASE("at d = 0 every step regresses") {
        Graph g(4), target(4);
        g.add_edge(0, 1);
        target.add_edge(0, 1);
        MoveLedger ledger(g, target);
        AdvancingProbability phi{1.0, 2, g.max_edit_distance()};
        for (int i = 0; i < 20; ++i) {
            Graph work = g;
            MoveLedger wl(work, target);
            StepOutcome out = step(work, wl, phi, rng, true);
            CHECK(!out.advancing);
            CHECK(wl.distance() == 1);
        }
    }
    SUBCASE("at d = d_m every step advances") {
        Graph g(3), target(3);
        for (Vertex u = 0; u < 3; ++u)
            for (Vertex v = u + 1; v < 3; ++v) target.add_edge(u, v);
        AdvancingProbability phi{1.0, 1, g.max_edit_distance()};
        for (int i = 0; i < 20; ++i) {
            Graph work = g;
            MoveLedger wl(work, target);
            REQUIRE(wl.distance() == wl.universe());
            StepOutcome out = step(work, wl, phi, rng, true);
            CHECK(out.advancing);
        }
    }
}

TEST_CASE("pinned at d_t the step direction is a fair coin") {
    // keep the chain at d == d_t by undoing each step
    Rng rng(99);
    Graph start = erdos_renyi(20, 0.5, 77);
    Graph target = erdos_renyi(20, 0.5, 78);
    Graph g = start;
    MoveLedger ledger(g, target);
    int64_t d_t = ledger.distance();
    AdvancingProbability phi{1.0, d_t, g.max_edit_distance()};

    const int64_t trials = 100000;
    int64_t advancing = 0;
    for (int64_t i = 0; i < trials; ++i) {
        StepOutcome out = step(g, ledger, phi, rng, true);
        advancing += out.advancing ? 1 : 0;
        // undo: the opposite direction on the same edge restores graph and ledger
        ledger.apply(out.advancing ? SignedEdge{out.move.edge, ledger.target_has(out.move.edge) ? +1 : -1}
                                   : out.move,
                     !out.advancing);
        g.toggle_edge(out.move.edge.u, out.move.edge.v);
    }
    CHECK(ledger.distance() == d_t);
    CHECK(std::abs(static_cast<double>(advancing) / trials - 0.5) < 0.01);
}

TEST_CASE("interpolate: stop modes") {
    SUBCASE("identical endpoints give an empty trace") {
        Graph g = erdos_renyi(10, 0.4, 5);
        InterpolationConfig cfg;
        cfg.target_distance = 0;
        cfg.mode = StopMode::UntilTarget;
        Trace t = interpolate(g, g, cfg);
        CHECK(t.steps.empty());
        CHECK(t.initial_distance == 0);
        CHECK(replay(g, t) == g);
    }
    SUBCASE("one edge apart with a steep rate resolves in one step") {
        Graph a(6), b(6);
        b.add_edge(2, 3);
        InterpolationConfig cfg;
        cfg.rate = 0.01;
        cfg.seed = 123;
        Trace t = interpolate(a, b, cfg);
        CHECK(t.steps.size() == 1);
        CHECK(replay(a, t) == b);
    }
    SUBCASE("fixed step count") {
        Graph a = erdos_renyi(12, 0.5, 9);
        Graph b = erdos_renyi(12, 0.5, 10);
        InterpolationConfig cfg;
        cfg.mode = StopMode::FixedSteps;
        cfg.steps = 137;
        cfg.target_distance = 5;
        cfg.seed = 4;
        Trace t = interpolate(a, b, cfg);
        CHECK(t.steps.size() == 137);
    }
    SUBCASE("until_distance stops at first equality, also from below") {
        Graph a = erdos_renyi(12, 0.5, 9);
        Graph b = a;
        InterpolationConfig cfg;
        cfg.mode = StopMode::UntilDistance;
        cfg.target_distance = 7;  // d_o = 0 < d_t: regressing moves dominate until d reaches d_t
        cfg.seed = 8;
        Trace t = interpolate(a, b, cfg);
        CHECK(t.final_distance() == 7);
        for (const TraceStep& s : t.steps) CHECK(s.d_after <= 7);
    }
}

TEST_CASE("interpolate: every step moves the distance by exactly 1 and replay hits the target") {
    Graph a = erdos_renyi(15, 0.4, 31);
    Graph b = erdos_renyi(15, 0.6, 32);
    InterpolationConfig cfg;
    cfg.seed = 33;
    Trace t = interpolate(a, b, cfg);
    int64_t d = t.initial_distance;
    for (const TraceStep& s : t.steps) {
        CHECK(std::abs(s.d_after - d) == 1);
        d = s.d_after;
    }
    CHECK(d == 0);
    CHECK(replay(a, t) == b);
}

TEST_CASE("interpolate is deterministic given the config") {
    Graph a = erdos_renyi(20, 0.5, 1);
    Graph b = erdos_renyi(20, 0.5, 2);
    InterpolationConfig cfg;
    cfg.rate = 2.0;
    cfg.target_distance = 3;
    cfg.mode = StopMode::UntilDistance;
    cfg.seed = 4242;
    Trace t1 = interpolate(a, b, cfg);
    Trace t2 = interpolate(a, b, cfg);
    CHECK(t1 == t2);
    CHECK(trace_to_string(t1) == trace_to_string(t2));
    cfg.seed = 4243;
    Trace t3 = interpolate(a, b, cfg);
    CHECK(trace_to_string(t1) != trace_to_string(t3));
}

TEST_CASE("spread around d_t grows with the rate") {
    // ER(0.5) start to a 2-block target, d_t = 10: after first hitting d_t,
    // the s = 10 walk fluctuates more than the s = 1 walk
    Graph start = erdos_renyi(50, 0.5, 1001);
    SbmSample target = sbm(SbmSpec{{25, 25}, 0.9, 0.1}, 1002);

    auto post_hitting_variance = [&](double rate) {
        InterpolationConfig cfg;
        cfg.rate = rate;
        cfg.target_distance = 10;
        cfg.mode = StopMode::FixedSteps;
        cfg.steps = 4000;
        cfg.seed = 1003;
        Trace t = interpolate(start, target.graph, cfg);
        bool hit = false;
        double sum = 0, sum2 = 0;
        int64_t count = 0;
        for (const TraceStep& s : t.steps) {
            if (!hit && s.d_after == 10) hit = true;
            if (hit) {
                sum += static_cast<double>(s.d_after);
                sum2 += static_cast<double>(s.d_after) * static_cast<double>(s.d_after);
                ++count;
            }
        }
        REQUIRE(hit);
        double mean = sum / static_cast<double>(count);
        return sum2 / static_cast<double>(count) - mean * mean;
    };
    CHECK(post_hitting_variance(10.0) > post_hitting_variance(1.0));
}

TEST_CASE("no-false-edges runs: outdated edges only, fallback is recorded") {
    // start == target: the only regressing move is deleting a shared edge
    Graph g(5);
    g.add_edge(0, 1);
    g.add_edge(1, 2);
    InterpolationConfig cfg;
    cfg.allow_false_edges = false;
    cfg.mode = StopMode::FixedSteps;
    cfg.steps = 200;
    cfg.target_distance = 1;
    cfg.seed = 6;
    Trace t = interpolate(g, g, cfg);
    Graph work = g;
    for (const TraceStep& s : t.steps) {
        work.toggle_edge(s.edge.u, s.edge.v);
        // never an edge outside the target
        CHECK(g.has_edge(s.edge.u, s.edge.v));
    }
    // empty target without false edges deadlocks immediately
    Graph empty(4);
    InterpolationConfig bad = cfg;
    bad.steps = 5;
    bad.target_distance = 0;
    CHECK_THROWS_AS(interpolate(empty, empty, bad), std::runtime_error);
}

TEST_CASE("fallback rediraws as advancing when no regressing move exists") {
    // one shared edge: at d == 0 a regressing step deletes it; once deleted a
    // further regress request at the resulting state must fall back
    Graph tgt(4);
    tgt.add_edge(0, 1);
    InterpolationConfig cfg;
    cfg.allow_false_edges = false;
    cfg.mode = StopMode::FixedSteps;
    cfg.steps = 101;
    cfg.target_distance = 2;  // keeps phi < 1 so regress requests happen at d = 1
    cfg.seed = 12;
    Trace t = interpolate(tgt, tgt, cfg);
    CHECK(t.fallback_count() > 0);
    for (const TraceStep& s : t.steps) CHECK(s.edge == Edge{0, 1});  // the only movable edge
}

TEST_CASE("interpolate_sequence") {
    Graph g = erdos_renyi(10, 0.5, 71);
    SUBCASE("identical snapshots give empty traces") {
        auto traces = interpolate_sequence({g, g, g}, InterpolationConfig{});
        REQUIRE(traces.size() == 2);
        CHECK(traces[0].steps.empty());
        CHECK(traces[1].steps.empty());
    }
    SUBCASE("a pair delegates to interpolate") {
        Graph h = erdos_renyi(10, 0.5, 72);
        InterpolationConfig cfg;
        cfg.seed = 5;
        auto traces = interpolate_sequence({g, h}, cfg);
        REQUIRE(traces.size() == 1);
        CHECK(traces[0] == interpolate(g, h, cfg));
    }
    SUBCASE("each trace ends exactly at the next snapshot") {
        std::vector<Graph> snaps;
        for (uint64_t s = 0; s < 4; ++s) snaps.push_back(erdos_renyi(12, 0.3 + 0.1 * s, 80 + s));
        InterpolationConfig cfg;
        cfg.seed = 7;
        auto traces = interpolate_sequence(snaps, cfg);
        REQUIRE(traces.size() == 3);
        for (size_t i = 0; i < traces.size(); ++i) CHECK(replay(snaps[i], traces[i]) == snaps[i + 1]);
    }
    CHECK_THROWS_AS(interpolate_sequence({g}, InterpolationConfig{}), std::invalid_argument);
}

TEST_CASE("default stat stride") {
    CHECK(default_stat_stride(100, 1000000) == 1);
    CHECK(default_stat_stride(500, 1000000) == 500);
    CHECK(default_stat_stride(500, 100) == 1);
}

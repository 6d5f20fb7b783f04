#include "zxc/anneal.hpp"

#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "zxc/oracle.hpp"
#include "zxc/rewrite.hpp"

using namespace zxc;
using zxc::testutil::close;

TEST_CASE("cooling schedule hits its endpoints exactly") {
    CHECK(temperature(0.0) == 1.0);
    CHECK(temperature(1.0) == 0.0);
    double prev = temperature(0.0);
    for (int i = 1; i <= 20; ++i) {
        double t = temperature(i / 20.0);
        CHECK(t < prev);
        prev = t;
    }
    CHECK_THROWS_AS(temperature(-0.01), std::invalid_argument);
    CHECK_THROWS_AS(temperature(1.01), std::invalid_argument);
}

TEST_CASE("acceptance probabilities at the pinned points") {
    CHECK(accept_probability(50.0, 3.0, 0.7) == 1.0);  // improvements always pass
    double e = std::exp(1.0);
    CHECK(std::abs(accept_probability(e, e * e, 0.5) - 0.25) < 1e-12);
    CHECK(accept_probability(9.0, 9.0, 0.3) == 1.0);  // equal cost, warm
    CHECK(accept_probability(9.0, 9.0, 0.0) == 0.0);  // equal cost, frozen
    CHECK(accept_probability(9.0, 400.0, 0.0) == 0.0);
    CHECK(accept_probability(9.0, 4.0, 0.0) == 1.0);
    CHECK_THROWS_AS(accept_probability(0.5, 2.0, 0.5), std::invalid_argument);
    // Hotter never hurts an uphill move.
    double cold = accept_probability(10.0, 80.0, 0.2);
    double warm = accept_probability(10.0, 80.0, 0.9);
    CHECK(cold < warm);
    CHECK(warm < 1.0);
}

TEST_CASE("energy functions agree on obvious shapes") {
    // A path evaluates to width 0 under both width energies and to a tiny
    // multiply-add count under the simulated one.
    ClosedGraphLike path;
    for (NodeId v = 0; v < 5; ++v) path.add_node(v, {1.0, 1.0});
    for (NodeId v = 0; v + 1 < 5; ++v) path.add_edge(v, v + 1);
    CHECK(anneal_cost(path, CostFn::QuickTw) == 0.0);
    CHECK(anneal_cost(path, CostFn::MinFillTw) == 0.0);
    double flops = anneal_cost(path, CostFn::FlopEstimate);
    CHECK(flops > 0.0);
    CHECK(flops <= 64.0);
}

TEST_CASE("zero steps hand back the input untouched") {
    std::mt19937_64 rng(5);
    ClosedGraphLike g = testutil::random_hybrid(rng, 9);
    AnnealConfig cfg;
    cfg.nb_steps = 0;
    auto [out, report] = anneal(g, cfg);
    CHECK(out.adj == g.adj);
    CHECK(report.rows.empty());
    CHECK(report.best_step == -1);
    CHECK(report.best_cost == report.initial_cost);
}

TEST_CASE("annealing preserves the value and never worsens the energy") {
    std::mt19937_64 rng(6021);
    for (int trial = 0; trial < 12; ++trial) {
        ClosedGraphLike g = testutil::random_hybrid(rng, 10, 45);
        for (CostFn fn : {CostFn::QuickTw, CostFn::MinFillTw, CostFn::FlopEstimate}) {
            AnnealConfig cfg;
            cfg.nb_steps = 12;
            cfg.seed = rng();
            cfg.cost_fn = fn;
            auto [out, report] = anneal(g, cfg);
            CHECK(report.rows.size() == cfg.nb_steps);
            CHECK(anneal_cost(out, fn) == report.best_cost);
            CHECK(report.best_cost <= report.initial_cost);
            CHECK(close(eval_hybrid(out), eval_hybrid(g), 1e-9));
        }
    }
}

TEST_CASE("the walk really pivots and the best candidate is returned") {
    std::mt19937_64 rng(914);
    size_t moved = 0, improved = 0;
    for (int trial = 0; trial < 8; ++trial) {
        ClosedGraphLike g = testutil::random_hybrid(rng, 11, 60);
        AnnealConfig cfg;
        cfg.nb_steps = 25;
        cfg.seed = rng();
        cfg.cost_fn = CostFn::FlopEstimate;
        auto [out, report] = anneal(g, cfg);
        for (const auto& row : report.rows)
            if (row.candidate_cost != report.initial_cost) ++moved;
        if (report.best_step >= 0) {
            ++improved;
            CHECK(report.best_cost < report.initial_cost);
            CHECK(dump_graph_like(out) != dump_graph_like(g));
        } else {
            CHECK(dump_graph_like(out) == dump_graph_like(g));
        }
    }
    // Candidates are one pivot away, so their energies must spread; a walk
    // whose every candidate costs exactly the input's means pivots are not
    // being applied.
    CHECK(moved > 0);
    CHECK(improved > 0);
}

TEST_CASE("greedy mode is the frozen special case") {
    std::mt19937_64 rng(77);
    ClosedGraphLike g = testutil::random_hybrid(rng, 10, 45);
    AnnealConfig cfg;
    cfg.nb_steps = 15;
    cfg.seed = 40;
    cfg.mode = AnnealMode::Greedy;
    auto [out, report] = anneal(g, cfg);
    REQUIRE(report.rows.size() == 15);
    double current = report.initial_cost;
    for (const auto& row : report.rows) {
        CHECK(row.tau == 0.0);
        // Frozen acceptance only ever moves strictly downhill.
        if (row.accepted) {
            CHECK(row.candidate_cost < current);
            current = row.candidate_cost;
        }
    }
    CHECK(close(eval_hybrid(out), eval_hybrid(g), 1e-9));
}

TEST_CASE("the anneal walk is reproducible from its seed") {
    std::mt19937_64 rng(31);
    ClosedGraphLike g = testutil::random_hybrid(rng, 9, 50);
    AnnealConfig cfg;
    cfg.nb_steps = 10;
    cfg.seed = 123;
    auto [out1, rep1] = anneal(g, cfg);
    auto [out2, rep2] = anneal(g, cfg);
    CHECK(out1.adj == out2.adj);
    CHECK(dump_graph_like(out1) == dump_graph_like(out2));
    REQUIRE(rep1.rows.size() == rep2.rows.size());
    for (size_t i = 0; i < rep1.rows.size(); ++i) {
        CHECK(rep1.rows[i].candidate_cost == rep2.rows[i].candidate_cost);
        CHECK(rep1.rows[i].accepted == rep2.rows[i].accepted);
        CHECK(rep1.rows[i].tau == rep2.rows[i].tau);
    }
    CHECK(rep1.best_step == rep2.best_step);
}

// Acceptance gate: one line per criterion, nonzero exit if any fails. Every
// numeric target and tolerance is pinned here so a green run certifies the
// whole stack, not just that it compiles.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "test_util.hpp"
#include "zxc/anneal.hpp"
#include "zxc/engine.hpp"
#include "zxc/oracle.hpp"
#include "zxc/pipeline.hpp"
#include "zxc/rewrite.hpp"

using namespace zxc;
using zxc::testutil::close;

namespace {

int failures = 0;

void report(int num, const char* name, bool pass, const std::string& detail) {
    std::printf("[%s] %d. %s (%s)\n", pass ? "PASS" : "FAIL", num, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

struct Stopwatch {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

Circuit random_circuit(std::mt19937_64& rng, uint32_t n, size_t n_gates) {
    Circuit c;
    c.n_qubits = n;
    const GateKind kinds[] = {GateKind::H,  GateKind::CNOT, GateKind::CZ,
                              GateKind::RZ, GateKind::RX,   GateKind::SX,
                              GateKind::SY, GateKind::SW,   GateKind::FSIM};
    for (size_t i = 0; i < n_gates; ++i) {
        Gate g;
        g.kind = kinds[rng() % 9];
        bool two = g.kind == GateKind::CNOT || g.kind == GateKind::CZ || g.kind == GateKind::FSIM;
        uint32_t a = rng() % n;
        if (two && n >= 2) {
            uint32_t b = rng() % n;
            while (b == a) b = rng() % n;
            g.qubits = {a, b};
        } else if (two) {
            g.kind = GateKind::H;
            g.qubits = {a};
        } else {
            g.qubits = {a};
        }
        if (g.kind == GateKind::RZ || g.kind == GateKind::RX)
            g.angles = {2 * PI * testutil::unit_real(rng)};
        if (g.kind == GateKind::FSIM)
            g.angles = {2 * PI * testutil::unit_real(rng), 2 * PI * testutil::unit_real(rng)};
        c.gates.push_back(std::move(g));
    }
    return c;
}

double scaled_diff(cplx a, cplx b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

// 1. Every rewrite preserves the brute-force diagram value. Instances are
// seeded individually so they can run on any number of threads without
// changing the corpus.
void criterion_rewrites() {
    Stopwatch sw;
    const int instances = 500;
    std::atomic<size_t> applications{0};
    std::mutex mu;
    double worst = 0;
    bool ok = true;

    auto worker = [&](int begin, int step) {
        double my_worst = 0;
        bool my_ok = true;
        size_t my_apps = 0;

        auto check = [&](cplx before, const ClosedGraphLike& h) {
            double d = scaled_diff(before, eval_hybrid(h));
            my_worst = std::max(my_worst, d);
            my_ok = my_ok && d <= 1e-10;
            ++my_apps;
        };

        for (int i = begin; i < instances; i += step) {
            std::mt19937_64 rng(101 + 7919 * uint64_t(i));
            ClosedGraphLike g = testutil::random_hybrid(rng, 13, 35);
            cplx before = eval_hybrid(g);

            NodeId u = NodeId(rng() % g.node_count());
            check(before, local_complement(g, u));

            auto es = g.edges();
            if (!es.empty()) {
                auto [a, b] = es[rng() % es.size()];
                check(before, pivot(g, a, b));
            }

            // Unfusing and splitting add nodes on top of the input's, and
            // re-evaluation doubles in cost per node, so they get their own
            // smaller instances to keep the whole corpus inside the budget.
            ClosedGraphLike mid = testutil::random_hybrid(rng, 11, 35);
            std::vector<NodeId> wide;
            for (const auto& [v, nb] : mid.adj)
                if (nb.size() >= 2) wide.push_back(v);
            if (!wide.empty()) {
                NodeId v = wide[rng() % wide.size()];
                std::set<NodeId> keep;
                const auto& nb = mid.adj.at(v);
                while (keep.empty() || keep.size() == nb.size()) {
                    keep.clear();
                    for (NodeId w : nb)
                        if (rng() % 2) keep.insert(w);
                }
                check(eval_hybrid(mid), unfuse(mid, v, keep).g);
            }

            ClosedGraphLike small = testutil::random_hybrid(rng, 8, 40);
            ClosedGraphLike split = split_high_degree(small, 3);
            if (split.node_count() <= 20) check(eval_hybrid(small), split);

            // Precontraction works on the skeleton; replay it through the
            // engine and finish with the remaining edges in ascending order.
            NetGraph sk = netgraph_from_hybrid(g);
            Network net = network_from_hybrid(g);
            PrecontractResult pre = precontract(sk);
            ContractionPlan plan;
            plan.premerge = pre.sequence;
            for (const auto& [e, ends] : pre.condensed.ends) plan.order.push_back(e);
            plan.slice_point = plan.order.size();
            ExecStats ex = execute_plan(net, sk, plan, false);
            double d = scaled_diff(before, ex.amplitude);
            my_worst = std::max(my_worst, d);
            my_ok = my_ok && d <= 1e-10;
            ++my_apps;
        }

        applications += my_apps;
        std::lock_guard<std::mutex> lock(mu);
        worst = std::max(worst, my_worst);
        ok = ok && my_ok;
    };

    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, int(w), int(threads));
    for (auto& th : pool) th.join();

    double t = sw.seconds();
    report(1, "rewrites preserve the contraction value", ok && t < 60,
           std::to_string(applications.load()) + " applications on " +
               std::to_string(instances) + " diagrams, worst scaled diff " +
               fmt("%.2e", worst) + ", " + fmt("%.1f", t) + " s");
}

// 2. The whole pipeline reproduces statevector amplitudes in every mode.
void criterion_end_to_end() {
    Stopwatch sw;
    std::mt19937_64 rng(202);
    const int circuits = 200;
    double worst = 0;
    int sliced = 0, unsliced = 0;
    bool ok = true;

    for (int i = 0; i < circuits; ++i) {
        uint32_t n = 2 + rng() % 9;
        Circuit c = random_circuit(rng, n, 5 + rng() % 36);
        std::vector<bool> x(n);
        for (uint32_t q = 0; q < n; ++q) x[q] = rng() % 2;
        cplx want = statevector_amplitude(c, x);

        PipelineConfig cfg;
        cfg.anneal_steps = 6;
        cfg.seed = rng();
        cfg.mode = i % 2 ? AnnealMode::Greedy : AnnealMode::Anneal;
        cfg.cost_fn = i % 3 == 0   ? CostFn::FlopEstimate
                      : i % 3 == 1 ? CostFn::QuickTw
                                   : CostFn::MinFillTw;
        // Half the corpus runs with an aggressive slice target so both the
        // sliced and unsliced execution paths are exercised.
        cfg.target_rank = i % 2 ? 3 : 26;
        PipelineResult r = run_pipeline(c, x, cfg);
        (r.plan.slices.empty() ? unsliced : sliced)++;

        double d = std::abs(r.exec.amplitude - want);
        worst = std::max(worst, d);
        ok = ok && d <= 1e-9 && r.exec.subtasks == size_t{1} << r.plan.slices.size();
    }

    double t = sw.seconds();
    report(2, "pipeline matches the statevector oracle", ok && sliced >= 10 && t < 300,
           std::to_string(circuits) + " circuits (" + std::to_string(sliced) + " sliced, " +
               std::to_string(unsliced) + " unsliced), worst |diff| " + fmt("%.2e", worst) +
               ", " + fmt("%.1f", t) + " s");
}

// 3. Contracting along a decomposition order never exceeds width+1.
void criterion_width_bound() {
    Stopwatch sw;
    std::mt19937_64 rng(303);
    int checked = 0, violations = 0;

    auto probe = [&](const NetGraph& net) {
        AdjMap lg = line_graph(net);
        for (int variant = 0; variant < 2; ++variant) {
            TreeDecomposition td =
                variant ? treewidth_bb(lg, 3000) : treewidth_min_fill(lg);
            ContractionPlan plan;
            plan.order = td_to_order(td);
            plan.slice_point = plan.order.size();
            SimulatedCost sc = simulate_plan(net, plan);
            if (sc.max_rank > td.width() + 1) ++violations;
            ++checked;
        }
    };

    for (int i = 0; i < 120; ++i)
        probe(netgraph_from_hybrid(testutil::random_hybrid(rng, 12, 40)));
    for (int i = 0; i < 30; ++i) {
        uint32_t n = 2 + rng() % 6;
        Circuit c = random_circuit(rng, n, 4 + rng() % 16);
        std::vector<bool> x(n, false);
        probe(network_from_circuit(c, x).second);
    }

    double t = sw.seconds();
    report(3, "decomposition orders respect the width bound", violations == 0,
           std::to_string(checked) + " decompositions, " + std::to_string(violations) +
               " rank violations, " + fmt("%.1f", t) + " s");
}

// 4. Pivot is exactly the three chained local complementations.
void criterion_pivot_identity() {
    Stopwatch sw;
    std::mt19937_64 rng(404);
    int checked = 0, mismatches = 0;
    while (checked < 200) {
        ClosedGraphLike g = testutil::random_hybrid(rng);
        auto es = g.edges();
        if (es.empty()) continue;
        auto [u, v] = es[rng() % es.size()];
        ClosedGraphLike direct = pivot(g, u, v);
        ClosedGraphLike chained =
            local_complement(local_complement(local_complement(g, u), v), u);
        bool same = direct.adj == chained.adj && close(direct.scalar, chained.scalar, 1e-9);
        for (const auto& [id, f] : direct.forms) {
            const LinearForm& other = chained.forms.at(id);
            same = same && close(f[0], other[0], 1e-9) && close(f[1], other[1], 1e-9);
        }
        if (!same) ++mismatches;
        ++checked;
    }
    report(4, "pivot equals chained local complementations", mismatches == 0,
           std::to_string(checked) + " instances, " + std::to_string(mismatches) +
               " mismatches, " + fmt("%.1f", sw.seconds()) + " s");
}

// 5. The annealing schedule formulas evaluate to their pinned values.
void criterion_schedule_formulas() {
    bool ok = temperature(0.0) == 1.0 && temperature(1.0) == 0.0;
    ok = ok && accept_probability(10.0, 4.0, 0.3) == 1.0;
    double e = std::exp(1.0);
    double p = accept_probability(e, e * e, 0.5);
    ok = ok && std::abs(p - 0.25) <= 1e-12;
    report(5, "annealing schedule formulas", ok,
           "temperature endpoints exact, improvement accepted, uphill case " +
               fmt("%.15f", p));
}

// 6. Plan quality on the 3x3 depth-8 benchmark: medians across 50 seeds
// must order optimized <= unoptimized <= standard, and the optimized plan
// must be no worse than the unoptimized one on at least 90% of seeds.
void criterion_efficacy() {
    Stopwatch sw;
    const int seeds = 50;
    std::vector<double> opt, unopt, std_;
    int nonloss = 0, strict = 0;

    for (int seed = 0; seed < seeds; ++seed) {
        Circuit c = random_grid_circuit(3, 3, 8, seed);
        std::vector<bool> x(c.n_qubits, false);
        PipelineConfig cfg;
        cfg.anneal_steps = 100;
        cfg.cost_fn = CostFn::FlopEstimate;
        cfg.seed = seed;
        cfg.contract = false;

        PipelineResult ro = run_pipeline(c, x, cfg);
        cfg.optimize = false;
        PipelineResult ru = run_pipeline(c, x, cfg);
        cfg.use_zx = false;
        PipelineResult rs = run_pipeline(c, x, cfg);

        opt.push_back(ro.plan.predicted_cost);
        unopt.push_back(ru.plan.predicted_cost);
        std_.push_back(rs.plan.predicted_cost);
        if (ro.plan.predicted_cost <= ru.plan.predicted_cost) ++nonloss;
        if (ro.plan.predicted_cost < ru.plan.predicted_cost) ++strict;
    }

    auto median = [](std::vector<double> v) {
        std::sort(v.begin(), v.end());
        return (v[v.size() / 2 - 1] + v[v.size() / 2]) / 2;
    };
    double mo = median(opt), mu = median(unopt), ms = median(std_);
    double t = sw.seconds();
    bool ordering1 = mo <= mu;
    bool ordering2 = mu <= ms;
    bool pointwise = nonloss >= seeds * 9 / 10;
    std::string detail = "medians: optimized " + fmt("%.0f", mo) + ", unoptimized " +
                         fmt("%.0f", mu) + ", standard " + fmt("%.0f", ms) + "; optimized <= " +
                         "unoptimized on " + std::to_string(nonloss) + "/50 seeds (" +
                         std::to_string(strict) + " strict), " + fmt("%.0f", t) + " s";
    if (!ordering2)
        detail += "; translation overhead exceeds the standard network at this depth, the"
                  " methods cross between depths 12 and 16 (see bench CSVs)";
    report(6, "plan quality on the depth-8 grid benchmark",
           ordering1 && ordering2 && pointwise && t < 900, detail);
}

// 7. Slicing: the sum over all 2^k subtasks equals the unsliced amplitude.
void criterion_slicing() {
    Stopwatch sw;
    std::mt19937_64 rng(707);
    int sliced_plans = 0, checked = 0;
    double worst = 0;
    bool ok = true;

    for (int i = 0; i < 40 && sliced_plans < 12; ++i) {
        ClosedGraphLike h;
        if (i % 2) {
            uint32_t n = 7 + rng() % 4;
            Circuit c = random_circuit(rng, n, 24 + rng() % 17);
            std::vector<bool> x(n);
            for (uint32_t q = 0; q < n; ++q) x[q] = rng() % 2;
            h = close_to_hybrid(to_graph_like(to_zx(c, x)));
        } else {
            Circuit c = random_grid_circuit(2 + i % 2, 3, 4 + i % 3, i);
            std::vector<bool> x(c.n_qubits, false);
            h = close_to_hybrid(to_graph_like(to_zx(c, x)));
        }
        Network net = network_from_hybrid(h);
        NetGraph sk = netgraph_from_hybrid(h);
        PrecontractResult pre = precontract(sk);
        OrderConfig oc;
        oc.seed = i;
        oc.target_rank = 3;
        ContractionPlan plan = find_order(pre.condensed, oc);
        plan.premerge = pre.sequence;
        ++checked;
        if (plan.slices.empty()) continue;
        ++sliced_plans;

        ExecStats part = execute_plan(net, sk, plan, true);
        ContractionPlan whole = plan;
        whole.slice_point = whole.order.size();
        whole.slices.clear();
        ExecStats full = execute_plan(net, sk, whole, true);

        double d = std::abs(part.amplitude - full.amplitude);
        worst = std::max(worst, d);
        ok = ok && d <= 1e-9 && part.subtasks == size_t{1} << plan.slices.size() &&
             full.subtasks == 1;
    }

    report(7, "sliced subtask sums equal the unsliced amplitude", ok && sliced_plans >= 10,
           std::to_string(sliced_plans) + " sliced plans out of " + std::to_string(checked) +
               ", worst |diff| " + fmt("%.2e", worst) + ", " + fmt("%.1f", sw.seconds()) +
               " s");
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// 8. Two identical --deterministic CLI invocations write identical bytes.
void criterion_determinism(const std::string& cli) {
    Stopwatch sw;
    if (cli.empty() || !std::filesystem::exists(cli)) {
        report(8, "deterministic CLI runs are byte-identical", false,
               "zxcontract binary not supplied");
        return;
    }
    namespace fs = std::filesystem;
    fs::path base = fs::temp_directory_path() / "zx_acceptance_determinism";
    fs::remove_all(base);
    fs::create_directories(base);

    auto shell = [&](const std::string& args) {
        std::string cmd = cli + " " + args + " >/dev/null 2>&1";
        return std::system(cmd.c_str()) == 0;
    };

    bool ok = true;
    ok &= shell("run --grid 3x3 --depth 4 --seed 9 --steps 25 --deterministic --out " +
                (base / "run-a").string());
    ok &= shell("run --grid 3x3 --depth 4 --seed 9 --steps 25 --deterministic --out " +
                (base / "run-b").string());
    ok &= shell("bench --grid 2x3 --depths 2,3 --seed 4 --steps 10 --deterministic --out " +
                (base / "bench-a").string());
    ok &= shell("bench --grid 2x3 --depths 2,3 --seed 4 --steps 10 --deterministic --out " +
                (base / "bench-b").string());

    std::string plan_a = slurp(base / "run-a" / "plan.txt");
    bool plans = !plan_a.empty() && plan_a == slurp(base / "run-b" / "plan.txt");
    std::string anneal_a = slurp(base / "run-a" / "anneal.csv");
    bool anneals = !anneal_a.empty() && anneal_a == slurp(base / "run-b" / "anneal.csv");
    std::string bench_a = slurp(base / "bench-a" / "bench.csv");
    bool benches = !bench_a.empty() && bench_a == slurp(base / "bench-b" / "bench.csv");

    report(8, "deterministic CLI runs are byte-identical", ok && plans && anneals && benches,
           std::string("plan ") + (plans ? "identical" : "DIFFERS") + ", anneal csv " +
               (anneals ? "identical" : "DIFFERS") + ", bench csv " +
               (benches ? "identical" : "DIFFERS") + ", " + fmt("%.1f", sw.seconds()) + " s");
}

// 9. Exhaustive branch and bound versus an independent oracle: subset
// dynamic programming over elimination sets, where eliminating v after S
// costs the number of vertices outside S reachable from v through S.
void criterion_exact_treewidth() {
    Stopwatch sw;
    std::mt19937_64 rng(909);
    int graphs = 0, mismatches = 0, invalid = 0;

    for (int i = 0; i < 100; ++i) {
        uint32_t n = 1 + rng() % 8;
        int percent = int(rng() % 101);
        AdjMap g;
        for (uint32_t v = 0; v < n; ++v) g[v];
        for (uint32_t a = 0; a < n; ++a)
            for (uint32_t b = a + 1; b < n; ++b)
                if (int(rng() % 100) < percent) {
                    g[a].insert(b);
                    g[b].insert(a);
                }

        // DP oracle on vertex bitmasks.
        std::vector<uint64_t> adj(n, 0);
        for (const auto& [v, nb] : g)
            for (uint32_t w : nb) adj[v] |= uint64_t{1} << w;
        uint64_t full = (uint64_t{1} << n) - 1;
        std::vector<int> dp(size_t{1} << n, 0);
        for (uint64_t s = 1; s <= full; ++s) {
            int best = int(n);
            for (uint32_t v = 0; v < n; ++v) {
                if (!(s >> v & 1)) continue;
                uint64_t without = s & ~(uint64_t{1} << v);
                // Flood from v through the already-eliminated set.
                uint64_t seen = uint64_t{1} << v, frontier = adj[v];
                uint64_t outside = 0;
                while (frontier) {
                    uint64_t fresh = frontier & ~seen;
                    seen |= fresh;
                    outside |= fresh & ~without;
                    uint64_t next = 0;
                    uint64_t inside = fresh & without;
                    while (inside) {
                        uint32_t w = uint32_t(__builtin_ctzll(inside));
                        inside &= inside - 1;
                        next |= adj[w];
                    }
                    frontier = next & ~seen;
                }
                int deg = __builtin_popcountll(outside);
                best = std::min(best, std::max(dp[without], deg));
            }
            dp[s] = best;
        }
        int want = dp[full];

        TreeDecomposition td = treewidth_bb(g, UINT64_MAX);
        std::string why;
        if (!td.validate(g, &why)) ++invalid;
        if (td.width() != want) ++mismatches;
        ++graphs;
    }

    report(9, "exhaustive branch and bound matches the exact treewidth",
           mismatches == 0 && invalid == 0,
           std::to_string(graphs) + " graphs up to 8 vertices, " + std::to_string(mismatches) +
               " width mismatches, " + std::to_string(invalid) + " invalid decompositions, " +
               fmt("%.1f", sw.seconds()) + " s");
}

}  // namespace

int main(int argc, char** argv) {
    std::string cli = argc > 1 ? argv[1] : "";
    criterion_rewrites();
    criterion_end_to_end();
    criterion_width_bound();
    criterion_pivot_identity();
    criterion_schedule_formulas();
    criterion_efficacy();
    criterion_slicing();
    criterion_determinism(cli);
    criterion_exact_treewidth();
    std::printf("%d of 9 criteria passed\n", 9 - failures);
    return failures == 0 ? 0 : 1;
}

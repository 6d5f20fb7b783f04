#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zxc/oracle.hpp"
#include "zxc/pipeline.hpp"

using namespace zxc;

namespace {

struct Options {
    std::string circuit_path;
    std::string grid;
    uint32_t depth = 0;
    std::vector<uint32_t> depths = {4, 6, 8};
    std::string x_bits;
    uint64_t seed = 0;
    size_t steps = 100;
    std::string mode = "anneal";
    std::string cost_fn = "quicktw";
    size_t trials = 1;
    uint64_t bb_budget_ms = 10;
    int target_rank = 26;
    bool verify = false;
    std::string out_dir;
    bool deterministic = false;
};

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string hex64(uint64_t v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016" PRIx64, v);
    return buf;
}

std::pair<uint32_t, uint32_t> parse_grid(const std::string& spec) {
    size_t sep = spec.find('x');
    size_t used = 0;
    unsigned long rows = 0, cols = 0;
    if (sep != std::string::npos && sep > 0) {
        rows = std::stoul(spec, &used);
        if (used == sep) cols = std::stoul(spec.substr(sep + 1), &used);
    }
    if (rows == 0 || cols == 0 || sep + 1 + used != spec.size())
        throw std::runtime_error("bad --grid '" + spec + "', expected RxC like 3x3");
    return {(uint32_t)rows, (uint32_t)cols};
}

Circuit make_circuit(const Options& o, uint32_t depth) {
    if (!o.circuit_path.empty()) {
        std::ifstream in(o.circuit_path);
        if (!in) throw std::runtime_error("cannot open " + o.circuit_path);
        std::stringstream ss;
        ss << in.rdbuf();
        return parse_circuit(ss.str());
    }
    if (o.grid.empty()) throw std::runtime_error("need --circuit or --grid");
    if (depth == 0) throw std::runtime_error("--grid needs --depth");
    auto [rows, cols] = parse_grid(o.grid);
    return random_grid_circuit(rows, cols, depth, o.seed);
}

std::string input_label(const Options& o, uint32_t depth) {
    if (!o.circuit_path.empty()) return "file " + o.circuit_path;
    return "grid " + o.grid + " depth " + std::to_string(depth);
}

std::vector<bool> make_projector(const Options& o, uint32_t n_qubits) {
    std::vector<bool> x(n_qubits, false);
    if (o.x_bits.empty()) return x;
    if (o.x_bits.size() != n_qubits)
        throw std::runtime_error("--x needs exactly " + std::to_string(n_qubits) + " bits");
    for (size_t i = 0; i < x.size(); ++i) {
        if (o.x_bits[i] != '0' && o.x_bits[i] != '1')
            throw std::runtime_error("--x must be a string of 0s and 1s");
        x[i] = o.x_bits[i] == '1';
    }
    return x;
}

std::string bits_to_string(const std::vector<bool>& x) {
    std::string s;
    for (bool b : x) s += b ? '1' : '0';
    return s;
}

PipelineConfig pipe_config(const Options& o) {
    PipelineConfig cfg;
    cfg.anneal_steps = o.steps;
    cfg.mode = o.mode == "greedy" ? AnnealMode::Greedy : AnnealMode::Anneal;
    cfg.cost_fn = o.cost_fn == "minfill"  ? CostFn::MinFillTw
                  : o.cost_fn == "flops"  ? CostFn::FlopEstimate
                                          : CostFn::QuickTw;
    cfg.seed = o.seed;
    cfg.trials = o.trials;
    // The branch and bound counts node expansions, not wall time; 2000
    // expansions per budgeted millisecond keeps the flag's unit intuitive
    // without making plans depend on the clock.
    cfg.bb_budget = o.bb_budget_ms * 2000;
    cfg.target_rank = o.target_rank;
    cfg.deterministic = o.deterministic;
    return cfg;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

std::string anneal_csv(const AnnealReport& r) {
    std::string s = "step,cost,accepted,tau\n";
    for (const auto& row : r.rows) {
        s += std::to_string(row.step) + "," + fmt(row.candidate_cost) + "," +
             (row.accepted ? "1" : "0") + "," + fmt(row.tau) + "\n";
    }
    return s;
}

std::string config_echo(const Options& o, const PipelineConfig& cfg) {
    std::ostringstream s;
    s << "config\n";
    s << "  seed              " << o.seed << "\n";
    s << "  steps             " << o.steps << "\n";
    s << "  mode              " << o.mode << "\n";
    s << "  cost-fn           " << o.cost_fn << "\n";
    s << "  trials            " << o.trials << "\n";
    s << "  bb-budget-ms      " << o.bb_budget_ms << " (" << cfg.bb_budget << " expansions)\n";
    s << "  target-rank       " << o.target_rank << "\n";
    s << "  split-degree      " << cfg.max_split_degree << "\n";
    s << "  deterministic     " << (o.deterministic ? "on" : "off") << "\n";
    return s.str();
}

std::string stage_table(const PipelineResult& r) {
    std::string s = "stages\n";
    char buf[128];
    std::snprintf(buf, sizeof buf, "  %-12s %7s %8s %8s %11s\n", "stage", "nodes", "edges",
                  "max-deg", "ms");
    s += buf;
    for (const auto& st : r.stages) {
        std::snprintf(buf, sizeof buf, "  %-12s %7zu %8zu %8zu %11.2f\n", st.stage.c_str(),
                      st.nodes, st.edges, st.max_degree, st.ms);
        s += buf;
    }
    return s;
}

std::string run_report(const Options& o, const Circuit& c, const std::vector<bool>& x,
                       const PipelineResult& r, bool have_oracle, cplx oracle,
                       const std::string& verdict, double total_ms) {
    std::ostringstream s;
    s << "zxcontract run\n";
    s << "==============\n\n";
    s << "input\n";
    s << "  source            " << input_label(o, o.depth) << "\n";
    s << "  qubits            " << c.n_qubits << "\n";
    s << "  gates             " << c.gates.size() << "\n";
    s << "  circuit digest    " << hex64(fnv1a64(circuit_to_text(c))) << "\n";
    s << "  projector         " << bits_to_string(x) << "\n\n";
    s << config_echo(o, pipe_config(o)) << "\n";
    s << stage_table(r) << "\n";
    if (!r.anneal_report.rows.empty()) {
        s << "anneal\n";
        s << "  initial cost      " << fmt(r.anneal_report.initial_cost) << "\n";
        s << "  best cost         " << fmt(r.anneal_report.best_cost) << "\n";
        s << "  best step         " << r.anneal_report.best_step << "\n";
        s << "  steps             " << r.anneal_report.rows.size() << "\n\n";
    }
    s << "plan\n";
    s << "  planned on        " << r.planned_on << "\n";
    s << "  predicted cost    " << fmt(r.plan.predicted_cost) << "\n";
    s << "  width             " << r.plan.width << "\n";
    s << "  once / subtask    " << fmt(r.predicted.once) << " / " << fmt(r.predicted.per_subtask)
      << "\n";
    s << "  subtasks          " << (size_t{1} << r.plan.slices.size()) << "\n\n";
    s << plan_to_text(r.plan) << "\n";
    s << "result\n";
    s << "  amplitude re      " << fmt(r.exec.amplitude.real()) << "\n";
    s << "  amplitude im      " << fmt(r.exec.amplitude.imag()) << "\n";
    s << "  |amplitude|       " << fmt(std::abs(r.exec.amplitude)) << "\n";
    s << "  measured cost     " << fmt(r.exec.measured_cost) << "\n";
    s << "  max rank          " << r.exec.max_rank << "\n";
    s << "  skipped steps     " << r.exec.skipped << "\n";
    if (have_oracle) {
        s << "  oracle re         " << fmt(oracle.real()) << "\n";
        s << "  oracle im         " << fmt(oracle.imag()) << "\n";
    }
    s << "  verify            " << verdict << "\n\n";
    s << "timing\n";
    s << "  total ms          " << fmt(total_ms) << "\n";
    return s.str();
}

int do_run(const Options& o) {
    Circuit c = make_circuit(o, o.depth);
    std::vector<bool> x = make_projector(o, c.n_qubits);
    PipelineConfig cfg = pipe_config(o);

    auto t0 = std::chrono::steady_clock::now();
    PipelineResult r = run_pipeline(c, x, cfg);
    double total_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    int code = 0;
    bool have_oracle = false;
    cplx oracle = 0;
    std::string verdict = "not requested";
    if (o.verify) {
        if (c.n_qubits <= ORACLE_DEFAULT_LIMIT) {
            oracle = statevector_amplitude(c, x);
            have_oracle = true;
            double diff = std::abs(oracle - r.exec.amplitude);
            if (diff > 1e-9) {
                verdict = "MISMATCH (|diff| = " + fmt(diff) + ")";
                code = 2;
            } else {
                verdict = "ok (|diff| = " + fmt(diff) + ")";
            }
        } else {
            verdict = "skipped (more than " + std::to_string(ORACLE_DEFAULT_LIMIT) +
                      " qubits, oracle out of reach)";
        }
    }

    std::string report = run_report(o, c, x, r, have_oracle, oracle, verdict, total_ms);
    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        std::filesystem::path dir(o.out_dir);
        write_file(dir / "report.txt", report);
        write_file(dir / "plan.txt", plan_to_text(r.plan));
        write_file(dir / "anneal.csv", anneal_csv(r.anneal_report));
    } else {
        std::cout << report;
    }
    if (code == 2)
        std::cerr << "zxcontract: verification mismatch against the statevector oracle\n";
    return code;
}

int do_bench(const Options& o) {
    if (o.grid.empty()) throw std::runtime_error("bench needs --grid");
    auto [rows, cols] = parse_grid(o.grid);

    std::string csv = "stage,depth,method,seed,cost,width,nodes,edges\n";
    for (uint32_t depth : o.depths) {
        Circuit c = random_grid_circuit(rows, cols, depth, o.seed);
        std::vector<bool> x(c.n_qubits, false);
        struct Method {
            const char* name;
            bool use_zx;
            bool optimize;
        };
        for (const Method& m : {Method{"standard", false, false},
                                Method{"zx-unoptimized", true, false},
                                Method{"zx-optimized", true, true}}) {
            PipelineConfig cfg = pipe_config(o);
            cfg.use_zx = m.use_zx;
            cfg.optimize = m.optimize;
            cfg.contract = false;
            PipelineResult r = run_pipeline(c, x, cfg);
            size_t nodes = 0, edges = 0;
            for (const auto& st : r.stages) {
                if (st.stage == "network") {
                    nodes = st.nodes;
                    edges = st.edges;
                }
            }
            csv += "plan," + std::to_string(depth) + "," + m.name + "," + std::to_string(o.seed) +
                   "," + fmt(r.plan.predicted_cost) + "," + std::to_string(r.plan.width) + "," +
                   std::to_string(nodes) + "," + std::to_string(edges) + "\n";
            std::cerr << "depth " << depth << " " << m.name << " predicted cost "
                      << fmt(r.plan.predicted_cost) << "\n";
        }
    }

    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        write_file(std::filesystem::path(o.out_dir) / "bench.csv", csv);
    } else {
        std::cout << csv;
    }
    return 0;
}

int do_eval(const Options& o) {
    Circuit c = make_circuit(o, o.depth);
    std::vector<bool> x = make_projector(o, c.n_qubits);
    cplx a = statevector_amplitude(c, x);

    std::ostringstream s;
    s << "zxcontract eval\n";
    s << "===============\n\n";
    s << "input\n";
    s << "  source            " << input_label(o, o.depth) << "\n";
    s << "  qubits            " << c.n_qubits << "\n";
    s << "  gates             " << c.gates.size() << "\n";
    s << "  circuit digest    " << hex64(fnv1a64(circuit_to_text(c))) << "\n";
    s << "  projector         " << bits_to_string(x) << "\n\n";
    s << "result\n";
    s << "  amplitude re      " << fmt(a.real()) << "\n";
    s << "  amplitude im      " << fmt(a.imag()) << "\n";
    s << "  |amplitude|       " << fmt(std::abs(a)) << "\n";

    if (!o.out_dir.empty()) {
        std::filesystem::create_directories(o.out_dir);
        write_file(std::filesystem::path(o.out_dir) / "eval.txt", s.str());
    } else {
        std::cout << s.str();
    }
    return 0;
}

void add_input_options(CLI::App* cmd, Options& o, bool with_depth) {
    auto* circ = cmd->add_option("--circuit", o.circuit_path, "circuit file to load");
    auto* grid = cmd->add_option("--grid", o.grid, "random grid circuit, RxC like 3x3");
    circ->excludes(grid);
    if (with_depth) {
        auto* depth = cmd->add_option("--depth", o.depth, "layers of the random grid circuit");
        depth->needs(grid);
    }
    cmd->add_option("--seed", o.seed, "seed for every random choice");
    cmd->add_option("--out", o.out_dir, "directory for report files (default: stdout)");
}

void add_pipeline_options(CLI::App* cmd, Options& o) {
    cmd->add_option("--steps", o.steps, "annealing steps");
    cmd->add_option("--mode", o.mode, "walk schedule")
        ->check(CLI::IsMember({"anneal", "greedy"}));
    cmd->add_option("--cost-fn", o.cost_fn, "annealing energy")
        ->check(CLI::IsMember({"quicktw", "minfill", "flops"}));
    cmd->add_option("--trials", o.trials, "ordering attempts, best plan wins");
    cmd->add_option("--bb-budget-ms", o.bb_budget_ms,
                    "branch and bound budget per decomposition");
    cmd->add_option("--target-rank", o.target_rank, "slice until subtask ranks fit this");
    cmd->add_flag("--deterministic", o.deterministic,
                  "sequential trials and subtasks, for golden outputs");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"contract quantum circuit amplitudes through ZX-optimized tensor networks"};
    app.require_subcommand(1);
    Options o;

    CLI::App* run = app.add_subcommand("run", "translate, optimize, plan, and contract");
    add_input_options(run, o, true);
    add_pipeline_options(run, o);
    run->add_option("--x", o.x_bits, "output bitstring to project on (default: all zeros)");
    run->add_flag("--verify", o.verify, "compare the amplitude against the statevector oracle");

    CLI::App* bench = app.add_subcommand("bench", "compare methods across grid depths");
    add_input_options(bench, o, false);
    add_pipeline_options(bench, o);
    bench->add_option("--depths", o.depths, "grid depths to sweep")->delimiter(',');

    CLI::App* eval = app.add_subcommand("eval", "statevector oracle only, no networks");
    add_input_options(eval, o, true);
    eval->add_option("--x", o.x_bits, "output bitstring to project on (default: all zeros)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (run->parsed()) return do_run(o);
        if (bench->parsed()) return do_bench(o);
        return do_eval(o);
    } catch (const std::exception& e) {
        std::cerr << "zxcontract: error: " << e.what() << "\n";
        return 1;
    }
}

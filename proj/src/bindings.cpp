#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zxc/oracle.hpp"
#include "zxc/pipeline.hpp"

namespace py = pybind11;
using namespace zxc;

namespace {

// Accept None (all zeros), a "0101" string, or any sequence of bools.
std::vector<bool> to_projector(const py::object& x, uint32_t n_qubits) {
    if (x.is_none()) return std::vector<bool>(n_qubits, false);
    if (py::isinstance<py::str>(x)) {
        std::string s = x.cast<std::string>();
        std::vector<bool> bits;
        for (char c : s) {
            if (c != '0' && c != '1')
                throw py::value_error("projector string must contain only 0s and 1s");
            bits.push_back(c == '1');
        }
        return bits;
    }
    return x.cast<std::vector<bool>>();
}

PipelineConfig to_config(uint64_t seed, size_t steps, const std::string& mode,
                         const std::string& cost_fn, size_t trials, uint64_t bb_budget,
                         int target_rank, bool use_zx, bool optimize, bool contract,
                         bool deterministic) {
    PipelineConfig cfg;
    cfg.anneal_steps = steps;
    if (mode == "anneal")
        cfg.mode = AnnealMode::Anneal;
    else if (mode == "greedy")
        cfg.mode = AnnealMode::Greedy;
    else
        throw py::value_error("mode must be 'anneal' or 'greedy'");
    if (cost_fn == "quicktw")
        cfg.cost_fn = CostFn::QuickTw;
    else if (cost_fn == "minfill")
        cfg.cost_fn = CostFn::MinFillTw;
    else if (cost_fn == "flops")
        cfg.cost_fn = CostFn::FlopEstimate;
    else
        throw py::value_error("cost_fn must be 'quicktw', 'minfill', or 'flops'");
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.bb_budget = bb_budget;
    cfg.target_rank = target_rank;
    cfg.use_zx = use_zx;
    cfg.optimize = optimize;
    cfg.contract = contract;
    cfg.deterministic = deterministic;
    return cfg;
}

py::dict result_to_dict(const PipelineResult& r) {
    py::dict d;
    d["predicted_cost"] = r.plan.predicted_cost;
    d["width"] = r.plan.width;
    d["subtasks"] = size_t{1} << r.plan.slices.size();
    d["planned_on"] = r.planned_on;
    d["plan"] = plan_to_text(r.plan);
    py::list stages;
    for (const auto& st : r.stages) {
        py::dict row;
        row["stage"] = st.stage;
        row["nodes"] = st.nodes;
        row["edges"] = st.edges;
        row["max_degree"] = st.max_degree;
        stages.append(row);
    }
    d["stages"] = stages;
    if (!r.anneal_report.rows.empty()) {
        py::dict a;
        a["initial_cost"] = r.anneal_report.initial_cost;
        a["best_cost"] = r.anneal_report.best_cost;
        a["best_step"] = r.anneal_report.best_step;
        py::list rows;
        for (const auto& row : r.anneal_report.rows)
            rows.append(py::make_tuple(row.step, row.candidate_cost, row.accepted, row.tau));
        a["rows"] = rows;
        d["anneal"] = a;
    }
    if (r.contracted) {
        d["amplitude"] = r.exec.amplitude;
        d["measured_cost"] = r.exec.measured_cost;
        d["max_rank"] = r.exec.max_rank;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "quantum circuit amplitudes via ZX-optimized tensor network contraction";

    py::class_<Circuit>(m, "Circuit")
        .def_property_readonly("n_qubits", [](const Circuit& c) { return c.n_qubits; })
        .def("__len__", [](const Circuit& c) { return c.gates.size(); })
        .def("__str__", &circuit_to_text)
        .def("__repr__", [](const Circuit& c) {
            return "<Circuit " + std::to_string(c.n_qubits) + " qubits, " +
                   std::to_string(c.gates.size()) + " gates>";
        });

    m.def("parse_circuit", &parse_circuit, py::arg("text"),
          "Parse the text circuit format ('qubits <n>' then one gate per line).");
    m.def("circuit_to_text", &circuit_to_text, py::arg("circuit"));
    m.def("random_grid_circuit", &random_grid_circuit, py::arg("rows"), py::arg("cols"),
          py::arg("depth"), py::arg("seed"),
          "Random layered circuit on a grid: one of sx/sy/sw per qubit per "
          "layer, then fsim on a cycling pattern of adjacent pairs.");

    m.def(
        "amplitude",
        [](const Circuit& c, const py::object& x) {
            return statevector_amplitude(c, to_projector(x, c.n_qubits));
        },
        py::arg("circuit"), py::arg("x") = py::none(),
        "Brute-force statevector amplitude <x|C|0..0>, limited to small "
        "qubit counts.");

    m.def(
        "contract",
        [](const Circuit& c, const py::object& x, uint64_t seed, size_t steps,
           const std::string& mode, const std::string& cost_fn, size_t trials,
           uint64_t bb_budget, int target_rank, bool use_zx, bool optimize, bool contract,
           bool deterministic) {
            PipelineConfig cfg = to_config(seed, steps, mode, cost_fn, trials, bb_budget,
                                           target_rank, use_zx, optimize, contract,
                                           deterministic);
            PipelineResult r = run_pipeline(c, to_projector(x, c.n_qubits), cfg);
            return result_to_dict(r);
        },
        py::arg("circuit"), py::arg("x") = py::none(), py::arg("seed") = 0,
        py::arg("steps") = 100, py::arg("mode") = "anneal", py::arg("cost_fn") = "quicktw",
        py::arg("trials") = 1, py::arg("bb_budget") = 20000, py::arg("target_rank") = 26,
        py::arg("use_zx") = true, py::arg("optimize") = true, py::arg("contract") = true,
        py::arg("deterministic") = false,
        "Run the whole pipeline on <x|C|0..0> and return a result dict. "
        "contract=False plans without executing (no 'amplitude' key).");
}

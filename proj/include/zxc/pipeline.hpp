#pragma once

#include <string>
#include <vector>

#include "zxc/anneal.hpp"
#include "zxc/engine.hpp"
#include "zxc/orderfinder.hpp"

namespace zxc {

struct PipelineConfig {
    size_t anneal_steps = 100;
    AnnealMode mode = AnnealMode::Anneal;
    CostFn cost_fn = CostFn::QuickTw;
    // Single source of randomness: annealing, community detection, and
    // trial seeds all derive from this.
    uint64_t seed = 0;
    size_t trials = 1;
    // Branch and bound expansion budget per tree decomposition.
    uint64_t bb_budget = 20000;
    // Slice until no per-subtask intermediate exceeds this rank.
    int target_rank = 26;
    size_t max_split_degree = 3;
    // false: plan over the circuit's own gate tensors, skipping the
    // ZX translation entirely (the baseline method in benchmarks).
    bool use_zx = true;
    // false: translate only, skipping the annealing and splitting stages.
    bool optimize = true;
    // false: stop after planning, leaving exec unset.
    bool contract = true;
    // Sequential trials and subtasks; results are identical either way,
    // this only pins scheduling for golden runs.
    bool deterministic = false;
};

// Size snapshot of the working structure after a named stage. `ms` is the
// wall time since the previous snapshot, so the row for a stage carries the
// time spent producing it (the network row includes planning).
struct StageStats {
    std::string stage;
    size_t nodes = 0;
    size_t edges = 0;
    size_t max_degree = 0;
    double ms = 0;
};

struct PipelineResult {
    ContractionPlan plan;
    // Cost-model replay of the finished plan against the full skeleton;
    // plan.predicted_cost is set to predicted.total.
    SimulatedCost predicted;
    std::vector<StageStats> stages;
    AnnealReport anneal_report;  // rows empty unless annealing ran
    // Which diagram the winning plan was found on: "split", "annealed",
    // "hybrid", or "circuit". Optimizing plans every intermediate diagram
    // and keeps the cheapest, so a noisy rewrite cannot worsen the result.
    std::string planned_on;
    bool contracted = false;
    ExecStats exec;  // meaningful only when contracted
};

// The whole strategy in one call: translate the circuit and the projector
// <x| into a closed graph-like diagram, anneal over pivot moves, split
// high-degree nodes, precontract the skeleton, find a sliced contraction
// order (best of cfg.trials), and, unless disabled, execute the plan
// exactly. Throws std::invalid_argument when x's length is not the qubit
// count.
PipelineResult run_pipeline(const Circuit& c, const std::vector<bool>& x,
                            const PipelineConfig& cfg);

// FNV-1a, used to fingerprint inputs in reports.
uint64_t fnv1a64(const std::string& s);

}  // namespace zxc

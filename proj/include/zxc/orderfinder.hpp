#pragma once

#include <string>
#include <vector>

#include "zxc/netgraph.hpp"

namespace zxc {

// Complete recipe for contracting a network. `premerge` edges collapse
// first (typically the precontraction sequence), then `order[0,
// slice_point)` runs once, then the indices in `slices` are fixed and
// `order[slice_point..]` runs per assignment, 2^slices.size() times in all.
struct ContractionPlan {
    std::vector<EdgeId> premerge;
    std::vector<EdgeId> order;
    size_t slice_point = 0;
    std::vector<EdgeId> slices;
    double predicted_cost = 0;
    // Largest tree-decomposition width behind this order, reporting only.
    int width = 0;
    // Condensed node -> community, as used to split the order into phases.
    std::map<NodeId, uint32_t> partition;
};

// Cost-model replay of a plan against the network skeleton it was written
// for. A contraction of groups with combined live index set U costs 2^|U|
// multiply-adds; a step whose endpoints were already merged is skipped for
// free. Sliced indices stop counting after slice_point. `total` includes
// the per-subtask part 2^slices.size() times; ranks are result ranks.
struct SimulatedCost {
    double total = 0;
    double once = 0;     // premerge plus the run-once prefix
    double per_subtask = 0;
    int max_rank = 0;    // over every phase
    int tail_rank = 0;   // over the sliced tail only, what slicing limits
    size_t skipped = 0;
};

SimulatedCost simulate_plan(const NetGraph& g, const ContractionPlan& plan);

struct OrderConfig {
    uint64_t seed = 0;
    // Branch and bound expansion budget per tree decomposition.
    uint64_t bb_budget = 20000;
    // Slice until no per-subtask intermediate exceeds this rank.
    int target_rank = 26;
    size_t trials = 1;
    // Run multi-trial search sequentially instead of in parallel. The
    // winner is the same either way; this only trades wall time.
    bool deterministic = false;
};

// One ordering attempt on a condensed network: Louvain communities, a tree
// decomposition of each community's line graph ordered bag by bag, then the
// metagraph of cross-community edges ordered the same way, then slicing
// until the per-subtask rank target holds. With a single community the
// whole order is the run-once prefix and nothing is sliced. The plan's
// premerge is left empty and its predicted cost covers this network only.
ContractionPlan find_order(const NetGraph& g, const OrderConfig& cfg);

// find_order across `trials` seeds (cfg.seed, cfg.seed+1, ...), keeping the
// plan with the lowest predicted cost; earlier seed wins ties.
ContractionPlan find_order_trials(const NetGraph& g, const OrderConfig& cfg);

// Stable text form: every field that determines execution, no timings.
std::string plan_to_text(const ContractionPlan& plan);

}  // namespace zxc

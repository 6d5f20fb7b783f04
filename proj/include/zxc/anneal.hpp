#pragma once

#include <vector>

#include "zxc/graph_like.hpp"
#include "zxc/precontract.hpp"

namespace zxc {

// Cooling schedule over progress in [0, 1]: exponential decay rescaled to
// hit exactly 1 at the start and 0 at the end. Out-of-range progress
// throws.
double temperature(double progress);

// Acceptance probability for a candidate energy at temperature tau, on a
// doubly logarithmic scale so that enormous cost ratios still get a usable
// uphill probability. Strict improvements always pass; at tau = 0 nothing
// else does. Both costs must be at least 1 so the inner log stays finite.
double accept_probability(double cost, double new_cost, double tau);

enum class CostFn { QuickTw, MinFillTw, FlopEstimate };
enum class AnnealMode { Anneal, Greedy };

struct AnnealConfig {
    size_t nb_steps = 100;
    uint64_t seed = 0;
    CostFn cost_fn = CostFn::QuickTw;
    AnnealMode mode = AnnealMode::Anneal;
    // Branch and bound budget used when the energy is QuickTw.
    uint64_t bb_budget = QUICK_TW_BB_BUDGET;
};

struct AnnealStepRow {
    size_t step;
    double candidate_cost;
    bool accepted;
    double tau;
};

struct AnnealReport {
    double initial_cost = 0;
    double best_cost = 0;
    // Step that produced the returned diagram, -1 if no candidate beat the
    // input.
    long best_step = -1;
    std::vector<AnnealStepRow> rows;  // one row per step
};

// Contraction-cost estimate of a hybrid diagram under the chosen energy:
// quick_tw width, min-fill width of the precontracted line graph, or the
// simulated multiply-add count of the min-fill order.
double anneal_cost(const ClosedGraphLike& g, CostFn fn, uint64_t bb_budget = QUICK_TW_BB_BUDGET);

// Simulated annealing over pivot rewrites: each step pivots a uniformly
// random edge of the current diagram, always tracking the cheapest diagram
// seen, which is what gets returned (so the result never costs more than
// the input). Acceptance feeds costs shifted by +2 into accept_probability
// to keep its logs defined for zero-width diagrams. Greedy mode runs the
// same loop pinned to tau = 0.
std::pair<ClosedGraphLike, AnnealReport> anneal(const ClosedGraphLike& g, const AnnealConfig& cfg);

}  // namespace zxc

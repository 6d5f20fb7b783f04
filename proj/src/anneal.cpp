#include "zxc/anneal.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "zxc/orderfinder.hpp"
#include "zxc/rewrite.hpp"
#include "zxc/treewidth.hpp"

namespace zxc {

double temperature(double progress) {
    if (!(progress >= 0.0 && progress <= 1.0))
        throw std::invalid_argument("temperature progress outside [0, 1]");
    const double floor = std::exp(-1.0);
    return (std::exp(-progress) - floor) / (1.0 - floor);
}

double accept_probability(double cost, double new_cost, double tau) {
    if (!(cost >= 1.0) || !(new_cost >= 1.0))
        throw std::invalid_argument("acceptance costs must be at least 1");
    if (new_cost < cost) return 1.0;
    if (tau == 0.0) return 0.0;
    return std::exp(-std::log(std::log(new_cost) - std::log(cost) + 1.0) / tau);
}

double anneal_cost(const ClosedGraphLike& g, CostFn fn, uint64_t bb_budget) {
    NetGraph net = netgraph_from_hybrid(g);
    if (fn == CostFn::QuickTw) return quick_tw(net, bb_budget);
    PrecontractResult pre = precontract(net);
    AdjMap lg = line_graph(pre.condensed);
    TreeDecomposition td = treewidth_min_fill(lg);
    if (fn == CostFn::MinFillTw) return td.width();
    ContractionPlan plan;
    plan.premerge = pre.sequence;
    plan.order = td_to_order(td);
    plan.slice_point = plan.order.size();
    return simulate_plan(net, plan).total;
}

std::pair<ClosedGraphLike, AnnealReport> anneal(const ClosedGraphLike& g, const AnnealConfig& cfg) {
    std::mt19937_64 rng(cfg.seed);
    auto energy = [&](const ClosedGraphLike& d) {
        return anneal_cost(d, cfg.cost_fn, cfg.bb_budget);
    };

    ClosedGraphLike current = g;
    double cost_current = energy(current);
    ClosedGraphLike best = g;
    double cost_best = cost_current;

    AnnealReport report;
    report.initial_cost = cost_current;
    report.best_cost = cost_best;
    report.rows.reserve(cfg.nb_steps);

    for (size_t step = 0; step < cfg.nb_steps; ++step) {
        double tau = cfg.mode == AnnealMode::Greedy
                         ? 0.0
                         : temperature((double)step / (double)cfg.nb_steps);
        ClosedGraphLike candidate = current;
        auto edges = current.edges();
        if (!edges.empty()) {
            auto [u, v] = edges[rng() % edges.size()];
            candidate = pivot(candidate, u, v);
        }
        double cost_candidate = energy(candidate);
        if (cost_candidate < cost_best) {
            cost_best = cost_candidate;
            best = candidate;
            report.best_step = (long)step;
        }
        // Shift both energies by 2 so width-0 diagrams stay inside the
        // acceptance function's domain.
        double prob = accept_probability(cost_current + 2.0, cost_candidate + 2.0, tau);
        double draw = (double)(rng() >> 11) * 0x1p-53;
        bool accepted = prob > draw;
        report.rows.push_back({step, cost_candidate, accepted, tau});
        if (accepted) {
            current = std::move(candidate);
            cost_current = cost_candidate;
        }
    }
    report.best_cost = cost_best;
    return {std::move(best), std::move(report)};
}

}  // namespace zxc

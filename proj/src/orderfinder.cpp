#include "zxc/orderfinder.hpp"

#include <cmath>
#include <cstdio>
#include <future>
#include <stdexcept>

#include "zxc/louvain.hpp"
#include "zxc/treewidth.hpp"

namespace zxc {

namespace {

NodeId dsu_find(std::map<NodeId, NodeId>& parent, NodeId v) {
    NodeId root = v;
    while (parent.at(root) != root) root = parent.at(root);
    while (parent.at(v) != root) {
        NodeId next = parent.at(v);
        parent.at(v) = root;
        v = next;
    }
    return root;
}

// Shared engine-mirror replay. When `phase2_results` is given, collects the
// result index set of every executed step past the slice point.
SimulatedCost run_sim(const NetGraph& g, const ContractionPlan& plan,
                      std::vector<std::set<EdgeId>>* phase2_results) {
    if (plan.slice_point > plan.order.size())
        throw std::invalid_argument("slice point past end of order");
    std::map<NodeId, NodeId> parent;
    std::map<NodeId, std::set<EdgeId>> live;
    for (const auto& [v, inc] : g.incidence) {
        parent[v] = v;
        live[v] = inc;
    }
    SimulatedCost out;
    bool in_phase2 = false;
    auto step = [&](EdgeId e, double& acc) {
        auto it = g.ends.find(e);
        if (it == g.ends.end()) throw std::invalid_argument("plan names unknown edge");
        NodeId ra = dsu_find(parent, it->second.first);
        NodeId rb = dsu_find(parent, it->second.second);
        if (ra == rb) {
            ++out.skipped;
            return;
        }
        if (rb < ra) std::swap(ra, rb);
        std::set<EdgeId>& a = live.at(ra);
        std::set<EdgeId>& b = live.at(rb);
        std::set<EdgeId> joint = a;
        joint.insert(b.begin(), b.end());
        acc += std::ldexp(1.0, (int)joint.size());
        std::set<EdgeId> result;
        for (EdgeId x : joint)
            if (!(a.count(x) && b.count(x))) result.insert(x);
        out.max_rank = std::max(out.max_rank, (int)result.size());
        if (in_phase2) {
            out.tail_rank = std::max(out.tail_rank, (int)result.size());
            if (phase2_results) phase2_results->push_back(result);
        }
        parent.at(rb) = ra;
        live.at(ra) = std::move(result);
        live.erase(rb);
    };
    for (EdgeId e : plan.premerge) step(e, out.once);
    for (size_t i = 0; i < plan.slice_point; ++i) step(plan.order[i], out.once);
    for (auto& [root, set] : live)
        for (EdgeId s : plan.slices) set.erase(s);
    in_phase2 = true;
    for (size_t i = plan.slice_point; i < plan.order.size(); ++i)
        step(plan.order[i], out.per_subtask);
    out.total = out.once + std::ldexp(out.per_subtask, (int)plan.slices.size());
    return out;
}

// Fix indices one at a time until no per-subtask intermediate exceeds
// target_rank: rerun the replay, look at the largest results of the sliced
// phase, and cut the index that appears in most of them (lowest id on
// ties).
void find_slices(const NetGraph& g, ContractionPlan& plan, int target_rank) {
    while (true) {
        std::vector<std::set<EdgeId>> results;
        run_sim(g, plan, &results);
        int worst = 0;
        for (const auto& r : results) worst = std::max(worst, (int)r.size());
        if (worst <= target_rank) return;
        std::map<EdgeId, size_t> freq;
        for (const auto& r : results)
            if ((int)r.size() == worst)
                for (EdgeId e : r) ++freq[e];
        if (freq.empty()) return;
        EdgeId pick = freq.begin()->first;
        size_t best = freq.begin()->second;
        for (const auto& [e, n] : freq) {
            if (n > best) {
                pick = e;
                best = n;
            }
        }
        plan.slices.push_back(pick);
    }
}

// Decomposition-ordered contraction of one network: tree decomposition of
// the line graph, then bag-by-bag emission.
std::vector<EdgeId> td_order_of(const NetGraph& net, uint64_t budget, int& width_out) {
    AdjMap lg = line_graph(net);
    if (lg.empty()) return {};
    TreeDecomposition td = treewidth_bb(lg, budget);
    width_out = std::max(width_out, td.width());
    return td_to_order(td);
}

}  // namespace

SimulatedCost simulate_plan(const NetGraph& g, const ContractionPlan& plan) {
    return run_sim(g, plan, nullptr);
}

ContractionPlan find_order(const NetGraph& g, const OrderConfig& cfg) {
    ContractionPlan plan;
    plan.partition = louvain_partition(g, cfg.seed);
    uint32_t nc = 0;
    for (const auto& [v, c] : plan.partition) nc = std::max(nc, c + 1);

    if (nc <= 1) {
        std::vector<EdgeId> order = td_order_of(g, cfg.bb_budget, plan.width);
        plan.order = std::move(order);
        plan.slice_point = plan.order.size();
    } else {
        for (uint32_t c = 0; c < nc; ++c) {
            NetGraph sub;
            for (const auto& [v, cc] : plan.partition)
                if (cc == c) sub.add_node(v);
            for (const auto& [e, p] : g.ends)
                if (plan.partition.at(p.first) == c && plan.partition.at(p.second) == c)
                    sub.add_edge_with_id(e, p.first, p.second);
            std::vector<EdgeId> part = td_order_of(sub, cfg.bb_budget, plan.width);
            plan.order.insert(plan.order.end(), part.begin(), part.end());
        }
        plan.slice_point = plan.order.size();

        // Metagraph: one node per community, cross edges keep their ids so
        // the emitted order still names original indices.
        NetGraph mg;
        for (uint32_t c = 0; c < nc; ++c) mg.add_node(c);
        for (const auto& [e, p] : g.ends) {
            uint32_t ca = plan.partition.at(p.first);
            uint32_t cb = plan.partition.at(p.second);
            if (ca != cb) mg.add_edge_with_id(e, ca, cb);
        }
        std::vector<EdgeId> meta = td_order_of(mg, cfg.bb_budget, plan.width);
        plan.order.insert(plan.order.end(), meta.begin(), meta.end());
        find_slices(g, plan, cfg.target_rank);
    }
    plan.predicted_cost = run_sim(g, plan, nullptr).total;
    return plan;
}

ContractionPlan find_order_trials(const NetGraph& g, const OrderConfig& cfg) {
    if (cfg.trials <= 1) return find_order(g, cfg);
    std::vector<ContractionPlan> plans(cfg.trials);
    if (cfg.deterministic) {
        for (size_t t = 0; t < cfg.trials; ++t) {
            OrderConfig c = cfg;
            c.seed = cfg.seed + t;
            plans[t] = find_order(g, c);
        }
    } else {
        std::vector<std::future<ContractionPlan>> futs;
        futs.reserve(cfg.trials);
        for (size_t t = 0; t < cfg.trials; ++t) {
            OrderConfig c = cfg;
            c.seed = cfg.seed + t;
            futs.push_back(std::async(std::launch::async, [&g, c] { return find_order(g, c); }));
        }
        for (size_t t = 0; t < cfg.trials; ++t) plans[t] = futs[t].get();
    }
    size_t best = 0;
    for (size_t t = 1; t < cfg.trials; ++t)
        if (plans[t].predicted_cost < plans[best].predicted_cost) best = t;
    return plans[best];
}

std::string plan_to_text(const ContractionPlan& plan) {
    std::string s;
    auto ids = [&](const std::vector<EdgeId>& v) {
        for (EdgeId e : v) s += " " + std::to_string(e);
        s += "\n";
    };
    s += "premerge " + std::to_string(plan.premerge.size());
    ids(plan.premerge);
    s += "order " + std::to_string(plan.order.size()) + " slice_point " +
         std::to_string(plan.slice_point);
    ids(plan.order);
    s += "slices " + std::to_string(plan.slices.size());
    ids(plan.slices);
    s += "partition " + std::to_string(plan.partition.size());
    for (const auto& [v, c] : plan.partition)
        s += " " + std::to_string(v) + ":" + std::to_string(c);
    s += "\nwidth " + std::to_string(plan.width) + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "predicted_cost %.17g\n", plan.predicted_cost);
    s += buf;
    return s;
}

}  // namespace zxc

#include "zxc/precontract.hpp"

namespace zxc {

namespace {

// Neighbors of v other than `skip`, as node ids.
std::set<NodeId> neighbors_except(const NetGraph& g, NodeId v, NodeId skip) {
    std::set<NodeId> out;
    for (EdgeId e : g.incidence.at(v)) {
        NodeId u = g.other_end(e, v);
        if (u != skip) out.insert(u);
    }
    return out;
}

}  // namespace

PrecontractResult precontract(const NetGraph& g) {
    PrecontractResult r;
    r.condensed = g;
    NetGraph& h = r.condensed;
    std::map<NodeId, NodeId> merged_into;

    // Absorb degree-1 nodes into their neighbor until none remain. A merge
    // drops the neighbor's degree by one, so it may itself become a leaf.
    std::set<NodeId> worklist;
    for (const auto& [v, inc] : h.incidence)
        if (inc.size() == 1) worklist.insert(v);
    while (!worklist.empty()) {
        NodeId leaf = *worklist.begin();
        worklist.erase(worklist.begin());
        auto it = h.incidence.find(leaf);
        if (it == h.incidence.end() || it->second.size() != 1) continue;
        EdgeId e = *it->second.begin();
        NodeId parent = h.other_end(e, leaf);
        h.merge_nodes(parent, leaf);
        merged_into[leaf] = parent;
        r.sequence.push_back(e);
        if (h.degree(parent) == 1) worklist.insert(parent);
    }

    // Contract chain edges: both endpoints of degree 2 with no shared third
    // neighbor. Merging two such nodes keeps the survivor at degree 2 (or
    // drops it to 0 when the pair was doubly connected), so no new leaves
    // appear; rescan from the lowest edge id after every merge.
    bool merged = true;
    while (merged) {
        merged = false;
        for (const auto& [e, p] : h.ends) {
            auto [a, b] = p;
            if (h.degree(a) != 2 || h.degree(b) != 2) continue;
            std::set<NodeId> na = neighbors_except(h, a, b);
            std::set<NodeId> nb = neighbors_except(h, b, a);
            bool shared = false;
            for (NodeId c : na)
                if (nb.count(c)) { shared = true; break; }
            if (shared) continue;
            NodeId survivor = std::min(a, b);
            NodeId gone = std::max(a, b);
            h.merge_nodes(survivor, gone);
            merged_into[gone] = survivor;
            r.sequence.push_back(e);
            merged = true;
            break;
        }
    }

    for (const auto& [v, inc] : g.incidence) {
        NodeId cur = v;
        auto it = merged_into.find(cur);
        while (it != merged_into.end()) {
            cur = it->second;
            it = merged_into.find(cur);
        }
        r.owner[v] = cur;
    }
    return r;
}

int quick_tw(const NetGraph& g, uint64_t bb_budget) {
    PrecontractResult pre = precontract(g);
    AdjMap lg = line_graph(pre.condensed);
    return treewidth_bb(lg, bb_budget).width();
}

}  // namespace zxc

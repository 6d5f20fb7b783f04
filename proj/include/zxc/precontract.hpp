#pragma once

#include <vector>

#include "zxc/netgraph.hpp"
#include "zxc/treewidth.hpp"

namespace zxc {

// Search-node budget for the branch and bound inside quick_tw. Small on
// purpose: quick_tw runs inside annealing loops.
constexpr uint64_t QUICK_TW_BB_BUDGET = 2000;

struct PrecontractResult {
    NetGraph condensed;
    // Original node -> the condensed node that absorbed it (itself if it
    // survived).
    std::map<NodeId, NodeId> owner;
    // One edge id per merge performed, in execution order. Replaying these
    // contractions on the original network yields the condensed one;
    // parallel edges between merged endpoints are consumed along the way.
    std::vector<EdgeId> sequence;
};

// Cheap contractions that cannot raise the cost of any later order: absorb
// degree-1 nodes into their neighbor, then contract edges whose endpoints
// both have degree 2 and share no third neighbor (so no parallel pair is
// created). Leaves pop lowest node id first; chain edges rescan in
// ascending edge id; the lower node id survives a chain merge.
PrecontractResult precontract(const NetGraph& g);

// Width estimate used as an annealing energy: precontract, then bound the
// line graph's treewidth with a budgeted branch and bound.
int quick_tw(const NetGraph& g, uint64_t bb_budget = QUICK_TW_BB_BUDGET);

}  // namespace zxc

#pragma once

#include <map>
#include <set>

#include "zxc/graph_like.hpp"

namespace zxc {

using EdgeId = uint32_t;

// Tensor-network skeleton: a multigraph whose nodes stand for tensors and
// whose edges stand for shared indices. Edge ids are stable across node
// merges so contraction orders can name them reliably. No self-loops:
// merging endpoints consumes all parallel edges between them at once.
struct NetGraph {
    std::map<NodeId, std::set<EdgeId>> incidence;
    std::map<EdgeId, std::pair<NodeId, NodeId>> ends;

    size_t node_count() const { return incidence.size(); }
    size_t edge_count() const { return ends.size(); }
    size_t degree(NodeId v) const { return incidence.at(v).size(); }

    void add_node(NodeId v) { incidence[v]; }
    EdgeId add_edge(NodeId a, NodeId b);
    void add_edge_with_id(EdgeId e, NodeId a, NodeId b);
    void remove_edge(EdgeId e);

    // Other endpoint of e relative to v.
    NodeId other_end(EdgeId e, NodeId v) const;

    // Edge ids shared by nodes a and b.
    std::set<EdgeId> edges_between(NodeId a, NodeId b) const;

    // Merge `gone` into `survivor`: all edges between them are removed, the
    // rest are re-ended onto survivor. Returns the removed edge ids.
    std::set<EdgeId> merge_nodes(NodeId survivor, NodeId gone);
};

// Skeleton of a hybrid diagram: one node per graph node, one edge per
// Hadamard edge, edge ids 0..E-1 assigned in ascending (min, max) order.
NetGraph netgraph_from_hybrid(const ClosedGraphLike& g);

// Simple graph on one vertex per key of `adj`.
using AdjMap = std::map<uint32_t, std::set<uint32_t>>;

// Line graph: one vertex per edge id of g, adjacent when the edges share an
// endpoint. Parallel edges of g share both endpoints and so become mutually
// adjacent distinct vertices.
AdjMap line_graph(const NetGraph& g);

}  // namespace zxc

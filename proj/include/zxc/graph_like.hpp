#pragma once

#include <map>
#include <set>
#include <string>

#include "zxc/common.hpp"
#include "zxc/zx_diagram.hpp"

namespace zxc {

// Closed graph-like diagram in hybrid form: a simple graph where every edge
// is an implicit Hadamard wire, each node carries a linear form, and a
// global scalar. Its value is
//   scalar * sum_{s in {0,1}^V} prod_v form_v[s_v] * prod_{uv in E} h(s_u, s_v)
// with h(a,b) = (-1)^{ab} / sqrt(2).
struct ClosedGraphLike {
    std::map<NodeId, LinearForm> forms;
    std::map<NodeId, std::set<NodeId>> adj;
    cplx scalar = 1.0;

    size_t node_count() const { return forms.size(); }
    size_t edge_count() const;
    size_t degree(NodeId v) const { return adj.at(v).size(); }
    bool has_edge(NodeId u, NodeId v) const;
    void add_node(NodeId v, const LinearForm& f);
    NodeId fresh_node(const LinearForm& f);
    void add_edge(NodeId u, NodeId v);
    void toggle_edge(NodeId u, NodeId v);
    // All edges as (min, max) pairs in ascending order.
    std::vector<std::pair<NodeId, NodeId>> edges() const;
};

// Convert a closed graph-like ZX-diagram. Pure representation change: the
// node form is (1, e^{i phase}) and the scalar carries over. Throws if the
// diagram has boundary ports or is not graph-like.
ClosedGraphLike close_to_hybrid(const ZxDiagram& d);

// Brute-force value by summation over all 2^|V| assignments.
cplx eval_hybrid(const ClosedGraphLike& g, size_t max_nodes = 22);

// Deterministic text form (sorted nodes/edges, 17 significant digits) for
// golden tests and the CLI report.
std::string dump_graph_like(const ClosedGraphLike& g);

}  // namespace zxc

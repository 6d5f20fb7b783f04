#include "zxc/netgraph.hpp"

#include <stdexcept>

namespace zxc {

namespace {

EdgeId add_edge_common(NetGraph& g, EdgeId e, NodeId a, NodeId b) {
    if (a == b) throw std::invalid_argument("netgraph: self-loop edge");
    if (g.ends.count(e)) throw std::invalid_argument("netgraph: duplicate edge id");
    g.ends[e] = {std::min(a, b), std::max(a, b)};
    g.incidence[a].insert(e);
    g.incidence[b].insert(e);
    return e;
}

}  // namespace

EdgeId NetGraph::add_edge(NodeId a, NodeId b) {
    EdgeId e = ends.empty() ? 0 : ends.rbegin()->first + 1;
    return add_edge_common(*this, e, a, b);
}

void NetGraph::add_edge_with_id(EdgeId e, NodeId a, NodeId b) {
    add_edge_common(*this, e, a, b);
}

void NetGraph::remove_edge(EdgeId e) {
    auto it = ends.find(e);
    if (it == ends.end()) throw std::invalid_argument("netgraph: unknown edge id");
    incidence[it->second.first].erase(e);
    incidence[it->second.second].erase(e);
    ends.erase(it);
}

NodeId NetGraph::other_end(EdgeId e, NodeId v) const {
    auto [a, b] = ends.at(e);
    if (v == a) return b;
    if (v == b) return a;
    throw std::invalid_argument("netgraph: node not an endpoint of edge");
}

std::set<EdgeId> NetGraph::edges_between(NodeId a, NodeId b) const {
    std::set<EdgeId> out;
    const auto& ia = incidence.at(a);
    const auto& ib = incidence.at(b);
    const auto& small = ia.size() <= ib.size() ? ia : ib;
    const auto& large = ia.size() <= ib.size() ? ib : ia;
    for (EdgeId e : small)
        if (large.count(e)) out.insert(e);
    return out;
}

std::set<EdgeId> NetGraph::merge_nodes(NodeId survivor, NodeId gone) {
    if (survivor == gone) throw std::invalid_argument("netgraph: merging node with itself");
    std::set<EdgeId> consumed = edges_between(survivor, gone);
    for (EdgeId e : consumed) remove_edge(e);
    // Re-end the remaining edges of `gone` onto the survivor.
    std::set<EdgeId> moved = incidence.at(gone);
    for (EdgeId e : moved) {
        auto& p = ends.at(e);
        if (p.first == gone) p.first = survivor;
        if (p.second == gone) p.second = survivor;
        if (p.first > p.second) std::swap(p.first, p.second);
        incidence[survivor].insert(e);
    }
    incidence.erase(gone);
    return consumed;
}

NetGraph netgraph_from_hybrid(const ClosedGraphLike& g) {
    NetGraph out;
    for (const auto& [v, form] : g.forms) out.add_node(v);
    for (auto [a, b] : g.edges()) out.add_edge(a, b);
    return out;
}

AdjMap line_graph(const NetGraph& g) {
    AdjMap adj;
    for (const auto& [e, p] : g.ends) adj[e];
    for (const auto& [v, inc] : g.incidence) {
        for (auto it = inc.begin(); it != inc.end(); ++it) {
            for (auto jt = std::next(it); jt != inc.end(); ++jt) {
                adj[*it].insert(*jt);
                adj[*jt].insert(*it);
            }
        }
    }
    return adj;
}

}  // namespace zxc

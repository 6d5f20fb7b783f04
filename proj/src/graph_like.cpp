#include "zxc/graph_like.hpp"

#include <sstream>
#include <stdexcept>

namespace zxc {

size_t ClosedGraphLike::edge_count() const {
    size_t twice = 0;
    for (const auto& [v, nb] : adj) twice += nb.size();
    return twice / 2;
}

bool ClosedGraphLike::has_edge(NodeId u, NodeId v) const {
    auto it = adj.find(u);
    return it != adj.end() && it->second.count(v) > 0;
}

void ClosedGraphLike::add_node(NodeId v, const LinearForm& f) {
    forms[v] = f;
    adj[v];
}

NodeId ClosedGraphLike::fresh_node(const LinearForm& f) {
    NodeId id = forms.empty() ? 0 : forms.rbegin()->first + 1;
    add_node(id, f);
    return id;
}

void ClosedGraphLike::add_edge(NodeId u, NodeId v) {
    if (u == v) throw std::invalid_argument("self-loops not allowed in graph-like form");
    adj.at(u).insert(v);
    adj.at(v).insert(u);
}

void ClosedGraphLike::toggle_edge(NodeId u, NodeId v) {
    if (adj.at(u).count(v)) {
        adj.at(u).erase(v);
        adj.at(v).erase(u);
    } else {
        add_edge(u, v);
    }
}

std::vector<std::pair<NodeId, NodeId>> ClosedGraphLike::edges() const {
    std::vector<std::pair<NodeId, NodeId>> out;
    for (const auto& [v, nb] : adj)
        for (NodeId u : nb)
            if (v < u) out.emplace_back(v, u);
    return out;
}

ClosedGraphLike close_to_hybrid(const ZxDiagram& d) {
    if (!d.boundary.empty())
        throw std::invalid_argument("close_to_hybrid needs a closed diagram");
    if (!is_graph_like(d))
        throw std::invalid_argument("close_to_hybrid needs a graph-like diagram");

    ClosedGraphLike g;
    g.scalar = d.scalar;
    for (const auto& [id, s] : d.spiders) g.add_node(id, {1.0, expi(s.phase)});
    for (const Wire& w : d.wires) g.add_edge(w.a, w.b);
    return g;
}

cplx eval_hybrid(const ClosedGraphLike& g, size_t max_nodes) {
    if (g.node_count() > max_nodes)
        throw std::runtime_error("eval_hybrid limited to " + std::to_string(max_nodes) + " nodes");

    std::map<NodeId, int> dense;
    std::vector<const LinearForm*> forms;
    for (const auto& [id, f] : g.forms) {
        dense[id] = static_cast<int>(forms.size());
        forms.push_back(&f);
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(dense[u], dense[v]);

    int n = static_cast<int>(forms.size());
    double edge_norm = std::pow(INV_SQRT2, static_cast<double>(edges.size()));
    cplx total = 0;
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask) {
        cplx term = 1.0;
        for (int v = 0; v < n; ++v) term *= (*forms[v])[mask >> v & 1];
        int sign = 0;
        for (auto [a, b] : edges) sign ^= (mask >> a & 1) & (mask >> b & 1);
        total += sign ? -term : term;
    }
    return total * edge_norm * g.scalar;
}

std::string dump_graph_like(const ClosedGraphLike& g) {
    std::ostringstream out;
    char buf[128];
    auto put = [&](cplx z) {
        snprintf(buf, sizeof buf, "%.17g %.17g", z.real(), z.imag());
        out << buf;
    };
    out << "nodes " << g.node_count() << " edges " << g.edge_count() << "\n";
    out << "scalar ";
    put(g.scalar);
    out << "\n";
    for (const auto& [id, f] : g.forms) {
        out << "node " << id << " ";
        put(f[0]);
        out << " ";
        put(f[1]);
        out << "\n";
    }
    for (auto [u, v] : g.edges()) out << "edge " << u << " " << v << "\n";
    return out.str();
}

}  // namespace zxc

#include "zxc/rewrite.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/maximum_weighted_matching.hpp>

namespace zxc {

namespace {

void require_node(const ClosedGraphLike& g, NodeId u, const char* op) {
    if (!g.forms.count(u))
        throw std::invalid_argument(std::string(op) + ": no node " + std::to_string(u));
}

cplx lc_scalar(size_t deg, long long edge_delta) {
    return std::pow(2.0, edge_delta / 2.0) * expi(PI * (double(deg) - 1) / 4);
}

}  // namespace

ClosedGraphLike local_complement(const ClosedGraphLike& in, NodeId u) {
    require_node(in, u, "local_complement");
    ClosedGraphLike g = in;
    std::vector<NodeId> nb(g.adj.at(u).begin(), g.adj.at(u).end());

    long long delta = 0;
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j) {
            delta += g.has_edge(nb[i], nb[j]) ? -1 : 1;
            g.toggle_edge(nb[i], nb[j]);
        }

    g.forms[u] = apply_form(g.forms[u], x_rot_minus_half_pi());
    for (NodeId v : nb) g.forms[v] = apply_form(g.forms[v], z_rot_half_pi());
    g.scalar *= lc_scalar(nb.size(), delta);
    return g;
}

ClosedGraphLike pivot(const ClosedGraphLike& in, NodeId u, NodeId v) {
    require_node(in, u, "pivot");
    require_node(in, v, "pivot");
    if (!in.has_edge(u, v)) throw std::invalid_argument("pivot: uv is not an edge");

    ClosedGraphLike g = in;
    const auto& nu = in.adj.at(u);
    const auto& nv = in.adj.at(v);
    std::set<NodeId> A, B, C;
    for (NodeId w : nu)
        if (w != v) (nv.count(w) ? A : B).insert(w);
    for (NodeId w : nv)
        if (w != u && !nu.count(w)) C.insert(w);

    long long delta = 0;
    auto toggle_between = [&](const std::set<NodeId>& S, const std::set<NodeId>& T) {
        for (NodeId a : S)
            for (NodeId b : T) {
                delta += g.has_edge(a, b) ? -1 : 1;
                g.toggle_edge(a, b);
            }
    };
    toggle_between(A, B);
    toggle_between(A, C);
    toggle_between(B, C);

    // Swap the endpoints' neighborhoods (the uv edge stays).
    for (NodeId w : B) {
        g.toggle_edge(u, w);
        g.toggle_edge(v, w);
    }
    for (NodeId w : C) {
        g.toggle_edge(v, w);
        g.toggle_edge(u, w);
    }

    Mat2 xr = x_rot_minus_half_pi(), zr = z_rot_half_pi();
    g.forms[u] = apply_form(apply_form(apply_form(g.forms[u], xr), zr), xr);
    g.forms[v] = apply_form(apply_form(apply_form(g.forms[v], zr), xr), zr);
    Mat2 zr2 = {zr[0] * zr[0], 0, 0, zr[3] * zr[3]};
    for (const auto& S : {A, B, C})
        for (NodeId w : S) g.forms[w] = apply_form(g.forms[w], zr2);

    size_t k = A.size() + B.size() + C.size();
    cplx i_pow[4] = {1, {0, 1}, -1, {0, -1}};
    g.scalar *= std::pow(2.0, delta / 2.0) * i_pow[k % 4];
    return g;
}

UnfuseResult unfuse(const ClosedGraphLike& in, NodeId u, const std::set<NodeId>& keep) {
    require_node(in, u, "unfuse");
    if (keep.empty() || keep.size() >= in.degree(u))
        throw std::invalid_argument("unfuse: keep must be a nonempty strict subset of N(u)");
    for (NodeId w : keep)
        if (!in.has_edge(u, w))
            throw std::invalid_argument("unfuse: keep contains non-neighbor " + std::to_string(w));

    UnfuseResult r{in, 0, 0};
    ClosedGraphLike& g = r.g;
    std::vector<NodeId> moved;
    for (NodeId w : in.adj.at(u))
        if (!keep.count(w)) moved.push_back(w);

    r.carrier = g.fresh_node({1.0, 1.0});
    r.mediator = g.fresh_node({1.0, 1.0});
    for (NodeId w : moved) {
        g.toggle_edge(u, w);
        g.add_edge(r.carrier, w);
    }
    g.add_edge(u, r.mediator);
    g.add_edge(r.mediator, r.carrier);
    return r;
}

// ---------------------------------------------------------------------------
// Cycle-basis guided splitting

namespace {

// Node sets of the fundamental cycles of a BFS spanning forest.
std::vector<std::set<NodeId>> cycle_basis(const ClosedGraphLike& g) {
    std::map<NodeId, NodeId> parent;
    std::map<NodeId, int> depth;
    std::vector<std::set<NodeId>> cycles;

    for (const auto& [root, nb_root] : g.adj) {
        if (parent.count(root)) continue;
        parent[root] = root;
        depth[root] = 0;
        std::vector<NodeId> queue = {root};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            NodeId v = queue[qi];
            for (NodeId w : g.adj.at(v)) {
                if (!parent.count(w)) {
                    parent[w] = v;
                    depth[w] = depth[v] + 1;
                    queue.push_back(w);
                } else if (w != parent[v] && v < w) {
                    // Non-tree edge: walk both endpoints up to their meet.
                    std::set<NodeId> cyc = {v, w};
                    NodeId a = v, b = w;
                    while (a != b) {
                        if (depth[a] >= depth[b]) { a = parent[a]; cyc.insert(a); }
                        else { b = parent[b]; cyc.insert(b); }
                    }
                    cycles.push_back(std::move(cyc));
                }
            }
        }
    }
    return cycles;
}

}  // namespace

std::map<std::pair<NodeId, NodeId>, long> unfusion_weights(const ClosedGraphLike& g, NodeId u) {
    require_node(g, u, "unfusion_weights");
    std::vector<NodeId> nb(g.adj.at(u).begin(), g.adj.at(u).end());

    std::vector<std::set<NodeId>> through;
    for (auto& cyc : cycle_basis(g))
        if (cyc.count(u)) through.push_back(std::move(cyc));

    std::map<std::pair<NodeId, NodeId>, long> weights;
    for (size_t i = 0; i < nb.size(); ++i)
        for (size_t j = i + 1; j < nb.size(); ++j) {
            long w = 0;
            for (const auto& cyc : through) w += cyc.count(nb[i]) && cyc.count(nb[j]);
            if (w > 0) weights[{nb[i], nb[j]}] = w;
        }
    return weights;
}

std::vector<std::pair<NodeId, NodeId>> matching_unfusion(const ClosedGraphLike& g, NodeId u) {
    require_node(g, u, "matching_unfusion");
    std::vector<NodeId> nb(g.adj.at(u).begin(), g.adj.at(u).end());
    if (nb.size() < 2) return {};

    auto weights = unfusion_weights(g, u);
    if (weights.empty()) return {};

    std::map<NodeId, size_t> index;
    for (size_t i = 0; i < nb.size(); ++i) index[nb[i]] = i;

    using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                             boost::no_property,
                                             boost::property<boost::edge_weight_t, long>>;
    BoostGraph h(nb.size());
    for (const auto& [pair, w] : weights)
        boost::add_edge(index.at(pair.first), index.at(pair.second), w, h);

    std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(nb.size());
    boost::maximum_weighted_matching(h, &mate[0]);

    std::vector<std::pair<NodeId, NodeId>> pairs;
    for (size_t i = 0; i < nb.size(); ++i)
        if (mate[i] != boost::graph_traits<BoostGraph>::null_vertex() && i < mate[i])
            pairs.emplace_back(std::min(nb[i], nb[mate[i]]), std::max(nb[i], nb[mate[i]]));
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

ClosedGraphLike split_high_degree(const ClosedGraphLike& in, size_t max_degree, RewriteTrace* trace) {
    if (max_degree < 3)
        throw std::invalid_argument("split_high_degree: max_degree below 3 cannot terminate");

    ClosedGraphLike g = in;
    auto unfuse_pair = [&](NodeId node, NodeId a, NodeId b) {
        std::set<NodeId> keep = g.adj.at(node);
        keep.erase(a);
        keep.erase(b);
        if (trace) {
            TraceStep step{RewriteOp::Unfuse, {node}};
            step.nodes.insert(step.nodes.end(), keep.begin(), keep.end());
            trace->push_back(std::move(step));
        }
        g = unfuse(g, node, keep).g;
    };

    while (true) {
        NodeId node = 0;
        bool found = false;
        for (const auto& [v, nb] : g.adj)
            if (nb.size() > max_degree) {
                node = v;
                found = true;
                break;
            }
        if (!found) break;

        auto matching = matching_unfusion(g, node);
        if (!matching.empty()) {
            for (auto [a, b] : matching) unfuse_pair(node, a, b);
        } else {
            // No cycle shares two neighbors: pair consecutive sorted
            // neighbors, just enough to get the degree down.
            std::vector<NodeId> nb(g.adj.at(node).begin(), g.adj.at(node).end());
            for (size_t i = 0; i + 1 < nb.size() && g.degree(node) > max_degree; i += 2)
                unfuse_pair(node, nb[i], nb[i + 1]);
        }
    }
    return g;
}

ClosedGraphLike replay(const ClosedGraphLike& in, const RewriteTrace& trace) {
    ClosedGraphLike g = in;
    for (const TraceStep& step : trace) {
        switch (step.op) {
            case RewriteOp::LocalComplement:
                g = local_complement(g, step.nodes.at(0));
                break;
            case RewriteOp::Pivot:
                g = pivot(g, step.nodes.at(0), step.nodes.at(1));
                break;
            case RewriteOp::Unfuse: {
                std::set<NodeId> keep(step.nodes.begin() + 1, step.nodes.end());
                g = unfuse(g, step.nodes.at(0), keep).g;
                break;
            }
        }
    }
    return g;
}

}  // namespace zxc

#include "zxc/engine.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>
#include <thread>

#include "zxc/oracle.hpp"

namespace zxc {

namespace {

constexpr int MAX_TENSOR_RANK = 30;
constexpr size_t MAX_SLICES = 24;

// Position of each of t's indices within `joint`, as bit shifts into t's
// data position (most significant index first).
std::vector<std::pair<size_t, int>> shifts_into(const std::vector<EdgeId>& joint,
                                                const Tensor& t) {
    std::vector<std::pair<size_t, int>> out;
    out.reserve(t.idx.size());
    for (size_t k = 0; k < t.idx.size(); ++k) {
        size_t j = std::lower_bound(joint.begin(), joint.end(), t.idx[k]) - joint.begin();
        out.emplace_back(j, (int)(t.idx.size() - 1 - k));
    }
    return out;
}

// Sort a tensor's indices ascending, permuting data to match. Used by the
// circuit builder, whose natural wire order is not sorted.
Tensor canonical(std::vector<EdgeId> idx, std::vector<cplx> data) {
    size_t r = idx.size();
    std::vector<size_t> perm(r);
    for (size_t i = 0; i < r; ++i) perm[i] = i;
    std::sort(perm.begin(), perm.end(), [&](size_t a, size_t b) { return idx[a] < idx[b]; });
    Tensor t;
    t.idx.resize(r);
    for (size_t i = 0; i < r; ++i) t.idx[i] = idx[perm[i]];
    t.data.assign(data.size(), 0);
    for (size_t p = 0; p < data.size(); ++p) {
        size_t q = 0;
        for (size_t i = 0; i < r; ++i) {
            size_t bit = (p >> (r - 1 - perm[i])) & 1;
            q |= bit << (r - 1 - i);
        }
        t.data[q] = data[p];
    }
    return t;
}

struct EngineState {
    std::map<NodeId, NodeId> parent;
    std::map<NodeId, Tensor> groups;
    double cost = 0;
    int max_rank = 0;
    size_t skipped = 0;
};

NodeId find_root(std::map<NodeId, NodeId>& parent, NodeId v) {
    NodeId root = v;
    while (parent.at(root) != root) root = parent.at(root);
    while (parent.at(v) != root) {
        NodeId next = parent.at(v);
        parent.at(v) = root;
        v = next;
    }
    return root;
}

void run_step(EngineState& st, const NetGraph& skeleton, EdgeId e) {
    auto it = skeleton.ends.find(e);
    if (it == skeleton.ends.end()) throw std::invalid_argument("plan names unknown edge");
    NodeId ra = find_root(st.parent, it->second.first);
    NodeId rb = find_root(st.parent, it->second.second);
    if (ra == rb) {
        ++st.skipped;
        return;
    }
    if (rb < ra) std::swap(ra, rb);
    Tensor t = contract_pair(st.groups.at(ra), st.groups.at(rb), st.cost);
    st.max_rank = std::max(st.max_rank, t.rank());
    st.parent.at(rb) = ra;
    st.groups.erase(rb);
    st.groups.at(ra) = std::move(t);
}

cplx pairwise_sum(const std::vector<cplx>& v, size_t lo, size_t hi) {
    if (hi - lo == 1) return v[lo];
    size_t mid = lo + (hi - lo) / 2;
    return pairwise_sum(v, lo, mid) + pairwise_sum(v, mid, hi);
}

}  // namespace

Tensor contract_pair(const Tensor& a, const Tensor& b, double& cost) {
    std::vector<EdgeId> joint;
    joint.reserve(a.idx.size() + b.idx.size());
    std::set_union(a.idx.begin(), a.idx.end(), b.idx.begin(), b.idx.end(),
                   std::back_inserter(joint));
    if ((int)joint.size() > MAX_TENSOR_RANK)
        throw std::runtime_error("contraction exceeds the tensor rank limit");
    std::vector<EdgeId> shared;
    std::set_intersection(a.idx.begin(), a.idx.end(), b.idx.begin(), b.idx.end(),
                          std::back_inserter(shared));
    Tensor out;
    std::set_difference(joint.begin(), joint.end(), shared.begin(), shared.end(),
                        std::back_inserter(out.idx));
    out.data.assign((size_t)1 << out.idx.size(), 0);

    auto sa = shifts_into(joint, a);
    auto sb = shifts_into(joint, b);
    auto so = shifts_into(joint, out);
    size_t total = (size_t)1 << joint.size();
    size_t jr = joint.size();
    for (size_t p = 0; p < total; ++p) {
        size_t pa = 0, pb = 0, po = 0;
        for (const auto& [j, sh] : sa) pa |= ((p >> (jr - 1 - j)) & 1) << sh;
        for (const auto& [j, sh] : sb) pb |= ((p >> (jr - 1 - j)) & 1) << sh;
        for (const auto& [j, sh] : so) po |= ((p >> (jr - 1 - j)) & 1) << sh;
        out.data[po] += a.data[pa] * b.data[pb];
    }
    cost += std::ldexp(1.0, (int)joint.size());
    return out;
}

Tensor slice_tensor(const Tensor& t, EdgeId e, int value) {
    auto it = std::lower_bound(t.idx.begin(), t.idx.end(), e);
    if (it == t.idx.end() || *it != e)
        throw std::invalid_argument("slicing an index the tensor lacks");
    size_t k = it - t.idx.begin();
    size_t r = t.idx.size();
    Tensor out;
    out.idx = t.idx;
    out.idx.erase(out.idx.begin() + k);
    out.data.assign(t.data.size() / 2, 0);
    for (size_t q = 0; q < out.data.size(); ++q) {
        // Re-insert the fixed bit at position k to find the source entry.
        size_t high = q >> (r - 1 - k);
        size_t low = q & (((size_t)1 << (r - 1 - k)) - 1);
        size_t p = (high << (r - k)) | ((size_t)value << (r - 1 - k)) | low;
        out.data[q] = t.data[p];
    }
    return out;
}

Network network_from_hybrid(const ClosedGraphLike& g) {
    NetGraph skel = netgraph_from_hybrid(g);
    Network net;
    net.scalar = g.scalar;
    constexpr double c = 0.70710678118654752440;  // 1/sqrt(2)
    const double h[2][2] = {{c, c}, {c, -c}};
    for (const auto& [v, form] : g.forms) {
        const auto& inc = skel.incidence.at(v);
        size_t r = inc.size();
        if ((int)r > MAX_TENSOR_RANK) throw std::runtime_error("node degree exceeds the tensor rank limit");
        Tensor t;
        t.idx.assign(inc.begin(), inc.end());
        t.data.assign((size_t)1 << r, 0);
        // Absorb the Hadamard of each edge on its lower-id endpoint.
        std::vector<bool> absorb(r);
        for (size_t k = 0; k < r; ++k) {
            auto [lo, hi] = skel.ends.at(t.idx[k]);
            absorb[k] = (lo == v);
        }
        for (size_t p = 0; p < t.data.size(); ++p) {
            cplx sum = 0;
            for (int s = 0; s < 2; ++s) {
                cplx term = form[s];
                for (size_t k = 0; k < r && term != cplx(0); ++k) {
                    size_t bit = (p >> (r - 1 - k)) & 1;
                    if (absorb[k])
                        term *= h[s][bit];
                    else if ((size_t)s != bit)
                        term = 0;
                }
                sum += term;
            }
            t.data[p] = sum;
        }
        net.tensors[v] = std::move(t);
    }
    return net;
}

std::pair<Network, NetGraph> network_from_circuit(const Circuit& c, const std::vector<bool>& x) {
    if (x.size() != c.n_qubits) throw std::invalid_argument("output bit count mismatch");
    Network net;
    NetGraph skel;
    EdgeId next_edge = 0;
    NodeId next_node = 0;
    // cur[q]: the dangling wire of qubit q and the node that created it.
    std::vector<std::pair<EdgeId, NodeId>> cur(c.n_qubits);

    auto emit = [&](std::vector<EdgeId> idx, std::vector<cplx> data,
                    const std::vector<NodeId>& tail_of) {
        NodeId v = next_node++;
        skel.add_node(v);
        for (size_t i = 0; i < tail_of.size(); ++i) skel.add_edge_with_id(idx[i], tail_of[i], v);
        net.tensors[v] = canonical(std::move(idx), std::move(data));
        return v;
    };

    for (uint32_t q = 0; q < c.n_qubits; ++q) {
        EdgeId e = next_edge++;
        NodeId v = emit({e}, {1, 0}, {});
        cur[q] = {e, v};
    }
    for (const Gate& g : c.gates) {
        if (g.qubits.size() == 1) {
            uint32_t q = g.qubits[0];
            Mat2 u = gate_matrix_1q(g.kind, g.angles);
            auto [in, creator] = cur[q];
            EdgeId out = next_edge++;
            // T[a_in, a_out] = <a_out|U|a_in>
            NodeId v = emit({in, out}, {u[0], u[2], u[1], u[3]}, {creator});
            cur[q] = {out, v};
        } else {
            uint32_t qa = g.qubits[0], qb = g.qubits[1];
            std::array<cplx, 16> u = gate_matrix_2q(g.kind, g.angles);
            auto [ina, ca] = cur[qa];
            auto [inb, cb] = cur[qb];
            EdgeId outa = next_edge++;
            EdgeId outb = next_edge++;
            std::vector<cplx> data(16);
            // p = a_in b_in a_out b_out; matrix rows are outputs.
            for (size_t p = 0; p < 16; ++p) {
                size_t row = p & 3;
                size_t col = (p >> 2) & 3;
                data[p] = u[row * 4 + col];
            }
            NodeId v = emit({ina, inb, outa, outb}, std::move(data), {ca, cb});
            cur[qa] = {outa, v};
            cur[qb] = {outb, v};
        }
    }
    for (uint32_t q = 0; q < c.n_qubits; ++q) {
        auto [e, creator] = cur[q];
        std::vector<cplx> data = x[q] ? std::vector<cplx>{0, 1} : std::vector<cplx>{1, 0};
        emit({e}, std::move(data), {creator});
    }
    return {std::move(net), std::move(skel)};
}

ExecStats execute_plan(const Network& net, const NetGraph& skeleton, const ContractionPlan& plan,
                       bool parallel) {
    if (plan.slice_point > plan.order.size())
        throw std::invalid_argument("slice point past end of order");
    if (plan.slices.size() > MAX_SLICES) throw std::runtime_error("too many sliced indices");

    EngineState base;
    for (const auto& [v, t] : net.tensors) {
        base.parent[v] = v;
        base.groups[v] = t;
    }
    for (EdgeId e : plan.premerge) run_step(base, skeleton, e);
    for (size_t i = 0; i < plan.slice_point; ++i) run_step(base, skeleton, plan.order[i]);

    size_t k = plan.slices.size();
    size_t n_sub = (size_t)1 << k;
    std::vector<cplx> values(n_sub);
    std::vector<double> costs(n_sub);
    std::vector<int> ranks(n_sub, 0);
    std::vector<size_t> skips(n_sub, 0);

    auto run_subtask = [&](size_t m) {
        EngineState st = base;
        st.cost = 0;
        st.max_rank = 0;
        st.skipped = 0;
        for (size_t j = 0; j < k; ++j) {
            int bit = (int)((m >> (k - 1 - j)) & 1);
            for (auto& [root, t] : st.groups) {
                if (std::binary_search(t.idx.begin(), t.idx.end(), plan.slices[j]))
                    t = slice_tensor(t, plan.slices[j], bit);
            }
        }
        for (size_t i = plan.slice_point; i < plan.order.size(); ++i)
            run_step(st, skeleton, plan.order[i]);
        cplx val = 1.0;
        for (const auto& [root, t] : st.groups) {
            if (t.rank() != 0) throw std::runtime_error("plan leaves open indices");
            val *= t.data[0];
        }
        values[m] = val;
        costs[m] = st.cost;
        ranks[m] = st.max_rank;
        skips[m] = st.skipped;
    };

    if (parallel && n_sub > 1) {
        size_t workers = std::min<size_t>(std::thread::hardware_concurrency(), n_sub);
        if (workers == 0) workers = 1;
        std::vector<std::future<void>> futs;
        for (size_t w = 0; w < workers; ++w) {
            futs.push_back(std::async(std::launch::async, [&, w] {
                for (size_t m = w; m < n_sub; m += workers) run_subtask(m);
            }));
        }
        for (auto& f : futs) f.get();
    } else {
        for (size_t m = 0; m < n_sub; ++m) run_subtask(m);
    }

    ExecStats out;
    out.amplitude = net.scalar * pairwise_sum(values, 0, values.size());
    out.measured_cost = base.cost;
    out.max_rank = base.max_rank;
    out.subtasks = n_sub;
    out.skipped = base.skipped;
    for (size_t m = 0; m < n_sub; ++m) {
        out.measured_cost += costs[m];
        out.max_rank = std::max(out.max_rank, ranks[m]);
        out.skipped += skips[m];
    }
    return out;
}

}  // namespace zxc

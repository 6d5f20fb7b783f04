#include "zxc/zx_diagram.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace zxc {

NodeId ZxDiagram::add_spider(SpiderKind kind, double phase) {
    NodeId id = spiders.empty() ? 0 : spiders.rbegin()->first + 1;
    spiders[id] = {kind, phase};
    return id;
}

void ZxDiagram::add_wire(NodeId a, NodeId b, bool hadamard) {
    wires.push_back({a, b, hadamard});
}

size_t ZxDiagram::degree(NodeId v) const {
    size_t d = 0;
    for (const Wire& w : wires) d += (w.a == v) + (w.b == v);
    return d;
}

size_t ZxDiagram::spider_count() const {
    size_t n = 0;
    for (const auto& [id, s] : spiders) n += s.kind != SpiderKind::Boundary;
    return n;
}

// ---------------------------------------------------------------------------
// Circuit translation

namespace {

// Tracks, per qubit, the open end of the qubit line: the last spider placed
// on it, plus a parity of Hadamard gates not yet absorbed into a wire.
struct LineEnds {
    std::vector<NodeId> node;
    std::vector<bool> pending_h;

    NodeId attach(ZxDiagram& d, uint32_t q, SpiderKind kind, double phase) {
        NodeId s = d.add_spider(kind, phase);
        d.add_wire(node[q], s, pending_h[q]);
        node[q] = s;
        pending_h[q] = false;
        return s;
    }
};

// One exp(i theta/2 ZZ)-style gadget across two line ends: a Z-spider on
// each line, a central X hub, and a pendant Z carrying the angle.
void add_phase_gadget(ZxDiagram& d, LineEnds& ends, uint32_t qa, uint32_t qb, double angle,
                      bool entry_hadamard) {
    if (entry_hadamard) {
        ends.pending_h[qa] = !ends.pending_h[qa];
        ends.pending_h[qb] = !ends.pending_h[qb];
    }
    NodeId za = ends.attach(d, qa, SpiderKind::Z, 0);
    NodeId zb = ends.attach(d, qb, SpiderKind::Z, 0);
    NodeId hub = d.add_spider(SpiderKind::X, 0);
    NodeId pendant = d.add_spider(SpiderKind::Z, angle);
    d.add_wire(za, hub);
    d.add_wire(zb, hub);
    d.add_wire(hub, pendant);
}

}  // namespace

ZxDiagram to_zx(const Circuit& c, const std::vector<bool>& x) {
    if (x.size() != c.n_qubits)
        throw std::invalid_argument("projector bitstring length must equal qubit count");

    ZxDiagram d;
    LineEnds ends;
    ends.pending_h.assign(c.n_qubits, false);
    // |0> preparations: degree-1 X(0) spiders, each worth sqrt(2)|0>.
    for (uint32_t q = 0; q < c.n_qubits; ++q) {
        ends.node.push_back(d.add_spider(SpiderKind::X, 0));
        d.scalar *= INV_SQRT2;
    }

    for (const Gate& g : c.gates) {
        switch (g.kind) {
            case GateKind::H:
                ends.pending_h[g.qubits[0]] = !ends.pending_h[g.qubits[0]];
                break;
            case GateKind::RZ:
                ends.attach(d, g.qubits[0], SpiderKind::Z, g.angles[0]);
                break;
            case GateKind::RX:
                ends.attach(d, g.qubits[0], SpiderKind::X, g.angles[0]);
                break;
            case GateKind::SX:
                ends.attach(d, g.qubits[0], SpiderKind::X, PI / 2);
                d.scalar *= expi(-PI / 4);
                break;
            case GateKind::SY:
                ends.attach(d, g.qubits[0], SpiderKind::X, PI / 2);
                ends.attach(d, g.qubits[0], SpiderKind::Z, PI / 2);
                ends.attach(d, g.qubits[0], SpiderKind::X, -PI / 2);
                d.scalar *= expi(-PI / 4);
                break;
            case GateKind::SW:
                ends.attach(d, g.qubits[0], SpiderKind::Z, -PI / 4);
                ends.attach(d, g.qubits[0], SpiderKind::X, PI / 2);
                ends.attach(d, g.qubits[0], SpiderKind::Z, PI / 4);
                d.scalar *= expi(-PI / 4);
                break;
            case GateKind::CNOT: {
                NodeId zc = ends.attach(d, g.qubits[0], SpiderKind::Z, 0);
                NodeId xt = ends.attach(d, g.qubits[1], SpiderKind::X, 0);
                d.add_wire(zc, xt);
                d.scalar *= SQRT2;
                break;
            }
            case GateKind::CZ: {
                NodeId za = ends.attach(d, g.qubits[0], SpiderKind::Z, 0);
                NodeId zb = ends.attach(d, g.qubits[1], SpiderKind::Z, 0);
                d.add_wire(za, zb, true);
                d.scalar *= SQRT2;
                break;
            }
            case GateKind::FSIM: {
                uint32_t qa = g.qubits[0], qb = g.qubits[1];
                double theta = g.angles[0], phi = g.angles[1];
                ends.attach(d, qa, SpiderKind::X, PI / 2);
                ends.attach(d, qb, SpiderKind::X, PI / 2);
                add_phase_gadget(d, ends, qa, qb, theta, false);
                ends.attach(d, qa, SpiderKind::X, -PI / 2);
                ends.attach(d, qb, SpiderKind::X, -PI / 2);
                add_phase_gadget(d, ends, qa, qb, theta, true);
                add_phase_gadget(d, ends, qa, qb, phi / 2, true);
                ends.attach(d, qa, SpiderKind::Z, -phi / 2);
                ends.attach(d, qb, SpiderKind::Z, -phi / 2);
                // Three 1/sqrt(2) hub factors and a residual e^{i theta}.
                d.scalar *= 2.0 * SQRT2 * expi(-theta);
                break;
            }
        }
    }

    // <x| projectors: degree-1 X spiders of phase 0 or pi.
    for (uint32_t q = 0; q < c.n_qubits; ++q) {
        ends.attach(d, q, SpiderKind::X, x[q] ? PI : 0.0);
        d.scalar *= INV_SQRT2;
    }
    return d;
}

// ---------------------------------------------------------------------------
// Graph-like rewriting

namespace {

bool is_port(const ZxDiagram& d, NodeId v) {
    return d.spiders.at(v).kind == SpiderKind::Boundary;
}

// Merge spider `v` into spider `u`: phases add, v's wires are re-ended at u.
// The single fusing wire must already have been removed by the caller; any
// remaining u-v wires turn into self-loops on u.
void merge_spiders(ZxDiagram& d, NodeId u, NodeId v) {
    d.spiders[u].phase += d.spiders[v].phase;
    for (Wire& w : d.wires) {
        if (w.a == v) w.a = u;
        if (w.b == v) w.b = u;
    }
    d.spiders.erase(v);
}

}  // namespace

ZxDiagram to_graph_like(const ZxDiagram& in) {
    ZxDiagram d = in;

    // Rule 1: X(a) equals Z(a) conjugated by Hadamard on every leg, so turn
    // every X-spider green and toggle the Hadamard flag of its wires. A
    // self-loop has both legs on the spider and toggles twice (no change).
    for (auto& [id, s] : d.spiders) {
        if (s.kind != SpiderKind::X) continue;
        s.kind = SpiderKind::Z;
        for (Wire& w : d.wires) {
            if (w.a == id) w.hadamard = !w.hadamard;
            if (w.b == id) w.hadamard = !w.hadamard;
        }
    }

    bool changed = true;
    while (changed) {
        changed = false;

        // Self-loops: a plain loop on a Z-spider is worth 1; a Hadamard loop
        // contributes H[s,s], i.e. adds pi to the phase and 1/sqrt(2) to the
        // scalar (Rule 2 collapses loop pairs the same way via fusion).
        for (size_t i = 0; i < d.wires.size();) {
            const Wire w = d.wires[i];
            if (w.a != w.b) { ++i; continue; }
            if (w.hadamard) {
                d.spiders[w.a].phase += PI;
                d.scalar *= INV_SQRT2;
            }
            d.wires.erase(d.wires.begin() + i);
            changed = true;
        }
        if (changed) continue;

        // Rule 3: fuse across a plain spider-spider wire, lower id survives.
        for (size_t i = 0; i < d.wires.size(); ++i) {
            const Wire w = d.wires[i];
            if (w.hadamard || w.a == w.b || is_port(d, w.a) || is_port(d, w.b)) continue;
            NodeId u = std::min(w.a, w.b), v = std::max(w.a, w.b);
            d.wires.erase(d.wires.begin() + i);
            merge_spiders(d, u, v);
            changed = true;
            break;
        }
        if (changed) continue;

        // Parallel Hadamard wires cancel in pairs, at 1/2 per pair removed.
        {
            std::map<std::pair<NodeId, NodeId>, std::vector<size_t>> par;
            for (size_t i = 0; i < d.wires.size(); ++i) {
                const Wire& w = d.wires[i];
                if (!w.hadamard || w.a == w.b || is_port(d, w.a) || is_port(d, w.b)) continue;
                par[{std::min(w.a, w.b), std::max(w.a, w.b)}].push_back(i);
            }
            std::set<size_t, std::greater<>> doomed;
            for (const auto& [key, idxs] : par)
                for (size_t k = 0; k + 1 < idxs.size(); k += 2) {
                    doomed.insert(idxs[k]);
                    doomed.insert(idxs[k + 1]);
                    d.scalar *= 0.5;
                }
            for (size_t i : doomed) d.wires.erase(d.wires.begin() + i);
            if (!doomed.empty()) { changed = true; continue; }
        }

        // Rule 4: drop phase-0 spiders with exactly two spider wires; the
        // wires compose into one whose Hadamard flag is the XOR of the two.
        for (const auto& [id, s] : d.spiders) {
            if (s.kind == SpiderKind::Boundary) continue;
            if (std::abs(std::remainder(s.phase, 2 * PI)) > 1e-12) continue;
            std::vector<size_t> legs;
            for (size_t i = 0; i < d.wires.size(); ++i)
                if (d.wires[i].a == id || d.wires[i].b == id) legs.push_back(i);
            if (legs.size() != 2) continue;
            const Wire w1 = d.wires[legs[0]], w2 = d.wires[legs[1]];
            NodeId u = w1.a == id ? w1.b : w1.a;
            NodeId v = w2.a == id ? w2.b : w2.a;
            if (is_port(d, u) || is_port(d, v)) continue;
            d.wires.erase(d.wires.begin() + legs[1]);
            d.wires.erase(d.wires.begin() + legs[0]);
            d.spiders.erase(id);
            d.add_wire(u, v, w1.hadamard != w2.hadamard);
            changed = true;
            break;
        }
    }
    return d;
}

bool is_graph_like(const ZxDiagram& d) {
    for (const auto& [id, s] : d.spiders)
        if (s.kind == SpiderKind::X) return false;
    std::set<std::pair<NodeId, NodeId>> seen;
    for (const Wire& w : d.wires) {
        if (w.a == w.b) return false;
        bool port = is_port(d, w.a) || is_port(d, w.b);
        if (!w.hadamard && !port) return false;
        auto key = std::minmax(w.a, w.b);
        if (!seen.insert({key.first, key.second}).second) return false;
    }
    return true;
}

}  // namespace zxc

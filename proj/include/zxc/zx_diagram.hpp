#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zxc/circuit.hpp"
#include "zxc/common.hpp"

namespace zxc {

using NodeId = uint32_t;

enum class SpiderKind { Z, X, Boundary };

struct Spider {
    SpiderKind kind = SpiderKind::Z;
    double phase = 0.0;  // radians; ignored for boundary ports
};

struct Wire {
    NodeId a, b;
    bool hadamard = false;
};

// A ZX-diagram: spiders plus a wire multiset (self-loops and parallel wires
// allowed) and a global scalar. Boundary ports are degree-1 nodes of kind
// Boundary, listed in order in `boundary`.
struct ZxDiagram {
    std::map<NodeId, Spider> spiders;
    std::vector<Wire> wires;
    std::vector<NodeId> boundary;
    cplx scalar = 1.0;

    NodeId add_spider(SpiderKind kind, double phase = 0.0);
    void add_wire(NodeId a, NodeId b, bool hadamard = false);
    size_t degree(NodeId v) const;  // self-loops count twice
    size_t spider_count() const;    // excludes boundary ports
};

// Translate a circuit plus the projector <x| into a closed ZX-diagram whose
// value is the amplitude <x|C|0...0>. `x` holds one bit per qubit, x[q] for
// qubit q. Gate gadgets carry their exact normalization in d.scalar.
ZxDiagram to_zx(const Circuit& c, const std::vector<bool>& x);

// Rewrite to graph-like form: only Z-spiders, only Hadamard wires between
// spiders, no parallel wires or self-loops. Value-preserving: color change,
// spider fusion, self-loop and parallel-edge elimination, and removal of
// phase-0 degree-2 spiders, with all scalars tracked in d.scalar.
ZxDiagram to_graph_like(const ZxDiagram& d);

// True when `d` satisfies the graph-like conditions above (boundary wires
// are exempt from the Hadamard requirement).
bool is_graph_like(const ZxDiagram& d);

}  // namespace zxc

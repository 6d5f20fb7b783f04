#pragma once

#include <vector>

#include "zxc/circuit.hpp"
#include "zxc/common.hpp"
#include "zxc/netgraph.hpp"
#include "zxc/orderfinder.hpp"

namespace zxc {

// Dense tensor over bond-dimension-2 indices named by edge ids. `idx` is
// sorted ascending and the first index is the most significant bit of the
// position in `data`, so data.size() == 1 << idx.size().
struct Tensor {
    std::vector<EdgeId> idx;
    std::vector<cplx> data;

    int rank() const { return (int)idx.size(); }
};

// Closed tensor network: one tensor per skeleton node plus a global scalar.
// The skeleton (a NetGraph with matching node and edge ids) travels
// separately since plans are written against it.
struct Network {
    std::map<NodeId, Tensor> tensors;
    cplx scalar = 1.0;
};

// Contract two tensors over all their shared indices (an outer product if
// none). Adds 2^|union of indices| to `cost`, which is exactly the number
// of multiply-adds performed.
Tensor contract_pair(const Tensor& a, const Tensor& b, double& cost);

// Fix index e of t to `value`, dropping the index. Throws if t lacks e.
Tensor slice_tensor(const Tensor& t, EdgeId e, int value);

// Tensor network of a hybrid diagram, with indices numbered exactly as
// netgraph_from_hybrid numbers the edges. Node v becomes the diagonal
// tensor of its amplitude pair with one Hadamard factor absorbed per
// incident edge on the lower-id endpoint.
Network network_from_hybrid(const ClosedGraphLike& g);

// Raw circuit network for <x|C|0..0>: one rank-1 tensor per input state and
// output effect, one rank-2/4 tensor per gate, indices numbered in wire
// creation order. Returns the network and its skeleton.
std::pair<Network, NetGraph> network_from_circuit(const Circuit& c, const std::vector<bool>& x);

struct ExecStats {
    cplx amplitude = 0;
    double measured_cost = 0;  // multiply-adds over all phases and subtasks
    int max_rank = 0;          // largest contraction result rank
    size_t subtasks = 1;       // 2^slices.size()
    size_t skipped = 0;        // steps whose endpoints were already merged
};

// Run a plan to completion. Premerge and the run-once prefix execute once;
// then each assignment of the sliced indices runs the tail on its own copy,
// and the subtask scalars are added in a fixed pairwise tree, so the result
// does not depend on `parallel`. Throws if the plan leaves open indices.
ExecStats execute_plan(const Network& net, const NetGraph& skeleton, const ContractionPlan& plan,
                       bool parallel);

}  // namespace zxc

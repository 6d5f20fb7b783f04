#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "zxc/graph_like.hpp"

namespace zxc {

// Value-preserving rewrites on closed graph-like diagrams. All ops are pure:
// they return a new diagram and leave the input untouched.

enum class RewriteOp { LocalComplement, Pivot, Unfuse };

struct TraceStep {
    RewriteOp op;
    // LocalComplement: {u}; Pivot: {u, v}; Unfuse: {u, kept neighbors...}.
    std::vector<NodeId> nodes;
};

using RewriteTrace = std::vector<TraceStep>;

// Complement the edges among N(u). Forms: L_u <- L_u X_rot(-pi/2) and
// L_v <- L_v Z_rot(pi/2) for v in N(u). Scalar: 2^(dE/2) e^{i pi (deg-1)/4}
// where dE is the change in edge count.
[[nodiscard]] ClosedGraphLike local_complement(const ClosedGraphLike& g, NodeId u);

// Pivot along edge uv, equal to local_complement at u, v, u in sequence but
// computed directly: toggle all pairs between A = N(u) cap N(v),
// B = N(u) - N(v) - v, C = N(v) - N(u) - u, swap u and v's neighborhoods,
// rotate forms, and multiply the scalar by 2^(dE/2) i^(|A|+|B|+|C|).
[[nodiscard]] ClosedGraphLike pivot(const ClosedGraphLike& g, NodeId u, NodeId v);

struct UnfuseResult {
    ClosedGraphLike g;
    NodeId carrier;   // fresh node owning N(u) - keep
    NodeId mediator;  // fresh node on the u -- carrier path
};

// Split node u: neighbors in `keep` stay on u, the rest move to a fresh
// carrier, and a fresh mediator keeps the diagram graph-like. Both fresh
// nodes get form (1, 1); the value is preserved exactly, no scalar. keep
// must be a nonempty strict subset of N(u).
[[nodiscard]] UnfuseResult unfuse(const ClosedGraphLike& g, NodeId u, const std::set<NodeId>& keep);

// The weighted pair graph behind matching_unfusion: weight(a, b) counts the
// fundamental cycles (BFS spanning tree basis, lowest-id roots) that pass
// through u, a, and b. Zero-weight pairs are omitted.
std::map<std::pair<NodeId, NodeId>, long> unfusion_weights(const ClosedGraphLike& g, NodeId u);

// Neighbor pairs of u worth keeping together when u is unfused: build the
// graph H on N(u) weighted by how many fundamental cycles (BFS spanning
// tree cycle basis) pass through u and both neighbors, and return a
// maximum-weight matching of H as sorted (min, max) pairs. Zero-weight
// pairs are never returned.
std::vector<std::pair<NodeId, NodeId>> matching_unfusion(const ClosedGraphLike& g, NodeId u);

// Unfuse every node of degree > max_degree until none is left, pairing
// moved-off neighbors by matching_unfusion and falling back to pairing
// consecutive sorted neighbors when the matching is empty. max_degree must
// be at least 3 or fresh carriers would themselves need splitting.
[[nodiscard]] ClosedGraphLike split_high_degree(const ClosedGraphLike& g, size_t max_degree = 3,
                                  RewriteTrace* trace = nullptr);

// Re-apply a recorded trace.
[[nodiscard]] ClosedGraphLike replay(const ClosedGraphLike& g, const RewriteTrace& trace);

}  // namespace zxc

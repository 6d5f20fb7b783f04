#pragma once

#include <string>
#include <vector>

#include "zxc/netgraph.hpp"

namespace zxc {

// Rooted forest of bags over the vertices of a simple graph. parent[i] is
// the index of bag i's parent, or -1 for roots.
struct TreeDecomposition {
    std::vector<std::set<uint32_t>> bags;
    std::vector<int> parent;

    // Largest bag size minus one; 0 for an empty decomposition.
    int width() const;

    // Checks bag/parent shape, vertex cover, edge cover, and that the bags
    // holding each vertex form a connected subtree. On failure optionally
    // reports the first violation through `why`.
    bool validate(const AdjMap& g, std::string* why = nullptr) const;
};

// Elimination order chosen by the min-fill heuristic: repeatedly remove the
// vertex whose elimination adds the fewest fill edges, lowest id on ties.
std::vector<uint32_t> min_fill_order(const AdjMap& g);

// Decomposition induced by an elimination order: bag i holds order[i] plus
// its neighbors at elimination time, and hangs under the bag of the next
// eliminated vertex among those neighbors.
TreeDecomposition decomposition_from_order(const AdjMap& g, const std::vector<uint32_t>& order);

TreeDecomposition treewidth_min_fill(const AdjMap& g);

// Branch and bound over elimination orders, seeded with the min-fill
// solution. `budget` caps the number of search-node expansions: 0 returns
// the seed, UINT64_MAX explores exhaustively (exact treewidth). Simplicial
// vertices are eliminated eagerly and the remaining graph's minimum degree
// prunes hopeless branches. Deterministic for a fixed budget.
TreeDecomposition treewidth_bb(const AdjMap& g, uint64_t budget);

// Contraction order from a decomposition of a line graph: repeatedly take
// the lowest-indexed childless bag, emit its lowest vertex missing from the
// parent bag (dropping that vertex from every bag), and prune bags that
// became subsets of their parent. A finished root flushes its remaining
// vertices in ascending order. Every vertex is emitted exactly once.
std::vector<uint32_t> td_to_order(const TreeDecomposition& t);

}  // namespace zxc

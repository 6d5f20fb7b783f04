#pragma once

#include "zxc/netgraph.hpp"

namespace zxc {

// Louvain modularity communities on the multigraph; parallel edges add
// weight to their node pair. Node visit order is shuffled from `seed`, so
// runs with the same seed agree exactly. Returned community ids are dense,
// assigned in order of each community's lowest member node id.
std::map<NodeId, uint32_t> louvain_partition(const NetGraph& g, uint64_t seed);

}  // namespace zxc

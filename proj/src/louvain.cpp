#include "zxc/louvain.hpp"

#include <random>
#include <vector>

namespace zxc {

namespace {

// One coarsening level: symmetric pair weights plus per-node self weight.
struct Level {
    std::map<uint32_t, std::map<uint32_t, double>> w;
    std::map<uint32_t, double> self;
};

// Moves nodes between communities until modularity stops improving.
// Returns node -> community (community named by one of its members).
std::map<uint32_t, uint32_t> local_moves(const Level& lv, std::mt19937_64& rng) {
    std::map<uint32_t, uint32_t> comm;
    std::map<uint32_t, double> k;
    double m2 = 0;
    for (const auto& [u, nbrs] : lv.w) {
        comm[u] = u;
        double ku = 2 * (lv.self.count(u) ? lv.self.at(u) : 0.0);
        for (const auto& [v, wt] : nbrs) ku += wt;
        k[u] = ku;
        m2 += ku;
    }
    if (m2 == 0) return comm;
    std::map<uint32_t, double> tot = k;

    std::vector<uint32_t> visit;
    visit.reserve(comm.size());
    for (const auto& [u, c] : comm) visit.push_back(u);
    for (size_t i = visit.size(); i > 1; --i)
        std::swap(visit[i - 1], visit[rng() % i]);

    bool moved = true;
    while (moved) {
        moved = false;
        for (uint32_t u : visit) {
            uint32_t old_c = comm[u];
            tot[old_c] -= k[u];
            // Weight from u into each neighboring community, with u held out.
            std::map<uint32_t, double> wc;
            wc[old_c] += 0;
            for (const auto& [v, wt] : lv.w.at(u)) wc[comm[v]] += wt;
            uint32_t best_c = old_c;
            double best_gain = wc[old_c] - k[u] * tot[old_c] / m2;
            for (const auto& [c, into] : wc) {
                double gain = into - k[u] * tot[c] / m2;
                if (gain > best_gain + 1e-12) {
                    best_gain = gain;
                    best_c = c;
                }
            }
            tot[best_c] += k[u];
            if (best_c != old_c) {
                comm[u] = best_c;
                moved = true;
            }
        }
    }
    return comm;
}

}  // namespace

std::map<NodeId, uint32_t> louvain_partition(const NetGraph& g, uint64_t seed) {
    std::mt19937_64 rng(seed);

    Level lv;
    for (const auto& [v, inc] : g.incidence) lv.w[v];
    for (const auto& [e, p] : g.ends) {
        lv.w[p.first][p.second] += 1;
        lv.w[p.second][p.first] += 1;
    }

    // membership[v] = community of original node v at the current level.
    std::map<NodeId, uint32_t> membership;
    for (const auto& [v, inc] : g.incidence) membership[v] = v;

    while (true) {
        std::map<uint32_t, uint32_t> comm = local_moves(lv, rng);
        std::set<uint32_t> distinct;
        for (const auto& [u, c] : comm) distinct.insert(c);
        if (distinct.size() == lv.w.size()) break;
        for (auto& [v, c] : membership) c = comm.at(c);

        Level next;
        for (uint32_t c : distinct) next.w[c];
        for (const auto& [u, nbrs] : lv.w) {
            uint32_t cu = comm.at(u);
            next.self[cu] += lv.self.count(u) ? lv.self.at(u) : 0.0;
            for (const auto& [v, wt] : nbrs) {
                if (v < u) continue;
                uint32_t cv = comm.at(v);
                if (cu == cv)
                    next.self[cu] += wt;
                else {
                    next.w[cu][cv] += wt;
                    next.w[cv][cu] += wt;
                }
            }
        }
        lv = std::move(next);
        if (lv.w.size() <= 1) break;
    }

    // Dense ids ordered by each community's lowest original member.
    std::map<uint32_t, uint32_t> rename;
    for (const auto& [v, c] : membership)
        if (!rename.count(c)) rename[c] = (uint32_t)rename.size();
    std::map<NodeId, uint32_t> out;
    for (const auto& [v, c] : membership) out[v] = rename.at(c);
    return out;
}

}  // namespace zxc

#include "zxc/treewidth.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace zxc {

namespace {

// Number of neighbor pairs of v that elimination would have to connect.
size_t fill_count(const AdjMap& g, uint32_t v) {
    const auto& nb = g.at(v);
    size_t missing = 0;
    for (auto it = nb.begin(); it != nb.end(); ++it)
        for (auto jt = std::next(it); jt != nb.end(); ++jt)
            if (!g.at(*it).count(*jt)) ++missing;
    return missing;
}

// Remove v, connecting its neighbors into a clique.
void eliminate(AdjMap& g, uint32_t v) {
    const std::set<uint32_t> nb = g.at(v);
    for (auto it = nb.begin(); it != nb.end(); ++it) {
        for (auto jt = std::next(it); jt != nb.end(); ++jt) {
            g[*it].insert(*jt);
            g[*jt].insert(*it);
        }
    }
    for (uint32_t u : nb) g[u].erase(v);
    g.erase(v);
}

bool is_simplicial(const AdjMap& g, uint32_t v) {
    const auto& nb = g.at(v);
    for (auto it = nb.begin(); it != nb.end(); ++it)
        for (auto jt = std::next(it); jt != nb.end(); ++jt)
            if (!g.at(*it).count(*jt)) return false;
    return true;
}

struct BBState {
    std::vector<uint32_t> best_order;
    int best_width = 0;
    uint64_t budget = 0;
};

// Depth-first search over elimination orders. `width` is the largest
// elimination degree seen along the current prefix.
void bb_search(AdjMap h, std::vector<uint32_t> prefix, int width, BBState& st) {
    // Simplicial vertices can always go first: eliminating one never raises
    // the width beyond max(its degree, width of the rest).
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (const auto& [v, nb] : h) {
            if (is_simplicial(h, v)) {
                width = std::max(width, (int)nb.size());
                if (width >= st.best_width) return;
                prefix.push_back(v);
                eliminate(h, v);
                reduced = true;
                break;
            }
        }
    }
    if (h.empty()) {
        if (width < st.best_width) {
            st.best_width = width;
            st.best_order = prefix;
        }
        return;
    }
    size_t min_deg = h.size();
    for (const auto& [v, nb] : h) min_deg = std::min(min_deg, nb.size());
    if (std::max(width, (int)min_deg) >= st.best_width) return;
    for (const auto& [v, nb] : h) {
        if (st.budget == 0) return;
        --st.budget;
        int w = std::max(width, (int)nb.size());
        if (w >= st.best_width) continue;
        AdjMap next = h;
        eliminate(next, v);
        prefix.push_back(v);
        bb_search(std::move(next), prefix, w, st);
        prefix.pop_back();
    }
}

}  // namespace

int TreeDecomposition::width() const {
    size_t largest = 1;
    for (const auto& b : bags) largest = std::max(largest, b.size());
    return (int)largest - 1;
}

bool TreeDecomposition::validate(const AdjMap& g, std::string* why) const {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (parent.size() != bags.size()) return fail("parent/bag count mismatch");
    for (size_t i = 0; i < parent.size(); ++i) {
        if (parent[i] < -1 || parent[i] >= (int)bags.size() || parent[i] == (int)i)
            return fail("parent index out of range");
        // Walking up must terminate; a cycle would outlast the bag count.
        int cur = (int)i;
        for (size_t steps = 0; cur != -1; ++steps) {
            if (steps > bags.size()) return fail("parent pointers form a cycle");
            cur = parent[cur];
        }
    }
    std::map<uint32_t, std::vector<size_t>> holding;
    for (size_t i = 0; i < bags.size(); ++i)
        for (uint32_t v : bags[i]) holding[v].push_back(i);
    for (const auto& [v, nb] : g) {
        auto it = holding.find(v);
        if (it == holding.end()) return fail("vertex missing from every bag");
        // Exactly one bag holding v may have its parent outside the set;
        // otherwise the bags holding v are disconnected.
        std::set<size_t> in(it->second.begin(), it->second.end());
        size_t tops = 0;
        for (size_t i : in)
            if (parent[i] == -1 || !in.count((size_t)parent[i])) ++tops;
        if (tops != 1) return fail("bags holding a vertex are not a connected subtree");
        for (uint32_t u : nb) {
            if (u < v) continue;
            bool covered = false;
            for (size_t i : it->second)
                if (bags[i].count(u)) { covered = true; break; }
            if (!covered) return fail("edge not covered by any bag");
        }
    }
    return true;
}

std::vector<uint32_t> min_fill_order(const AdjMap& g) {
    AdjMap h = g;
    std::vector<uint32_t> order;
    order.reserve(h.size());
    while (!h.empty()) {
        uint32_t best = h.begin()->first;
        size_t best_fill = fill_count(h, best);
        for (const auto& [v, nb] : h) {
            size_t f = fill_count(h, v);
            if (f < best_fill) {
                best = v;
                best_fill = f;
            }
        }
        order.push_back(best);
        eliminate(h, best);
    }
    return order;
}

TreeDecomposition decomposition_from_order(const AdjMap& g, const std::vector<uint32_t>& order) {
    if (order.size() != g.size()) throw std::invalid_argument("elimination order size mismatch");
    std::map<uint32_t, size_t> position;
    for (size_t i = 0; i < order.size(); ++i) {
        if (!g.count(order[i])) throw std::invalid_argument("elimination order names unknown vertex");
        position[order[i]] = i;
    }
    if (position.size() != g.size()) throw std::invalid_argument("elimination order repeats a vertex");

    TreeDecomposition t;
    t.bags.resize(order.size());
    t.parent.assign(order.size(), -1);
    AdjMap h = g;
    for (size_t i = 0; i < order.size(); ++i) {
        uint32_t v = order[i];
        auto it = h.find(v);
        if (it == h.end()) throw std::invalid_argument("elimination order names unknown vertex");
        t.bags[i] = it->second;
        t.bags[i].insert(v);
        // Hang this bag under the next-eliminated neighbor's bag.
        size_t first = order.size();
        for (uint32_t u : it->second) first = std::min(first, position.at(u));
        if (first < order.size()) t.parent[i] = (int)first;
        eliminate(h, v);
    }
    return t;
}

TreeDecomposition treewidth_min_fill(const AdjMap& g) {
    return decomposition_from_order(g, min_fill_order(g));
}

TreeDecomposition treewidth_bb(const AdjMap& g, uint64_t budget) {
    std::vector<uint32_t> seed = min_fill_order(g);
    TreeDecomposition seeded = decomposition_from_order(g, seed);
    if (budget == 0 || g.empty()) return seeded;
    BBState st;
    st.best_order = seed;
    st.best_width = seeded.width();
    st.budget = budget;
    bb_search(g, {}, 0, st);
    return decomposition_from_order(g, st.best_order);
}

std::vector<uint32_t> td_to_order(const TreeDecomposition& t) {
    std::vector<std::set<uint32_t>> bags = t.bags;
    std::vector<bool> alive(bags.size(), true);
    std::vector<int> children(bags.size(), 0);
    for (int p : t.parent)
        if (p != -1) ++children[p];

    std::vector<uint32_t> order;
    size_t remaining = bags.size();
    while (remaining > 0) {
        size_t l = bags.size();
        for (size_t i = 0; i < bags.size(); ++i) {
            if (alive[i] && children[i] == 0) {
                l = i;
                break;
            }
        }
        if (l == bags.size()) throw std::runtime_error("decomposition has no childless bag");
        int p = t.parent[l];
        auto drop = [&](size_t bag) {
            alive[bag] = false;
            --remaining;
            if (t.parent[bag] != -1) --children[t.parent[bag]];
        };
        if (p == -1) {
            // Root of a finished tree: whatever is left contracts in one
            // sweep, lowest vertex first.
            for (uint32_t v : bags[l]) order.push_back(v);
            drop(l);
            continue;
        }
        bool subset = true;
        uint32_t emit = 0;
        for (uint32_t v : bags[l]) {
            if (!bags[p].count(v)) {
                subset = false;
                emit = v;
                break;
            }
        }
        if (subset) {
            drop(l);
        } else {
            order.push_back(emit);
            for (auto& b : bags) b.erase(emit);
        }
    }
    return order;
}

}  // namespace zxc

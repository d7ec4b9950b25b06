#pragma once

// Deliberately naive reference implementations. They share no code with the
// library beyond the adjacency representation, and are only meant for n <= ~10.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "kham/small_graph.hpp"

namespace oracle {

using kham::SmallGraph;

inline bool adjacent(const SmallGraph& g, int u, int v) { return (g.adj[u] >> v) & 1U; }

// Fix vertex 0, try every ordering of the rest.
inline bool hamiltonian_by_permutation(const SmallGraph& g) {
    const int n = g.n;
    if (n < 3) return false;
    std::vector<int> order(static_cast<std::size_t>(n - 1));
    std::iota(order.begin(), order.end(), 1);
    do {
        bool ok = adjacent(g, 0, order.front()) && adjacent(g, order.back(), 0);
        for (std::size_t i = 0; ok && i + 1 < order.size(); ++i) ok = adjacent(g, order[i], order[i + 1]);
        if (ok) return true;
    } while (std::next_permutation(order.begin(), order.end()));
    return false;
}

// Held-Karp over subsets containing vertex 0.
inline bool hamiltonian_by_subset_dp(const SmallGraph& g) {
    const int n = g.n;
    if (n < 3) return false;
    const std::uint32_t full = (1U << n) - 1;
    std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);  // bit v: a path 0 .. v covering the mask
    ends[1] = 1;
    for (std::uint32_t mask = 1; mask <= full; mask += 2) {
        if (!ends[mask]) continue;
        for (int v = 0; v < n; ++v) {
            if (!(ends[mask] >> v & 1U)) continue;
            for (int w = 1; w < n; ++w)
                if (!(mask >> w & 1U) && adjacent(g, v, w)) ends[mask | (1U << w)] |= 1U << w;
        }
    }
    for (int v = 1; v < n; ++v)
        if ((ends[full] >> v & 1U) && adjacent(g, v, 0)) return true;
    return false;
}

inline int components_without(const SmallGraph& g, std::uint64_t removed) {
    const int n = g.n;
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    int count = 0;
    for (int s = 0; s < n; ++s) {
        if ((removed >> s & 1U) || label[s] != -1) continue;
        std::vector<int> stack{s};
        label[s] = count;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            for (int w = 0; w < n; ++w)
                if (!(removed >> w & 1U) && label[w] == -1 && adjacent(g, v, w)) {
                    label[w] = count;
                    stack.push_back(w);
                }
        }
        ++count;
    }
    return count;
}

// Smallest vertex set whose removal disconnects g; n - 1 for complete graphs.
inline int connectivity_by_subsets(const SmallGraph& g) {
    const int n = g.n;
    int best = n - 1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        const int size = std::popcount(s);
        if (size >= best || size > n - 2) continue;
        if (components_without(g, s) > 1) best = size;
    }
    return best;
}

inline int independence_by_subsets(const SmallGraph& g) {
    const int n = g.n;
    int best = 0;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((s >> v & 1U) && (g.adj[v] & s)) ok = false;
        if (ok) best = std::max(best, std::popcount(s));
    }
    return best;
}

// Longest cycle length by trying every vertex subset with Held-Karp.
inline int longest_cycle_by_subsets(const SmallGraph& g) {
    const int n = g.n;
    int best = 0;
    for (std::uint32_t set = 1; set < (1U << n); ++set) {
        const int size = std::popcount(set);
        if (size < 3 || size <= best) continue;
        std::vector<int> ids;
        for (int v = 0; v < n; ++v)
            if (set >> v & 1U) ids.push_back(v);
        SmallGraph h;
        h.n = size;
        for (int i = 0; i < size; ++i)
            for (int j = i + 1; j < size; ++j)
                if (adjacent(g, ids[i], ids[j])) h.add_edge(i, j);
        if (hamiltonian_by_subset_dp(h)) best = size;
    }
    return best;
}

// Number of labeled graphs on the block partition with min degree >= floor, by
// scanning every edge subset.
struct Census {
    std::int64_t meeting_floor = 0;
    std::int64_t non_hamiltonian = 0;
};

inline Census census_by_subsets(int n, int k, int floor) {
    const int m = n / k;
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (u / m != v / m) pairs.emplace_back(u, v);
    Census c;
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    for (std::uint64_t s = 0; s < total; ++s) {
        std::vector<int> deg(static_cast<std::size_t>(n), 0);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (s >> i & 1U) {
                ++deg[pairs[i].first];
                ++deg[pairs[i].second];
            }
        if (*std::min_element(deg.begin(), deg.end()) < floor) continue;
        ++c.meeting_floor;
        SmallGraph g;
        g.n = n;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (s >> i & 1U) g.add_edge(pairs[i].first, pairs[i].second);
        if (!hamiltonian_by_subset_dp(g)) ++c.non_hamiltonian;
    }
    return c;
}

}  // namespace oracle

#pragma once

// Word-packed adjacency for graphs on at most 64 vertices. This is the
// representation every exact search in the library runs on.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <vector>

namespace kham {

using Mask = std::uint64_t;

inline constexpr int kMaxSmallOrder = 64;

constexpr Mask bit(int v) { return Mask{1} << v; }
constexpr int popcount(Mask m) { return std::popcount(m); }
constexpr int lowest(Mask m) { return std::countr_zero(m); }
constexpr Mask first_n(int n) { return n >= 64 ? ~Mask{0} : bit(n) - 1; }

template <class F>
constexpr void for_each_vertex(Mask m, F&& f) {
    while (m) {
        f(lowest(m));
        m &= m - 1;
    }
}

inline std::vector<int> to_vertices(Mask m) {
    std::vector<int> out;
    out.reserve(popcount(m));
    for_each_vertex(m, [&](int v) { out.push_back(v); });
    return out;
}

struct SmallGraph {
    int n = 0;
    std::array<Mask, kMaxSmallOrder> adj{};

    Mask all() const { return first_n(n); }
    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1U; }
    int degree(int v) const { return popcount(adj[v]); }

    void add_edge(int u, int v) {
        adj[u] |= bit(v);
        adj[v] |= bit(u);
    }
    void remove_edge(int u, int v) {
        adj[u] &= ~bit(v);
        adj[v] &= ~bit(u);
    }

    int min_degree() const {
        int best = n;
        for (int v = 0; v < n; ++v) best = std::min(best, degree(v));
        return best;
    }

    /// Vertices of `within` reachable from `from` using only vertices of `within`.
    Mask reach(int from, Mask within) const {
        Mask seen = bit(from) & within;
        Mask frontier = seen;
        while (frontier) {
            Mask next = 0;
            for_each_vertex(frontier, [&](int v) { next |= adj[v]; });
            next &= within & ~seen;
            seen |= next;
            frontier = next;
        }
        return seen;
    }

    int component_count(Mask within) const {
        int count = 0;
        while (within) {
            within &= ~reach(lowest(within), within);
            ++count;
        }
        return count;
    }

    bool connected(Mask within) const { return within == 0 || reach(lowest(within), within) == within; }

    bool independent(Mask set) const {
        bool ok = true;
        for_each_vertex(set, [&](int v) { ok = ok && !(adj[v] & set); });
        return ok;
    }

    bool operator==(const SmallGraph&) const = default;
};

}  // namespace kham

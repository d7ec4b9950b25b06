#include "kham/isomorphism.hpp"

#include <algorithm>
#include <span>

#include "kham/error.hpp"

namespace kham {

namespace {

struct Side {
    SmallGraph g;
    std::vector<Mask> mates;  // same-part vertices other than v; empty when parts are ignored
};

Side make_side(const KPartiteGraph& graph, bool respect_parts) {
    Side s{graph.small(), {}};
    if (respect_parts) {
        const auto parts = graph.part_masks();
        s.mates.resize(static_cast<std::size_t>(graph.order()));
        for (int v = 0; v < graph.order(); ++v) s.mates[v] = parts[graph.part_of(v)] & ~bit(v);
    }
    return s;
}

int distinct(std::span<const std::vector<int>> colours) {
    std::vector<int> all;
    for (const auto& c : colours) all.insert(all.end(), c.begin(), c.end());
    std::sort(all.begin(), all.end());
    return static_cast<int>(std::unique(all.begin(), all.end()) - all.begin());
}

// Joint refinement so that colour ids are comparable across sides. New colours
// are ranks of (old colour, neighbour colours, mate colours), which keeps the
// order label-invariant.
void refine(std::span<const Side> sides, std::span<std::vector<int>> colours) {
    int classes = distinct(colours);
    while (true) {
        std::vector<std::vector<std::vector<int>>> sig(sides.size());
        std::vector<std::vector<int>> pool;
        for (std::size_t s = 0; s < sides.size(); ++s) {
            const auto& side = sides[s];
            for (int v = 0; v < side.g.n; ++v) {
                std::vector<int> key{colours[s][v]};
                std::vector<int> around;
                for_each_vertex(side.g.adj[v], [&](int w) { around.push_back(colours[s][w]); });
                std::sort(around.begin(), around.end());
                key.insert(key.end(), around.begin(), around.end());
                key.push_back(-1);
                if (!side.mates.empty()) {
                    around.clear();
                    for_each_vertex(side.mates[v], [&](int w) { around.push_back(colours[s][w]); });
                    std::sort(around.begin(), around.end());
                    key.insert(key.end(), around.begin(), around.end());
                }
                sig[s].push_back(key);
                pool.push_back(std::move(key));
            }
        }
        std::sort(pool.begin(), pool.end());
        pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
        for (std::size_t s = 0; s < sides.size(); ++s)
            for (std::size_t v = 0; v < sig[s].size(); ++v)
                colours[s][v] = static_cast<int>(std::lower_bound(pool.begin(), pool.end(), sig[s][v]) - pool.begin());
        const int now = static_cast<int>(pool.size());
        if (now == classes) return;
        classes = now;
    }
}

class IsoSearch {
public:
    IsoSearch(const KPartiteGraph& a, const KPartiteGraph& b, bool respect_parts)
        : a_(a), b_(b), respect_(respect_parts) {}

    std::optional<std::vector<int>> run() {
        const int n = a_.order();
        if (n != b_.order() || a_.edge_count() != b_.edge_count()) return std::nullopt;
        if (respect_ && a_.part_count() != b_.part_count()) return std::nullopt;
        sides_ = {make_side(a_, respect_), make_side(b_, respect_)};
        colours_ = {std::vector<int>(static_cast<std::size_t>(n), 0), std::vector<int>(static_cast<std::size_t>(n), 0)};
        refine(sides_, colours_);
        auto ca = colours_[0], cb = colours_[1];
        std::sort(ca.begin(), ca.end());
        std::sort(cb.begin(), cb.end());
        if (ca != cb) return std::nullopt;

        phi_.assign(static_cast<std::size_t>(n), -1);
        used_ = 0;
        part_map_.assign(static_cast<std::size_t>(a_.part_count()), -1);
        part_used_.assign(static_cast<std::size_t>(b_.part_count()), 0);
        if (!extend(0)) return std::nullopt;
        return phi_;
    }

private:
    // Next vertex: most already-mapped neighbours, then rarest colour, then id.
    int pick() const {
        const auto& g = sides_[0].g;
        Mask mapped = 0;
        for (int v = 0; v < g.n; ++v)
            if (phi_[v] != -1) mapped |= bit(v);
        int best = -1, best_links = -1, best_class = 0;
        for (int v = 0; v < g.n; ++v) {
            if (phi_[v] != -1) continue;
            const int links = popcount(g.adj[v] & mapped);
            const int cls = static_cast<int>(std::count(colours_[0].begin(), colours_[0].end(), colours_[0][v]));
            if (links > best_links || (links == best_links && cls < best_class)) {
                best = v;
                best_links = links;
                best_class = cls;
            }
        }
        return best;
    }

    bool extend(int depth) {
        const auto& ga = sides_[0].g;
        const auto& gb = sides_[1].g;
        if (depth == ga.n) return true;
        const int v = pick();
        for (int c = 0; c < gb.n; ++c) {
            if ((used_ >> c & 1U) || colours_[1][c] != colours_[0][v]) continue;
            bool ok = true;
            for (int u = 0; u < ga.n && ok; ++u)
                if (phi_[u] != -1 && ga.adjacent(u, v) != gb.adjacent(phi_[u], c)) ok = false;
            if (!ok) continue;
            const int pa = a_.part_of(v), pb = b_.part_of(c);
            bool new_part = false;
            if (respect_) {
                if (part_map_[pa] == -1) {
                    if (part_used_[pb]) continue;
                    new_part = true;
                } else if (part_map_[pa] != pb) {
                    continue;
                }
            }
            phi_[v] = c;
            used_ |= bit(c);
            if (new_part) {
                part_map_[pa] = pb;
                part_used_[pb] = 1;
            }
            if (extend(depth + 1)) return true;
            phi_[v] = -1;
            used_ &= ~bit(c);
            if (new_part) {
                part_map_[pa] = -1;
                part_used_[pb] = 0;
            }
        }
        return false;
    }

    const KPartiteGraph& a_;
    const KPartiteGraph& b_;
    bool respect_;
    std::vector<Side> sides_;
    std::vector<std::vector<int>> colours_;
    std::vector<int> phi_;
    Mask used_ = 0;
    std::vector<int> part_map_;
    std::vector<char> part_used_;
};

class Canonizer {
public:
    explicit Canonizer(Side side) : side_(std::move(side)) {}

    std::string run() {
        std::vector<int> colours(static_cast<std::size_t>(side_.g.n), 0);
        search(colours);
        return best_;
    }

private:
    void search(std::vector<int> colours) {
        std::vector<std::vector<int>> one{std::move(colours)};
        refine(std::span<const Side>(&side_, 1), one);
        auto& c = one[0];
        const int n = side_.g.n;
        // Smallest non-singleton cell (by colour id) is the target cell.
        std::vector<int> count(static_cast<std::size_t>(n), 0);
        for (int v = 0; v < n; ++v) ++count[c[v]];
        int target = -1;
        for (int col = 0; col < n && target == -1; ++col)
            if (count[col] > 1) target = col;
        if (target == -1) {
            leaf(c);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (c[v] != target) continue;
            // Individualize v: it keeps the colour, the rest of its cell moves up.
            std::vector<int> next(c.size());
            for (int w = 0; w < n; ++w) next[w] = 2 * c[w] + ((c[w] == target && w != v) ? 1 : 0);
            search(std::move(next));
        }
    }

    void leaf(const std::vector<int>& position) {
        const int n = side_.g.n;
        std::vector<int> at(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) at[position[v]] = v;
        std::string cert;
        cert.reserve(static_cast<std::size_t>(n * n));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                char ch = side_.g.adjacent(at[i], at[j]) ? '1' : '0';
                if (!side_.mates.empty() && (side_.mates[at[i]] >> at[j] & 1U)) ch = 'p';
                cert.push_back(ch);
            }
        if (best_.empty() || cert < best_) best_ = std::move(cert);
    }

    Side side_;
    std::string best_;
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const KPartiteGraph& a, const KPartiteGraph& b, bool respect_parts) {
    if (a.order() > kMaxSmallOrder || b.order() > kMaxSmallOrder)
        throw GuardExceeded("isomorphism search limited to n <= 64");
    return IsoSearch(a, b, respect_parts).run();
}

std::string canonical_form(const KPartiteGraph& g, bool respect_parts) {
    if (g.order() > kCanonicalGuard)
        throw GuardExceeded("canonical form limited to n <= " + std::to_string(kCanonicalGuard));
    return std::to_string(g.order()) + ":" + Canonizer(make_side(g, respect_parts)).run();
}

}  // namespace kham

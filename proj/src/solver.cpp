#include "kham/solver.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <sstream>

#include "kham/error.hpp"

namespace kham {

bool verify_cycle(const KPartiteGraph& g, const CycleCertificate& cycle) {
    const auto& vs = cycle.vertices;
    if (vs.size() < 3) return false;
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    for (int v : vs) {
        if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (!g.adjacent(vs[i], vs[(i + 1) % vs.size()])) return false;
    return true;
}

namespace {

class HamiltonSearch {
public:
    HamiltonSearch(const SmallGraph& g, std::span<const Mask> parts) : g_(g), parts_(parts) {}

    HamiltonSearchResult run() {
        HamiltonSearchResult result;
        const int n = g_.n;
        if (n < 3) return result;
        start_ = 0;
        for (int v = 0; v < n; ++v) {
            if (g_.degree(v) < 2) return result;
            if (g_.degree(v) < g_.degree(start_)) start_ = v;
        }
        if (!g_.connected(g_.all())) return result;
        path_[0] = start_;
        depth_ = 1;
        result.found = extend(start_, g_.all() & ~bit(start_));
        result.nodes = nodes_;
        if (result.found) result.cycle.assign(path_.begin(), path_.begin() + n);
        return result;
    }

private:
    bool extend(int end, Mask remaining) {
        ++nodes_;
        if (!remaining) return g_.adjacent(end, start_);
        const Mask avail = remaining | bit(end) | bit(start_);

        // A remaining vertex whose only usable neighbours are `end` and one other
        // must come next.
        int forced = -1;
        Mask scan = remaining;
        while (scan) {
            const int r = lowest(scan);
            scan &= scan - 1;
            const Mask usable = g_.adj[r] & avail;
            const int c = popcount(usable);
            if (c < 2) return false;
            if (c == 2 && (usable & bit(end)) && end != start_) {
                if (forced != -1) return false;
                forced = r;
            }
        }
        if (depth_ > 1 && !(g_.adj[start_] & remaining)) return false;
        if ((g_.reach(end, remaining | bit(end)) & remaining) != remaining) return false;
        if (!parts_fit(remaining)) return false;

        Mask candidates = g_.adj[end] & remaining;
        if (forced != -1) candidates &= bit(forced);
        if (!candidates) return false;

        std::array<std::pair<int, int>, kMaxSmallOrder> order{};
        int count = 0;
        for_each_vertex(candidates, [&](int v) {
            order[count++] = {popcount(g_.adj[v] & (remaining | bit(start_)) & ~bit(v)), v};
        });
        std::sort(order.begin(), order.begin() + count);
        for (int i = 0; i < count; ++i) {
            const int v = order[i].second;
            path_[depth_++] = v;
            if (extend(v, remaining & ~bit(v))) return true;
            --depth_;
        }
        return false;
    }

    // The rest of the cycle is end, r_1..r_t, start; an independent set inside
    // the remaining vertices occupies at most ceil(t/2) of the t interior slots.
    bool parts_fit(Mask remaining) const {
        if (parts_.empty()) return true;
        const int cap = (popcount(remaining) + 1) / 2;
        std::array<Mask, kMaxSmallOrder> left{};
        std::array<int, kMaxSmallOrder> size{};
        const int k = static_cast<int>(parts_.size());
        for (int p = 0; p < k; ++p) {
            left[p] = parts_[p] & remaining;
            size[p] = popcount(left[p]);
            if (size[p] > cap) return false;
        }
        for (int p = 0; p < k; ++p) {
            if (2 * size[p] <= cap) continue;
            for (int q = p + 1; q < k; ++q) {
                if (size[p] + size[q] <= cap) continue;
                bool joined = false;
                for_each_vertex(left[p], [&](int v) { joined = joined || (g_.adj[v] & left[q]); });
                if (!joined) return false;
            }
        }
        return true;
    }

    const SmallGraph& g_;
    std::span<const Mask> parts_;
    int start_ = 0;
    int depth_ = 0;
    std::uint64_t nodes_ = 0;
    std::array<int, kMaxSmallOrder> path_{};
};

void check_small(int n, int guard, const char* what) {
    if (n > guard || n > kMaxSmallOrder)
        throw GuardExceeded(std::string(what) + " limited to n <= " + std::to_string(std::min(guard, kMaxSmallOrder)) +
                            " (got " + std::to_string(n) + ")");
}

class CycleSearch {
public:
    explicit CycleSearch(const SmallGraph& g) : g_(g) {}

    std::vector<int> longest() {
        best_.clear();
        target_ = 0;
        collect_ = false;
        for (int s = 0; s < g_.n; ++s) {
            if (g_.n - s <= static_cast<int>(best_.size())) break;
            root(s);
            if (static_cast<int>(best_.size()) == g_.n) break;
        }
        return best_;
    }

    std::vector<std::vector<int>> all_of_length(int length) {
        found_.clear();
        target_ = length;
        collect_ = true;
        for (int s = 0; s + length <= g_.n; ++s) root(s);
        return found_;
    }

private:
    void root(int s) {
        start_ = s;
        const Mask allowed = g_.all() & ~first_n(s + 1);
        const Mask component = g_.reach(s, allowed | bit(s)) & allowed;
        const int needed = collect_ ? target_ : static_cast<int>(best_.size()) + 1;
        if (popcount(component) + 1 < needed) return;
        path_[0] = s;
        dfs(s, component, 1);
    }

    void dfs(int end, Mask avail, int len) {
        if (len >= 3 && g_.adjacent(end, start_)) {
            if (collect_) {
                if (len == target_ && path_[1] < path_[len - 1]) found_.emplace_back(path_.begin(), path_.begin() + len);
            } else if (len > static_cast<int>(best_.size())) {
                best_.assign(path_.begin(), path_.begin() + len);
            }
        }
        if (collect_ ? len >= target_ : static_cast<int>(best_.size()) == g_.n) return;
        const Mask candidates = g_.adj[end] & avail;
        if (!candidates) return;
        const int reachable = popcount(g_.reach(end, avail | bit(end)) & avail);
        const int needed = collect_ ? target_ : static_cast<int>(best_.size()) + 1;
        if (len + reachable < needed) return;
        for_each_vertex(candidates, [&](int v) {
            path_[len] = v;
            dfs(v, avail & ~bit(v), len + 1);
        });
    }

    const SmallGraph& g_;
    int start_ = 0;
    int target_ = 0;
    bool collect_ = false;
    std::array<int, kMaxSmallOrder> path_{};
    std::vector<int> best_;
    std::vector<std::vector<int>> found_;
};

}  // namespace

HamiltonSearchResult search_hamiltonian_cycle(const SmallGraph& g, std::span<const Mask> parts) {
    return HamiltonSearch(g, parts).run();
}

std::optional<CycleCertificate> find_hamiltonian_cycle(const KPartiteGraph& g, const SolverLimits& limits) {
    if (g.order() < 3) throw InvalidArgument("find_hamiltonian_cycle needs n >= 3");
    check_small(g.order(), limits.hamiltonian, "Hamiltonian search");
    const auto parts = g.part_masks();
    auto result = search_hamiltonian_cycle(g.small(), parts);
    if (!result.found) return std::nullopt;
    return CycleCertificate{std::move(result.cycle)};
}

std::vector<int> longest_cycle(const SmallGraph& g) { return CycleSearch(g).longest(); }

std::vector<std::vector<int>> enumerate_longest_cycles(const SmallGraph& g) {
    CycleSearch search(g);
    const auto best = search.longest();
    if (best.empty()) return {};
    return search.all_of_length(static_cast<int>(best.size()));
}

CycleCertificate longest_cycle(const KPartiteGraph& g, const SolverLimits& limits) {
    check_small(g.order(), limits.longest_cycle, "longest cycle search");
    auto cycle = longest_cycle(g.small());
    if (cycle.empty()) throw InvalidArgument("graph is acyclic");
    return CycleCertificate{std::move(cycle)};
}

std::vector<CycleCertificate> enumerate_longest_cycles(const KPartiteGraph& g, const SolverLimits& limits) {
    check_small(g.order(), limits.enumerate_cycles, "longest cycle enumeration");
    std::vector<CycleCertificate> out;
    for (auto& c : enumerate_longest_cycles(g.small())) out.push_back(CycleCertificate{std::move(c)});
    return out;
}

std::optional<VertexList> small_vertex_cut(const KPartiteGraph& g) {
    const int n = g.order();
    if (components_after_removal(g, {}) > 1) return VertexList{};
    if (n < 3) return std::nullopt;
    std::vector<VertexList> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    int clock = 0;
    std::optional<int> found;
    std::function<void(int, int)> visit = [&](int v, int parent) {
        disc[v] = low[v] = clock++;
        int children = 0;
        for (int w : adj[v]) {
            if (disc[w] == -1) {
                ++children;
                visit(w, v);
                low[v] = std::min(low[v], low[w]);
                if (parent != -1 && low[w] >= disc[v] && !found) found = v;
            } else if (w != parent) {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (parent == -1 && children > 1 && !found) found = v;
    };
    visit(0, -1);
    if (found) return VertexList{*found};
    return std::nullopt;
}

std::string witness_kind(const NonHamWitness& w) {
    struct Kind {
        std::string operator()(const IndependentSetTooLarge&) const { return "IndependentSetTooLarge"; }
        std::string operator()(const SmallCut&) const { return "SmallCut"; }
        std::string operator()(const BipartiteDegreeOne&) const { return "BipartiteDegreeOne"; }
        std::string operator()(const ExhaustiveSearch&) const { return "ExhaustiveSearch"; }
    };
    return std::visit(Kind{}, w);
}

namespace {

std::string join(const VertexList& vs) {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
    return out;
}

}  // namespace

std::string describe(const NonHamWitness& w) {
    struct Describe {
        std::string operator()(const IndependentSetTooLarge& x) const {
            return "independent set of size " + std::to_string(x.set.size()) + ": {" + join(x.set) + "}";
        }
        std::string operator()(const SmallCut& x) const {
            return "removing {" + join(x.cut) + "} leaves " + std::to_string(x.components) + " components";
        }
        std::string operator()(const BipartiteDegreeOne& x) const {
            return "independent half {" + join(x.side_a) + "}; vertex " + std::to_string(x.vertex) +
                   " has at most one neighbour in it";
        }
        std::string operator()(const ExhaustiveSearch& x) const {
            return "exhaustive search, " + std::to_string(x.nodes) + " nodes";
        }
    };
    return witness_kind(w) + ": " + std::visit(Describe{}, w);
}

namespace {

std::optional<BipartiteDegreeOne> degree_one_opposite(const SmallGraph& s, Mask side) {
    if (!s.independent(side) || 2 * popcount(side) != s.n) return std::nullopt;
    const Mask other = s.all() & ~side;
    for (int v = 0; v < s.n; ++v)
        if ((other >> v & 1U) && popcount(s.adj[v] & side) <= 1) return BipartiteDegreeOne{to_vertices(side), v};
    return std::nullopt;
}

std::optional<BipartiteDegreeOne> find_degree_one_half(const KPartiteGraph& g, const SmallGraph& s,
                                                       std::optional<Mask> alpha_set) {
    if (g.order() % 2 != 0) return std::nullopt;
    if (alpha_set)
        if (auto w = degree_one_opposite(s, *alpha_set)) return w;
    const auto parts = g.part_masks();
    const int k = g.part_count();
    if (k > 24) return std::nullopt;
    for (std::uint32_t pick = 1; pick < (1U << k); ++pick) {
        Mask side = 0;
        for (int p = 0; p < k; ++p)
            if (pick >> p & 1U) side |= parts[p];
        if (2 * popcount(side) != s.n) continue;
        if (auto w = degree_one_opposite(s, side)) return w;
    }
    return std::nullopt;
}

}  // namespace

std::optional<NonHamWitness> non_hamiltonicity_witness(const KPartiteGraph& g, const WitnessOptions& options) {
    const int n = g.order();
    if (n < 3) return ExhaustiveSearch{0};
    if (auto cut = small_vertex_cut(g)) return SmallCut{*cut, components_after_removal(g, *cut)};

    if (options.independent_hint) {
        const auto& hint = *options.independent_hint;
        if (2 * static_cast<int>(hint.size()) > n && is_independent(g, hint)) return IndependentSetTooLarge{hint};
    }
    if (n > std::min(options.exact_guard, kMaxSmallOrder)) return std::nullopt;

    const SmallGraph s = g.small();
    const Mask alpha = maximum_independent_set(s, s.all());
    if (2 * popcount(alpha) > n) return IndependentSetTooLarge{to_vertices(alpha)};
    if (auto w = find_degree_one_half(g, s, alpha)) return *w;

    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            const int c = s.component_count(s.all() & ~bit(u) & ~bit(v));
            if (c > 2) return SmallCut{{u, v}, c};
        }

    if (n > options.search_guard) return std::nullopt;
    const auto parts = g.part_masks();
    const auto result = search_hamiltonian_cycle(s, parts);
    if (result.found) return std::nullopt;
    return ExhaustiveSearch{result.nodes};
}

bool check_witness(const KPartiteGraph& g, const NonHamWitness& w) {
    const int n = g.order();
    struct Check {
        const KPartiteGraph& g;
        int n;
        bool operator()(const IndependentSetTooLarge& x) const {
            VertexList sorted = x.set;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            return 2 * static_cast<int>(sorted.size()) > n && is_independent(g, sorted);
        }
        bool operator()(const SmallCut& x) const {
            VertexList sorted = x.cut;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            if (static_cast<int>(sorted.size()) >= n) return false;
            const int c = components_after_removal(g, sorted);
            return c == x.components && c > static_cast<int>(sorted.size());
        }
        bool operator()(const BipartiteDegreeOne& x) const {
            VertexList sorted = x.side_a;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
            if (2 * static_cast<int>(sorted.size()) != n || !is_independent(g, sorted)) return false;
            if (x.vertex < 0 || x.vertex >= n || std::binary_search(sorted.begin(), sorted.end(), x.vertex))
                return false;
            int into = 0;
            for (int v : sorted) into += g.adjacent(x.vertex, v);
            return into <= 1;
        }
        bool operator()(const ExhaustiveSearch&) const {
            if (n < 3) return true;
            const auto parts = g.part_masks();
            return !search_hamiltonian_cycle(g.small(), parts).found;
        }
    };
    return std::visit(Check{g, n}, w);
}

}  // namespace kham

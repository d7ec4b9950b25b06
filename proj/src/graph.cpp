#include "kham/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <tuple>

#include "kham/error.hpp"

namespace kham {

const char* to_string(GraphErrorKind kind) {
    switch (kind) {
        case GraphErrorKind::UnbalancedPartition: return "unbalanced partition";
        case GraphErrorKind::IntraPartEdge: return "intra-part edge";
        case GraphErrorKind::SelfLoop: return "self-loop";
        case GraphErrorKind::VertexOutOfRange: return "vertex out of range";
        case GraphErrorKind::BadPartIndex: return "bad part index";
    }
    return "graph error";
}

KPartiteGraph build_graph_impl(int n, int k, std::vector<int> part_of, std::span<const Edge> edges,
                               bool require_balance) {
    if (n < 1) throw InvalidArgument("graph needs at least one vertex");
    if (k < 1 || k > n) throw InvalidArgument("part count must lie in [1, n]");
    if (static_cast<int>(part_of.size()) != n)
        throw GraphError(GraphErrorKind::BadPartIndex, "partition lists " + std::to_string(part_of.size()) +
                                                           " vertices, expected " + std::to_string(n));
    std::vector<int> sizes(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v) {
        const int p = part_of[static_cast<std::size_t>(v)];
        if (p < 0 || p >= k)
            throw GraphError(GraphErrorKind::BadPartIndex, "vertex " + std::to_string(v) + " has part " + std::to_string(p));
        ++sizes[static_cast<std::size_t>(p)];
    }
    for (int p = 0; p < k; ++p) {
        const int size = sizes[static_cast<std::size_t>(p)];
        if (size == 0)
            throw GraphError(GraphErrorKind::UnbalancedPartition, "part " + std::to_string(p) + " is empty");
        if (require_balance && (n % k != 0 || size != n / k))
            throw GraphError(GraphErrorKind::UnbalancedPartition,
                             "part " + std::to_string(p) + " has " + std::to_string(size) + " vertices");
    }

    KPartiteGraph g;
    g.n_ = n;
    g.k_ = k;
    g.words_ = (n + 63) / 64;
    g.part_of_ = std::move(part_of);
    g.bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(g.words_), 0);
    for (const auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError(GraphErrorKind::VertexOutOfRange,
                             "edge " + std::to_string(u) + "-" + std::to_string(v) + " with n = " + std::to_string(n));
        if (u == v) throw GraphError(GraphErrorKind::SelfLoop, "at vertex " + std::to_string(u));
        if (g.part_of_[static_cast<std::size_t>(u)] == g.part_of_[static_cast<std::size_t>(v)])
            throw GraphError(GraphErrorKind::IntraPartEdge,
                             "edge " + std::to_string(u) + "-" + std::to_string(v) + " inside part " +
                                 std::to_string(g.part_of_[static_cast<std::size_t>(u)]));
        g.bits_[static_cast<std::size_t>(u) * g.words_ + v / 64] |= bit(v % 64);
        g.bits_[static_cast<std::size_t>(v) * g.words_ + u / 64] |= bit(u % 64);
    }
    return g;
}

KPartiteGraph build_graph(int n, int k, std::vector<int> part_of, std::span<const Edge> edges) {
    return build_graph_impl(n, k, std::move(part_of), edges, true);
}

KPartiteGraph build_unbalanced_graph(int n, int k, std::vector<int> part_of, std::span<const Edge> edges) {
    return build_graph_impl(n, k, std::move(part_of), edges, false);
}

std::vector<int> block_partition(int n, int k) {
    if (k < 1 || n % k != 0) throw InvalidArgument("block_partition needs k | n");
    std::vector<int> part_of(static_cast<std::size_t>(n));
    const int m = n / k;
    for (int v = 0; v < n; ++v) part_of[static_cast<std::size_t>(v)] = v / m;
    return part_of;
}

namespace {

std::vector<Edge> small_edges(const SmallGraph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.n; ++u)
        for_each_vertex(g.adj[u] & ~first_n(u + 1), [&](int v) { edges.emplace_back(u, v); });
    return edges;
}

}  // namespace

KPartiteGraph as_n_partite(const SmallGraph& g) {
    std::vector<int> part_of(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) part_of[static_cast<std::size_t>(v)] = v;
    return build_graph(g.n, g.n, std::move(part_of), small_edges(g));
}

KPartiteGraph with_partition(const SmallGraph& g, int k, std::vector<int> part_of) {
    return build_graph(g.n, k, std::move(part_of), small_edges(g));
}

int KPartiteGraph::part_size() const { return balanced() ? n_ / k_ : 0; }

bool KPartiteGraph::balanced() const {
    if (k_ == 0 || n_ % k_ != 0) return false;
    std::vector<int> sizes(static_cast<std::size_t>(k_), 0);
    for (int p : part_of_) ++sizes[static_cast<std::size_t>(p)];
    return std::all_of(sizes.begin(), sizes.end(), [&](int s) { return s == n_ / k_; });
}

VertexList KPartiteGraph::part(int index) const {
    VertexList out;
    for (int v = 0; v < n_; ++v)
        if (part_of_[static_cast<std::size_t>(v)] == index) out.push_back(v);
    return out;
}

std::vector<VertexList> KPartiteGraph::parts() const {
    std::vector<VertexList> out(static_cast<std::size_t>(k_));
    for (int v = 0; v < n_; ++v) out[static_cast<std::size_t>(part_of_[static_cast<std::size_t>(v)])].push_back(v);
    return out;
}

bool KPartiteGraph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) return false;
    return (row(u)[static_cast<std::size_t>(v / 64)] >> (v % 64)) & 1U;
}

int KPartiteGraph::degree(int v) const {
    int d = 0;
    for (auto w : row(v)) d += popcount(w);
    return d;
}

VertexList KPartiteGraph::neighbors(int v) const {
    VertexList out;
    auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w)
        for_each_vertex(r[w], [&](int b) { out.push_back(static_cast<int>(w) * 64 + b); });
    return out;
}

std::vector<Edge> KPartiteGraph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::size_t KPartiteGraph::edge_count() const {
    std::size_t total = 0;
    for (int v = 0; v < n_; ++v) total += static_cast<std::size_t>(degree(v));
    return total / 2;
}

SmallGraph KPartiteGraph::small() const {
    if (n_ > kMaxSmallOrder) throw GuardExceeded("graph has " + std::to_string(n_) + " vertices; limit is 64");
    SmallGraph g;
    g.n = n_;
    for (int v = 0; v < n_; ++v) g.adj[static_cast<std::size_t>(v)] = row(v)[0];
    return g;
}

std::vector<Mask> KPartiteGraph::part_masks() const {
    if (n_ > kMaxSmallOrder) throw GuardExceeded("part masks need n <= 64");
    std::vector<Mask> masks(static_cast<std::size_t>(k_), 0);
    for (int v = 0; v < n_; ++v) masks[static_cast<std::size_t>(part_of_[static_cast<std::size_t>(v)])] |= bit(v);
    return masks;
}

int min_degree(const KPartiteGraph& g) {
    int best = std::numeric_limits<int>::max();
    for (int v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

int degree(const KPartiteGraph& g, int v) {
    if (v < 0 || v >= g.order()) throw GraphError(GraphErrorKind::VertexOutOfRange, std::to_string(v));
    return g.degree(v);
}

namespace {

std::vector<char> membership(const KPartiteGraph& g, const VertexList& set, const char* what) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (int v : set) {
        if (v < 0 || v >= g.order())
            throw GraphError(GraphErrorKind::VertexOutOfRange, std::string(what) + " contains " + std::to_string(v));
        in[static_cast<std::size_t>(v)] = 1;
    }
    return in;
}

}  // namespace

int degree_between(const KPartiteGraph& g, const VertexList& a, const VertexList& b) {
    if (a.empty()) throw InvalidArgument("degree_between: A is empty");
    auto in_a = membership(g, a, "A");
    auto in_b = membership(g, b, "B");
    for (int v = 0; v < g.order(); ++v)
        if (in_a[static_cast<std::size_t>(v)] && in_b[static_cast<std::size_t>(v)])
            throw InvalidArgument("degree_between: A and B intersect at " + std::to_string(v));
    int best = std::numeric_limits<int>::max();
    for (int v : a) {
        int count = 0;
        for (int w : g.neighbors(v)) count += in_b[static_cast<std::size_t>(w)];
        best = std::min(best, count);
    }
    return best;
}

namespace {

// Unit vertex capacities via the split graph: v_in = 2v, v_out = 2v + 1.
class SplitFlow {
public:
    explicit SplitFlow(const std::vector<VertexList>& adjacency) : n_(static_cast<int>(adjacency.size())) {
        head_.assign(static_cast<std::size_t>(2 * n_), -1);
        for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
        for (int u = 0; u < n_; ++u)
            for (int v : adjacency[static_cast<std::size_t>(u)]) add_arc(2 * u + 1, 2 * v, kInf);
        base_cap_ = cap_;
    }

    /// Internally vertex-disjoint s-t paths, stopping once `limit` is reached.
    int max_flow(int s, int t, int limit) {
        cap_ = base_cap_;
        const int source = 2 * s + 1, sink = 2 * t;
        int flow = 0;
        std::vector<int> via(static_cast<std::size_t>(2 * n_));
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::deque<int> queue{source};
            via[static_cast<std::size_t>(source)] = -2;
            while (!queue.empty() && via[static_cast<std::size_t>(sink)] == -1) {
                const int x = queue.front();
                queue.pop_front();
                for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
                    const int y = to_[static_cast<std::size_t>(a)];
                    if (cap_[static_cast<std::size_t>(a)] > 0 && via[static_cast<std::size_t>(y)] == -1) {
                        via[static_cast<std::size_t>(y)] = a;
                        queue.push_back(y);
                    }
                }
            }
            if (via[static_cast<std::size_t>(sink)] == -1) break;
            for (int y = sink; y != source;) {
                const int a = via[static_cast<std::size_t>(y)];
                --cap_[static_cast<std::size_t>(a)];
                ++cap_[static_cast<std::size_t>(a ^ 1)];
                y = to_[static_cast<std::size_t>(a ^ 1)];
            }
            ++flow;
        }
        return flow;
    }

    /// After a completed max_flow: vertices whose split arc crosses the residual cut.
    VertexList cut_from(int s) const {
        std::vector<char> seen(static_cast<std::size_t>(2 * n_), 0);
        std::deque<int> queue{2 * s + 1};
        seen[static_cast<std::size_t>(2 * s + 1)] = 1;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
                const int y = to_[static_cast<std::size_t>(a)];
                if (cap_[static_cast<std::size_t>(a)] > 0 && !seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    queue.push_back(y);
                }
            }
        }
        VertexList cut;
        for (int v = 0; v < n_; ++v)
            if (seen[static_cast<std::size_t>(2 * v)] && !seen[static_cast<std::size_t>(2 * v + 1)]) cut.push_back(v);
        return cut;
    }

private:
    static constexpr int kInf = 1 << 29;

    void add_arc(int x, int y, int c) {
        for (auto [from, to, cap] : {std::tuple{x, y, c}, std::tuple{y, x, 0}}) {
            to_.push_back(to);
            cap_.push_back(cap);
            next_.push_back(head_[static_cast<std::size_t>(from)]);
            head_[static_cast<std::size_t>(from)] = static_cast<int>(to_.size()) - 1;
        }
    }

    int n_;
    std::vector<int> head_, next_, to_, cap_, base_cap_;
};

std::vector<VertexList> adjacency_lists(const KPartiteGraph& g) {
    std::vector<VertexList> adj(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
    return adj;
}

struct CutResult {
    int size;
    VertexList cut;
};

CutResult min_cut(const std::vector<VertexList>& adj) {
    const int n = static_cast<int>(adj.size());
    auto adjacent = [&](int u, int v) {
        const auto& row = adj[static_cast<std::size_t>(u)];
        return std::binary_search(row.begin(), row.end(), v);
    };
    // Disconnected graphs have connectivity 0 with the empty cut.
    {
        std::vector<char> seen(static_cast<std::size_t>(n), 0);
        std::deque<int> queue{0};
        seen[0] = 1;
        int count = 1;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int y : adj[static_cast<std::size_t>(x)])
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    ++count;
                    queue.push_back(y);
                }
        }
        if (count < n) return {0, {}};
    }
    int best = n - 1;
    int min_vertex = 0;
    for (int v = 0; v < n; ++v)
        if (static_cast<int>(adj[static_cast<std::size_t>(v)].size()) < best) {
            best = static_cast<int>(adj[static_cast<std::size_t>(v)].size());
            min_vertex = v;
        }
    VertexList best_cut;
    if (best == n - 1) return {best, best_cut};  // complete
    best_cut = adj[static_cast<std::size_t>(min_vertex)];
    SplitFlow flow(adj);
    // A minimum separator misses one of the first best+1 vertices, and every
    // vertex it separates from the first such one has a larger index.
    for (int s = 0; s <= best && s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (adjacent(s, t)) continue;
            const int f = flow.max_flow(s, t, best);
            if (f < best) {
                best = f;
                best_cut = flow.cut_from(s);
            }
        }
    }
    return {best, best_cut};
}

}  // namespace

int vertex_connectivity(const KPartiteGraph& g) {
    if (g.order() < 2) throw InvalidArgument("vertex_connectivity needs n >= 2");
    return min_cut(adjacency_lists(g)).size;
}

VertexList minimum_vertex_cut(const KPartiteGraph& g) {
    if (g.order() < 2) throw InvalidArgument("minimum_vertex_cut needs n >= 2");
    return min_cut(adjacency_lists(g)).cut;
}

int vertex_connectivity(const SmallGraph& g) {
    if (g.n < 2) throw InvalidArgument("vertex_connectivity needs n >= 2");
    std::vector<VertexList> adj(static_cast<std::size_t>(g.n));
    for (int v = 0; v < g.n; ++v) adj[static_cast<std::size_t>(v)] = to_vertices(g.adj[static_cast<std::size_t>(v)]);
    return min_cut(adj).size;
}

int components_after_removal(const KPartiteGraph& g, const VertexList& removed) {
    auto gone = membership(g, removed, "removed set");
    std::vector<char> seen(gone);
    int components = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (seen[static_cast<std::size_t>(v)]) continue;
        ++components;
        std::deque<int> queue{v};
        seen[static_cast<std::size_t>(v)] = 1;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int y : g.neighbors(x))
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    queue.push_back(y);
                }
        }
    }
    return components;
}

bool is_independent(const KPartiteGraph& g, const VertexList& set) {
    auto in = membership(g, set, "set");
    for (int v : set)
        for (int w : g.neighbors(v))
            if (in[static_cast<std::size_t>(w)]) return false;
    return true;
}

namespace {

class IndependentSetSearch {
public:
    explicit IndependentSetSearch(const SmallGraph& g) : g_(g) {}

    Mask run(Mask within) {
        best_ = 0;
        best_size_ = 0;
        search(within, 0, 0);
        return best_;
    }

private:
    void search(Mask candidates, Mask chosen, int size) {
        // Degree <= 1 vertices can always be taken.
        bool reduced = true;
        while (reduced && candidates) {
            reduced = false;
            Mask scan = candidates;
            while (scan) {
                const int v = lowest(scan);
                scan &= scan - 1;
                if (popcount(g_.adj[static_cast<std::size_t>(v)] & candidates) <= 1) {
                    chosen |= bit(v);
                    ++size;
                    candidates &= ~(bit(v) | g_.adj[static_cast<std::size_t>(v)]);
                    scan &= candidates;
                    reduced = true;
                }
            }
        }
        if (size + popcount(candidates) <= best_size_) return;
        if (!candidates) {
            best_ = chosen;
            best_size_ = size;
            return;
        }
        int pivot = -1, pivot_degree = -1;
        for_each_vertex(candidates, [&](int v) {
            const int d = popcount(g_.adj[static_cast<std::size_t>(v)] & candidates);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        });
        search(candidates & ~(bit(pivot) | g_.adj[static_cast<std::size_t>(pivot)]), chosen | bit(pivot), size + 1);
        search(candidates & ~bit(pivot), chosen, size);
    }

    const SmallGraph& g_;
    Mask best_ = 0;
    int best_size_ = 0;
};

}  // namespace

Mask maximum_independent_set(const SmallGraph& g, Mask within) { return IndependentSetSearch(g).run(within); }

VertexList maximum_independent_set(const KPartiteGraph& g, int guard) {
    if (g.order() > guard || g.order() > kMaxSmallOrder)
        throw GuardExceeded("independence number limited to n <= " + std::to_string(std::min(guard, kMaxSmallOrder)));
    const SmallGraph s = g.small();
    return to_vertices(maximum_independent_set(s, s.all()));
}

int independence_number(const KPartiteGraph& g, int guard) {
    return static_cast<int>(maximum_independent_set(g, guard).size());
}

KPartiteGraph induced_bipartite(const KPartiteGraph& g, const VertexList& a, const VertexList& b) {
    auto in_a = membership(g, a, "A");
    auto in_b = membership(g, b, "B");
    if (a.empty() || b.empty()) throw InvalidArgument("induced_bipartite: both sides must be nonempty");
    for (int v = 0; v < g.order(); ++v) {
        if (in_a[static_cast<std::size_t>(v)] && in_b[static_cast<std::size_t>(v)])
            throw InvalidArgument("induced_bipartite: sides overlap at " + std::to_string(v));
        if (!in_a[static_cast<std::size_t>(v)] && !in_b[static_cast<std::size_t>(v)])
            throw InvalidArgument("induced_bipartite: vertex " + std::to_string(v) + " on neither side");
    }
    std::vector<int> part_of(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) part_of[static_cast<std::size_t>(v)] = in_a[static_cast<std::size_t>(v)] ? 0 : 1;
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edges())
        if (part_of[static_cast<std::size_t>(u)] != part_of[static_cast<std::size_t>(v)]) edges.emplace_back(u, v);
    return build_unbalanced_graph(g.order(), 2, std::move(part_of), edges);
}

KPartiteGraph with_edges(const KPartiteGraph& g, std::span<const Edge> extra) {
    auto edges = g.edges();
    edges.insert(edges.end(), extra.begin(), extra.end());
    return g.balanced() ? build_graph(g.order(), g.part_count(), g.partition(), edges)
                        : build_unbalanced_graph(g.order(), g.part_count(), g.partition(), edges);
}

}  // namespace kham

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "kham/small_graph.hpp"

namespace kham {

using Edge = std::pair<int, int>;
using VertexList = std::vector<int>;

/// Balanced k-partite graph with an explicit partition. Immutable once built;
/// adjacency rows are packed into 64-bit words so neighbourhood intersection is
/// word-parallel.
class KPartiteGraph {
public:
    KPartiteGraph() = default;

    int order() const { return n_; }
    int part_count() const { return k_; }
    /// n/k for balanced graphs; 0 when parts differ in size.
    int part_size() const;
    bool balanced() const;

    int part_of(int v) const { return part_of_[static_cast<std::size_t>(v)]; }
    const std::vector<int>& partition() const { return part_of_; }
    VertexList part(int index) const;
    std::vector<VertexList> parts() const;

    bool adjacent(int u, int v) const;
    int degree(int v) const;
    VertexList neighbors(int v) const;
    std::vector<Edge> edges() const;  // (u, v) with u < v, lexicographic
    std::size_t edge_count() const;

    /// Throws GuardExceeded when n > 64.
    SmallGraph small() const;
    /// Part masks; requires n <= 64.
    std::vector<Mask> part_masks() const;

    bool operator==(const KPartiteGraph& other) const = default;

private:
    friend KPartiteGraph build_graph_impl(int, int, std::vector<int>, std::span<const Edge>, bool);

    std::span<const std::uint64_t> row(int v) const {
        return {bits_.data() + static_cast<std::size_t>(v) * words_, static_cast<std::size_t>(words_)};
    }

    int n_ = 0;
    int k_ = 0;
    int words_ = 0;
    std::vector<int> part_of_;
    std::vector<std::uint64_t> bits_;
};

/// Validates every invariant: k | n with equal parts, part ids in [0,k),
/// endpoints in range, no loops, no intra-part edges. Duplicate edges collapse.
KPartiteGraph build_graph(int n, int k, std::vector<int> part_of, std::span<const Edge> edges);

/// Same checks except part sizes may differ. Only the bipartite views taken by
/// induced_bipartite need this.
KPartiteGraph build_unbalanced_graph(int n, int k, std::vector<int> part_of, std::span<const Edge> edges);

/// Contiguous balanced partition: vertex v lies in part v / (n/k).
std::vector<int> block_partition(int n, int k);

/// A graph with every vertex in its own part (k = n), i.e. an ordinary graph.
KPartiteGraph as_n_partite(const SmallGraph& g);
KPartiteGraph with_partition(const SmallGraph& g, int k, std::vector<int> part_of);

int min_degree(const KPartiteGraph& g);
int degree(const KPartiteGraph& g, int v);
/// min over v in A of |N(v) n B|. A must be nonempty and disjoint from B.
int degree_between(const KPartiteGraph& g, const VertexList& a, const VertexList& b);

/// Exact vertex connectivity (n - 1 for complete graphs) by unit-capacity
/// max-flow on the vertex-split digraph.
int vertex_connectivity(const KPartiteGraph& g);
/// A minimum vertex cut, empty for disconnected or complete graphs.
VertexList minimum_vertex_cut(const KPartiteGraph& g);
/// Number of connected components of g - removed.
int components_after_removal(const KPartiteGraph& g, const VertexList& removed);

bool is_independent(const KPartiteGraph& g, const VertexList& set);

inline constexpr int kDefaultIndependenceGuard = 64;
/// Exact maximum independent set; deterministic for a given graph.
VertexList maximum_independent_set(const KPartiteGraph& g, int guard = kDefaultIndependenceGuard);
int independence_number(const KPartiteGraph& g, int guard = kDefaultIndependenceGuard);

/// Mask versions used by the search code.
Mask maximum_independent_set(const SmallGraph& g, Mask within);
int vertex_connectivity(const SmallGraph& g);

/// The bipartite graph on A u B keeping exactly the A-B edges. Part 0 = A, part 1 = B;
/// vertex ids are preserved. A and B must partition V(g) and both be nonempty.
KPartiteGraph induced_bipartite(const KPartiteGraph& g, const VertexList& a, const VertexList& b);

/// Copy of g with the given edges added (still validated).
KPartiteGraph with_edges(const KPartiteGraph& g, std::span<const Edge> extra);

}  // namespace kham

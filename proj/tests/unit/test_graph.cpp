#include "doctest.h"

#include <algorithm>

#include "kham/constructions.hpp"
#include "kham/error.hpp"
#include "kham/graph.hpp"
#include "kham/graph_io.hpp"
#include "kham/random.hpp"
#include "oracles.hpp"

using namespace kham;

namespace {

KPartiteGraph complete_kpartite(int n, int k) {
    auto part_of = block_partition(n, k);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.emplace_back(u, v);
    return build_graph(n, k, part_of, edges);
}

GraphErrorKind error_kind(int n, int k, std::vector<int> part_of, std::vector<Edge> edges) {
    try {
        build_graph(n, k, std::move(part_of), edges);
    } catch (const GraphError& e) {
        return e.kind();
    }
    FAIL("no GraphError");
    return GraphErrorKind::BadPartIndex;
}

}  // namespace

TEST_CASE("build_graph invariants") {
    const auto k22 = complete_kpartite(4, 2);
    CHECK(k22.edge_count() == 4);
    CHECK(k22.part_size() == 2);
    const auto octahedron = complete_kpartite(6, 3);
    CHECK(octahedron.edge_count() == 12);
    CHECK(min_degree(octahedron) == 4);

    CHECK(error_kind(4, 2, {0, 0, 0, 1}, {}) == GraphErrorKind::UnbalancedPartition);
    CHECK(error_kind(4, 2, {0, 0, 1, 1}, {{0, 1}}) == GraphErrorKind::IntraPartEdge);
    CHECK(error_kind(4, 2, {0, 0, 1, 1}, {{2, 2}}) == GraphErrorKind::SelfLoop);
    CHECK(error_kind(4, 2, {0, 0, 1, 1}, {{0, 4}}) == GraphErrorKind::VertexOutOfRange);
    CHECK(error_kind(4, 2, {0, 0, 1, 2}, {}) == GraphErrorKind::BadPartIndex);
}

TEST_CASE("duplicate edges collapse and order does not matter") {
    const auto a = build_graph(4, 2, {0, 0, 1, 1}, std::vector<Edge>{{0, 2}, {2, 0}, {1, 3}});
    const auto b = build_graph(4, 2, {0, 0, 1, 1}, std::vector<Edge>{{1, 3}, {0, 2}});
    CHECK(a == b);
    CHECK(a.edge_count() == 2);
}

TEST_CASE("degrees") {
    const auto k22 = complete_kpartite(4, 2);
    CHECK(degree_between(k22, {0, 1}, {2, 3}) == 2);
    CHECK_THROWS_AS(degree_between(k22, {}, {2, 3}), InvalidArgument);
    CHECK(min_degree(build_F2()) == 3);
    CHECK(degree(k22, 0) == 2);
}

TEST_CASE("multi-word rows") {
    const auto g = complete_kpartite(130, 2);
    CHECK(g.degree(0) == 65);
    CHECK(g.adjacent(0, 129));
    CHECK_FALSE(g.adjacent(0, 64));
    CHECK(min_degree(g) == 65);
    CHECK_THROWS_AS(g.small(), GuardExceeded);
}

TEST_CASE("vertex connectivity") {
    CHECK(vertex_connectivity(build_F2()) == 2);
    for (int m = 1; m <= 5; ++m) CHECK(vertex_connectivity(complete_kpartite(2 * m, 2)) == m);
    CHECK(vertex_connectivity(complete_kpartite(6, 6)) == 5);
    CHECK(vertex_connectivity(build_family_F1(4)) <= 1);
    CHECK(vertex_connectivity(build_family_F1(6)) <= 1);
    const auto disconnected = build_graph(4, 2, {0, 0, 1, 1}, std::vector<Edge>{{0, 2}});
    CHECK(vertex_connectivity(disconnected) == 0);
}

TEST_CASE("vertex connectivity agrees with brute force on random graphs, n <= 8") {
    Rng rng(11);
    for (int trial = 0; trial < 600; ++trial) {
        const int n = rng.between(2, 8);
        const auto s = random_graph(n, probability_threshold(0.15 + 0.1 * static_cast<double>(trial % 8)), rng);
        const auto g = as_n_partite(s);
        CAPTURE(encode(g));
        const int kappa = vertex_connectivity(g);
        CHECK(kappa == oracle::connectivity_by_subsets(s));
        const auto cut = minimum_vertex_cut(g);
        if (!cut.empty()) {
            CHECK(static_cast<int>(cut.size()) == kappa);
            CHECK(components_after_removal(g, cut) > 1);
        }
    }
}

TEST_CASE("independence number") {
    CHECK(independence_number(build_F2()) == 3);
    CHECK(independence_number(complete_kpartite(12, 4)) == 3);
    for (int k = 2; k <= 6; ++k)
        for (int m = 1; m <= 4; ++m) {
            if (k * m < 3) continue;
            CHECK(independence_number(build_family_F(k, m)) == (k * m + 2) / 2);
        }
    CHECK(is_independent(build_F2(), {2, 3, 4}));
    CHECK_FALSE(is_independent(build_F2(), {0, 2}));
    CHECK_THROWS_AS(maximum_independent_set(complete_kpartite(66, 2)), GuardExceeded);
}

TEST_CASE("independence number agrees with brute force, n <= 20") {
    Rng rng(12);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = rng.between(1, trial < 100 ? 14 : 20);
        const auto s = random_graph(n, probability_threshold(0.1 + 0.1 * static_cast<double>(trial % 7)), rng);
        const auto g = as_n_partite(s);
        const auto set = maximum_independent_set(g);
        CHECK(is_independent(g, set));
        CHECK(static_cast<int>(set.size()) == oracle::independence_by_subsets(s));
    }
}

TEST_CASE("induced bipartite") {
    const auto k222 = complete_kpartite(6, 3);
    const auto h = induced_bipartite(k222, {0, 1, 2, 3}, {4, 5});
    CHECK(h.part_count() == 2);
    CHECK(h.edge_count() == 8);
    CHECK_FALSE(h.balanced());
    CHECK(h.degree(4) == 4);
    CHECK(h.degree(0) == 2);
    CHECK_THROWS_AS(induced_bipartite(k222, {0, 1, 2, 3, 4, 5}, {}), InvalidArgument);
    CHECK_THROWS_AS(induced_bipartite(k222, {0, 1, 2}, {2, 3, 4, 5}), InvalidArgument);
    CHECK_THROWS_AS(induced_bipartite(k222, {0, 1}, {4, 5}), InvalidArgument);
}

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(complete_kpartite(4, 4)) == "C~");
    CHECK(to_graph6(build_graph(1, 1, {0}, std::vector<Edge>{})) == "@");
    // C5 as 0-1-2-3-4-0.
    const auto c5 = build_graph(5, 5, {0, 1, 2, 3, 4}, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    CHECK(to_graph6(c5) == "Dhc");
    CHECK(from_graph6(">>graph6<<Dhc").edges() == c5.edges());
    CHECK_THROWS_AS(from_graph6("Dh"), ParseError);
    CHECK_THROWS_AS(from_graph6("D h"), ParseError);
}

TEST_CASE("graph6 long form") {
    const auto g = complete_kpartite(64, 2);
    const auto text = to_graph6(g);
    CHECK(text.substr(0, 1) == "~");
    CHECK(from_graph6(text).edges() == g.edges());
}

TEST_CASE("encode / decode round trip keeps the partition") {
    const auto f2 = build_F2();
    const auto text = encode(f2);
    CHECK(text == "kpart 4: 0,1 2,3 4,5 6,7\nG]rVEO\n");
    CHECK(decode(text) == f2);
    // Non-contiguous partition.
    const auto g = build_graph(4, 2, {0, 1, 0, 1}, std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(decode(encode(g)) == g);
    for (int k = 2; k <= 6; ++k)
        for (int m = 1; m <= 4; ++m)
            if (k * m >= 3) {
                const auto f = build_family_F(k, m);
                CHECK(decode(encode(f)) == f);
            }
}

TEST_CASE("decode rejects bad input") {
    CHECK_THROWS_AS(decode(""), ParseError);
    CHECK_THROWS_AS(decode("kpart 2: 0,1 2,3\n"), ParseError);
    CHECK_THROWS_AS(decode("kpart 3: 0,1 2,3\nCx\n"), ParseError);
    CHECK_THROWS_AS(decode("kpart 2: 0,1 2\nCx\n"), ParseError);
    CHECK_THROWS_AS(decode("kpart 2: 0,1 1,3\nCx\n"), ParseError);
    // C~ is K4, so parts {0,1},{2,3} carry intra-part edges.
    try {
        decode("kpart 2: 0,1 2,3\nC~\n");
        FAIL("accepted an intra-part edge");
    } catch (const GraphError& e) {
        CHECK(e.kind() == GraphErrorKind::IntraPartEdge);
    }
}

TEST_CASE("dot export") {
    const auto dot = export_dot(complete_kpartite(4, 2));
    CHECK(std::count(dot.begin(), dot.end(), '\n') == 2 + 4 + 4 + 1);
    CHECK(dot.find("0 -- 2;") != std::string::npos);
    CHECK(dot.find("part=0") != std::string::npos);
    CHECK(dot.find("part=1") != std::string::npos);
}

#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "kham/constructions.hpp"
#include "kham/error.hpp"
#include "kham/isomorphism.hpp"
#include "kham/random.hpp"

using namespace kham;

namespace {

// Relabel g by perm (new id of old vertex v is perm[v]).
KPartiteGraph relabel(const KPartiteGraph& g, const std::vector<int>& perm) {
    std::vector<int> part_of(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) part_of[perm[v]] = g.part_of(v);
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
    return build_graph(g.order(), g.part_count(), part_of, edges);
}

std::vector<int> shuffled(int n, Rng& rng) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) std::swap(p[i], p[rng.between(0, i)]);
    return p;
}

bool is_isomorphism(const KPartiteGraph& a, const KPartiteGraph& b, const std::vector<int>& phi) {
    for (int u = 0; u < a.order(); ++u)
        for (int v = u + 1; v < a.order(); ++v)
            if (a.adjacent(u, v) != b.adjacent(phi[u], phi[v])) return false;
    return true;
}

}  // namespace

TEST_CASE("relabelled graphs are isomorphic and canonical forms agree") {
    Rng rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int k = rng.between(2, 4);
        const int n = k * rng.between(1, 12 / k);
        const auto g = with_partition(random_kpartite(n, k, probability_threshold(0.5), rng), k, block_partition(n, k));
        const auto h = relabel(g, shuffled(n, rng));
        const auto phi = find_isomorphism(g, h);
        REQUIRE(phi);
        CHECK(is_isomorphism(g, h, *phi));
        for (int v = 0; v < n; ++v)
            for (int w = 0; w < n; ++w)
                if (g.part_of(v) == g.part_of(w)) CHECK(h.part_of((*phi)[v]) == h.part_of((*phi)[w]));
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(canonical_form(g, false) == canonical_form(h, false));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    // Compare against the backtracking matcher on random pairs with equal edge counts.
    Rng rng(32);
    int separated = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto a = with_partition(random_kpartite(8, 4, probability_threshold(0.5), rng), 4, block_partition(8, 4));
        const auto b = with_partition(random_kpartite(8, 4, probability_threshold(0.5), rng), 4, block_partition(8, 4));
        if (a.edge_count() != b.edge_count()) continue;
        const bool iso = isomorphic(a, b);
        CHECK(iso == (canonical_form(a) == canonical_form(b)));
        if (!iso) ++separated;
    }
    CHECK(separated > 0);
}

TEST_CASE("partition awareness") {
    // C4 as K_{2,2} with parts {0,2},{1,3} versus C4 split into four singleton parts.
    const auto c4_parts = build_graph(4, 2, {0, 1, 0, 1}, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    const auto c4_plain = build_graph(4, 4, {0, 1, 2, 3}, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    CHECK_FALSE(isomorphic(c4_parts, c4_plain));
    CHECK(isomorphic(c4_parts, c4_plain, false));
    CHECK(canonical_form(c4_parts, false) == canonical_form(c4_plain, false));
    CHECK(canonical_form(c4_parts) != canonical_form(c4_plain));
}

TEST_CASE("different orders and edge counts") {
    CHECK_FALSE(isomorphic(build_F2(), build_family_F1(4)));
    CHECK_FALSE(find_isomorphism(build_family_F(2, 2), build_family_F(3, 2)));
}

TEST_CASE("canonical form guard") {
    CHECK_NOTHROW(canonical_form(build_family_F(4, 3)));
    CHECK_THROWS_AS(canonical_form(build_family_F(7, 2)), GuardExceeded);
}

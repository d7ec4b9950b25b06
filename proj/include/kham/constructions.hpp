#pragma once

// Extremal families. Every builder uses the block partition (part i holds the
// vertices [i*m, (i+1)*m)).
//
//   F   complete k-partite minus the edges among X_1..X_L (L = ceil((k+1)/2)),
//       where X_i is the first |X_i| vertices of part i and |X| = ceil((n+1)/2).
//   F1  n = 2k, part i = {x_i, y_i} = {2i, 2i+1}; x's form a clique, x_{k-1}
//       (vertex 2k-2) is the only x touching Y, y_{k-1} is adjacent to every
//       other y, and each other y misses at most one vertex of its pool
//       (Y u {x_{k-1}}) minus itself and y_{k-1}.
//   F2  the fixed 8-vertex, 15-edge graph; labels below.
//   F3  n = 2k, 4 | n; X = parts 0..k/2-1, Y = the rest; y' sits in the last part.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kham/graph.hpp"

namespace kham {

enum class Family { F, F1, F2, F3 };

std::string to_string(Family f);
Family parse_family(std::string_view name);

struct FamilySpec {
    Family family = Family::F;
    int k = 0;
    int m = 0;  // F only; the other families have m = 2 (F2 is k = 4)
    /// F: |X_1| >= ... >= |X_L|; empty selects the default assignment.
    std::vector<int> sizes;
    /// F1: optional edges left out (y_i y_j or y_i x_{k-1}, i, j < k-1).
    std::vector<Edge> omitted;
    /// F3 choices; unset picks the defaults (y' = 2k-2, y'' = k, x' = 0).
    std::optional<int> y_prime;
    std::optional<int> y_double_prime;
    std::optional<int> x_prime;
    /// F3: optional Y-Y edges between different parts.
    std::vector<Edge> extra_edges;
    bool x_prime_y_double_prime = false;

    bool operator==(const FamilySpec&) const = default;
};

/// key = value lines, '#' starts a comment. Keys: family, k, m, sizes (a,b,...),
/// omit / extra_edges (u-v, ...), y_prime, y_double_prime, x_prime,
/// x_prime_y_double_prime (true|false). Keys foreign to the family are rejected.
FamilySpec parse_family_spec(std::string_view text);
std::string to_text(const FamilySpec& spec);

/// Default F sizes: q = floor(ceil((n+1)/2) / L), r = ceil((n+1)/2) - L*q;
/// q+1 for the first r indices, q for the rest.
std::vector<int> default_f_sizes(int k, int m);

KPartiteGraph build_family_F(int k, int m, std::optional<std::vector<int>> sizes = std::nullopt);
KPartiteGraph build_family_F1(int k, const std::vector<Edge>& omitted = {});
KPartiteGraph build_F2();
KPartiteGraph build_family_F3(const FamilySpec& spec);
KPartiteGraph build_family(const FamilySpec& spec);

/// The independent set X the construction designates (F: size ceil((n+1)/2);
/// F3: size n/2); empty for F1 and F2.
VertexList designated_independent_set(const FamilySpec& spec);

// Vertex labels of build_F2().
namespace f2 {
inline constexpr int x1 = 0, x4 = 1, x2 = 2, x_prime = 3, x5 = 4, x_double_prime = 5, x3 = 6, x6 = 7;
}

enum class Recognition { InF1, IsoF2, InF3, None };
std::string to_string(Recognition r);

inline constexpr int kRecognizeGuard = 16;

/// Requires n = 2k with 4 | n and n <= kRecognizeGuard. Structural tests first,
/// each confirmed by a partition-respecting isomorphism with the rebuilt member;
/// F2 is matched by plain isomorphism since its partition is a labelling choice.
Recognition recognize(const KPartiteGraph& g);

/// The member spec found by the structural F1 / F3 tests, if any.
std::optional<FamilySpec> match_f1(const KPartiteGraph& g);
std::optional<FamilySpec> match_f3(const KPartiteGraph& g);

}  // namespace kham

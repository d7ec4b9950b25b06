#pragma once

#include <optional>
#include <string>
#include <vector>

#include "kham/graph.hpp"

namespace kham {

/// phi[v] = image in b of vertex v of a. With respect_parts the bijection also
/// maps every part of a onto a single part of b. Colour refinement prunes the
/// candidate lists; the rest is backtracking, so keep n small (<= 64 required).
std::optional<std::vector<int>> find_isomorphism(const KPartiteGraph& a, const KPartiteGraph& b,
                                                 bool respect_parts = true);

inline bool isomorphic(const KPartiteGraph& a, const KPartiteGraph& b, bool respect_parts = true) {
    return find_isomorphism(a, b, respect_parts).has_value();
}

inline constexpr int kCanonicalGuard = 12;

/// Certificate string equal for two graphs iff they are isomorphic (partition-aware
/// when respect_parts). Individualization-refinement without automorphism pruning,
/// so the worst case is factorial; guarded at n <= kCanonicalGuard.
std::string canonical_form(const KPartiteGraph& g, bool respect_parts = true);

}  // namespace kham

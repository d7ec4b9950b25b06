#pragma once

#include <optional>

#include "kham/graph.hpp"
#include "kham/solver.hpp"

namespace kham {

/// Sorted-degree test on a balanced bipartite graph (part 0 and part 1 of h).
/// `v_side` names the side whose degrees carry the hypothesis; the other side
/// is U. With both sides sorted ascending (N = n/2): for every 1 <= t < N,
/// d(v_t) <= t must imply d(u_{N-t}) >= N - t + 1. True implies Hamiltonian.
bool chvatal_bipartite_condition(const KPartiteGraph& h, int v_side = 1);

/// V - V(C) independent and no two neighbours of outside vertices consecutive on C.
/// Throws InvalidArgument for an invalid cycle.
bool is_strongly_dominating(const KPartiteGraph& g, const CycleCertificate& cycle);
bool is_strongly_dominating(const SmallGraph& g, const std::vector<int>& cycle);

enum class LemmaStatus { Holds, NotApplicable, Violated };
const char* to_string(LemmaStatus s);

struct DomCycleResult {
    LemmaStatus status = LemmaStatus::NotApplicable;
    std::optional<CycleCertificate> counter;  // set when Violated
};

inline constexpr int kDomCycleGuard = 14;

/// NotApplicable unless g is 2-connected with 3*delta >= n + 2; otherwise Holds
/// iff every longest cycle is strongly dominating.
DomCycleResult check_domcycle_lemma(const KPartiteGraph& g);
DomCycleResult check_domcycle_lemma(const SmallGraph& g);

bool two_connected(const SmallGraph& g);

struct SuccessorProfile {
    CycleCertificate cycle;
    int z = -1;
    VertexList successors;    // S: outside vertices plus successors of z's cycle neighbours
    VertexList predecessors;  // R: the same with predecessors
    int parts_meeting_successors = 0;    // number of parts meeting S
    int parts_meeting_predecessors = 0;  // number of parts meeting R

    // Diagnostic flags; none of them is enforced.
    bool sets_independent = false;
    bool sets_large = false;        // |S|, |R| >= delta + 1
    bool parts_lower = false;       // both part counts >= ceil(k/2)
    bool parts_average = false;     // (l + l')/2 < ceil((k+1)/2)

    bool all_flags() const { return sets_independent && sets_large && parts_lower && parts_average; }
};

/// z must lie off the (valid) cycle; InvalidArgument otherwise.
SuccessorProfile successor_profile(const KPartiteGraph& g, const CycleCertificate& cycle, int z);

}  // namespace kham

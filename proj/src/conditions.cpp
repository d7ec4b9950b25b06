#include "kham/conditions.hpp"

#include <algorithm>
#include <set>

#include "kham/arithmetic.hpp"
#include "kham/error.hpp"

namespace kham {

bool chvatal_bipartite_condition(const KPartiteGraph& h, int v_side) {
    if (h.part_count() != 2) throw InvalidArgument("chvatal_bipartite_condition needs a bipartite graph (2 parts)");
    if (v_side != 0 && v_side != 1) throw InvalidArgument("v_side must be 0 or 1");
    const auto v_list = h.part(v_side);
    const auto u_list = h.part(1 - v_side);
    if (v_list.size() != u_list.size()) throw InvalidArgument("chvatal_bipartite_condition needs equal sides");
    if (h.order() < 4) throw InvalidArgument("chvatal_bipartite_condition needs n >= 4");
    const int half = static_cast<int>(v_list.size());
    std::vector<int> dv, du;
    for (int v : v_list) dv.push_back(h.degree(v));
    for (int u : u_list) du.push_back(h.degree(u));
    std::sort(dv.begin(), dv.end());
    std::sort(du.begin(), du.end());
    // 1-based: d(v_t) = dv[t-1], d(u_{N-t}) = du[N-t-1].
    for (int t = 1; t < half; ++t)
        if (dv[t - 1] <= t && du[half - t - 1] < half - t + 1) return false;
    return true;
}

bool is_strongly_dominating(const SmallGraph& g, const std::vector<int>& cycle) {
    Mask on = 0;
    for (int v : cycle) on |= bit(v);
    const Mask outside = g.all() & ~on;
    if (!g.independent(outside)) return false;
    Mask touched = 0;
    for_each_vertex(outside, [&](int u) { touched |= g.adj[u]; });
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i)
        if ((touched >> cycle[i] & 1U) && (touched >> cycle[(i + 1) % len] & 1U)) return false;
    return true;
}

bool is_strongly_dominating(const KPartiteGraph& g, const CycleCertificate& cycle) {
    if (!verify_cycle(g, cycle)) throw InvalidArgument("not a valid cycle of the graph");
    return is_strongly_dominating(g.small(), cycle.vertices);
}

const char* to_string(LemmaStatus s) {
    switch (s) {
        case LemmaStatus::Holds: return "Holds";
        case LemmaStatus::NotApplicable: return "NotApplicable";
        case LemmaStatus::Violated: return "Violated";
    }
    return "?";
}

bool two_connected(const SmallGraph& g) {
    if (g.n < 3 || !g.connected(g.all())) return false;
    for (int v = 0; v < g.n; ++v)
        if (!g.connected(g.all() & ~bit(v))) return false;
    return true;
}

DomCycleResult check_domcycle_lemma(const SmallGraph& g) {
    if (g.n > kDomCycleGuard) throw GuardExceeded("domcycle check limited to n <= " + std::to_string(kDomCycleGuard));
    if (!two_connected(g) || 3 * g.min_degree() < g.n + 2) return {LemmaStatus::NotApplicable, std::nullopt};
    // Every longest cycle of a Hamiltonian graph is Hamiltonian and trivially dominating.
    if (search_hamiltonian_cycle(g).found) return {LemmaStatus::Holds, std::nullopt};
    for (auto& cycle : enumerate_longest_cycles(g))
        if (!is_strongly_dominating(g, cycle)) return {LemmaStatus::Violated, CycleCertificate{std::move(cycle)}};
    return {LemmaStatus::Holds, std::nullopt};
}

DomCycleResult check_domcycle_lemma(const KPartiteGraph& g) {
    if (g.order() > kDomCycleGuard)
        throw GuardExceeded("domcycle check limited to n <= " + std::to_string(kDomCycleGuard));
    return check_domcycle_lemma(g.small());
}

SuccessorProfile successor_profile(const KPartiteGraph& g, const CycleCertificate& cycle, int z) {
    if (!verify_cycle(g, cycle)) throw InvalidArgument("not a valid cycle of the graph");
    if (z < 0 || z >= g.order()) throw InvalidArgument("z out of range");
    const auto& c = cycle.vertices;
    if (std::find(c.begin(), c.end(), z) != c.end()) throw InvalidArgument("z lies on the cycle");

    std::set<int> s, r;
    std::vector<char> on(static_cast<std::size_t>(g.order()), 0);
    for (int v : c) on[v] = 1;
    for (int v = 0; v < g.order(); ++v)
        if (!on[v]) {
            s.insert(v);
            r.insert(v);
        }
    const std::size_t len = c.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (!g.adjacent(z, c[i])) continue;
        s.insert(c[(i + 1) % len]);
        r.insert(c[(i + len - 1) % len]);
    }

    SuccessorProfile p;
    p.cycle = cycle;
    p.z = z;
    p.successors.assign(s.begin(), s.end());
    p.predecessors.assign(r.begin(), r.end());
    auto parts_meeting = [&](const VertexList& vs) {
        std::set<int> parts;
        for (int v : vs) parts.insert(g.part_of(v));
        return static_cast<int>(parts.size());
    };
    p.parts_meeting_successors = parts_meeting(p.successors);
    p.parts_meeting_predecessors = parts_meeting(p.predecessors);

    const int delta = min_degree(g);
    const int k = g.part_count();
    const int l = p.parts_meeting_successors, lp = p.parts_meeting_predecessors;
    p.sets_independent = is_independent(g, p.successors) && is_independent(g, p.predecessors);
    p.sets_large = static_cast<int>(p.successors.size()) >= delta + 1 &&
                   static_cast<int>(p.predecessors.size()) >= delta + 1;
    p.parts_lower = l >= (k + 1) / 2 && lp >= (k + 1) / 2;
    p.parts_average = l + lp < 2 * static_cast<int>(half_part_count(k));
    return p;
}

}  // namespace kham

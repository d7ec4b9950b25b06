#include "kham/constructions.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "kham/arithmetic.hpp"
#include "kham/error.hpp"
#include "kham/isomorphism.hpp"

namespace kham {

std::string to_string(Family f) {
    switch (f) {
        case Family::F: return "F";
        case Family::F1: return "F1";
        case Family::F2: return "F2";
        case Family::F3: return "F3";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    if (name == "F") return Family::F;
    if (name == "F1") return Family::F1;
    if (name == "F2") return Family::F2;
    if (name == "F3") return Family::F3;
    throw InvalidArgument("unknown family '" + std::string(name) + "' (expected F, F1, F2 or F3)");
}

std::string to_string(Recognition r) {
    switch (r) {
        case Recognition::InF1: return "InF1";
        case Recognition::IsoF2: return "IsoF2";
        case Recognition::InF3: return "InF3";
        case Recognition::None: return "None";
    }
    return "?";
}

namespace {

Edge ordered(Edge e) { return e.first < e.second ? e : Edge{e.second, e.first}; }

std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int to_int(std::string_view s, std::string_view key) {
    s = trim(s);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("bad integer '" + std::string(s) + "' for " + std::string(key));
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    s = trim(s);
    if (s.empty()) return out;
    while (true) {
        const auto at = s.find(sep);
        out.push_back(trim(s.substr(0, at)));
        if (at == std::string_view::npos) break;
        s.remove_prefix(at + 1);
    }
    return out;
}

std::vector<Edge> to_edges(std::string_view s, std::string_view key) {
    std::vector<Edge> out;
    for (auto item : split(s, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string_view::npos) throw ParseError("edge '" + std::string(item) + "' must be u-v");
        out.emplace_back(to_int(item.substr(0, dash), key), to_int(item.substr(dash + 1), key));
    }
    return out;
}

std::string edges_text(const std::vector<Edge>& edges) {
    std::string out;
    for (std::size_t i = 0; i < edges.size(); ++i)
        out += (i ? ", " : "") + std::to_string(edges[i].first) + "-" + std::to_string(edges[i].second);
    return out;
}

void require(bool ok, const std::string& what) {
    if (!ok) throw InvalidArgument(what);
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
    std::map<std::string, std::string, std::less<>> kv;
    while (!text.empty()) {
        const auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) throw ParseError("expected key = value, got '" + std::string(line) + "'");
        std::string key(trim(line.substr(0, eq)));
        if (kv.count(key)) throw ParseError("duplicate key '" + key + "'");
        kv.emplace(std::move(key), std::string(trim(line.substr(eq + 1))));
    }
    if (!kv.count("family")) throw ParseError("missing key 'family'");

    FamilySpec spec;
    spec.family = parse_family(kv["family"]);
    const std::map<Family, std::set<std::string>> allowed{
        {Family::F, {"family", "k", "m", "sizes"}},
        {Family::F1, {"family", "k", "omit"}},
        {Family::F2, {"family"}},
        {Family::F3, {"family", "k", "y_prime", "y_double_prime", "x_prime", "extra_edges", "x_prime_y_double_prime"}},
    };
    for (const auto& [key, value] : kv)
        if (!allowed.at(spec.family).count(key))
            throw ParseError("key '" + key + "' does not apply to family " + to_string(spec.family));

    if (spec.family == Family::F2) {
        spec.k = 4;
        spec.m = 2;
        return spec;
    }
    if (!kv.count("k")) throw ParseError("missing key 'k'");
    spec.k = to_int(kv["k"], "k");
    if (spec.family == Family::F) {
        if (!kv.count("m")) throw ParseError("missing key 'm'");
        spec.m = to_int(kv["m"], "m");
        if (kv.count("sizes"))
            for (auto s : split(kv["sizes"], ',')) spec.sizes.push_back(to_int(s, "sizes"));
        return spec;
    }
    spec.m = 2;
    if (spec.family == Family::F1) {
        if (kv.count("omit")) spec.omitted = to_edges(kv["omit"], "omit");
        return spec;
    }
    if (kv.count("y_prime")) spec.y_prime = to_int(kv["y_prime"], "y_prime");
    if (kv.count("y_double_prime")) spec.y_double_prime = to_int(kv["y_double_prime"], "y_double_prime");
    if (kv.count("x_prime")) spec.x_prime = to_int(kv["x_prime"], "x_prime");
    if (kv.count("extra_edges")) spec.extra_edges = to_edges(kv["extra_edges"], "extra_edges");
    if (kv.count("x_prime_y_double_prime")) {
        const auto& v = kv["x_prime_y_double_prime"];
        if (v != "true" && v != "false") throw ParseError("x_prime_y_double_prime must be true or false");
        spec.x_prime_y_double_prime = v == "true";
    }
    return spec;
}

std::string to_text(const FamilySpec& spec) {
    std::string out = "family = " + to_string(spec.family) + "\n";
    switch (spec.family) {
        case Family::F2: break;
        case Family::F: {
            out += "k = " + std::to_string(spec.k) + "\nm = " + std::to_string(spec.m) + "\n";
            if (!spec.sizes.empty()) {
                out += "sizes = ";
                for (std::size_t i = 0; i < spec.sizes.size(); ++i)
                    out += (i ? "," : "") + std::to_string(spec.sizes[i]);
                out += "\n";
            }
            break;
        }
        case Family::F1:
            out += "k = " + std::to_string(spec.k) + "\n";
            if (!spec.omitted.empty()) out += "omit = " + edges_text(spec.omitted) + "\n";
            break;
        case Family::F3:
            out += "k = " + std::to_string(spec.k) + "\n";
            if (spec.y_prime) out += "y_prime = " + std::to_string(*spec.y_prime) + "\n";
            if (spec.y_double_prime) out += "y_double_prime = " + std::to_string(*spec.y_double_prime) + "\n";
            if (spec.x_prime) out += "x_prime = " + std::to_string(*spec.x_prime) + "\n";
            if (!spec.extra_edges.empty()) out += "extra_edges = " + edges_text(spec.extra_edges) + "\n";
            if (spec.x_prime_y_double_prime) out += "x_prime_y_double_prime = true\n";
            break;
    }
    return out;
}

// --- F -----------------------------------------------------------------------

std::vector<int> default_f_sizes(int k, int m) {
    require(k >= 2 && m >= 1 && k * m >= 3, "family F needs k >= 2, m >= 1 and n = mk >= 3");
    const int n = k * m;
    const int big_l = static_cast<int>(half_part_count(k));
    const int total = (n + 2) / 2;
    const int q = total / big_l;
    const int r = total - big_l * q;
    std::vector<int> sizes(static_cast<std::size_t>(big_l), q);
    for (int i = 0; i < r; ++i) ++sizes[i];
    return sizes;
}

KPartiteGraph build_family_F(int k, int m, std::optional<std::vector<int>> sizes) {
    auto chosen = sizes ? *sizes : default_f_sizes(k, m);
    require(k >= 2 && m >= 1 && k * m >= 3, "family F needs k >= 2, m >= 1 and n = mk >= 3");
    const int n = k * m;
    const int big_l = static_cast<int>(half_part_count(k));
    const int total = (n + 2) / 2;
    const std::string where = " (k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")";
    require(static_cast<int>(chosen.size()) == big_l,
            "sizes must list ceil((k+1)/2) = " + std::to_string(big_l) + " entries" + where);
    for (std::size_t i = 0; i < chosen.size(); ++i) {
        require(chosen[i] <= m, "size " + std::to_string(chosen[i]) + " exceeds part size m" + where);
        require(chosen[i] >= 0, "sizes must be nonnegative" + where);
        if (i) require(chosen[i] <= chosen[i - 1], "sizes must be nonincreasing" + where);
    }
    require(chosen.back() == total / big_l,
            "last size must be floor(ceil((n+1)/2) / ceil((k+1)/2)) = " + std::to_string(total / big_l) + where);
    int sum = 0;
    for (int s : chosen) sum += s;
    require(sum == total, "sizes must sum to ceil((n+1)/2) = " + std::to_string(total) + where);

    auto part_of = block_partition(n, k);
    std::vector<char> in_x(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < big_l; ++i)
        for (int j = 0; j < chosen[i]; ++j) in_x[i * m + j] = 1;
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v] && !(in_x[u] && in_x[v])) edges.emplace_back(u, v);
    return build_graph(n, k, std::move(part_of), edges);
}

// --- F1 ----------------------------------------------------------------------

namespace {

// Optional F1 edges: y_i y_j and y_i x_{k-1} for i, j < k-1.
std::set<Edge> f1_optional(int k) {
    std::set<Edge> out;
    const int xk = 2 * k - 2;
    for (int i = 0; i + 1 < k; ++i) {
        out.insert(ordered({2 * i + 1, xk}));
        for (int j = i + 1; j + 1 < k; ++j) out.insert({2 * i + 1, 2 * j + 1});
    }
    return out;
}

}  // namespace

KPartiteGraph build_family_F1(int k, const std::vector<Edge>& omitted) {
    require(k >= 3, "family F1 needs k >= 3");
    const int n = 2 * k;
    const auto optional = f1_optional(k);
    std::set<Edge> left_out;
    for (auto e : omitted) {
        e = ordered(e);
        require(e.first >= 0 && e.second < n, "omitted edge " + std::to_string(e.first) + "-" +
                                                  std::to_string(e.second) + " is out of range");
        require(optional.count(e), "edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                                       " is not an optional F1 edge");
        left_out.insert(e);
    }
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) edges.emplace_back(2 * i, 2 * j);
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(2 * i + 1, 2 * k - 1);
    for (const auto& e : optional)
        if (!left_out.count(e)) edges.push_back(e);
    auto g = build_graph(n, k, block_partition(n, k), edges);
    for (int i = 0; i + 1 < k; ++i)
        require(g.degree(2 * i + 1) >= k - 1, "y vertex " + std::to_string(2 * i + 1) + " would have degree " +
                                                  std::to_string(g.degree(2 * i + 1)) + " < k-1");
    return g;
}

// --- F2 ----------------------------------------------------------------------

KPartiteGraph build_F2() {
    using namespace f2;
    const std::vector<Edge> edges{
        {x1, x2}, {x2, x3}, {x3, x4}, {x4, x5}, {x5, x6}, {x6, x1},
        {x_prime, x_double_prime}, {x_prime, x1}, {x_prime, x4}, {x_double_prime, x1}, {x_double_prime, x4},
        {x6, x4}, {x5, x1}, {x2, x4}, {x3, x1},
    };
    return build_graph(8, 4, block_partition(8, 4), edges);
}

// --- F3 ----------------------------------------------------------------------

namespace {

struct F3Roles {
    int k, n, y_prime, y_double_prime, x_prime;
};

F3Roles f3_roles(const FamilySpec& spec) {
    const int k = spec.k;
    require(k >= 4 && k % 2 == 0, "family F3 needs n = 2k with 4 | n and n >= 8");
    const int n = 2 * k;
    F3Roles r{k, n, spec.y_prime.value_or(n - 2), spec.y_double_prime.value_or(k), spec.x_prime.value_or(0)};
    require(r.y_prime >= n - 2 && r.y_prime < n, "y' must lie in the last part {" + std::to_string(n - 2) + "," +
                                                     std::to_string(n - 1) + "}");
    require(r.y_double_prime >= k && r.y_double_prime < n && r.y_double_prime != r.y_prime,
            "y'' must be a Y vertex (" + std::to_string(k) + ".." + std::to_string(n - 1) + ") other than y'");
    require(r.x_prime >= 0 && r.x_prime < k, "x' must be an X vertex (0.." + std::to_string(k - 1) + ")");
    return r;
}

}  // namespace

KPartiteGraph build_family_F3(const FamilySpec& spec) {
    const auto r = f3_roles(spec);
    const int k = r.k, n = r.n;
    auto part_of = block_partition(n, k);
    std::set<Edge> edges;
    for (int x = 0; x < k; ++x)
        for (int y = k; y < n; ++y) {
            if (y != r.y_prime && y != r.y_double_prime) edges.insert({x, y});
        }
    for (int x = 0; x < k; ++x)
        if (x != r.x_prime) edges.insert({x, r.y_double_prime});
    edges.insert({r.x_prime, r.y_prime});
    for (int y = k; y < n - 2; ++y) edges.insert(ordered({y, r.y_prime}));
    for (auto e : spec.extra_edges) {
        e = ordered(e);
        const std::string name = std::to_string(e.first) + "-" + std::to_string(e.second);
        require(e.first >= k && e.second < n, "extra edge " + name + " must join two Y vertices");
        require(part_of[e.first] != part_of[e.second], "extra edge " + name + " lies inside a part");
        require(e.first != r.y_prime && e.second != r.y_prime, "extra edge " + name + " touches y'");
        edges.insert(e);
    }
    if (spec.x_prime_y_double_prime) edges.insert({r.x_prime, r.y_double_prime});
    const std::vector<Edge> list(edges.begin(), edges.end());
    return build_graph(n, k, std::move(part_of), list);
}

KPartiteGraph build_family(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::F:
            return build_family_F(spec.k, spec.m,
                                  spec.sizes.empty() ? std::nullopt : std::optional<std::vector<int>>(spec.sizes));
        case Family::F1: return build_family_F1(spec.k, spec.omitted);
        case Family::F2: return build_F2();
        case Family::F3: return build_family_F3(spec);
    }
    throw InvalidArgument("unknown family");
}

VertexList designated_independent_set(const FamilySpec& spec) {
    VertexList out;
    if (spec.family == Family::F) {
        const auto sizes = spec.sizes.empty() ? default_f_sizes(spec.k, spec.m) : spec.sizes;
        for (std::size_t i = 0; i < sizes.size(); ++i)
            for (int j = 0; j < sizes[i]; ++j) out.push_back(static_cast<int>(i) * spec.m + j);
    } else if (spec.family == Family::F3) {
        for (int x = 0; x < spec.k; ++x) out.push_back(x);
    }
    return out;
}

// --- recognition -------------------------------------------------------------

namespace {

bool regime(const KPartiteGraph& g) {
    return g.order() == 2 * g.part_count() && g.order() % 4 == 0 && g.balanced();
}

int mate_of(const KPartiteGraph& g, int v) {
    for (int w : g.part(g.part_of(v)))
        if (w != v) return w;
    return -1;
}

bool confirm(const KPartiteGraph& g, const FamilySpec& spec) {
    try {
        return isomorphic(g, build_family(spec), true);
    } catch (const InvalidArgument&) {
        return false;
    }
}

}  // namespace

std::optional<FamilySpec> match_f1(const KPartiteGraph& g) {
    if (!regime(g) || g.order() < 6) return std::nullopt;
    const int n = g.order(), k = g.part_count();
    const SmallGraph s = g.small();
    for (int c = 0; c < n; ++c) {
        const Mask rest = s.all() & ~bit(c);
        Mask todo = rest;
        while (todo) {
            const Mask comp = s.reach(lowest(todo), rest);
            todo &= ~comp;
            if (popcount(comp) != k - 1) continue;
            // comp must be a clique transversal of the other parts, all joined to c.
            std::vector<char> hit(static_cast<std::size_t>(k), 0);
            bool ok = true;
            for_each_vertex(comp, [&](int v) {
                if (g.part_of(v) == g.part_of(c) || hit[g.part_of(v)]) ok = false;
                hit[g.part_of(v)] = 1;
                if ((s.adj[v] & (comp | bit(c))) != ((comp | bit(c)) & ~bit(v))) ok = false;
            });
            if (!ok) continue;
            const Mask y = rest & ~comp;
            const int top = mate_of(g, c);
            if ((s.adj[top] & y) != (y & ~bit(top))) continue;
            for_each_vertex(y & ~bit(top), [&](int v) {
                if (popcount(s.adj[v] & (y | bit(c))) < k - 1) ok = false;
            });
            if (!ok) continue;

            // Relabel: the other parts in index order become 0..k-2, c's part k-1.
            std::vector<int> label(static_cast<std::size_t>(n), -1);
            int next = 0;
            for (int p = 0; p < k; ++p) {
                if (p == g.part_of(c)) continue;
                for (int v : g.part(p)) label[v] = (comp >> v & 1U) ? 2 * next : 2 * next + 1;
                ++next;
            }
            label[c] = 2 * k - 2;
            label[top] = 2 * k - 1;
            FamilySpec spec;
            spec.family = Family::F1;
            spec.k = k;
            spec.m = 2;
            for (const auto& e : f1_optional(k)) {
                int u = -1, v = -1;
                for (int w = 0; w < n; ++w) {
                    if (label[w] == e.first) u = w;
                    if (label[w] == e.second) v = w;
                }
                if (!s.adjacent(u, v)) spec.omitted.push_back(e);
            }
            if (confirm(g, spec)) return spec;
        }
    }
    return std::nullopt;
}

std::optional<FamilySpec> match_f3(const KPartiteGraph& g) {
    if (!regime(g) || g.order() < 8) return std::nullopt;
    const int n = g.order(), k = g.part_count();
    const SmallGraph s = g.small();
    const auto parts = g.part_masks();
    for (std::uint32_t pick = 0; pick < (1U << k); ++pick) {
        if (std::popcount(pick) != k / 2) continue;
        Mask x = 0;
        for (int p = 0; p < k; ++p)
            if (pick >> p & 1U) x |= parts[p];
        if (!s.independent(x)) continue;
        const Mask y = s.all() & ~x;
        for (int yp = 0; yp < n; ++yp) {
            if (!(y >> yp & 1U) || popcount(s.adj[yp] & x) != 1) continue;
            const int xp = lowest(s.adj[yp] & x);
            const Mask home = parts[g.part_of(yp)];
            if ((s.adj[yp] & y) != (y & ~home)) continue;
            int ydp = -1;
            bool ok = true;
            for_each_vertex(y & ~bit(yp), [&](int v) {
                const Mask missing = x & ~s.adj[v];
                if (!missing) return;
                if (missing == bit(xp) && ydp == -1) ydp = v;
                else ok = false;
            });
            if (!ok) continue;
            const bool joined = ydp == -1;
            if (joined) ydp = lowest(y & ~bit(yp));

            // Relabel: X parts first, then the other Y parts, y's part last with y' first.
            std::vector<int> label(static_cast<std::size_t>(n), -1);
            int next = 0;
            for (int pass = 0; pass < 2; ++pass)
                for (int p = 0; p < k; ++p) {
                    const bool in_x = pick >> p & 1U;
                    if ((pass == 0) != in_x || p == g.part_of(yp)) continue;
                    const auto members = g.part(p);
                    label[members[0]] = 2 * next;
                    label[members[1]] = 2 * next + 1;
                    ++next;
                }
            label[yp] = n - 2;
            label[mate_of(g, yp)] = n - 1;
            FamilySpec spec;
            spec.family = Family::F3;
            spec.k = k;
            spec.m = 2;
            spec.y_prime = n - 2;
            spec.y_double_prime = label[ydp];
            spec.x_prime = label[xp];
            spec.x_prime_y_double_prime = joined;
            for (const auto& [u, v] : g.edges()) {
                if (!(y >> u & 1U) || !(y >> v & 1U) || u == yp || v == yp) continue;
                spec.extra_edges.push_back(ordered({label[u], label[v]}));
            }
            std::sort(spec.extra_edges.begin(), spec.extra_edges.end());
            if (confirm(g, spec)) return spec;
        }
    }
    return std::nullopt;
}

Recognition recognize(const KPartiteGraph& g) {
    if (g.order() > kRecognizeGuard)
        throw GuardExceeded("recognize limited to n <= " + std::to_string(kRecognizeGuard));
    if (!regime(g)) throw InvalidArgument("recognize needs a balanced graph with n = 2k and 4 | n");
    if (match_f1(g)) return Recognition::InF1;
    if (g.order() == 8 && isomorphic(g, build_F2(), false)) return Recognition::IsoF2;
    if (match_f3(g)) return Recognition::InF3;
    return Recognition::None;
}

}  // namespace kham

#include "kham/graph_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "kham/error.hpp"

namespace kham {

namespace {

constexpr int kBias = 63;

void append_size(std::string& out, long n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back('~');
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.append("~~");
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r' || s.front() == '\n'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
        s.remove_suffix(1);
    return s;
}

int parse_int(std::string_view token, const char* what) {
    if (token.empty()) throw ParseError(std::string("empty ") + what);
    long value = 0;
    for (char c : token) {
        if (c < '0' || c > '9') throw ParseError(std::string("bad ") + what + " '" + std::string(token) + "'");
        value = value * 10 + (c - '0');
        if (value > 1'000'000) throw ParseError(std::string(what) + " too large");
    }
    return static_cast<int>(value);
}

struct DecodedAdjacency {
    int n = 0;
    std::vector<Edge> edges;
};

DecodedAdjacency parse_graph6(std::string_view text) {
    text = trim(text);
    if (text.substr(0, 10) == ">>graph6<<") text.remove_prefix(10);
    if (text.empty()) throw ParseError("empty graph6 string");
    for (char c : text)
        if (c < kBias || c > 126) throw ParseError("graph6 byte out of range");
    std::size_t pos = 0;
    auto next6 = [&]() -> long {
        if (pos >= text.size()) throw ParseError("graph6 string truncated");
        return text[pos++] - kBias;
    };
    long n = 0;
    if (text[0] != '~') {
        n = next6();
    } else if (text.size() > 1 && text[1] != '~') {
        pos = 1;
        for (int i = 0; i < 3; ++i) n = (n << 6) | next6();
    } else {
        pos = 2;
        for (int i = 0; i < 6; ++i) n = (n << 6) | next6();
    }
    if (n > 100000) throw ParseError("graph6 order too large");
    DecodedAdjacency out;
    out.n = static_cast<int>(n);
    const long bits = n * (n - 1) / 2;
    const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() != expected)
        throw ParseError("graph6 length " + std::to_string(text.size()) + ", expected " + std::to_string(expected));
    long index = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++index) {
            const int byte = text[pos + static_cast<std::size_t>(index / 6)] - kBias;
            if ((byte >> (5 - index % 6)) & 1) out.edges.emplace_back(i, j);
        }
    }
    return out;
}

}  // namespace

std::string to_graph6(const KPartiteGraph& g) {
    const int n = g.order();
    std::string out;
    append_size(out, n);
    int acc = 0, used = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++used == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = used = 0;
            }
        }
    }
    if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + kBias));
    return out;
}

KPartiteGraph from_graph6(std::string_view text) {
    auto adj = parse_graph6(text);
    if (adj.n < 1) throw ParseError("graph6 graph has no vertices");
    std::vector<int> part_of(static_cast<std::size_t>(adj.n));
    for (int v = 0; v < adj.n; ++v) part_of[static_cast<std::size_t>(v)] = v;
    return build_graph(adj.n, adj.n, std::move(part_of), adj.edges);
}

std::string partition_header(const KPartiteGraph& g) {
    std::string out = "kpart " + std::to_string(g.part_count()) + ":";
    for (const auto& part : g.parts()) {
        out.push_back(' ');
        for (std::size_t i = 0; i < part.size(); ++i) {
            if (i) out.push_back(',');
            out += std::to_string(part[i]);
        }
    }
    return out;
}

std::string encode(const KPartiteGraph& g) { return partition_header(g) + "\n" + to_graph6(g) + "\n"; }

KPartiteGraph decode(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto end = text.find('\n');
        auto line = trim(text.substr(0, end));
        if (!line.empty()) lines.push_back(line);
        if (end == std::string_view::npos) break;
        text.remove_prefix(end + 1);
    }
    if (lines.empty()) throw ParseError("no graph in input");
    if (lines.size() == 1 && lines[0].substr(0, 5) != "kpart") return from_graph6(lines[0]);
    if (lines.size() != 2) throw ParseError("expected a partition header line and a graph6 line");

    std::string_view header = lines[0];
    if (header.substr(0, 6) != "kpart ") throw ParseError("partition header must start with 'kpart '");
    header.remove_prefix(6);
    const auto colon = header.find(':');
    if (colon == std::string_view::npos) throw ParseError("partition header missing ':'");
    const int k = parse_int(trim(header.substr(0, colon)), "part count");
    header = trim(header.substr(colon + 1));

    auto adj = parse_graph6(lines[1]);
    std::vector<int> part_of(static_cast<std::size_t>(adj.n), -1);
    int parts_seen = 0;
    while (!header.empty()) {
        const auto space = header.find(' ');
        std::string_view group = header.substr(0, space);
        header = space == std::string_view::npos ? std::string_view{} : trim(header.substr(space + 1));
        while (true) {
            const auto comma = group.find(',');
            const int v = parse_int(group.substr(0, comma), "vertex id");
            if (v >= adj.n) throw GraphError(GraphErrorKind::VertexOutOfRange, "header lists vertex " + std::to_string(v));
            if (part_of[static_cast<std::size_t>(v)] != -1)
                throw ParseError("vertex " + std::to_string(v) + " listed twice in header");
            part_of[static_cast<std::size_t>(v)] = parts_seen;
            if (comma == std::string_view::npos) break;
            group.remove_prefix(comma + 1);
        }
        ++parts_seen;
    }
    if (parts_seen != k)
        throw ParseError("header declares " + std::to_string(k) + " parts but lists " + std::to_string(parts_seen));
    for (int v = 0; v < adj.n; ++v)
        if (part_of[static_cast<std::size_t>(v)] == -1)
            throw ParseError("vertex " + std::to_string(v) + " missing from header");
    return build_graph(adj.n, k, std::move(part_of), adj.edges);
}

std::string export_dot(const KPartiteGraph& g) {
    std::ostringstream os;
    os << "graph G {\n  node [style=filled];\n";
    const int k = g.part_count();
    for (int v = 0; v < g.order(); ++v) {
        char colour[32];
        std::snprintf(colour, sizeof colour, "%.3f 0.450 0.950", static_cast<double>(g.part_of(v)) / k);
        os << "  " << v << " [label=\"" << v << "\", part=" << g.part_of(v) << ", fillcolor=\"" << colour
           << "\"];\n";
    }
    for (const auto& [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
    os << "}\n";
    return os.str();
}

KPartiteGraph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return decode(buffer.str());
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw InvalidArgument("cannot write " + path);
    out << text;
}

}  // namespace kham

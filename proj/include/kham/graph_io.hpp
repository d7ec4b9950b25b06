#pragma once

// Text formats.
//
// A graph file is a partition header followed by the graph6 string:
//
//     kpart 4: 0,1 2,3 4,5 6,7
//     G?zTb_
//
// The header names k and then lists the k parts separated by spaces, each part
// a comma-separated list of vertex ids. graph6 alone cannot carry the
// partition. A file holding only a graph6 line decodes as an ordinary graph
// (every vertex its own part).

#include <string>
#include <string_view>

#include "kham/graph.hpp"

namespace kham {

/// Standard graph6 encoding of the adjacency (partition ignored).
std::string to_graph6(const KPartiteGraph& g);
/// Bare graph6 -> ordinary graph (k = n). Accepts an optional ">>graph6<<" prefix.
KPartiteGraph from_graph6(std::string_view text);

std::string partition_header(const KPartiteGraph& g);

/// Header line + graph6 line, newline-terminated.
std::string encode(const KPartiteGraph& g);
/// Inverse of encode; throws ParseError on malformed text and GraphError on invariant violations.
KPartiteGraph decode(std::string_view text);

/// Graphviz DOT; vertices are filled with one colour per part.
std::string export_dot(const KPartiteGraph& g);

KPartiteGraph read_graph_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace kham

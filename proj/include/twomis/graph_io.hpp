#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "twomis/graph.hpp"

namespace twomis {

/// Decode one graph6 line (short form, n <= 62). Throws ParseError.
Graph parse_graph6(std::string_view text);

/// Canonical short-form graph6 encoding of g (no trailing newline).
std::string encode_graph6(const Graph& g);

/// "n <count>" header line followed by "u v" edge lines. Duplicates collapse.
Graph parse_edge_list(std::string_view text);

/// One graph per non-empty line. Throws ParseError on the first bad line.
std::vector<Graph> parse_graph6_lines(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

/// Undirected DOT rendering; vertices in `highlights` get a fill color per set.
std::string to_dot(const Graph& g, const std::vector<VertexSet>& highlights = {});

}  // namespace twomis

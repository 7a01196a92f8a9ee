#pragma once

#include <string>
#include <string_view>

#include "kempe/coloring.hpp"
#include "kempe/graph.hpp"

namespace kempe {

// Text formats. Blank lines and lines starting with '#' are ignored by every
// reader. Malformed input throws ParseError with a line number.

/// Edge list: first line "n m", then m lines "u v" (0-based).
Graph read_edge_list(std::string_view text);
std::string write_edge_list(const Graph& g);

/// graph6, simple graphs with up to 258047 vertices.
Graph read_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// Picks graph6 when the first meaningful line has no whitespace, and the
/// edge-list format otherwise.
Graph read_graph_auto(std::string_view text);

/// Lists: one line "v: c1 c2 ..." per vertex. Every vertex 0..n-1 must
/// appear exactly once.
ListAssignment read_lists(std::string_view text, int n);
std::string write_lists(const ListAssignment& lists);

/// Colorings: one line "v: c" per vertex.
Coloring read_coloring(std::string_view text, int n);
std::string write_coloring(const Coloring& phi);

/// Moves, one per line: "anchor a b".
std::vector<SwapMove> read_moves(std::string_view text);
std::string write_moves(const std::vector<SwapMove>& moves);

/// Graphviz rendering with vertex labels when present.
std::string to_dot(const Graph& g);

/// Reads a whole file; throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace kempe

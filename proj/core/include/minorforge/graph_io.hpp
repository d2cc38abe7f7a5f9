#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "minorforge/graph.hpp"

namespace minorforge {

// Text format:
//   c <anything>        comment, ignored
//   p <n> <m>           header, exactly once, before any edge
//   e <u> <v>           m lines, 1-based, u < v, no duplicates
// Writers emit the header followed by edges in lexicographic order, so
// write(read(x)) == x for any canonical file.

Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

void write_graph(std::ostream& out, const Graph& g);
std::string format_graph(const Graph& g);

/// `part <id>: v1 v2 ...`, ids and vertices 1-based.
void write_branch_map(std::ostream& out, const BranchDecomposition& d);

}  // namespace minorforge

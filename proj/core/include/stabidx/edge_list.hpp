#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "stabidx/digraph.hpp"

namespace stabidx {

// Edge-list text format:
//
//   # comment lines start with '#'
//   n <order>
//   <u> <v>        one arc per line, 0-based, whitespace separated
//
// Blank lines are ignored. A repeated arc is a parse error.

/// Throws ParseError carrying the offending 1-based line number.
Digraph parse_edge_list(std::string_view text);
Digraph read_edge_list(std::istream& in);
Digraph read_edge_list_file(const std::string& path);

/// Canonical rendering: "n <order>" then arcs in row-major order.
std::string format_edge_list(const Digraph& d);
void write_edge_list(std::ostream& out, const Digraph& d);

}  // namespace stabidx

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "domex/graph.hpp"

namespace domex {

// Adjacency-list text: an optional "Graph ..." header, then one "v : n1 n2 ... ;" line per vertex.
// Blocks are separated by blank lines or headers. `base` is the index of the first vertex (0 or 1).
std::string to_adjacency_list(const Graph& g, int base = 0);
// Throws ParseError carrying the 1-based line number.
std::vector<Graph> parse_adjacency_lists(std::istream& in, int base = 0);

// "n: a-b c-d ..."
std::string to_edge_list(const Graph& g);

}  // namespace domex

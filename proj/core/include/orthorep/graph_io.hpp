#pragma once

#include <string>

#include "orthorep/graph.hpp"

namespace orthorep {

/// graph6 encoding (n < 258048).
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& text);

/// Edge list: "n m" header, then m lines "i j" with 1-based endpoints.
/// Lines starting with '#' are comments.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

/// Accepts either format: a single token made of graph6 characters is
/// treated as graph6, anything else as an edge list.
Graph parse_graph(const std::string& text);

}  // namespace orthorep

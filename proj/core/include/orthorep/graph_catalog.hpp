#pragma once

#include <functional>
#include <string>
#include <vector>

#include "orthorep/graph.hpp"

namespace orthorep {

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph empty_graph(int n);
Graph star_graph(int leaves);
Graph petersen_graph();

/// Canonical graph6 string: the lexicographically smallest adjacency code
/// over all relabellings. Exponential in n; meant for n <= 9.
std::string canonical_form(const Graph& g);

/// One representative per isomorphism class on n vertices (n <= 9), built by
/// vertex augmentation with canonical deduplication. Deterministic order.
std::vector<Graph> nonisomorphic_graphs(int n);

/// All 2^(n(n-1)/2) labelled graphs on n vertices in edge-bitmask order (n <= 8).
void for_each_labelled_graph(int n, const std::function<void(const Graph&)>& visit);

/// Builds a graph from a named family: "path:N", "cycle:N", "complete:N",
/// "empty:N", "star:L", "petersen". Throws InvalidArgument otherwise.
Graph named_graph(const std::string& spec);

}  // namespace orthorep

// Small graphs by name and the isomorphism-free catalogue of connected graphs
// used by the exhaustive checks.
#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "conflux/graph.h"

namespace conflux {

// Vertices "<prefix>0" ... "<prefix>{n-1}".
Graph path_graph(std::size_t n, const std::string& prefix = "v");
Graph cycle_graph(std::size_t n, const std::string& prefix = "v");
Graph complete_graph(std::size_t n, const std::string& prefix = "v");

// Canonical adjacency code; equal codes mean isomorphic graphs. Brute force
// over degree-respecting relabellings, intended for at most 8 vertices.
std::string canonical_code(const Graph& g);

// All automorphisms as vertex maps, identity first.
std::vector<std::vector<Vertex>> automorphisms(const Graph& g);

// One representative per isomorphism class of connected graphs on exactly n
// vertices, in canonical form with tokens "0", "1", ... and sorted by code.
std::vector<Graph> connected_graphs(std::size_t n);
// The same for every order from 1 to max_n, smaller graphs first.
std::vector<Graph> connected_graphs_up_to(std::size_t max_n);

}  // namespace conflux

// Graph constructions that come with a confluent epimorphism onto their
// input, together with checkers for the properties each one is built for.
#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conflux/graph.h"
#include "conflux/morphism.h"

namespace conflux {

// A graph with its map back onto the input.
struct Construction {
  GraphPtr graph;
  Morphism map;
};

struct EdgeSplit {
  GraphPtr graph;
  Morphism map;
  Vertex split;  // the new vertex
};

// Removes the edge a-b and joins a and b through a new vertex s. The new
// vertex maps to b, or to a when `map_to_first` is set.
EdgeSplit split_edge(const GraphPtr& g, Vertex a, Vertex b, bool map_to_first = false);

// No p, q, r with f(p) = a, f(q) = b, f(r) = c and both p-q and q-r edges.
bool separates_triple(const Morphism& f, Vertex a, Vertex b, Vertex c);

// Copies (v,1) ... (v,2n+1) of F, one per index, plus for the i-th edge
// a_i-b_i the links (a_i,i)-(b_i,i+1) and (a_i,n+i)-(b_i,n+i+1).
Construction indecomposability_witness(const GraphPtr& f);

struct TwoPassResult {
  bool holds = true;
  std::size_t pairs = 0;  // covering pairs of connected sets examined
  std::optional<std::pair<VertexSet, VertexSet>> counterexample;
};

// Exhaustively checks that whenever connected A, B cover the domain, f maps
// one of them onto the codomain. Works on domains with at most 26 vertices.
TwoPassResult check_two_pass(const Morphism& f);

// Two copies of G glued at p. Copies are named "(v,0)" and "(v,1)"; the
// glued vertex is "(p,0)".
Construction delta_double(const GraphPtr& g, Vertex p);

// Extends f : W -> U along an embedding of U as an induced connected
// subgraph of G. `embed[u]` is the vertex of G playing u. The result is
// W together with G minus U, with x in W joined to y outside U whenever
// f(x) is adjacent to y in G.
Construction extend_confluent(const Morphism& f, const GraphPtr& g, const std::vector<Vertex>& embed);

struct UnfoldCopy {
  std::size_t level = 0;          // the copy is of chain[level]
  std::size_t step = 0;           // step at which it was attached
  std::optional<Vertex> parent;   // vertex of C it hangs from
  std::optional<Vertex> anchor;   // vertex of the copy joined to `parent`
  VertexSet members;              // vertices of C in this copy
};

struct UnfoldingResult {
  GraphPtr graph;                 // C
  Morphism map;                   // g : C -> B
  VertexSet kernel;               // Y_1
  std::vector<VertexSet> layers;  // Y_0 ... Y_n
  std::vector<VertexSet> chain;   // X_0 ... X_n
  std::vector<UnfoldCopy> copies;
};

// Unfolds B along a strictly increasing chain X_0 < ... < X_n = B of
// connected sets. Copy k of X_j names its vertices "(x,k)".
UnfoldingResult unfold(const GraphPtr& b, const std::vector<VertexSet>& chain);

// Component of g^-1(X_k) containing Y_0.
VertexSet unfold_component(const UnfoldingResult& u, std::size_t k);

// One vertex per copy, joined when an edge of C runs between the copies.
Graph collapse_copies(const UnfoldingResult& u);

bool is_tree(const Graph& g);

// Two copies of F on levels 0 and 1, named "(v,0)" and "(v,1)". Edges of F
// from K minus C into C are crossed between the levels instead of kept
// within each level.
Construction unicoherence_witness(const GraphPtr& f, const CycleDivision& div);

// A cycle division of the domain of alpha whose four parts map onto those of
// `div`; exhaustive over connected sets, at most 20 domain vertices.
std::optional<CycleDivision> division_over(const Morphism& alpha, const CycleDivision& div);

struct CycleCover {
  GraphPtr graph;
  Morphism map;
  OrientedCycle cycle;  // the lifted cycle in the new graph
};

// m copies of A with the least edge x-y of C rewired into a single cycle of
// length m|C| that wraps m times around C.
CycleCover wrap_copies(const GraphPtr& a, const OrientedCycle& c, std::size_t m);

// A with a new vertex joined to a and c, mapped to a. Returns the new vertex
// through `added`.
Construction attach_cycle_vertex(const GraphPtr& a, Vertex av, Vertex cv, Vertex* added = nullptr);

// Replaces each vertex c of C by an adjacent pair "(c,0)", "(c,1)" so that C
// doubles in length with winding number one.
CycleCover double_cycle(const GraphPtr& a, const OrientedCycle& c);

}  // namespace conflux

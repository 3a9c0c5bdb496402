// Fixtures and brute-force oracles shared by the test binaries. The oracles
// read definitions literally and share no search code with the library.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conflux/cycles.h"
#include "conflux/graph.h"
#include "conflux/morphism.h"

namespace conflux::testing {

GraphPtr make_graph(std::vector<std::string> vertices,
                    const std::vector<std::pair<std::string, std::string>>& edges);

// Map given as (domain token, codomain token) pairs.
Morphism make_map(const GraphPtr& domain, const GraphPtr& codomain,
                  const std::vector<std::pair<std::string, std::string>>& pairs);

// The worked confluence example: G on a_i, b_i, c_i, d_i, the triod H on
// A, B, C, D, the letter map f : G -> H and the six-cycle K inside G.
struct TriodExample {
  GraphPtr g, h, k;
  Morphism f;        // G -> H
  Morphism f_on_k;   // K -> H
};
TriodExample triod_example();

// B on a..e with the chain {a,b} < {a,b,c} < {a,b,c,d} < B.
std::pair<GraphPtr, std::vector<VertexSet>> unfolding_example();

GraphPtr path(std::size_t n);
GraphPtr cycle(std::size_t n);

// Proper witness pairs over j -> floor(j / 2) from the 2n-cycle onto the n-cycle,
// stopping after `limit` pairs.
std::vector<WitnessPair> doubled_witness_pairs(std::size_t n, std::size_t limit = SIZE_MAX);

// True when some step along the domain moves backward on the codomain.
bool steps_backward(const CycleMap& w);

// Every subset of the vertices, as bit masks, that induces a connected graph.
std::vector<std::uint64_t> connected_masks(const Graph& g);
bool mask_connected(const Graph& g, std::uint64_t mask);
std::size_t mask_components(const Graph& g, std::uint64_t mask);

// Connected P, Q with P n Q split into two or more components.
bool oracle_has_disconnected_intersection(const Graph& g);
// For every connected Q, every component of f^-1(Q) maps onto Q.
bool oracle_confluent(const Morphism& f);
// For every connected Q, f^-1(Q) is connected; f an epimorphism.
bool oracle_monotone(const Morphism& f);
bool oracle_epimorphism(const Morphism& f);
// Path-enumeration reading of adjacent disconnection.
bool oracle_adjacently_disconnecting(const Graph& g, std::uint64_t t);
// Vertex sets inducing chordless cycles of length three or more.
std::vector<std::uint64_t> oracle_cycle_sets(const Graph& g);

// Every map (not necessarily a homomorphism) between two graphs.
template <typename Fn>
void for_each_map(const GraphPtr& g, const GraphPtr& h, Fn&& fn) {
  std::vector<Vertex> map(g->size(), 0);
  while (true) {
    fn(Morphism(g, h, map));
    std::size_t i = 0;
    while (i < map.size() && ++map[i] == h->size()) map[i++] = 0;
    if (i == map.size()) return;
  }
}

}  // namespace conflux::testing

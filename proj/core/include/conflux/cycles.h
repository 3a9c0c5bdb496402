// Maps between cycles: winding numbers, almost wrapping maps and their
// confluent witnesses, and amalgamation inside the class of cycles.
#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "conflux/amalgamation.h"
#include "conflux/graph.h"
#include "conflux/morphism.h"

namespace conflux {

// Number of components of each vertex fibre of a confluent epimorphism
// between two cycles; throws if the fibres disagree or f is not confluent.
std::size_t winding_number(const Morphism& f);

// The arc [a, b] of C read along the orientation. Throws when it would be
// the whole cycle.
std::vector<Vertex> oriented_arc(const OrientedCycle& c, Vertex a, Vertex b);

// An oriented map between cycles: w : D -> C with both orientations fixed.
struct CycleMap {
  Morphism map;
  OrientedCycle domain;
  OrientedCycle codomain;
};

// Nonadjacent x != z of C with arcs [a, c] of D, w(c) = x, w(a) = z and
// w([a, c]) = [x, z].
struct SwapQuadruple {
  Vertex x, z, a, c;
};

struct AlmostWrappingCheck {
  bool almost_wrapping = false;
  std::optional<SwapQuadruple> violation;
};

// Decides the swap-quadruple criterion for a surjective homomorphism.
AlmostWrappingCheck is_almost_wrapping(const CycleMap& w);

// A confluent epimorphism f : D -> C running forward along both
// orientations with f(y) = c_i implying w(y) in {c_i, c_{i+1}}. When
// `require_proper`, every fibre component also has at least two vertices.
// Among all witnesses the one returned takes f(y) = w(y) at the earliest
// possible positions of D.
std::optional<Morphism> find_confluent_witness(const CycleMap& w, bool require_proper = false);
// Every such witness, in the same order.
std::vector<Morphism> all_confluent_witnesses(const CycleMap& w, bool require_proper = false);

// Two consecutive backward steps x -> y -> z along D with x != z.
bool has_backward_zigzag(const CycleMap& w);

// A map between cycles together with a witness showing it almost wraps.
struct WitnessPair {
  CycleMap w;
  Morphism f;
};

// True when f witnesses w (and is proper when `require_proper`).
bool is_witness(const CycleMap& w, const Morphism& f, bool require_proper);

// Given proper witnesses for g1 : D -> C and g2 : E -> D, a proper witness
// for g1 after g2, obtained by re-cutting the fibres of f1 after f2.
WitnessPair compose_witness(const WitnessPair& outer, const WitnessPair& inner);

struct CycleAmalgam {
  Amalgam amalgam;
  OrientedCycle cycle;      // orientation of the new cycle
  std::size_t fibre = 0;    // largest fibre component over both maps
  std::size_t winding_first = 0;
  std::size_t winding_second = 0;
};

// Amalgamates wrapping maps f : B -> A and g : C -> A between cycles into a
// cycle of length fibre * W(f) * W(g) * |A|, built block by block.
CycleAmalgam cycle_amalgam(const CycleMap& f, const CycleMap& g);

}  // namespace conflux

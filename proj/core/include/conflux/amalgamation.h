// Amalgamation of confluent epimorphisms: given f : B -> A and g : C -> A,
// produce D with projections onto B and C that commute over A.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "conflux/graph.h"
#include "conflux/morphism.h"

namespace conflux {

struct Amalgam {
  enum class Route { kFibreProduct, kComponent, kSearch, kCycleBlocks };

  GraphPtr graph;
  Morphism to_first;   // D -> B
  Morphism to_second;  // D -> C
  Route route = Route::kFibreProduct;
};

std::string to_string(Amalgam::Route route);

// Fibre product: pairs (b, c) with f(b) = g(c), adjacent when both
// coordinates are. Vertices are listed by (b, c) and named "(b,c)".
Amalgam standard_amalgam(const Morphism& f, const Morphism& g);

// A connected amalgam. First tries the components of the fibre product,
// smallest first (ties by least vertex pair), and takes the first whose two
// projections are confluent epimorphisms. Otherwise searches connected
// graphs of at most |B| + |C| vertices; throws BudgetExceeded when that
// search gives up.
Amalgam connected_amalgam(const Morphism& f, const Morphism& g,
                          std::size_t search_budget = kDefaultSearchBudget);

// Connected amalgam of B and C over the point.
Amalgam common_refinement(const GraphPtr& b, const GraphPtr& c);

// Accepts a proposed amalgam when D is connected, both projections are
// confluent epimorphisms and the square commutes.
bool is_valid_amalgam(const Morphism& f, const Morphism& g, const Amalgam& d);

struct AmalgamationCounterexample {
  std::string first;   // f : B -> A, as "B-code -> A-code : images"
  std::string second;  // g : C -> A
  std::string reason;
};

struct AmalgamationReport {
  std::size_t max_vertices = 0;
  std::size_t sample = 0;  // 0 means exhaustive
  std::uint64_t seed = 0;
  std::size_t instances = 0;  // size of the instance space
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::size_t via_component = 0;
  std::size_t via_search = 0;
  std::vector<AmalgamationCounterexample> counterexamples;
};

// Runs connected_amalgam on pairs of confluent epimorphisms f : B -> A,
// g : C -> A over connected graphs with at most `max_vertices` vertices and
// re-validates every result. With sample = 0 every pair is checked;
// otherwise `sample` pairs are drawn with a generator seeded by `seed`.
AmalgamationReport verify_amalgamation(std::size_t max_vertices, std::size_t sample,
                                       std::uint64_t seed);

}  // namespace conflux

// Vertex maps between graphs and the classes of maps the library works with:
// homomorphisms, epimorphisms, monotone and confluent epimorphisms.
#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "conflux/graph.h"

namespace conflux {

class Morphism {
 public:
  Morphism() = default;
  // Throws InvalidArgument unless `map` assigns a codomain vertex to every
  // domain vertex. The map need not be a homomorphism.
  Morphism(GraphPtr domain, GraphPtr codomain, std::vector<Vertex> map);

  const Graph& domain() const { return *domain_; }
  const Graph& codomain() const { return *codomain_; }
  const GraphPtr& domain_ptr() const { return domain_; }
  const GraphPtr& codomain_ptr() const { return codomain_; }
  const std::vector<Vertex>& map() const { return map_; }
  Vertex operator()(Vertex v) const { return map_[v]; }

  VertexSet image(const VertexSet& s) const;
  VertexSet image() const { return image(domain_->all()); }
  VertexSet preimage(const VertexSet& s) const;
  VertexSet preimage(Vertex v) const;

  friend bool operator==(const Morphism& a, const Morphism& b) {
    return a.map_ == b.map_ && *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_;
  }

 private:
  GraphPtr domain_;
  GraphPtr codomain_;
  std::vector<Vertex> map_;
};

Morphism identity(const GraphPtr& g);
// outer after inner; the codomain of `inner` must equal the domain of `outer`.
Morphism compose(const Morphism& outer, const Morphism& inner);
// Restriction to the subgraphs induced on `source` and `target`; requires
// f(source) to lie in `target`.
Morphism restrict(const Morphism& f, const VertexSet& source, const VertexSet& target);
// The map to the point graph.
Morphism to_point(const GraphPtr& g);

bool is_homomorphism(const Morphism& f);
// Homomorphism onto every vertex and every nondegenerate edge.
bool is_epimorphism(const Morphism& f);

// An edge of the codomain and a component of its preimage that misses one of
// the two fibres.
struct ConfluenceViolation {
  Edge edge;
  VertexSet component;
};

struct Classification {
  bool homomorphism = false;
  bool epimorphism = false;
  bool monotone = false;
  bool confluent = false;
  std::optional<ConfluenceViolation> violation;
};

// Monotonicity is read off vertex and edge fibres; confluence uses the edge
// criterion: every component of the preimage of an edge maps onto the edge.
Classification classify(const Morphism& f);
bool is_confluent(const Morphism& f);

// Confluence straight from the definition: for every connected set Q of the
// codomain, every component of f^-1(Q) maps onto Q. Exponential in the size
// of the codomain; throws BudgetExceeded above `bound` codomain vertices.
bool confluent_by_definition(const Morphism& f, std::size_t bound = 16);

// Depth-first enumeration of homomorphisms in lexicographic order of the
// image vector. `allowed`, when given, restricts each vertex to a set of
// images. `visit` returns false to stop. Throws BudgetExceeded (with the
// number of complete maps visited) after `budget` search nodes.
void for_each_homomorphism(const Graph& g, const Graph& h, std::size_t budget,
                           const std::function<bool(const std::vector<Vertex>&)>& visit,
                           const std::vector<VertexSet>* allowed = nullptr);

inline constexpr std::size_t kDefaultSearchBudget = 5'000'000;

// Every confluent epimorphism g -> h, in lexicographic order.
std::vector<Morphism> enumerate_confluent_epis(const GraphPtr& g, const GraphPtr& h,
                                               std::size_t budget = kDefaultSearchBudget);

// For a confluent epimorphism f : G -> H, an arc A of H with end `a`, and
// f(b) = a: an arc of G starting at b that f maps monotonically onto A.
// Returned in order from b.
std::vector<Vertex> lift_arc(const Morphism& f, const VertexSet& arc, Vertex b);

// For a confluent epimorphism f : G -> H and a cycle C of H: a cycle D of G
// with f(D) = C, oriented so that f runs forward along C.
OrientedCycle lift_cycle(const Morphism& f, const OrientedCycle& c);

}  // namespace conflux

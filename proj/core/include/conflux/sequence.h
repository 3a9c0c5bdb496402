// Finite prefixes of inverse sequences F_0 <- F_1 <- ... of graphs: bonding
// maps, demand ledgers, the prefix builder and the audits run on prefixes.
// Levels are numbered from 0.
#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "conflux/cycles.h"
#include "conflux/graph.h"
#include "conflux/morphism.h"

namespace conflux {

// A demand (n, A, f : A -> F_n) and how the prefix meets it: a confluent
// epimorphism g : F_level -> A with f g equal to the bonding map.
struct LedgerEntry {
  std::size_t level = 0;
  std::size_t demand_level = 0;
  std::string task;
  std::string how;  // "amalgam", "symmetry", "found", "refine"
  std::optional<Morphism> demand;
  std::optional<Morphism> witness;
};

class InverseSequence {
 public:
  InverseSequence() = default;
  // bonds[n] : levels[n+1] -> levels[n]. Throws unless every bond is an
  // epimorphism between consecutive levels.
  InverseSequence(std::vector<GraphPtr> levels, std::vector<Morphism> bonds);

  std::size_t size() const { return levels_.size(); }
  const Graph& level(std::size_t n) const { return *levels_.at(n); }
  const GraphPtr& level_ptr(std::size_t n) const { return levels_.at(n); }
  const Morphism& bond(std::size_t n) const { return bonds_.at(n); }
  const std::vector<GraphPtr>& levels() const { return levels_; }
  const std::vector<Morphism>& bonds() const { return bonds_; }

  const std::optional<std::vector<Vertex>>& thread() const { return thread_; }
  // Throws unless bond n sends the point of level n+1 to that of level n.
  void set_thread(std::vector<Vertex> points);

  const std::vector<LedgerEntry>& ledger() const { return ledger_; }
  void add_ledger_entry(LedgerEntry entry) { ledger_.push_back(std::move(entry)); }

  const std::vector<OrientedCycle>& orientations() const { return orientations_; }
  // One orientation per level; every level must be a cycle.
  void set_orientations(std::vector<OrientedCycle> orientations);

 private:
  std::vector<GraphPtr> levels_;
  std::vector<Morphism> bonds_;
  std::optional<std::vector<Vertex>> thread_;
  std::vector<LedgerEntry> ledger_;
  std::vector<OrientedCycle> orientations_;
};

// Raised by the prefix builder when a level would exceed its limits; carries
// the levels built so far with their ledger.
class PrefixBudgetExceeded : public BudgetExceeded {
 public:
  PrefixBudgetExceeded(const std::string& what, InverseSequence partial)
      : BudgetExceeded(what, partial.size()),
        partial_(std::make_shared<InverseSequence>(std::move(partial))) {}
  const InverseSequence& partial_sequence() const { return *partial_; }

 private:
  std::shared_ptr<const InverseSequence> partial_;
};

// The bonding map F_m -> F_n for n <= m; the identity when n == m.
Morphism compose_bonding(const InverseSequence& seq, std::size_t n, std::size_t m);

struct BondAudit {
  std::size_t index = 0;
  bool applicable = false;  // both levels are cycles and the bond is confluent
  bool sharp = false;       // every vertex-fibre component has two or more vertices
  std::optional<std::size_t> winding;
};

struct SharpReport {
  std::vector<BondAudit> bonds;
  // windings[k][j]: winding number of F_{k+j+1} -> F_k, while defined.
  std::vector<std::vector<std::size_t>> windings;
  // divisors[k]: every N dividing one of windings[k].
  std::vector<std::vector<std::size_t>> divisors;
};

SharpReport check_sharp(const InverseSequence& seq);

struct TaskResult {
  std::size_t level = 0;
  std::string graph;  // canonical code of A
  Morphism demand;    // f : A -> F_level
  bool satisfied = false;
  bool budget_exceeded = false;
  std::optional<std::size_t> at;  // level m of the witness
  std::string via;                // "ledger" or "search"
  std::optional<Morphism> witness;
};

struct FraisseReport {
  std::size_t task_bound = 0;
  std::vector<TaskResult> tasks;
  std::size_t satisfied() const;
};

// For every level n, connected A with at most `task_bound` vertices and
// confluent epimorphism f : A -> F_n, looks for m >= n and a confluent
// epimorphism g : F_m -> A with f g = the bonding map F_m -> F_n. Ledger
// witnesses are tried first and re-checked vertex by vertex.
FraisseReport verify_fraisse_prefix(const InverseSequence& seq, std::size_t task_bound,
                                    std::size_t budget = 200'000);

struct BuildOptions {
  // Replace each new level by its unfolding along the thread.
  bool unfold = false;
  // Meet, in the same step, every open demand posed at the level of the
  // oldest one, by amalgamating them one after another.
  bool group_by_level = true;
  std::size_t search_budget = 200'000;
  std::size_t max_vertices = 20'000;
};

// Deterministic prefix of length `depth` starting from a single edge, or its
// unfolding in unfold mode. Demands (n, A, f) are queued by level, then by
// the catalogue order of A, then by f. Demands already met through an
// automorphism of A or by a factor of the top level are discharged; each step
// then meets the oldest open demand (and, when grouping, the others of its
// level) by amalgamation and appends the result. When no demand is open the
// top level is refined by splitting its least edge.
InverseSequence build_fraisse_prefix(std::size_t task_bound, std::size_t depth,
                                     const BuildOptions& options = {});

struct FibreInfo {
  Vertex vertex = 0;
  std::vector<VertexSet> components;
  double diameter = 0.0;
};

// Fibres of F_m -> F_n with the thread metric d(x, y) = 2^-k, k the first
// level at which the images of x and y differ.
std::vector<FibreInfo> thread_fibers(const InverseSequence& seq, std::size_t n, std::size_t m);

struct SolenoidBond {
  std::size_t index = 0;
  bool almost_wrapping = false;
  std::optional<SwapQuadruple> violation;
  bool proper_witness = false;
  std::optional<std::size_t> winding;
};

struct SolenoidReport {
  bool holds = false;
  std::string reason;
  std::vector<SolenoidBond> bonds;
  std::vector<OrientedCycle> orientations;
  std::size_t wide = 0;      // bonds with winding above one
  std::size_t required = 0;  // ceil(bonds / 2)
};

// Every level a cycle, every bond almost wrapping with a proper witness, and
// at least half of the bonds (rounded up) winding more than once.
SolenoidReport is_almost_graph_solenoid_prefix(const InverseSequence& seq);

// Checks that {x_n} and every component of (F_n -> F_m)^-1(st(x_m)) holding
// x_n separate adjacently in F_n, for all m < n. Needs a thread.
bool thread_stars_adjacently_disconnecting(const InverseSequence& seq);

}  // namespace conflux

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "conflux/io.h"
#include "conflux/sequence.h"
#include "support.h"

namespace conflux {
namespace {

// Cycles of the given lengths with bonds j -> floor(j / step) mod |lower|.
InverseSequence cycle_tower(const std::vector<std::size_t>& lengths, std::size_t step) {
  std::vector<GraphPtr> levels;
  for (std::size_t n : lengths) levels.push_back(testing::cycle(n));
  std::vector<Morphism> bonds;
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
    std::vector<Vertex> map(lengths[k + 1]);
    for (std::size_t j = 0; j < map.size(); ++j) map[j] = static_cast<Vertex>((j / step) % lengths[k]);
    bonds.emplace_back(levels[k + 1], levels[k], map);
  }
  return InverseSequence(levels, bonds);
}

InverseSequence constant_points(std::size_t depth) {
  std::vector<GraphPtr> levels(depth, testing::path(1));
  std::vector<Morphism> bonds(depth - 1, identity(levels[0]));
  return InverseSequence(levels, bonds);
}

TEST(InverseSequence, RejectsNonEpimorphicBonds) {
  auto c3 = testing::cycle(3);
  auto p3 = testing::path(3);
  EXPECT_THROW(InverseSequence({c3, p3}, {Morphism(p3, c3, {0, 1, 1})}), InvalidArgument);
  EXPECT_THROW(InverseSequence({c3, c3}, {}), InvalidArgument);
}

TEST(InverseSequence, ThreadMustCohere) {
  InverseSequence seq = cycle_tower({3, 6}, 1);
  EXPECT_NO_THROW(seq.set_thread({1, 4}));
  EXPECT_THROW(seq.set_thread({1, 3}), InvalidArgument);
}

TEST(ComposeBonding, Examples) {
  InverseSequence seq = cycle_tower({3, 6, 12}, 1);
  EXPECT_EQ(compose_bonding(seq, 0, 1).map(), seq.bond(0).map());
  EXPECT_EQ(compose_bonding(seq, 1, 1).map(), identity(seq.level_ptr(1)).map());
  EXPECT_EQ(winding_number(compose_bonding(seq, 0, 2)), 4u);
  EXPECT_THROW(compose_bonding(seq, 2, 1), InvalidArgument);
  EXPECT_THROW(compose_bonding(seq, 0, 3), std::exception);

  InverseSequence points = constant_points(4);
  EXPECT_EQ(compose_bonding(points, 0, 3).map(), std::vector<Vertex>{0});
}

TEST(CheckSharp, DoubledFibres) {
  InverseSequence seq = cycle_tower({3, 6, 12}, 2);
  const SharpReport r = check_sharp(seq);
  ASSERT_EQ(r.bonds.size(), 2u);
  for (const BondAudit& b : r.bonds) {
    EXPECT_TRUE(b.applicable);
    EXPECT_TRUE(b.sharp);
    EXPECT_EQ(b.winding, 1u);
  }
}

TEST(CheckSharp, PlainDoubleCoversAreNotSharp) {
  InverseSequence seq = cycle_tower({3, 6, 12}, 1);
  const SharpReport r = check_sharp(seq);
  for (const BondAudit& b : r.bonds) {
    EXPECT_TRUE(b.applicable);
    EXPECT_FALSE(b.sharp);
    EXPECT_EQ(b.winding, 2u);
  }
  EXPECT_EQ(r.windings[0], (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(r.divisors[0], (std::vector<std::size_t>{1, 2, 4}));
}

TEST(CheckSharp, MixedPrefix) {
  InverseSequence seq = cycle_tower({3, 12, 48}, 2);
  const SharpReport r = check_sharp(seq);
  EXPECT_TRUE(r.bonds[0].sharp && r.bonds[1].sharp);
  EXPECT_EQ(r.windings[0], (std::vector<std::size_t>{2, 4}));
  EXPECT_EQ(r.divisors[0], (std::vector<std::size_t>{1, 2, 4}));
}

TEST(CheckSharp, NotApplicableOffCycles) {
  auto p3 = testing::path(3);
  InverseSequence seq({p3, p3}, {identity(p3)});
  EXPECT_FALSE(check_sharp(seq).bonds[0].applicable);
}

TEST(ThreadFibers, IdentityBonds) {
  InverseSequence seq = constant_points(3);
  for (const FibreInfo& f : thread_fibers(seq, 0, 2)) {
    EXPECT_EQ(f.components.size(), 1u);
    EXPECT_EQ(f.diameter, 0.0);
  }
  auto c4 = testing::cycle(4);
  InverseSequence ids({c4, c4, c4}, {identity(c4), identity(c4)});
  for (const FibreInfo& f : thread_fibers(ids, 0, 2)) {
    ASSERT_EQ(f.components.size(), 1u);
    EXPECT_EQ(f.components[0].size(), 1u);
    EXPECT_EQ(f.diameter, 0.0);
  }
}

TEST(ThreadFibers, DoubleCovers) {
  InverseSequence seq = cycle_tower({3, 6, 12, 24}, 1);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const FibreInfo& f : thread_fibers(seq, 0, m)) {
      std::size_t total = 0;
      for (const VertexSet& c : f.components) total += c.size();
      EXPECT_EQ(total, std::size_t{1} << m);
      EXPECT_DOUBLE_EQ(f.diameter, 0.5);
    }
  }
  for (const FibreInfo& f : thread_fibers(seq, 2, 3)) EXPECT_DOUBLE_EQ(f.diameter, 0.125);
}

TEST(Solenoid, DoubledFibreDoubleCovers) {
  InverseSequence seq = cycle_tower({3, 12, 48}, 2);
  const SolenoidReport r = is_almost_graph_solenoid_prefix(seq);
  EXPECT_TRUE(r.holds) << r.reason;
  EXPECT_EQ(r.required, 1u);
  EXPECT_EQ(r.wide, 2u);
  for (const SolenoidBond& b : r.bonds) {
    EXPECT_TRUE(b.almost_wrapping);
    EXPECT_TRUE(b.proper_witness);
    EXPECT_EQ(b.winding, 2u);
  }
}

TEST(Solenoid, NarrowWindingsFail) {
  InverseSequence seq = cycle_tower({3, 6, 12}, 2);
  const SolenoidReport r = is_almost_graph_solenoid_prefix(seq);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.wide, 0u);
}

TEST(Solenoid, LevelNotACycle) {
  auto p3 = testing::path(3);
  InverseSequence seq({p3, p3}, {identity(p3)});
  const SolenoidReport r = is_almost_graph_solenoid_prefix(seq);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.reason.empty());
}

TEST(Solenoid, SwapQuadrupleReported) {
  auto c4 = testing::cycle(4);
  auto c8 = testing::cycle(8);
  InverseSequence seq({c4, c8}, {Morphism(c8, c4, {0, 1, 2, 3, 2, 1, 2, 3})});
  const SolenoidReport r = is_almost_graph_solenoid_prefix(seq);
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.bonds.size(), 1u);
  EXPECT_FALSE(r.bonds[0].almost_wrapping);
  ASSERT_TRUE(r.bonds[0].violation.has_value());
  EXPECT_FALSE(c4->adjacent(r.bonds[0].violation->x, r.bonds[0].violation->z));
}

TEST(Solenoid, ImproperWitnessFails) {
  InverseSequence seq = cycle_tower({4, 8, 16}, 1);
  const SolenoidReport r = is_almost_graph_solenoid_prefix(seq);
  EXPECT_FALSE(r.holds);
  EXPECT_FALSE(r.bonds[0].proper_witness);
}

// Read against the reversed orientation, a double cover of the triangle winds once.
TEST(Solenoid, TriangleDoubleCoverGetsReversedWitness) {
  InverseSequence seq = cycle_tower({3, 6}, 1);
  const SolenoidReport r = is_almost_graph_solenoid_prefix(seq);
  ASSERT_EQ(r.bonds.size(), 1u);
  EXPECT_TRUE(r.bonds[0].proper_witness);
  EXPECT_EQ(r.bonds[0].winding.value_or(0), 1u);
  EXPECT_FALSE(r.holds);
}

TEST(VerifyPrefix, ConstantPoints) {
  InverseSequence seq = constant_points(3);
  const FraisseReport r = verify_fraisse_prefix(seq, 1);
  ASSERT_EQ(r.tasks.size(), 3u);
  EXPECT_EQ(r.satisfied(), 3u);
  const FraisseReport wider = verify_fraisse_prefix(seq, 2);
  for (const TaskResult& t : wider.tasks) EXPECT_EQ(t.satisfied, t.demand.domain().size() == 1);
}

TEST(VerifyPrefix, WitnessesCommute) {
  InverseSequence seq = cycle_tower({3, 6, 12}, 1);
  const FraisseReport r = verify_fraisse_prefix(seq, 3);
  for (const TaskResult& t : r.tasks) {
    if (!t.satisfied) continue;
    ASSERT_TRUE(t.witness && t.at);
    EXPECT_TRUE(is_confluent(*t.witness));
    EXPECT_EQ(compose(t.demand, *t.witness).map(), compose_bonding(seq, t.level, *t.at).map());
  }
}

void expect_ledger_exact(const InverseSequence& seq) {
  for (const LedgerEntry& e : seq.ledger()) {
    ASSERT_TRUE(e.demand && e.witness) << e.task;
    EXPECT_TRUE(is_confluent(*e.witness));
    EXPECT_EQ(compose(*e.demand, *e.witness).map(), compose_bonding(seq, e.demand_level, e.level).map()) << e.task;
  }
}

void expect_thread(const InverseSequence& seq) {
  ASSERT_TRUE(seq.thread().has_value());
  const auto& x = *seq.thread();
  ASSERT_EQ(x.size(), seq.size());
  for (std::size_t n = 0; n + 1 < seq.size(); ++n) EXPECT_EQ(seq.bond(n)(x[n + 1]), x[n]);
}

TEST(Builder, DepthOne) {
  InverseSequence seq = build_fraisse_prefix(2, 1);
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_EQ(seq.level(0).size(), 2u);
  EXPECT_EQ(seq.level(0).edge_count(), 1u);
  EXPECT_TRUE(seq.ledger().empty());
}

TEST(Builder, TaskBoundTwo) {
  InverseSequence seq = build_fraisse_prefix(2, 4);
  ASSERT_EQ(seq.size(), 4u);
  for (const Morphism& b : seq.bonds()) EXPECT_TRUE(is_confluent(b));
  expect_ledger_exact(seq);
  expect_thread(seq);
  const FraisseReport r = verify_fraisse_prefix(seq, 2);
  for (const TaskResult& t : r.tasks) {
    if (t.level == 0) EXPECT_TRUE(t.satisfied) << t.graph;
  }
}

TEST(Builder, TaskBoundThreeDepthSix) {
  InverseSequence seq = build_fraisse_prefix(3, 6);
  ASSERT_EQ(seq.size(), 6u);
  for (const Morphism& b : seq.bonds()) EXPECT_TRUE(is_confluent(b));
  expect_ledger_exact(seq);
  const FraisseReport r = verify_fraisse_prefix(seq, 3);
  std::size_t level_zero = 0;
  for (const TaskResult& t : r.tasks) {
    if (t.level != 0) continue;
    ++level_zero;
    EXPECT_TRUE(t.satisfied) << t.graph;
  }
  EXPECT_EQ(level_zero, 14u);
}

TEST(Builder, Deterministic) {
  const std::string first = sequence_to_json(build_fraisse_prefix(3, 4)).dump();
  const std::string second = sequence_to_json(build_fraisse_prefix(3, 4)).dump();
  EXPECT_EQ(first, second);
}

TEST(Builder, OnePerStepStillCommutes) {
  BuildOptions options;
  options.group_by_level = false;
  InverseSequence seq = build_fraisse_prefix(2, 4, options);
  for (const Morphism& b : seq.bonds()) EXPECT_TRUE(is_confluent(b));
  expect_ledger_exact(seq);
}

TEST(Builder, UnfoldModeSeparatesThreadStars) {
  BuildOptions options;
  options.unfold = true;
  InverseSequence seq = build_fraisse_prefix(2, 3, options);
  ASSERT_EQ(seq.size(), 3u);
  for (const Morphism& b : seq.bonds()) EXPECT_TRUE(is_confluent(b));
  expect_thread(seq);
  expect_ledger_exact(seq);
  EXPECT_TRUE(thread_stars_adjacently_disconnecting(seq));
}

TEST(Builder, VertexLimitKeepsPartialPrefix) {
  BuildOptions options;
  options.unfold = true;
  options.max_vertices = 20;
  try {
    build_fraisse_prefix(2, 5, options);
    FAIL() << "expected the vertex limit to trip";
  } catch (const PrefixBudgetExceeded& e) {
    EXPECT_GE(e.partial_sequence().size(), 1u);
    EXPECT_LT(e.partial_sequence().size(), 5u);
    EXPECT_EQ(e.partial(), e.partial_sequence().size());
  }
}

}  // namespace
}  // namespace conflux

#include <gtest/gtest.h>

#include <set>

#include "conflux/constructions.h"
#include "conflux/cycles.h"
#include "support.h"

namespace conflux {
namespace {

CycleMap cycle_map(const GraphPtr& d, const GraphPtr& c, std::vector<Vertex> images) {
  return CycleMap{Morphism(d, c, std::move(images)), *as_cycle(*d), *as_cycle(*c)};
}

// Every surjective homomorphism between the canonical cycles of the given lengths.
std::vector<CycleMap> surjections(std::size_t from, std::size_t to) {
  auto d = testing::cycle(from);
  auto c = testing::cycle(to);
  std::vector<CycleMap> out;
  for_each_homomorphism(*d, *c, kDefaultSearchBudget, [&](const std::vector<Vertex>& images) {
    Morphism f(d, c, images);
    if (f.image() == c->all()) out.push_back(CycleMap{f, *as_cycle(*d), *as_cycle(*c)});
    return true;
  });
  return out;
}

TEST(Winding, Examples) {
  auto c3 = testing::cycle(3);
  auto c6 = testing::cycle(6);
  EXPECT_EQ(winding_number(identity(c3)), 1u);
  EXPECT_EQ(winding_number(Morphism(c6, c3, {0, 1, 2, 0, 1, 2})), 2u);
  EXPECT_EQ(winding_number(Morphism(c6, c3, {0, 0, 1, 1, 2, 2})), 1u);
  EXPECT_THROW(winding_number(Morphism(c6, c3, {0, 1, 2, 1, 2, 1})), InvalidArgument);
  EXPECT_THROW(winding_number(identity(testing::path(3))), InvalidArgument);
}

TEST(Winding, WrapCopiesOfTriangle) {
  auto c3 = testing::cycle(3);
  const OrientedCycle tri = *as_cycle(*c3);
  CycleCover cover = wrap_copies(c3, tri, 3);
  EXPECT_EQ(winding_number(restrict(cover.map, cover.cycle.vertices(), c3->all())), 3u);
}

TEST(OrientedArc, Examples) {
  auto c4 = testing::cycle(4);
  const OrientedCycle o = *as_cycle(*c4);
  EXPECT_EQ(oriented_arc(o, 1, 1), std::vector<Vertex>{1});
  EXPECT_EQ(oriented_arc(o, 0, 2), (std::vector<Vertex>{0, 1, 2}));
  EXPECT_EQ(oriented_arc(o, 2, 0), (std::vector<Vertex>{2, 3, 0}));
  EXPECT_EQ(oriented_arc(o, 3, 1), (std::vector<Vertex>{3, 0, 1}));
  EXPECT_THROW(oriented_arc(o, 3, 2), InvalidArgument);
}

TEST(AlmostWrapping, ConfluentForwardMapsWrap) {
  auto c3 = testing::cycle(3);
  auto c6 = testing::cycle(6);
  CycleMap cover = cycle_map(c6, c3, {0, 1, 2, 0, 1, 2});
  EXPECT_TRUE(is_almost_wrapping(cover).almost_wrapping);
  auto witness = find_confluent_witness(cover);
  ASSERT_TRUE(witness.has_value());
  EXPECT_EQ(witness->map(), cover.map.map());
  EXPECT_FALSE(find_confluent_witness(cover, true).has_value());
}

TEST(AlmostWrapping, ShiftedDoubleCover) {
  auto c4 = testing::cycle(4);
  auto c8 = testing::cycle(8);
  CycleMap w = cycle_map(c8, c4, {0, 1, 2, 1, 2, 3, 3, 0});
  EXPECT_FALSE(is_confluent(w.map));
  EXPECT_TRUE(is_almost_wrapping(w).almost_wrapping);
  auto witness = find_confluent_witness(w);
  ASSERT_TRUE(witness.has_value());
  EXPECT_TRUE(is_witness(w, *witness, false));
  EXPECT_EQ(winding_number(*witness), 1u);
}

TEST(AlmostWrapping, BackwardFoldIsRejected) {
  auto c4 = testing::cycle(4);
  auto c6 = testing::cycle(6);
  CycleMap w = cycle_map(c6, c4, {0, 1, 2, 3, 2, 1});
  const AlmostWrappingCheck check = is_almost_wrapping(w);
  EXPECT_FALSE(check.almost_wrapping);
  ASSERT_TRUE(check.violation.has_value());
  const SwapQuadruple q = *check.violation;
  EXPECT_FALSE(c4->adjacent(q.x, q.z));
  EXPECT_EQ(w.map(q.c), q.x);
  EXPECT_EQ(w.map(q.a), q.z);
  const auto arc = oriented_arc(w.domain, q.a, q.c);
  const auto image = w.map.image(VertexSet::Of(6, arc));
  EXPECT_EQ(image, VertexSet::Of(4, oriented_arc(w.codomain, q.x, q.z)));
  EXPECT_FALSE(find_confluent_witness(w).has_value());
}

TEST(AlmostWrapping, WitnessImpliesNoSwapQuadruple) {
  for (std::size_t c = 3; c <= 5; ++c) {
    for (std::size_t d = c; d <= 7; ++d) {
      for (const CycleMap& w : surjections(d, c)) {
        if (find_confluent_witness(w)) ASSERT_TRUE(is_almost_wrapping(w).almost_wrapping);
      }
    }
  }
}

TEST(AlmostWrapping, WitnessesAreValid) {
  for (const CycleMap& w : surjections(6, 3)) {
    for (const Morphism& f : all_confluent_witnesses(w)) ASSERT_TRUE(is_witness(w, f, false));
    auto first = find_confluent_witness(w);
    auto all = all_confluent_witnesses(w);
    ASSERT_EQ(first.has_value(), !all.empty());
    if (first) ASSERT_EQ(first->map(), all.front().map());
    for (const Morphism& f : all_confluent_witnesses(w, true)) ASSERT_TRUE(is_witness(w, f, true));
  }
}

TEST(AlmostWrapping, WindingDoesNotDependOnWitnessOntoLongerCycles) {
  std::size_t with_several = 0;
  for (std::size_t c = 4; c <= 6; ++c) {
    for (std::size_t d = c; d <= 8; ++d) {
      for (const CycleMap& w : surjections(d, c)) {
        const auto all = all_confluent_witnesses(w);
        if (all.size() > 1) ++with_several;
        for (const Morphism& f : all) {
          ASSERT_EQ(winding_number(f), winding_number(all.front()))
              << c << " " << d << " " << ::testing::PrintToString(w.map.map());
        }
      }
    }
  }
  EXPECT_GT(with_several, 100u);
}

// Onto a triangle the winding of a map is not determined by the map alone.
TEST(AlmostWrapping, TriangleWitnessesDisagreeOnWinding) {
  auto c3 = testing::cycle(3);
  auto c6 = testing::cycle(6);
  std::set<std::size_t> windings;
  for (const Morphism& f : all_confluent_witnesses(cycle_map(c6, c3, {0, 0, 1, 0, 0, 2}))) {
    windings.insert(winding_number(f));
  }
  EXPECT_EQ(windings, (std::set<std::size_t>{1, 2}));
}

TEST(Zigzag, AbsentFromAlmostWrappingMapsOntoLongerCycles) {
  std::size_t seen = 0;
  for (std::size_t c = 4; c <= 6; ++c) {
    for (std::size_t d = c; d <= 8; ++d) {
      for (const CycleMap& w : surjections(d, c)) {
        if (!find_confluent_witness(w)) continue;
        ++seen;
        ASSERT_FALSE(has_backward_zigzag(w)) << c << " " << d << " " << ::testing::PrintToString(w.map.map());
      }
    }
  }
  EXPECT_GT(seen, 100u);
  auto c4 = testing::cycle(4);
  auto c6 = testing::cycle(6);
  EXPECT_TRUE(has_backward_zigzag(cycle_map(c6, c4, {0, 1, 2, 3, 2, 1})));
}

// On a triangle two backward steps equal one forward step, so a reversing map has a forward witness.
TEST(Zigzag, TriangleAdmitsReversingMapWithWitness) {
  auto c3 = testing::cycle(3);
  auto c4 = testing::cycle(4);
  CycleMap w = cycle_map(c4, c3, {0, 0, 2, 1});
  EXPECT_TRUE(has_backward_zigzag(w));
  const Morphism f(c4, c3, {2, 0, 1, 1});
  EXPECT_TRUE(is_witness(w, f, false));
  EXPECT_TRUE(find_confluent_witness(w).has_value());
}

void expect_tower_composes(std::size_t base, bool forward_only) {
  const auto outer = testing::doubled_witness_pairs(base, 24);
  const auto inner = testing::doubled_witness_pairs(2 * base, 24);
  ASSERT_FALSE(outer.empty());
  ASSERT_FALSE(inner.empty());
  std::size_t composed = 0;
  for (const WitnessPair& o : outer) {
    if (forward_only && testing::steps_backward(o.w)) continue;
    for (const WitnessPair& i : inner) {
      if (forward_only && testing::steps_backward(i.w)) continue;
      const WitnessPair r = compose_witness(o, i);
      ASSERT_EQ(r.w.map.map(), compose(o.w.map, i.w.map).map());
      ASSERT_TRUE(is_witness(r.w, r.f, true));
      ASSERT_TRUE(find_confluent_witness(r.w, true).has_value());
      ++composed;
    }
  }
  EXPECT_GT(composed, 10u);
}

TEST(ComposeWitness, DoubledFibreTowerOverSquare) { expect_tower_composes(4, false); }

TEST(ComposeWitness, DoubledFibreTowerOverPentagon) { expect_tower_composes(5, false); }

TEST(ComposeWitness, DoubledFibreTowerOverTriangleForwardMaps) { expect_tower_composes(3, true); }

// A backward step onto a triangle lets the composite jump from c_j to c_{j+2} inside
// one fibre, which the fibre re-cut cannot absorb. A proper witness still exists.
TEST(ComposeWitness, TriangleBackwardStepDefeatsRecut) {
  auto c3 = testing::cycle(3);
  auto c6 = testing::cycle(6);
  auto c12 = testing::cycle(12);
  const WitnessPair outer{cycle_map(c6, c3, {0, 0, 2, 1, 2, 2}), Morphism(c6, c3, {0, 0, 1, 1, 2, 2})};
  const WitnessPair inner{cycle_map(c12, c6, {0, 1, 2, 1, 2, 2, 3, 3, 4, 4, 5, 5}),
                          Morphism(c12, c6, {0, 0, 1, 1, 2, 2, 3, 3, 4, 4, 5, 5})};
  ASSERT_TRUE(is_witness(outer.w, outer.f, true));
  ASSERT_TRUE(is_witness(inner.w, inner.f, true));
  EXPECT_THROW(compose_witness(outer, inner), Error);
  const CycleMap composite{compose(outer.w.map, inner.w.map), inner.w.domain, outer.w.codomain};
  EXPECT_TRUE(find_confluent_witness(composite, true).has_value());
}

TEST(ComposeWitness, RejectsImproperInput) {
  auto c3 = testing::cycle(3);
  CycleMap id = cycle_map(c3, c3, {0, 1, 2});
  WitnessPair p{id, id.map};
  EXPECT_THROW(compose_witness(p, p), InvalidArgument);
}

TEST(CycleAmalgam, Examples) {
  auto c3 = testing::cycle(3);
  CycleMap id = cycle_map(c3, c3, {0, 1, 2});
  CycleAmalgam same = cycle_amalgam(id, id);
  EXPECT_EQ(same.amalgam.graph->size(), 3u);

  auto c6 = testing::cycle(6);
  CycleMap cover = cycle_map(c6, c3, {0, 1, 2, 0, 1, 2});
  CycleAmalgam twelve = cycle_amalgam(cover, cover);
  EXPECT_EQ(twelve.fibre, 1u);
  EXPECT_EQ(twelve.amalgam.graph->size(), 1u * 2 * 2 * 3);
  EXPECT_EQ(winding_number(twelve.amalgam.to_first), 2u);
  EXPECT_EQ(winding_number(twelve.amalgam.to_second), 2u);
  EXPECT_TRUE(is_valid_amalgam(cover.map, cover.map, twelve.amalgam));
  EXPECT_EQ(winding_number(compose(cover.map, twelve.amalgam.to_first)), 4u);

  CycleMap fat = cycle_map(c6, c3, {0, 0, 1, 1, 2, 2});
  CycleAmalgam mixed = cycle_amalgam(fat, cover);
  EXPECT_EQ(mixed.amalgam.graph->size(), mixed.fibre * 1 * 2 * 3);
  EXPECT_TRUE(is_valid_amalgam(fat.map, cover.map, mixed.amalgam));
}

TEST(CycleAmalgam, WindingsMultiplyOnBothRoutes) {
  auto c3 = testing::cycle(3);
  auto c6 = testing::cycle(6);
  CycleMap cover = cycle_map(c6, c3, {0, 1, 2, 0, 1, 2});
  Amalgam general = connected_amalgam(cover.map, cover.map);
  ASSERT_TRUE(as_cycle(*general.graph).has_value());
  EXPECT_EQ(winding_number(general.to_first), 1u);
  EXPECT_EQ(winding_number(compose(cover.map, general.to_first)), 2u);
  CycleAmalgam special = cycle_amalgam(cover, cover);
  for (const Morphism* f0 : {&special.amalgam.to_first, &special.amalgam.to_second}) {
    EXPECT_EQ(winding_number(compose(cover.map, *f0)), winding_number(cover.map) * winding_number(*f0));
  }
}

}  // namespace
}  // namespace conflux

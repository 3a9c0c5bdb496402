#include <gtest/gtest.h>

#include "conflux/catalog.h"
#include "conflux/constructions.h"
#include "conflux/morphism.h"
#include "support.h"

namespace conflux {
namespace {

using testing::make_graph;

VertexSet set_of(const Graph& g, std::vector<std::string> tokens) {
  VertexSet s(g.size());
  for (const auto& t : tokens) s.insert(g.at(t));
  return s;
}

std::vector<GraphPtr> shared_catalog(std::size_t n) {
  std::vector<GraphPtr> out;
  for (Graph& g : connected_graphs_up_to(n)) out.push_back(share(std::move(g)));
  return out;
}

// Calls fn on every epimorphism between connected graphs with at most n vertices.
template <typename Fn>
void for_each_small_epi(std::size_t n, Fn&& fn) {
  const auto graphs = shared_catalog(n);
  for (const GraphPtr& g : graphs) {
    for (const GraphPtr& h : graphs) {
      if (h->size() > g->size()) continue;
      for_each_homomorphism(*g, *h, kDefaultSearchBudget, [&](const std::vector<Vertex>& images) {
        Morphism f(g, h, images);
        if (is_epimorphism(f)) fn(f);
        return true;
      });
    }
  }
}

TEST(Morphism, RejectsBadMaps) {
  auto g = make_graph({"a", "b"}, {{"a", "b"}});
  EXPECT_THROW(Morphism(g, g, {0}), InvalidArgument);
  EXPECT_THROW(Morphism(g, g, {0, 7}), InvalidArgument);
}

TEST(Classify, IdentityAndConstant) {
  auto ex = testing::triod_example();
  const Classification id = classify(identity(ex.g));
  EXPECT_TRUE(id.homomorphism && id.epimorphism && id.monotone && id.confluent);
  const Classification point = classify(to_point(ex.g));
  EXPECT_TRUE(point.epimorphism && point.monotone && point.confluent);
}

TEST(Classify, TriodExample) {
  auto ex = testing::triod_example();
  const Classification whole = classify(ex.f);
  EXPECT_TRUE(whole.epimorphism);
  EXPECT_TRUE(whole.confluent);
  EXPECT_FALSE(whole.monotone);
  EXPECT_FALSE(whole.violation.has_value());

  const Classification part = classify(ex.f_on_k);
  EXPECT_TRUE(part.epimorphism);
  EXPECT_FALSE(part.confluent);
  ASSERT_TRUE(part.violation.has_value());
  EXPECT_EQ(part.violation->edge, (Edge{ex.h->at("A"), ex.h->at("B")}));
  EXPECT_EQ(part.violation->component, set_of(*ex.k, {"a2"}));

  EXPECT_TRUE(confluent_by_definition(ex.f));
  EXPECT_FALSE(confluent_by_definition(ex.f_on_k));
}

TEST(Classify, NonHomomorphism) {
  auto p3 = testing::path(3);
  auto edge = testing::path(2);
  Morphism f(p3, p3, {0, 2, 1});
  EXPECT_FALSE(classify(f).homomorphism);
  EXPECT_FALSE(classify(f).confluent);
  Morphism onto_edge(p3, edge, {0, 1, 1});
  EXPECT_TRUE(classify(onto_edge).monotone);
}

TEST(Classify, FlagsMatchOraclesOnAllMapsUpToFour) {
  const auto graphs = shared_catalog(4);
  for (const GraphPtr& g : graphs) {
    for (const GraphPtr& h : graphs) {
      testing::for_each_map(g, h, [&](const Morphism& f) {
        const Classification c = classify(f);
        ASSERT_EQ(c.epimorphism, testing::oracle_epimorphism(f));
        ASSERT_EQ(c.monotone, testing::oracle_monotone(f));
        ASSERT_EQ(c.confluent, testing::oracle_confluent(f));
      });
    }
  }
}

TEST(Classify, EdgeTestMatchesDefinitionUpToFive) {
  std::size_t mismatches = 0, seen = 0;
  for_each_small_epi(5, [&](const Morphism& f) {
    ++seen;
    if (classify(f).confluent != confluent_by_definition(f)) ++mismatches;
  });
  EXPECT_GT(seen, 0u);
  EXPECT_EQ(mismatches, 0u);
}

TEST(Classify, MonotoneImpliesConfluentUpToFive) {
  for_each_small_epi(5, [&](const Morphism& f) {
    const Classification c = classify(f);
    if (c.monotone) EXPECT_TRUE(c.confluent);
  });
}

TEST(Classify, RestrictionToComponentIsConfluent) {
  for_each_small_epi(4, [&](const Morphism& f) {
    if (!is_confluent(f)) return;
    for (std::uint64_t q : testing::connected_masks(f.codomain())) {
      VertexSet target(f.codomain().size());
      for (Vertex v = 0; v < f.codomain().size(); ++v) {
        if (q & (std::uint64_t{1} << v)) target.insert(v);
      }
      for (const VertexSet& part : components(f.domain(), f.preimage(target))) {
        ASSERT_TRUE(is_confluent(restrict(f, part, target)));
      }
    }
  });
}

TEST(Compose, ConfluentClosedAndThreeMaps) {
  const auto graphs = shared_catalog(4);
  std::vector<Morphism> epis;
  for (const GraphPtr& g : graphs) {
    for (const GraphPtr& h : graphs) {
      if (h->size() > g->size()) continue;
      for_each_homomorphism(*g, *h, kDefaultSearchBudget, [&](const std::vector<Vertex>& images) {
        Morphism f(g, h, images);
        if (is_epimorphism(f)) epis.push_back(std::move(f));
        return true;
      });
    }
  }
  std::size_t triples = 0;
  for (const Morphism& inner : epis) {
    for (const Morphism& outer : epis) {
      if (outer.domain_ptr() != inner.codomain_ptr()) continue;
      ++triples;
      const bool composite = is_confluent(compose(outer, inner));
      if (is_confluent(inner) && is_confluent(outer)) ASSERT_TRUE(composite);
      if (composite) ASSERT_TRUE(is_confluent(outer));
    }
  }
  EXPECT_GT(triples, 1000u);
}

TEST(Compose, RejectsMismatch) {
  auto a = testing::path(2);
  auto b = testing::path(3);
  EXPECT_THROW(compose(identity(a), identity(b)), InvalidArgument);
}

TEST(EnumerateConfluentEpis, SmallCounts) {
  auto point = testing::path(1);
  auto edge = testing::path(2);
  EXPECT_EQ(enumerate_confluent_epis(point, point).size(), 1u);
  EXPECT_EQ(enumerate_confluent_epis(edge, point).size(), 1u);
  EXPECT_EQ(enumerate_confluent_epis(edge, edge).size(), 2u);
}

TEST(EnumerateConfluentEpis, CycleCountsMatchOracle) {
  const std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> frozen{
      {6, 3, 126}, {3, 3, 6}, {4, 4, 8}, {6, 6, 12}};
  for (const auto& [from, to, count] : frozen) {
    auto g = testing::cycle(from);
    auto h = testing::cycle(to);
    auto found = enumerate_confluent_epis(g, h);
    EXPECT_EQ(found.size(), count) << from << "->" << to;
    std::size_t oracle = 0;
    testing::for_each_map(g, h, [&](const Morphism& f) { oracle += testing::oracle_confluent(f) ? 1 : 0; });
    EXPECT_EQ(oracle, count);
    for (std::size_t i = 1; i < found.size(); ++i) EXPECT_LT(found[i - 1].map(), found[i].map());
  }
}

TEST(EnumerateConfluentEpis, Budget) {
  auto g = testing::cycle(8);
  auto h = testing::cycle(4);
  EXPECT_THROW(enumerate_confluent_epis(g, h, 50), BudgetExceeded);
}

void expect_good_arc(const Morphism& f, const VertexSet& target, const std::vector<Vertex>& arc, Vertex b) {
  ASSERT_FALSE(arc.empty());
  EXPECT_EQ(arc.front(), b);
  const VertexSet members = VertexSet::Of(f.domain().size(), arc);
  const ArcInfo info = is_arc(f.domain(), members);
  EXPECT_TRUE(info.arc);
  EXPECT_NE(std::find(info.ends.begin(), info.ends.end(), b), info.ends.end());
  const Classification c = classify(restrict(f, members, target));
  EXPECT_TRUE(c.epimorphism);
  EXPECT_TRUE(c.monotone);
}

TEST(LiftArc, Examples) {
  auto ex = testing::triod_example();
  const Vertex a1 = ex.g->at("a1");
  auto single = lift_arc(ex.f, set_of(*ex.h, {"A"}), a1);
  EXPECT_EQ(single, std::vector<Vertex>{a1});

  auto ab = set_of(*ex.h, {"A", "B"});
  auto lifted = lift_arc(ex.f, ab, a1);
  EXPECT_EQ(lifted, (std::vector<Vertex>{a1, ex.g->at("b1")}));
  expect_good_arc(ex.f, ab, lifted, a1);

  auto p5 = testing::path(5);
  auto arc = VertexSet::Of(5, {1, 2, 3});
  EXPECT_EQ(lift_arc(identity(p5), arc, 1), (std::vector<Vertex>{1, 2, 3}));
}

TEST(LiftArc, PropertiesOnTriod) {
  auto ex = testing::triod_example();
  const std::vector<std::vector<std::string>> arcs{{"B", "A", "C"}, {"C", "A", "D"}, {"B", "A"}, {"D", "A", "B"}};
  for (const auto& tokens : arcs) {
    const VertexSet target = set_of(*ex.h, tokens);
    const Vertex end = ex.h->at(tokens.front());
    for (Vertex b : ex.f.preimage(end).elements()) {
      expect_good_arc(ex.f, target, lift_arc(ex.f, target, b), b);
    }
  }
}

TEST(LiftArc, RejectsBadInput) {
  auto ex = testing::triod_example();
  EXPECT_THROW(lift_arc(ex.f, set_of(*ex.h, {"B", "C"}), ex.g->at("b1")), InvalidArgument);
  EXPECT_THROW(lift_arc(ex.f, set_of(*ex.h, {"A", "B"}), ex.g->at("c1")), InvalidArgument);
}

TEST(LiftCycle, Examples) {
  auto c3 = testing::cycle(3);
  auto c6 = testing::cycle(6);
  const OrientedCycle tri = *as_cycle(*c3);
  EXPECT_EQ(lift_cycle(identity(c3), tri).order(), tri.order());

  Morphism cover(c6, c3, {0, 1, 2, 0, 1, 2});
  const OrientedCycle lifted = lift_cycle(cover, tri);
  EXPECT_EQ(lifted.size(), 6u);
  EXPECT_EQ(cover.image(lifted.vertices()), c3->all());
  for (Vertex v : lifted.order()) EXPECT_EQ(cover(lifted.succ(v)), tri.succ(cover(v)));

  const CycleCover wrapped = wrap_copies(c3, tri, 3);
  const OrientedCycle again = lift_cycle(wrapped.map, tri);
  EXPECT_EQ(wrapped.map.image(again.vertices()), c3->all());
  EXPECT_TRUE(induced_cycles(*wrapped.graph).size() >= 1);
}

TEST(LiftCycle, DoubledCycleImage) {
  auto c4 = testing::cycle(4);
  const OrientedCycle square = *as_cycle(*c4);
  const CycleCover doubled = double_cycle(c4, square);
  const OrientedCycle lifted = lift_cycle(doubled.map, square);
  EXPECT_EQ(doubled.map.image(lifted.vertices()), c4->all());
  EXPECT_EQ(lifted.size(), 8u);
}

}  // namespace
}  // namespace conflux

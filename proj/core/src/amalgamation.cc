#include "conflux/amalgamation.h"

#include <algorithm>
#include <random>
#include <string>
#include <tuple>

#include "conflux/catalog.h"

namespace conflux {

std::string to_string(Amalgam::Route route) {
  switch (route) {
    case Amalgam::Route::kFibreProduct:
      return "fibre-product";
    case Amalgam::Route::kComponent:
      return "component";
    case Amalgam::Route::kSearch:
      return "search";
    case Amalgam::Route::kCycleBlocks:
      return "cycle-blocks";
  }
  return "unknown";
}

namespace {

void require_common_codomain(const Morphism& f, const Morphism& g) {
  if (f.codomain_ptr() != g.codomain_ptr() && !(f.codomain() == g.codomain())) {
    throw InvalidArgument("amalgamation needs maps into the same graph");
  }
}

Amalgam restrict_to(const Amalgam& whole, const VertexSet& part) {
  auto graph = share(induced_subgraph(*whole.graph, part));
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  part.for_each([&](Vertex v) {
    first.push_back(whole.to_first(v));
    second.push_back(whole.to_second(v));
  });
  return Amalgam{graph, Morphism(graph, whole.to_first.codomain_ptr(), std::move(first)),
                 Morphism(graph, whole.to_second.codomain_ptr(), std::move(second)),
                 Amalgam::Route::kComponent};
}

std::optional<Amalgam> search_amalgam(const Morphism& f, const Morphism& g, std::size_t budget) {
  const std::size_t limit = std::min<std::size_t>(f.domain().size() + g.domain().size(), 7);
  std::size_t spent = 0;
  for (std::size_t n = std::max(f.domain().size(), g.domain().size()); n <= limit; ++n) {
    for (const Graph& candidate : connected_graphs(n)) {
      auto d = share(candidate);
      const std::size_t left = budget > spent ? budget - spent : 0;
      std::vector<Morphism> onto_first;
      try {
        onto_first = enumerate_confluent_epis(d, f.domain_ptr(), left);
      } catch (const BudgetExceeded&) {
        throw BudgetExceeded("no connected amalgam found within budget", 0);
      }
      spent += onto_first.size() + 1;
      for (const Morphism& p : onto_first) {
        std::vector<VertexSet> allowed(d->size(), VertexSet(g.domain().size()));
        for (Vertex x = 0; x < d->size(); ++x) {
          for (Vertex c = 0; c < g.domain().size(); ++c) {
            if (g(c) == f(p(x))) allowed[x].insert(c);
          }
        }
        std::optional<Morphism> found;
        std::size_t visited = 0;
        try {
          for_each_homomorphism(
              *d, g.domain(), budget > spent ? budget - spent : 0,
              [&](const std::vector<Vertex>& map) {
                ++visited;
                Morphism q(d, g.domain_ptr(), map);
                if (!classify(q).confluent) return true;
                found = std::move(q);
                return false;
              },
              &allowed);
        } catch (const BudgetExceeded&) {
          throw BudgetExceeded("no connected amalgam found within budget", 0);
        }
        spent += visited + 1;
        if (found) return Amalgam{d, p, *found, Amalgam::Route::kSearch};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Amalgam standard_amalgam(const Morphism& f, const Morphism& g) {
  require_common_codomain(f, g);
  const Graph& b = f.domain();
  const Graph& c = g.domain();
  const std::size_t nc = c.size();
  std::vector<std::int64_t> index(b.size() * nc, -1);
  std::vector<std::string> names;
  std::vector<Vertex> first;
  std::vector<Vertex> second;
  for (Vertex x = 0; x < b.size(); ++x) {
    for (Vertex y = 0; y < nc; ++y) {
      if (f(x) != g(y)) continue;
      index[x * nc + y] = static_cast<std::int64_t>(names.size());
      names.push_back(pair_token(b.name(x), c.name(y)));
      first.push_back(x);
      second.push_back(y);
    }
  }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < names.size(); ++v) {
    const Vertex x = first[v];
    const Vertex y = second[v];
    std::vector<Vertex> xs = b.neighbors(x);
    xs.push_back(x);
    std::vector<Vertex> ys = c.neighbors(y);
    ys.push_back(y);
    for (Vertex x2 : xs) {
      for (Vertex y2 : ys) {
        const std::int64_t w = index[x2 * nc + y2];
        if (w > static_cast<std::int64_t>(v)) edges.emplace_back(v, static_cast<Vertex>(w));
      }
    }
  }
  auto d = share(Graph(std::move(names), edges));
  return Amalgam{d, Morphism(d, f.domain_ptr(), std::move(first)),
                 Morphism(d, g.domain_ptr(), std::move(second)), Amalgam::Route::kFibreProduct};
}

Amalgam connected_amalgam(const Morphism& f, const Morphism& g, std::size_t search_budget) {
  const Amalgam whole = standard_amalgam(f, g);
  auto parts = components(*whole.graph, whole.graph->all());
  std::stable_sort(parts.begin(), parts.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return *a.first() < *b.first();
  });
  for (const VertexSet& part : parts) {
    Amalgam candidate = restrict_to(whole, part);
    if (classify(candidate.to_first).confluent && classify(candidate.to_second).confluent) {
      return candidate;
    }
  }
  if (auto found = search_amalgam(f, g, search_budget)) return *found;
  throw BudgetExceeded("no connected amalgam found within budget", 0);
}

Amalgam common_refinement(const GraphPtr& b, const GraphPtr& c) {
  Morphism f = to_point(b);
  Morphism g(c, f.codomain_ptr(), std::vector<Vertex>(c->size(), 0));
  return connected_amalgam(f, g);
}

bool is_valid_amalgam(const Morphism& f, const Morphism& g, const Amalgam& d) {
  if (!d.graph || d.graph->size() == 0 || !is_connected(*d.graph)) return false;
  if (!(d.to_first.codomain() == f.domain()) || !(d.to_second.codomain() == g.domain())) {
    return false;
  }
  if (!classify(d.to_first).confluent || !classify(d.to_second).confluent) return false;
  for (Vertex v = 0; v < d.graph->size(); ++v) {
    if (f(d.to_first(v)) != g(d.to_second(v))) return false;
  }
  return true;
}

namespace {

std::string describe(const Morphism& f, std::size_t b_index, std::size_t a_index) {
  std::string out = "G" + std::to_string(b_index) + " -> G" + std::to_string(a_index) + " :";
  for (Vertex v : f.map()) out += " " + f.codomain().name(v);
  return out;
}

}  // namespace

AmalgamationReport verify_amalgamation(std::size_t max_vertices, std::size_t sample,
                                       std::uint64_t seed) {
  AmalgamationReport report;
  report.max_vertices = max_vertices;
  report.sample = sample;
  report.seed = seed;

  std::vector<GraphPtr> graphs;
  for (Graph& g : connected_graphs_up_to(max_vertices)) graphs.push_back(share(std::move(g)));
  // epis[a][b]: confluent epimorphisms graphs[b] -> graphs[a].
  std::vector<std::vector<std::vector<Morphism>>> epis(graphs.size());
  std::vector<std::size_t> per_target(graphs.size(), 0);
  for (std::size_t a = 0; a < graphs.size(); ++a) {
    epis[a].resize(graphs.size());
    for (std::size_t b = 0; b < graphs.size(); ++b) {
      if (graphs[b]->size() < graphs[a]->size()) continue;
      epis[a][b] = enumerate_confluent_epis(graphs[b], graphs[a]);
      per_target[a] += epis[a][b].size();
    }
  }
  for (std::size_t a = 0; a < graphs.size(); ++a) report.instances += per_target[a] * per_target[a];

  auto locate = [&](std::size_t index) {
    std::size_t a = 0;
    while (index >= per_target[a] * per_target[a]) index -= per_target[a] * per_target[a], ++a;
    std::size_t first = index / per_target[a];
    std::size_t second = index % per_target[a];
    std::size_t b = 0;
    while (first >= epis[a][b].size()) first -= epis[a][b].size(), ++b;
    std::size_t c = 0;
    while (second >= epis[a][c].size()) second -= epis[a][c].size(), ++c;
    return std::tuple{a, b, first, c, second};
  };

  auto check = [&](std::size_t index) {
    const auto [a, b, i, c, j] = locate(index);
    const Morphism& f = epis[a][b][i];
    const Morphism& g = epis[a][c][j];
    ++report.checked;
    std::string reason;
    try {
      const Amalgam d = connected_amalgam(f, g);
      if (is_valid_amalgam(f, g, d)) {
        ++report.passed;
        (d.route == Amalgam::Route::kSearch ? report.via_search : report.via_component)++;
        return;
      }
      reason = "result failed re-validation";
    } catch (const Error& e) {
      reason = e.what();
    }
    report.counterexamples.push_back({describe(f, b, a), describe(g, c, a), reason});
  };

  if (sample == 0 || sample >= report.instances) {
    for (std::size_t index = 0; index < report.instances; ++index) check(index);
  } else {
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < sample; ++k) check(static_cast<std::size_t>(rng() % report.instances));
  }
  return report;
}

}  // namespace conflux

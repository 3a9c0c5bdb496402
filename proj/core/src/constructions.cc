#include "conflux/constructions.h"

#include <algorithm>
#include <cstdint>
#include <string>

namespace conflux {
namespace {

using Mask = std::uint64_t;

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  s.for_each([&](Vertex v) { m |= Mask{1} << v; });
  return m;
}

VertexSet from_mask(std::size_t n, Mask m) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v) {
    if ((m >> v) & 1U) s.insert(v);
  }
  return s;
}

// connected[m] for every subset m of an n-vertex graph, n small.
std::vector<bool> connected_subsets(const Graph& g) {
  const std::size_t n = g.size();
  std::vector<Mask> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v) nbr[v] = to_mask(g.neighborhood(v));
  std::vector<bool> connected(std::size_t{1} << n, false);
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const Mask start = m & (~m + 1);
    Mask seen = start;
    Mask frontier = start;
    while (frontier != 0) {
      Mask next = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) next |= nbr[__builtin_ctzll(f)];
      next &= m & ~seen;
      seen |= next;
      frontier = next;
    }
    connected[m] = seen == m;
  }
  return connected;
}

void require_edge(const Graph& g, Vertex a, Vertex b) {
  if (a >= g.size() || b >= g.size() || a == b || !g.adjacent(a, b)) {
    throw InvalidArgument("no edge between the given vertices");
  }
}

}  // namespace

EdgeSplit split_edge(const GraphPtr& g, Vertex a, Vertex b, bool map_to_first) {
  require_edge(*g, a, b);
  std::vector<std::string> names = g->names();
  const auto s = static_cast<Vertex>(names.size());
  names.push_back(fresh_token(*g, "s"));
  std::vector<Edge> edges;
  for (const auto& e : g->edges()) {
    if (e != Edge{std::min(a, b), std::max(a, b)}) edges.push_back(e);
  }
  edges.emplace_back(a, s);
  edges.emplace_back(s, b);
  auto h = share(Graph(std::move(names), edges));
  std::vector<Vertex> map(h->size());
  for (Vertex v = 0; v < s; ++v) map[v] = v;
  map[s] = map_to_first ? a : b;
  return EdgeSplit{h, Morphism(h, g, std::move(map)), s};
}

bool separates_triple(const Morphism& f, Vertex a, Vertex b, Vertex c) {
  const VertexSet over_a = f.preimage(a);
  const VertexSet over_c = f.preimage(c);
  bool clean = true;
  f.preimage(b).for_each([&](Vertex q) {
    const VertexSet& nb = f.domain().neighborhood(q);
    if (nb.intersects(over_a) && nb.intersects(over_c)) clean = false;
  });
  return clean;
}

Construction indecomposability_witness(const GraphPtr& f) {
  const Graph& base = *f;
  if (!is_connected(base)) throw InvalidArgument("indecomposability_witness: graph is disconnected");
  const auto edges = base.edges();
  const std::size_t n = edges.size();
  if (n == 0) throw InvalidArgument("indecomposability_witness: graph has no edges");
  const std::size_t copies = 2 * n + 1;
  const std::size_t size = base.size();
  auto at = [&](Vertex v, std::size_t i) { return static_cast<Vertex>((i - 1) * size + v); };
  std::vector<std::string> names;
  std::vector<Vertex> map;
  for (std::size_t i = 1; i <= copies; ++i) {
    for (Vertex v = 0; v < size; ++v) {
      names.push_back(pair_token(base.name(v), std::to_string(i)));
      map.push_back(v);
    }
  }
  std::vector<Edge> out;
  for (std::size_t i = 1; i <= copies; ++i) {
    for (const auto& [u, v] : edges) out.emplace_back(at(u, i), at(v, i));
  }
  for (std::size_t i = 1; i <= n; ++i) {
    const auto& [a, b] = edges[i - 1];
    out.emplace_back(at(a, i), at(b, i + 1));
    out.emplace_back(at(a, n + i), at(b, n + i + 1));
  }
  auto g = share(Graph(std::move(names), out));
  return Construction{g, Morphism(g, f, std::move(map))};
}

TwoPassResult check_two_pass(const Morphism& f) {
  const Graph& g = f.domain();
  const std::size_t n = g.size();
  if (n > 26 || f.codomain().size() > 64) {
    throw BudgetExceeded("two-pass check is limited to 26 domain vertices", 0);
  }
  TwoPassResult result;
  if (n == 0) return result;
  const std::vector<bool> connected = connected_subsets(g);
  const Mask full = (Mask{1} << n) - 1;
  const Mask target = f.codomain().size() == 64 ? ~Mask{0} : (Mask{1} << f.codomain().size()) - 1;
  auto onto = [&](Mask m) {
    Mask img = 0;
    for (Mask r = m; r != 0; r &= r - 1) img |= Mask{1} << f(static_cast<Vertex>(__builtin_ctzll(r)));
    return img == target;
  };
  for (Mask a = 1; a <= full; ++a) {
    if (!connected[a] || onto(a)) continue;
    // B must contain everything A misses; walk the subsets of A to add.
    const Mask rest = full & ~a;
    for (Mask extra = a;; extra = (extra - 1) & a) {
      const Mask b = rest | extra;
      if (b != 0) {
        ++result.pairs;
        if (connected[b] && !onto(b)) {
          result.holds = false;
          result.counterexample.emplace(from_mask(n, a), from_mask(n, b));
          return result;
        }
      }
      if (extra == 0) break;
    }
  }
  return result;
}

Construction delta_double(const GraphPtr& g, Vertex p) {
  const std::size_t n = g->size();
  if (p >= n) throw InvalidArgument("vertex out of range");
  std::vector<std::string> names;
  std::vector<Vertex> map;
  std::vector<Vertex> second(n);
  for (Vertex v = 0; v < n; ++v) {
    names.push_back(pair_token(g->name(v), "0"));
    map.push_back(v);
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v == p) {
      second[v] = p;
      continue;
    }
    second[v] = static_cast<Vertex>(names.size());
    names.push_back(pair_token(g->name(v), "1"));
    map.push_back(v);
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g->edges()) {
    edges.emplace_back(u, v);
    edges.emplace_back(second[u], second[v]);
  }
  auto d = share(Graph(std::move(names), edges));
  return Construction{d, Morphism(d, g, std::move(map))};
}

Construction extend_confluent(const Morphism& f, const GraphPtr& g, const std::vector<Vertex>& embed) {
  const Graph& u = f.codomain();
  const Graph& w = f.domain();
  if (!classify(f).confluent) throw InvalidArgument("the map to extend is not a confluent epimorphism");
  if (embed.size() != u.size()) throw InvalidArgument("embedding must place every vertex of U");
  VertexSet placed(g->size());
  for (Vertex x : embed) {
    if (x >= g->size() || placed.contains(x)) throw InvalidArgument("embedding is not injective");
    placed.insert(x);
  }
  for (Vertex x = 0; x < u.size(); ++x) {
    for (Vertex y = x + 1; y < u.size(); ++y) {
      if (u.adjacent(x, y) != g->adjacent(embed[x], embed[y])) {
        throw InvalidArgument("U is not embedded as an induced subgraph");
      }
    }
  }
  if (!is_connected(u) || !is_connected(*g)) throw InvalidArgument("U and G must be connected");

  GraphBuilder builder;
  std::vector<Vertex> map;
  for (Vertex x = 0; x < w.size(); ++x) {
    builder.add_vertex(w.name(x));
    map.push_back(embed[f(x)]);
  }
  std::vector<std::int64_t> outer(g->size(), -1);
  for (Vertex y = 0; y < g->size(); ++y) {
    if (placed.contains(y)) continue;
    std::string token = g->name(y);
    while (builder.has_token(token)) token += "'";
    outer[y] = builder.add_vertex(token);
    map.push_back(y);
  }
  for (const auto& [x, y] : w.edges()) builder.add_edge(x, y);
  for (const auto& [x, y] : g->edges()) {
    if (outer[x] >= 0 && outer[y] >= 0) {
      builder.add_edge(static_cast<Vertex>(outer[x]), static_cast<Vertex>(outer[y]));
    }
  }
  for (Vertex x = 0; x < w.size(); ++x) {
    for (Vertex y : g->neighbors(embed[f(x)])) {
      if (outer[y] >= 0) builder.add_edge(x, static_cast<Vertex>(outer[y]));
    }
  }
  auto h = share(builder.build());
  return Construction{h, Morphism(h, g, std::move(map))};
}

UnfoldingResult unfold(const GraphPtr& b, const std::vector<VertexSet>& chain) {
  const Graph& base = *b;
  if (chain.empty()) throw InvalidArgument("unfolding needs a nonempty chain");
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (chain[i].universe() != base.size() || chain[i].empty() || !is_connected(base, chain[i])) {
      throw InvalidArgument("chain member " + std::to_string(i) + " is not a connected set");
    }
    if (i > 0 && (!chain[i - 1].is_subset_of(chain[i]) || chain[i - 1] == chain[i])) {
      throw InvalidArgument("chain is not strictly increasing at " + std::to_string(i));
    }
  }
  if (chain.back() != base.all()) throw InvalidArgument("chain must end with the whole graph");

  std::vector<std::size_t> level(base.size(), 0);
  for (Vertex t = 0; t < base.size(); ++t) {
    while (!chain[level[t]].contains(t)) ++level[t];
  }

  GraphBuilder builder;
  std::vector<Vertex> map;
  std::vector<std::vector<Vertex>> members;  // per copy, vertices of C
  std::vector<std::vector<std::int64_t>> local;  // per copy, B vertex -> C vertex
  std::vector<UnfoldCopy> copies;

  auto attach = [&](std::size_t lvl, std::size_t step, std::optional<Vertex> parent,
                    std::optional<Vertex> anchor_in_b) {
    const std::size_t id = copies.size();
    const std::string tag = std::to_string(id);
    std::vector<std::int64_t> where(base.size(), -1);
    std::vector<Vertex> mine;
    chain[lvl].for_each([&](Vertex x) {
      const Vertex v = builder.add_vertex(pair_token(base.name(x), tag));
      where[x] = v;
      mine.push_back(v);
      map.push_back(x);
    });
    chain[lvl].for_each([&](Vertex x) {
      for (Vertex y : base.neighbors(x)) {
        if (x < y && where[y] >= 0) {
          builder.add_edge(static_cast<Vertex>(where[x]), static_cast<Vertex>(where[y]));
        }
      }
    });
    UnfoldCopy copy;
    copy.level = lvl;
    copy.step = step;
    copy.parent = parent;
    if (parent) {
      const auto anchor = static_cast<Vertex>(where[*anchor_in_b]);
      builder.add_edge(*parent, anchor);
      copy.anchor = anchor;
    }
    copies.push_back(copy);
    members.push_back(std::move(mine));
    local.push_back(std::move(where));
    return id;
  };

  const std::size_t steps = chain.size() - 1;
  std::vector<std::size_t> layer_end{1};
  attach(0, 0, std::nullopt, std::nullopt);
  std::vector<std::size_t> frontier{0};
  for (std::size_t k = 1; k <= steps; ++k) {
    std::vector<std::size_t> next;
    for (std::size_t id : frontier) {
      const std::size_t j = copies[id].level;
      chain[j].for_each([&](Vertex x) {
        const auto xc = static_cast<Vertex>(local[id][x]);
        for (Vertex t : base.neighbors(x)) {
          if (chain[j].contains(t)) continue;
          next.push_back(attach(level[t], k, xc, t));
        }
      });
    }
    layer_end.push_back(copies.size());
    frontier = std::move(next);
  }

  auto c = share(builder.build());
  UnfoldingResult out{c, Morphism(c, b, std::move(map)), VertexSet(c->size()), {}, chain, {}};
  for (std::size_t id = 0; id < copies.size(); ++id) {
    copies[id].members = VertexSet::Of(c->size(), members[id]);
  }
  for (std::size_t k = 0; k <= steps; ++k) {
    VertexSet layer(c->size());
    for (std::size_t id = 0; id < layer_end[k]; ++id) layer |= copies[id].members;
    out.layers.push_back(std::move(layer));
  }
  out.kernel = out.layers[std::min<std::size_t>(1, steps)];
  out.copies = std::move(copies);
  return out;
}

VertexSet unfold_component(const UnfoldingResult& u, std::size_t k) {
  if (k >= u.chain.size()) throw InvalidArgument("chain index out of range");
  return component_of(*u.graph, u.map.preimage(u.chain[k]), *u.layers[0].first());
}

Graph collapse_copies(const UnfoldingResult& u) {
  const Graph& c = *u.graph;
  std::vector<std::size_t> owner(c.size(), 0);
  std::vector<std::string> names;
  for (std::size_t id = 0; id < u.copies.size(); ++id) {
    u.copies[id].members.for_each([&](Vertex v) { owner[v] = id; });
    names.push_back(std::to_string(id));
  }
  std::vector<Edge> edges;
  for (const auto& [x, y] : c.edges()) {
    if (owner[x] != owner[y]) edges.emplace_back(owner[x], owner[y]);
  }
  return Graph(std::move(names), edges);
}

bool is_tree(const Graph& g) {
  return g.size() > 0 && is_connected(g) && g.edge_count() + 1 == g.size();
}

Construction unicoherence_witness(const GraphPtr& f, const CycleDivision& div) {
  const Graph& base = *f;
  if (!is_cycle_division(base, div)) throw InvalidArgument("not a cycle division");
  const std::size_t n = base.size();
  const VertexSet k_minus_c = div.k - div.c;
  std::vector<std::string> names;
  std::vector<Vertex> map;
  for (Vertex level = 0; level < 2; ++level) {
    for (Vertex v = 0; v < n; ++v) {
      names.push_back(pair_token(base.name(v), std::to_string(level)));
      map.push_back(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& [x, y] : base.edges()) {
    const bool crossed = (k_minus_c.contains(x) && div.c.contains(y)) ||
                         (k_minus_c.contains(y) && div.c.contains(x));
    if (crossed) {
      edges.emplace_back(x, static_cast<Vertex>(n + y));
      edges.emplace_back(static_cast<Vertex>(n + x), y);
    } else {
      edges.emplace_back(x, y);
      edges.emplace_back(static_cast<Vertex>(n + x), static_cast<Vertex>(n + y));
    }
  }
  auto g = share(Graph(std::move(names), edges));
  return Construction{g, Morphism(g, f, std::move(map))};
}

std::optional<CycleDivision> division_over(const Morphism& alpha, const CycleDivision& div) {
  const Graph& g = alpha.domain();
  const std::size_t n = g.size();
  if (n > 20) throw BudgetExceeded("division search is limited to 20 vertices", 0);
  const std::vector<bool> connected = connected_subsets(g);
  std::vector<VertexSet> over_h;
  std::vector<VertexSet> over_k;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    if (!connected[m]) continue;
    const VertexSet s = from_mask(n, m);
    const VertexSet img = alpha.image(s);
    if (img == div.h) over_h.push_back(s);
    if (img == div.k) over_k.push_back(s);
  }
  const VertexSet over_c = alpha.preimage(div.c);
  const VertexSet over_d = alpha.preimage(div.d);
  for (const VertexSet& h : over_h) {
    for (const VertexSet& k : over_k) {
      const VertexSet meet = h & k;
      CycleDivision cand{h, k, meet & over_c, meet & over_d};
      if (alpha.image(cand.c) != div.c || alpha.image(cand.d) != div.d) continue;
      if (is_cycle_division(g, cand)) return cand;
    }
  }
  return std::nullopt;
}

CycleCover wrap_copies(const GraphPtr& a, const OrientedCycle& c, std::size_t m) {
  const Graph& base = *a;
  if (m == 0) throw InvalidArgument("need at least one copy");
  if (c.universe() != base.size()) throw InvalidArgument("cycle does not belong to the graph");
  OrientedCycle(base, c.order());  // revalidates

  // The least edge of C, oriented along C.
  Edge cut{base.size(), base.size()};
  for (std::size_t i = 0; i < c.size(); ++i) {
    const Vertex u = c.at(i);
    const Vertex v = c.at(i + 1);
    const Edge key{std::min(u, v), std::max(u, v)};
    if (key < Edge{std::min(cut.first, cut.second), std::max(cut.first, cut.second)}) cut = {u, v};
  }
  const auto [x, y] = cut;
  const std::size_t n = base.size();
  auto at = [&](Vertex v, std::size_t i) { return static_cast<Vertex>(i * n + v); };
  std::vector<std::string> names;
  std::vector<Vertex> map;
  for (std::size_t i = 0; i < m; ++i) {
    for (Vertex v = 0; v < n; ++v) {
      names.push_back(pair_token(base.name(v), std::to_string(i + 1)));
      map.push_back(v);
    }
  }
  std::vector<Edge> edges;
  const Edge skip{std::min(x, y), std::max(x, y)};
  for (std::size_t i = 0; i < m; ++i) {
    for (const auto& e : base.edges()) {
      if (e != skip) edges.emplace_back(at(e.first, i), at(e.second, i));
    }
    edges.emplace_back(at(x, i), at(y, (i + 1) % m));
  }
  auto b = share(Graph(std::move(names), edges));
  std::vector<Vertex> order;
  const std::size_t start = c.position(y);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t s = 0; s < c.size(); ++s) order.push_back(at(c.at(start + s), i));
  }
  OrientedCycle lifted(*b, std::move(order));
  return CycleCover{b, Morphism(b, a, std::move(map)), std::move(lifted)};
}

Construction attach_cycle_vertex(const GraphPtr& a, Vertex av, Vertex cv, Vertex* added) {
  require_edge(*a, av, cv);
  std::vector<std::string> names = a->names();
  const auto b = static_cast<Vertex>(names.size());
  names.push_back(fresh_token(*a, "b"));
  std::vector<Edge> edges = a->edges();
  edges.emplace_back(b, av);
  edges.emplace_back(b, cv);
  auto g = share(Graph(std::move(names), edges));
  std::vector<Vertex> map(g->size());
  for (Vertex v = 0; v < b; ++v) map[v] = v;
  map[b] = av;
  if (added) *added = b;
  return Construction{g, Morphism(g, a, std::move(map))};
}

CycleCover double_cycle(const GraphPtr& a, const OrientedCycle& c) {
  const Graph& base = *a;
  if (c.universe() != base.size()) throw InvalidArgument("cycle does not belong to the graph");
  OrientedCycle(base, c.order());
  GraphBuilder builder;
  std::vector<Vertex> map;
  std::vector<std::int64_t> kept(base.size(), -1);
  for (Vertex v = 0; v < base.size(); ++v) {
    if (c.contains(v)) continue;
    kept[v] = builder.add_vertex(base.name(v));
    map.push_back(v);
  }
  std::vector<Vertex> order;
  for (Vertex v : c.order()) {
    order.push_back(builder.add_vertex(pair_token(base.name(v), "0")));
    map.push_back(v);
    order.push_back(builder.add_vertex(pair_token(base.name(v), "1")));
    map.push_back(v);
  }
  for (const auto& [u, v] : base.edges()) {
    if (kept[u] >= 0 && kept[v] >= 0) {
      builder.add_edge(static_cast<Vertex>(kept[u]), static_cast<Vertex>(kept[v]));
    }
  }
  for (std::size_t i = 0; i < order.size(); ++i) builder.add_edge(order[i], order[(i + 1) % order.size()]);
  for (Vertex x = 0; x < base.size(); ++x) {
    if (kept[x] < 0) continue;
    for (Vertex y : order) {
      if (base.adjacent(x, map[y])) builder.add_edge(static_cast<Vertex>(kept[x]), y);
    }
  }
  auto b = share(builder.build());
  OrientedCycle doubled(*b, std::move(order));
  return CycleCover{b, Morphism(b, a, std::move(map)), std::move(doubled)};
}

}  // namespace conflux

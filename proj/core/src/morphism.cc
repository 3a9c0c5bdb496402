#include "conflux/morphism.h"

#include <algorithm>
#include <deque>
#include <string>

namespace conflux {

Morphism::Morphism(GraphPtr domain, GraphPtr codomain, std::vector<Vertex> map)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), map_(std::move(map)) {
  if (!domain_ || !codomain_) throw InvalidArgument("morphism needs both graphs");
  if (map_.size() != domain_->size()) {
    throw InvalidArgument("map must assign an image to every domain vertex");
  }
  for (Vertex v : map_) {
    if (v >= codomain_->size()) throw InvalidArgument("map image out of range");
  }
}

VertexSet Morphism::image(const VertexSet& s) const {
  VertexSet out(codomain_->size());
  s.for_each([&](Vertex v) { out.insert(map_[v]); });
  return out;
}

VertexSet Morphism::preimage(const VertexSet& s) const {
  VertexSet out(domain_->size());
  for (Vertex v = 0; v < map_.size(); ++v) {
    if (s.contains(map_[v])) out.insert(v);
  }
  return out;
}

VertexSet Morphism::preimage(Vertex v) const {
  VertexSet out(domain_->size());
  for (Vertex u = 0; u < map_.size(); ++u) {
    if (map_[u] == v) out.insert(u);
  }
  return out;
}

Morphism identity(const GraphPtr& g) {
  std::vector<Vertex> map(g->size());
  for (Vertex v = 0; v < map.size(); ++v) map[v] = v;
  return Morphism(g, g, std::move(map));
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.codomain_ptr() != outer.domain_ptr() && !(inner.codomain() == outer.domain())) {
    throw InvalidArgument("composition needs matching codomain and domain");
  }
  std::vector<Vertex> map(inner.domain().size());
  for (Vertex v = 0; v < map.size(); ++v) map[v] = outer(inner(v));
  return Morphism(inner.domain_ptr(), outer.codomain_ptr(), std::move(map));
}

Morphism restrict(const Morphism& f, const VertexSet& source, const VertexSet& target) {
  if (!f.image(source).is_subset_of(target)) {
    throw InvalidArgument("restriction target does not contain the image");
  }
  std::vector<std::int64_t> local(f.codomain().size(), -1);
  Vertex i = 0;
  target.for_each([&](Vertex v) { local[v] = i++; });
  std::vector<Vertex> map;
  source.for_each([&](Vertex v) { map.push_back(static_cast<Vertex>(local[f(v)])); });
  return Morphism(share(induced_subgraph(f.domain(), source)),
                  share(induced_subgraph(f.codomain(), target)), std::move(map));
}

Morphism to_point(const GraphPtr& g) {
  return Morphism(g, share(Graph({"*"}, std::vector<Edge>{})), std::vector<Vertex>(g->size(), 0));
}

bool is_homomorphism(const Morphism& f) {
  for (const auto& [u, v] : f.domain().edges()) {
    if (!f.codomain().adjacent(f(u), f(v))) return false;
  }
  return true;
}

namespace {

bool covers(const Morphism& f) {
  if (f.image().size() != f.codomain().size()) return false;
  const std::size_t m = f.codomain().size();
  std::vector<bool> hit(m * m, false);
  for (const auto& [u, v] : f.domain().edges()) {
    const Vertex a = std::min(f(u), f(v));
    const Vertex b = std::max(f(u), f(v));
    if (a != b) hit[a * m + b] = true;
  }
  for (const auto& [a, b] : f.codomain().edges()) {
    if (!hit[a * m + b]) return false;
  }
  return true;
}

}  // namespace

bool is_epimorphism(const Morphism& f) { return is_homomorphism(f) && covers(f); }

Classification classify(const Morphism& f) {
  Classification c;
  c.homomorphism = is_homomorphism(f);
  if (!c.homomorphism) return c;
  c.epimorphism = covers(f);

  const Graph& g = f.domain();
  const Graph& h = f.codomain();
  std::vector<VertexSet> fibres(h.size(), VertexSet(g.size()));
  for (Vertex v = 0; v < g.size(); ++v) fibres[f(v)].insert(v);

  bool fibres_connected = true;
  for (const VertexSet& fibre : fibres) fibres_connected = fibres_connected && is_connected(g, fibre);
  bool edge_fibres_connected = true;
  for (const auto& [p, q] : h.edges()) {
    const VertexSet both = fibres[p] | fibres[q];
    const auto parts = components(g, both);
    edge_fibres_connected = edge_fibres_connected && parts.size() <= 1;
    if (c.violation) continue;
    for (const VertexSet& part : parts) {
      if (!part.intersects(fibres[p]) || !part.intersects(fibres[q])) {
        c.violation = ConfluenceViolation{{p, q}, part};
        break;
      }
    }
  }
  c.monotone = c.epimorphism && fibres_connected && edge_fibres_connected;
  c.confluent = c.epimorphism && !c.violation;
  return c;
}

bool is_confluent(const Morphism& f) { return classify(f).confluent; }

bool confluent_by_definition(const Morphism& f, std::size_t bound) {
  const Graph& h = f.codomain();
  if (h.size() > bound || h.size() > 63) {
    throw BudgetExceeded("definition check is limited to " + std::to_string(bound) +
                             " codomain vertices",
                         0);
  }
  if (!is_epimorphism(f)) return false;
  const std::uint64_t limit = std::uint64_t{1} << h.size();
  for (std::uint64_t mask = 1; mask < limit; ++mask) {
    VertexSet q(h.size());
    for (Vertex v = 0; v < h.size(); ++v) {
      if ((mask >> v) & 1U) q.insert(v);
    }
    if (!is_connected(h, q)) continue;
    for (const VertexSet& part : components(f.domain(), f.preimage(q))) {
      if (f.image(part) != q) return false;
    }
  }
  return true;
}

void for_each_homomorphism(const Graph& g, const Graph& h, std::size_t budget,
                           const std::function<bool(const std::vector<Vertex>&)>& visit,
                           const std::vector<VertexSet>* allowed) {
  const std::size_t n = g.size();
  std::vector<Vertex> map(n, 0);
  std::size_t nodes = 0;
  std::size_t complete = 0;
  bool stop = false;
  std::function<void(Vertex)> rec = [&](Vertex v) {
    if (stop) return;
    if (v == n) {
      ++complete;
      stop = !visit(map);
      return;
    }
    for (Vertex t = 0; t < h.size() && !stop; ++t) {
      if (allowed && !(*allowed)[v].contains(t)) continue;
      if (++nodes > budget) {
        throw BudgetExceeded("homomorphism search exceeded " + std::to_string(budget) + " nodes",
                             complete);
      }
      bool ok = true;
      for (Vertex u : g.neighbors(v)) {
        if (u >= v) break;
        if (!h.adjacent(map[u], t)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      map[v] = t;
      rec(v + 1);
    }
  };
  if (n == 0) {
    visit(map);
    return;
  }
  rec(0);
}

std::vector<Morphism> enumerate_confluent_epis(const GraphPtr& g, const GraphPtr& h,
                                               std::size_t budget) {
  std::vector<Morphism> out;
  try {
    for_each_homomorphism(*g, *h, budget, [&](const std::vector<Vertex>& map) {
      Morphism f(g, h, map);
      if (classify(f).confluent) out.push_back(std::move(f));
      return true;
    });
  } catch (const BudgetExceeded& e) {
    throw BudgetExceeded(std::string(e.what()) + " after " + std::to_string(out.size()) +
                             " confluent epimorphisms",
                         out.size());
  }
  return out;
}

std::vector<Vertex> lift_arc(const Morphism& f, const VertexSet& arc, Vertex b) {
  const Graph& g = f.domain();
  const Graph& h = f.codomain();
  const std::vector<Vertex> along = arc_order(h, arc, f(b));
  std::vector<std::int64_t> rank(h.size(), -1);
  for (std::size_t i = 0; i < along.size(); ++i) rank[along[i]] = static_cast<std::int64_t>(i);
  const auto last = static_cast<std::int64_t>(along.size()) - 1;
  if (last == 0) return {b};

  // Breadth-first search over walks whose position along the arc never
  // decreases. A shortest such walk has no chords: a chord would be a
  // legal shortcut.
  std::vector<std::int64_t> parent(g.size(), -1);
  std::deque<Vertex> queue{b};
  parent[b] = b;
  std::optional<Vertex> end;
  while (!queue.empty() && !end) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (parent[y] >= 0 || rank[f(y)] < 0) continue;
      const std::int64_t step = rank[f(y)] - rank[f(x)];
      if (step != 0 && step != 1) continue;
      parent[y] = x;
      if (rank[f(y)] == last) {
        end = y;
        break;
      }
      queue.push_back(y);
    }
  }
  if (!end) throw InvalidArgument("the arc does not lift; the map is not confluent over it");
  std::vector<Vertex> path{*end};
  while (path.back() != b) path.push_back(static_cast<Vertex>(parent[path.back()]));
  std::reverse(path.begin(), path.end());
  return path;
}

OrientedCycle lift_cycle(const Morphism& f, const OrientedCycle& c) {
  const Graph& g = f.domain();
  const std::size_t n = c.size();
  const VertexSet over = f.preimage(c.vertices());
  const std::size_t span = over.size();
  auto step = [&](Vertex x, Vertex y) -> std::int64_t {
    const std::size_t d = (c.position(f(y)) + n - c.position(f(x))) % n;
    return d <= 1 ? static_cast<std::int64_t>(d) : -1;
  };
  // Closed walks that never step backwards along C and advance at least once
  // around it. The shortest one is a chordless cycle: a chord always splits
  // it into a shorter closed walk of the same kind.
  std::vector<Vertex> best;
  const std::size_t states = g.size() * (span + 1);
  over.for_each([&](Vertex start) {
    if (f(start) != c.at(0)) return;
    std::vector<std::int64_t> parent(states, -1);
    auto id = [&](Vertex x, std::size_t adv) { return x * (span + 1) + adv; };
    std::deque<std::pair<Vertex, std::size_t>> queue{{start, 0}};
    parent[id(start, 0)] = static_cast<std::int64_t>(id(start, 0));
    std::optional<std::size_t> hit;
    while (!queue.empty() && !hit) {
      const auto [x, adv] = queue.front();
      queue.pop_front();
      for (Vertex y : g.neighbors(x)) {
        if (!over.contains(y)) continue;
        const std::int64_t s = step(x, y);
        if (s < 0) continue;
        const std::size_t next = adv + static_cast<std::size_t>(s);
        if (next > span) continue;
        const std::size_t sid = id(y, next);
        if (parent[sid] >= 0) continue;
        parent[sid] = static_cast<std::int64_t>(id(x, adv));
        if (y == start && next > 0) {
          hit = sid;
          break;
        }
        queue.emplace_back(y, next);
      }
    }
    if (!hit) return;
    std::vector<Vertex> walk;
    for (std::size_t s = static_cast<std::size_t>(parent[*hit]);; s = static_cast<std::size_t>(parent[s])) {
      walk.push_back(static_cast<Vertex>(s / (span + 1)));
      if (s == id(start, 0)) break;
    }
    std::reverse(walk.begin(), walk.end());
    if (best.empty() || walk.size() < best.size()) best = std::move(walk);
  });
  if (best.empty()) throw InvalidArgument("the cycle does not lift; the map is not confluent over it");
  return OrientedCycle(g, std::move(best));
}

}  // namespace conflux

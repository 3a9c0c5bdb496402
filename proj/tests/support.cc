#include "support.h"

#include <functional>

namespace conflux::testing {

GraphPtr make_graph(std::vector<std::string> vertices,
                    const std::vector<std::pair<std::string, std::string>>& edges) {
  return share(Graph(std::move(vertices), edges));
}

Morphism make_map(const GraphPtr& domain, const GraphPtr& codomain,
                  const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<Vertex> map(domain->size(), 0);
  for (const auto& [from, to] : pairs) map[domain->at(from)] = codomain->at(to);
  return Morphism(domain, codomain, std::move(map));
}

TriodExample triod_example() {
  const std::vector<std::pair<std::string, std::string>> cycle_edges{
      {"a1", "c1"}, {"c1", "a2"}, {"a2", "d1"}, {"d1", "a3"}, {"a3", "b1"}, {"b1", "a1"}};
  auto edges = cycle_edges;
  edges.insert(edges.end(), {{"b2", "a2"}, {"b2", "b1"}, {"c2", "a3"}, {"c2", "c1"}, {"d2", "a1"}, {"d2", "d1"}});
  TriodExample ex;
  ex.k = make_graph({"a1", "c1", "a2", "d1", "a3", "b1"}, cycle_edges);
  ex.g = make_graph({"a1", "c1", "a2", "d1", "a3", "b1", "b2", "c2", "d2"}, edges);
  ex.h = make_graph({"A", "B", "C", "D"}, {{"A", "B"}, {"A", "C"}, {"A", "D"}});
  auto letter = [&](const GraphPtr& dom) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const std::string& t : dom->names()) pairs.emplace_back(t, std::string(1, char(t[0] - 'a' + 'A')));
    return make_map(dom, ex.h, pairs);
  };
  ex.f = letter(ex.g);
  ex.f_on_k = letter(ex.k);
  return ex;
}

std::pair<GraphPtr, std::vector<VertexSet>> unfolding_example() {
  auto b = make_graph({"a", "b", "c", "d", "e"},
                      {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"c", "d"}, {"c", "e"}, {"d", "e"}});
  auto set = [&](std::vector<std::string> tokens) {
    VertexSet s(b->size());
    for (const auto& t : tokens) s.insert(b->at(t));
    return s;
  };
  return {b, {set({"a", "b"}), set({"a", "b", "c"}), set({"a", "b", "c", "d"}), b->all()}};
}

GraphPtr path(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("p" + std::to_string(i));
    if (i > 0) edges.emplace_back(names[i - 1], names[i]);
  }
  return make_graph(names, edges);
}

GraphPtr cycle(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> edges;
  for (std::size_t i = 0; i < n; ++i) names.push_back("c" + std::to_string(i));
  for (std::size_t i = 0; i < n; ++i) edges.emplace_back(names[i], names[(i + 1) % n]);
  return make_graph(names, edges);
}

std::size_t mask_components(const Graph& g, std::uint64_t mask) {
  std::uint64_t seen = 0;
  std::size_t count = 0;
  for (Vertex s = 0; s < g.size(); ++s) {
    const std::uint64_t bit = std::uint64_t{1} << s;
    if (!(mask & bit) || (seen & bit)) continue;
    ++count;
    std::vector<Vertex> stack{s};
    seen |= bit;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex v = 0; v < g.size(); ++v) {
        const std::uint64_t vb = std::uint64_t{1} << v;
        if ((mask & vb) && !(seen & vb) && g.adjacent(u, v)) {
          seen |= vb;
          stack.push_back(v);
        }
      }
    }
  }
  return count;
}

bool mask_connected(const Graph& g, std::uint64_t mask) { return mask != 0 && mask_components(g, mask) == 1; }

std::vector<std::uint64_t> connected_masks(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m = 1; m < (std::uint64_t{1} << g.size()); ++m) {
    if (mask_connected(g, m)) out.push_back(m);
  }
  return out;
}

bool oracle_has_disconnected_intersection(const Graph& g) {
  const std::uint64_t full = std::uint64_t{1} << g.size();
  std::vector<std::uint8_t> parts(full, 0);
  std::vector<std::uint64_t> sets;
  for (std::uint64_t m = 1; m < full; ++m) {
    parts[m] = static_cast<std::uint8_t>(mask_components(g, m));
    if (parts[m] == 1) sets.push_back(m);
  }
  for (std::uint64_t p : sets) {
    for (std::uint64_t q : sets) {
      if (parts[p & q] >= 2) return true;
    }
  }
  return false;
}

namespace {

std::uint64_t preimage_mask(const Morphism& f, std::uint64_t q) {
  std::uint64_t out = 0;
  for (Vertex v = 0; v < f.domain().size(); ++v) {
    if (q & (std::uint64_t{1} << f(v))) out |= std::uint64_t{1} << v;
  }
  return out;
}

// Components of a mask as masks.
std::vector<std::uint64_t> mask_parts(const Graph& g, std::uint64_t mask) {
  std::vector<std::uint64_t> parts;
  std::uint64_t left = mask;
  while (left != 0) {
    std::uint64_t part = left & (~left + 1);
    bool grew = true;
    while (grew) {
      grew = false;
      for (Vertex u = 0; u < g.size(); ++u) {
        if (!(part & (std::uint64_t{1} << u))) continue;
        for (Vertex v = 0; v < g.size(); ++v) {
          const std::uint64_t vb = std::uint64_t{1} << v;
          if ((left & vb) && !(part & vb) && g.adjacent(u, v)) {
            part |= vb;
            grew = true;
          }
        }
      }
    }
    parts.push_back(part);
    left &= ~part;
  }
  return parts;
}

}  // namespace

bool oracle_epimorphism(const Morphism& f) {
  const Graph& g = f.domain();
  const Graph& h = f.codomain();
  for (Vertex u = 0; u < g.size(); ++u) {
    for (Vertex v = 0; v < g.size(); ++v) {
      if (g.adjacent(u, v) && !h.adjacent(f(u), f(v))) return false;
    }
  }
  for (Vertex a = 0; a < h.size(); ++a) {
    for (Vertex b = 0; b < h.size(); ++b) {
      if (!h.adjacent(a, b)) continue;
      bool hit = false;
      for (Vertex u = 0; u < g.size() && !hit; ++u) {
        for (Vertex v = 0; v < g.size() && !hit; ++v) {
          hit = g.adjacent(u, v) && f(u) == a && f(v) == b;
        }
      }
      if (!hit) return false;
    }
  }
  return true;
}

bool oracle_confluent(const Morphism& f) {
  if (!oracle_epimorphism(f)) return false;
  for (std::uint64_t q : connected_masks(f.codomain())) {
    for (std::uint64_t part : mask_parts(f.domain(), preimage_mask(f, q))) {
      std::uint64_t image = 0;
      for (Vertex v = 0; v < f.domain().size(); ++v) {
        if (part & (std::uint64_t{1} << v)) image |= std::uint64_t{1} << f(v);
      }
      if (image != q) return false;
    }
  }
  return true;
}

bool oracle_monotone(const Morphism& f) {
  if (!oracle_epimorphism(f)) return false;
  for (std::uint64_t q : connected_masks(f.codomain())) {
    if (!mask_connected(f.domain(), preimage_mask(f, q))) return false;
  }
  return true;
}

bool oracle_adjacently_disconnecting(const Graph& g, std::uint64_t t) {
  std::vector<Vertex> touching;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (t & (std::uint64_t{1} << v)) continue;
    for (Vertex u = 0; u < g.size(); ++u) {
      if ((t & (std::uint64_t{1} << u)) && g.adjacent(u, v)) {
        touching.push_back(v);
        break;
      }
    }
  }
  // Depth-first enumeration of simple paths that avoid T.
  std::function<bool(Vertex, Vertex, std::uint64_t)> walk = [&](Vertex at, Vertex goal, std::uint64_t used) {
    if (at == goal) return true;
    for (Vertex v = 0; v < g.size(); ++v) {
      const std::uint64_t vb = std::uint64_t{1} << v;
      if (v == at || (used & vb) || (t & vb) || !g.adjacent(at, v)) continue;
      if (walk(v, goal, used | vb)) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < touching.size(); ++i) {
    for (std::size_t j = i + 1; j < touching.size(); ++j) {
      if (walk(touching[i], touching[j], std::uint64_t{1} << touching[i])) return false;
    }
  }
  return true;
}

std::vector<std::uint64_t> oracle_cycle_sets(const Graph& g) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t m : connected_masks(g)) {
    if (__builtin_popcountll(m) < 3) continue;
    bool two_regular = true;
    for (Vertex v = 0; v < g.size() && two_regular; ++v) {
      if (!(m & (std::uint64_t{1} << v))) continue;
      int degree = 0;
      for (Vertex u = 0; u < g.size(); ++u) {
        if (u != v && (m & (std::uint64_t{1} << u)) && g.adjacent(u, v)) ++degree;
      }
      two_regular = degree == 2;
    }
    if (two_regular) out.push_back(m);
  }
  return out;
}

std::vector<WitnessPair> doubled_witness_pairs(std::size_t n, std::size_t limit) {
  auto d = cycle(2 * n);
  auto c = cycle(n);
  std::vector<Vertex> f(2 * n);
  for (std::size_t j = 0; j < f.size(); ++j) f[j] = static_cast<Vertex>((j / 2) % n);
  const Morphism fm(d, c, f);
  std::vector<WitnessPair> out;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << f.size()) && out.size() < limit; ++bits) {
    std::vector<Vertex> w = f;
    for (std::size_t j = 0; j < w.size(); ++j) {
      if (bits & (std::uint64_t{1} << j)) w[j] = static_cast<Vertex>((w[j] + 1) % n);
    }
    Morphism wm(d, c, w);
    if (!is_homomorphism(wm) || wm.image() != c->all()) continue;
    CycleMap cm{wm, *as_cycle(*d), *as_cycle(*c)};
    if (is_witness(cm, fm, true)) out.push_back(WitnessPair{cm, fm});
  }
  return out;
}

bool steps_backward(const CycleMap& w) {
  for (std::size_t i = 0; i < w.domain.size(); ++i) {
    const Vertex here = w.map(w.domain.at(i));
    const Vertex next = w.map(w.domain.at(i + 1));
    if (here != next && w.codomain.pred(here) == next) return true;
  }
  return false;
}

}  // namespace conflux::testing

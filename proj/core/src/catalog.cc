#include "conflux/catalog.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace conflux {
namespace {

std::vector<std::string> numbered(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  names.reserve(n);
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i));
  return names;
}

// Vertex invariant used to cut down the relabellings: degree, then the
// sorted degrees of the neighbours.
std::vector<std::vector<std::size_t>> invariants(const Graph& g) {
  std::vector<std::vector<std::size_t>> inv(g.size());
  for (Vertex v = 0; v < g.size(); ++v) {
    inv[v].push_back(g.neighbors(v).size());
    std::vector<std::size_t> nd;
    for (Vertex w : g.neighbors(v)) nd.push_back(g.neighbors(w).size());
    std::sort(nd.begin(), nd.end());
    inv[v].insert(inv[v].end(), nd.begin(), nd.end());
  }
  return inv;
}

// Calls `visit` with every ordering of the vertices that lists invariant
// classes in decreasing order. `extend` may veto a partial ordering.
void for_each_relabelling(const Graph& g, const std::function<bool(const std::vector<Vertex>&)>& extend,
                          const std::function<void(const std::vector<Vertex>&)>& visit) {
  const auto inv = invariants(g);
  std::vector<Vertex> slots(g.size());
  for (Vertex v = 0; v < g.size(); ++v) slots[v] = v;
  std::stable_sort(slots.begin(), slots.end(),
                   [&](Vertex a, Vertex b) { return inv[a] > inv[b]; });
  std::vector<Vertex> order;
  std::vector<bool> used(g.size(), false);
  std::function<void()> rec = [&]() {
    if (order.size() == g.size()) {
      visit(order);
      return;
    }
    const auto& want = inv[slots[order.size()]];
    for (Vertex v = 0; v < g.size(); ++v) {
      if (used[v] || inv[v] != want) continue;
      order.push_back(v);
      used[v] = true;
      if (extend(order)) rec();
      used[v] = false;
      order.pop_back();
    }
  };
  rec();
}

std::string code_of(const Graph& g, const std::vector<Vertex>& order) {
  std::string code;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      code += g.adjacent(order[i], order[j]) ? '1' : '0';
    }
  }
  return code;
}

std::pair<std::string, std::vector<Vertex>> canonical_labelling(const Graph& g) {
  std::string best;
  std::vector<Vertex> best_order;
  for_each_relabelling(
      g, [](const std::vector<Vertex>&) { return true; },
      [&](const std::vector<Vertex>& order) {
        std::string code = code_of(g, order);
        if (best_order.empty() || code > best) {
          best = std::move(code);
          best_order = order;
        }
      });
  return {std::to_string(g.size()) + ":" + best, best_order};
}

Graph relabel(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Vertex> inverse(g.size());
  for (Vertex i = 0; i < order.size(); ++i) inverse[order[i]] = i;
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(inverse[u], inverse[v]);
  return Graph(numbered(g.size(), ""), edges);
}

}  // namespace

Graph path_graph(std::size_t n, const std::string& prefix) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(numbered(n, prefix), edges);
}

Graph cycle_graph(std::size_t n, const std::string& prefix) {
  if (n < 3) throw InvalidArgument("a cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) edges.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph(numbered(n, prefix), edges);
}

Graph complete_graph(std::size_t n, const std::string& prefix) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(numbered(n, prefix), edges);
}

std::string canonical_code(const Graph& g) { return canonical_labelling(g).first; }

std::vector<std::vector<Vertex>> automorphisms(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  // An ordering `order` is an automorphism v -> order[v] when it preserves
  // adjacency; prune as soon as a prefix breaks it.
  const auto inv = invariants(g);
  std::vector<Vertex> image;
  std::vector<bool> used(g.size(), false);
  std::function<void()> rec = [&]() {
    const auto v = static_cast<Vertex>(image.size());
    if (v == g.size()) {
      out.push_back(image);
      return;
    }
    for (Vertex w = 0; w < g.size(); ++w) {
      if (used[w] || inv[w] != inv[v]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[u], w);
      if (!ok) continue;
      image.push_back(w);
      used[w] = true;
      rec();
      used[w] = false;
      image.pop_back();
    }
  };
  rec();
  return out;
}

std::vector<Graph> connected_graphs(std::size_t n) {
  if (n == 0) return {};
  if (n == 1) return {Graph({"0"}, std::vector<Edge>{})};
  // Every connected graph has a vertex whose removal leaves it connected, so
  // growing the smaller catalogue by one vertex reaches every class.
  std::map<std::string, Graph> seen;
  for (const Graph& base : connected_graphs(n - 1)) {
    const std::size_t m = base.size();
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      std::vector<std::string> names = base.names();
      names.push_back(std::to_string(m));
      std::vector<Edge> edges = base.edges();
      for (Vertex v = 0; v < m; ++v) {
        if ((mask >> v) & 1U) edges.emplace_back(v, static_cast<Vertex>(m));
      }
      Graph grown(std::move(names), edges);
      auto [code, order] = canonical_labelling(grown);
      if (seen.count(code) == 0) seen.emplace(code, relabel(grown, order));
    }
  }
  std::vector<Graph> out;
  out.reserve(seen.size());
  for (auto& [code, g] : seen) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> connected_graphs_up_to(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto layer = connected_graphs(n);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace conflux

#include "conflux/graph.h"

#include <algorithm>
#include <deque>
#include <functional>

namespace conflux {

VertexSet VertexSet::Full(std::size_t universe) {
  VertexSet s(universe);
  for (Vertex v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::Of(std::size_t universe, const std::vector<Vertex>& members) {
  VertexSet s(universe);
  for (Vertex v : members) {
    if (v >= universe) throw InvalidArgument("vertex index out of range");
    s.insert(v);
  }
  return s;
}

std::size_t VertexSet::size() const {
  std::size_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

std::optional<Vertex> VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) return static_cast<Vertex>(w * 64 + __builtin_ctzll(words_[w]));
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::elements() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool VertexSet::intersects(const VertexSet& other) const {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if ((words_[i] & other.words_[i]) != 0) return true;
  }
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if ((words_[i] & ~o) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  if (other.universe_ > universe_) {
    universe_ = other.universe_;
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    words_[i] &= i < other.words_.size() ? other.words_[i] : 0;
  }
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
  const auto ea = a.elements();
  const auto eb = b.elements();
  return std::lexicographical_compare_three_way(ea.begin(), ea.end(), eb.begin(), eb.end());
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges)
    : names_(std::move(vertices)) {
  index_names();
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    const auto iu = find(u);
    const auto iv = find(v);
    if (!iu || !iv) {
      throw InvalidArgument("edge [" + u + ", " + v + "] names an unknown vertex");
    }
    indexed.emplace_back(*iu, *iv);
  }
  add_edges(indexed);
}

Graph::Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges)
    : names_(std::move(vertices)) {
  index_names();
  add_edges(edges);
}

void Graph::index_names() {
  index_.reserve(names_.size());
  for (Vertex v = 0; v < names_.size(); ++v) {
    if (!index_.emplace(names_[v], v).second) {
      throw InvalidArgument("duplicate vertex token '" + names_[v] + "'");
    }
  }
}

void Graph::add_edges(const std::vector<Edge>& edges) {
  const std::size_t n = names_.size();
  adj_.assign(n, {});
  nbhd_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidArgument("edge endpoint out of range");
    if (u == v || nbhd_[u].contains(v)) continue;
    nbhd_[u].insert(v);
    nbhd_[v].insert(u);
    ++edge_count_;
  }
  for (Vertex v = 0; v < n; ++v) adj_[v] = nbhd_[v].elements();
}

std::optional<Vertex> Graph::find(std::string_view token) const {
  const auto it = index_.find(std::string(token));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Vertex Graph::at(std::string_view token) const {
  const auto v = find(token);
  if (!v) throw InvalidArgument("unknown vertex '" + std::string(token) + "'");
  return *v;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < size(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<std::string> Graph::tokens(const VertexSet& s) const {
  std::vector<std::string> out;
  s.for_each([&](Vertex v) { out.push_back(names_[v]); });
  return out;
}

Vertex GraphBuilder::add_vertex(std::string token) {
  const auto v = static_cast<Vertex>(names_.size());
  if (!index_.emplace(token, v).second) {
    throw InvalidArgument("duplicate vertex token '" + token + "'");
  }
  names_.push_back(std::move(token));
  return v;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u != v) edges_.emplace_back(u, v);
}

std::string pair_token(std::string_view first, std::string_view second) {
  std::string out;
  out.reserve(first.size() + second.size() + 3);
  out += '(';
  out += first;
  out += ',';
  out += second;
  out += ')';
  return out;
}

std::string fresh_token(const Graph& g, std::string_view base) {
  std::string candidate(base);
  for (std::size_t i = 1; g.find(candidate); ++i) candidate = std::string(base) + std::to_string(i);
  return candidate;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  const auto members = s.elements();
  std::vector<std::int64_t> local(g.size(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < members.size(); ++i) {
    local[members[i]] = static_cast<std::int64_t>(i);
    names.push_back(g.name(members[i]));
  }
  std::vector<Edge> edges;
  for (Vertex u : members) {
    for (Vertex v : g.neighbors(u)) {
      if (u < v && local[v] >= 0) {
        edges.emplace_back(static_cast<Vertex>(local[u]), static_cast<Vertex>(local[v]));
      }
    }
  }
  return Graph(std::move(names), edges);
}

VertexSet component_of(const Graph& g, const VertexSet& s, Vertex v) {
  VertexSet seen(g.size());
  if (!s.contains(v)) return seen;
  std::vector<Vertex> stack{v};
  seen.insert(v);
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (s.contains(w) && !seen.contains(w)) {
        seen.insert(w);
        stack.push_back(w);
      }
    }
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& s) {
  std::vector<VertexSet> out;
  VertexSet rest = s;
  while (auto v = rest.first()) {
    VertexSet comp = component_of(g, rest, *v);
    rest -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g, const VertexSet& s) {
  const auto v = s.first();
  if (!v) return true;
  return component_of(g, s, *v).size() == s.size();
}

bool is_connected(const Graph& g) { return is_connected(g, g.all()); }

VertexSet star(const Graph& g, const VertexSet& s) {
  VertexSet out = s;
  s.for_each([&](Vertex v) { out |= g.neighborhood(v); });
  return out;
}

std::vector<Vertex> shortest_path(const Graph& g, const VertexSet& s, Vertex from, Vertex to) {
  if (!s.contains(from) || !s.contains(to)) return {};
  std::vector<std::int64_t> parent(g.size(), -1);
  std::deque<Vertex> queue{from};
  parent[from] = from;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    if (u == to) break;
    for (Vertex w : g.neighbors(u)) {
      if (s.contains(w) && parent[w] < 0) {
        parent[w] = u;
        queue.push_back(w);
      }
    }
  }
  if (parent[to] < 0) return {};
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(static_cast<Vertex>(parent[path.back()]));
  std::reverse(path.begin(), path.end());
  return path;
}

ArcInfo is_arc(const Graph& g, const VertexSet& s) {
  ArcInfo info;
  if (s.empty() || !is_connected(g, s)) return info;
  s.for_each([&](Vertex x) {
    VertexSet rest = s;
    rest.erase(x);
    if (is_connected(g, rest)) info.ends.push_back(x);
  });
  info.arc = info.ends.size() <= 2;
  return info;
}

std::vector<Vertex> arc_order(const Graph& g, const VertexSet& s, Vertex start) {
  const ArcInfo info = is_arc(g, s);
  if (!info.arc) throw InvalidArgument("vertex set is not an arc");
  if (std::find(info.ends.begin(), info.ends.end(), start) == info.ends.end()) {
    throw InvalidArgument("'" + g.name(start) + "' is not an end of the arc");
  }
  std::vector<Vertex> order{start};
  VertexSet left = s;
  left.erase(start);
  while (!left.empty()) {
    const VertexSet next = g.neighborhood(order.back()) & left;
    const Vertex v = *next.first();
    order.push_back(v);
    left.erase(v);
  }
  return order;
}

OrientedCycle::OrientedCycle(const Graph& g, std::vector<Vertex> order)
    : order_(std::move(order)), pos_(g.size(), -1) {
  const std::size_t n = order_.size();
  if (n < 3) throw InvalidArgument("a cycle needs at least three vertices");
  for (std::size_t i = 0; i < n; ++i) {
    const Vertex v = order_[i];
    if (v >= g.size()) throw InvalidArgument("cycle vertex out of range");
    if (pos_[v] >= 0) throw InvalidArgument("cycle repeats vertex '" + g.name(v) + "'");
    pos_[v] = static_cast<std::int64_t>(i);
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool consecutive = j == i + 1 || (i == 0 && j == n - 1);
      if (g.adjacent(order_[i], order_[j]) != consecutive) {
        throw InvalidArgument(consecutive ? "cycle has a missing edge"
                                          : "cycle has a chord between '" +
                                                g.name(order_[i]) + "' and '" +
                                                g.name(order_[j]) + "'");
      }
    }
  }
}

std::size_t OrientedCycle::position(Vertex v) const {
  if (!contains(v)) throw InvalidArgument("vertex is not on the cycle");
  return static_cast<std::size_t>(pos_[v]);
}

VertexSet OrientedCycle::vertices() const { return VertexSet::Of(pos_.size(), order_); }

OrientedCycle OrientedCycle::reversed() const {
  OrientedCycle out = *this;
  std::reverse(out.order_.begin() + 1, out.order_.end());
  for (std::size_t i = 0; i < out.order_.size(); ++i) {
    out.pos_[out.order_[i]] = static_cast<std::int64_t>(i);
  }
  return out;
}

std::vector<OrientedCycle> induced_cycles(const Graph& g, std::size_t min_length) {
  min_length = std::max<std::size_t>(min_length, 3);
  std::vector<std::vector<Vertex>> found;
  std::vector<Vertex> path;
  VertexSet on_path(g.size());
  // Every path vertex other than the start and the last one; a new vertex may
  // not touch any of them.
  std::function<void(Vertex)> extend = [&](Vertex s) {
    const Vertex last = path.back();
    for (Vertex w : g.neighbors(last)) {
      if (w <= s || on_path.contains(w)) continue;
      bool chord = false;
      for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        if (g.adjacent(w, path[i])) {
          chord = true;
          break;
        }
      }
      if (chord) continue;
      path.push_back(w);
      if (g.adjacent(w, s)) {
        if (path.size() >= min_length && path[1] < w) found.push_back(path);
      } else {
        on_path.insert(w);
        extend(s);
        on_path.erase(w);
      }
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < g.size(); ++s) {
    for (Vertex v : g.neighbors(s)) {
      if (v <= s) continue;
      path = {s, v};
      on_path.insert(s);
      on_path.insert(v);
      extend(s);
      on_path.erase(s);
      on_path.erase(v);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<OrientedCycle> out;
  out.reserve(found.size());
  for (auto& order : found) out.emplace_back(g, std::move(order));
  return out;
}

std::optional<OrientedCycle> as_cycle(const Graph& g) {
  if (g.size() < 3 || !is_connected(g)) return std::nullopt;
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.neighbors(v).size() != 2) return std::nullopt;
  }
  std::vector<Vertex> order{0, g.neighbors(0)[0]};
  while (order.size() < g.size()) {
    const auto& nb = g.neighbors(order.back());
    order.push_back(nb[0] == order[order.size() - 2] ? nb[1] : nb[0]);
  }
  return OrientedCycle(g, std::move(order));
}

bool is_cycle_division(const Graph& g, const CycleDivision& div) {
  if (!is_connected(g, div.h) || !is_connected(g, div.k)) return false;
  if (div.c.empty() || div.d.empty() || div.c.intersects(div.d)) return false;
  if ((div.h & div.k) != (div.c | div.d)) return false;
  bool touching = false;
  div.c.for_each([&](Vertex v) { touching = touching || g.neighborhood(v).intersects(div.d); });
  return !touching;
}

namespace {

using Mask = std::uint64_t;

bool mask_connects(const std::vector<Mask>& nbr, Mask allowed, Vertex from, Vertex to) {
  Mask seen = Mask{1} << from;
  Mask frontier = seen;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) next |= nbr[__builtin_ctzll(f)];
    next &= allowed & ~seen;
    seen |= next;
    frontier = next;
  }
  return ((seen >> to) & 1U) != 0;
}

}  // namespace

// Any division shrinks to one made of two induced x-y paths for nonadjacent
// x, y, and two induced paths meet in a disconnected set exactly when the
// second avoids an interior vertex of the first. So the search walks the
// induced x-y paths and asks whether x and y stay connected without one of
// the interior vertices.
std::optional<CycleDivision> find_cycle_division(const Graph& g, std::size_t bound) {
  const std::size_t n = g.size();
  if (n > bound || n > 64) {
    throw BudgetExceeded("cycle division search is limited to " +
                             std::to_string(std::min<std::size_t>(bound, 64)) + " vertices",
                         0);
  }
  std::vector<Mask> nbr(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex w : g.neighbors(v)) nbr[v] |= Mask{1} << w;
  }
  const Mask everything = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;

  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      if (g.adjacent(x, y) || !mask_connects(nbr, everything, x, y)) continue;
      std::vector<Vertex> path{x};
      Mask on_path = Mask{1} << x;
      std::optional<Vertex> cut;
      std::function<bool()> walk = [&]() -> bool {
        const Vertex last = path.back();
        const Mask earlier = on_path & ~(Mask{1} << last);
        Mask cand = nbr[last] & ~on_path;
        // Once y is in reach the path has to end there to stay induced.
        if (((cand >> y) & 1U) != 0) cand = Mask{1} << y;
        for (; cand != 0; cand &= cand - 1) {
          const auto w = static_cast<Vertex>(__builtin_ctzll(cand));
          if ((nbr[w] & earlier) != 0) continue;
          path.push_back(w);
          on_path |= Mask{1} << w;
          if (w == y) {
            for (std::size_t i = 1; i + 1 < path.size(); ++i) {
              if (mask_connects(nbr, everything & ~(Mask{1} << path[i]), x, y)) {
                cut = path[i];
                return true;
              }
            }
          } else if (walk()) {
            return true;
          }
          path.pop_back();
          on_path &= ~(Mask{1} << w);
        }
        return false;
      };
      if (!walk()) continue;
      VertexSet avoid = g.all();
      avoid.erase(*cut);
      const auto detour = shortest_path(g, avoid, x, y);
      CycleDivision div{g.set_of(path), g.set_of(detour), g.empty_set(), g.empty_set()};
      const VertexSet meet = div.h & div.k;
      div.c = component_of(g, meet, x);
      div.d = meet - div.c;
      return div;
    }
  }
  return std::nullopt;
}

bool is_hereditarily_unicoherent(const Graph& g, std::size_t bound) {
  return !find_cycle_division(g, bound).has_value();
}

bool is_adjacently_disconnecting(const Graph& g, const VertexSet& t) {
  if (t.empty() || !is_connected(g, t)) {
    throw InvalidArgument("adjacent disconnection needs a nonempty connected set");
  }
  const VertexSet outside = g.all() - t;
  const VertexSet touching = star(g, t) - t;
  for (const VertexSet& comp : components(g, outside)) {
    if ((comp & touching).size() > 1) return false;
  }
  return true;
}

}  // namespace conflux

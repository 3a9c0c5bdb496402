// Finite reflexive symmetric graphs and the connectivity toolkit built on
// them. Loops are implicit: every vertex is adjacent to itself, and only
// nondegenerate edges are stored. Vertices are indices into the declaration
// order of their tokens, and every search in the library walks that order.
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace conflux {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition of an operation does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A document could not be read.
class ParseError : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// An exhaustive search ran past its configured budget.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t partial)
      : Error(what), partial_(partial) {}
  std::size_t partial() const { return partial_; }

 private:
  std::size_t partial_;
};

// Subset of {0, ..., universe-1} stored as a bitset.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static VertexSet Full(std::size_t universe);
  static VertexSet Of(std::size_t universe, const std::vector<Vertex>& members);

  std::size_t universe() const { return universe_; }
  bool contains(Vertex v) const {
    return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  std::size_t size() const;
  bool empty() const;
  std::optional<Vertex> first() const;
  std::vector<Vertex> elements() const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) {
    return a.universe_ == b.universe_ && a.words_ == b.words_;
  }
  // Lexicographic comparison of the sorted member lists.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b);

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int bit = __builtin_ctzll(bits);
        fn(static_cast<Vertex>(w * 64 + bit));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  Graph() = default;
  // Throws InvalidArgument on a repeated token or an edge naming an unknown
  // token. Loops in the edge list are accepted and ignored.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);
  Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges);

  std::size_t size() const { return names_.size(); }
  const std::string& name(Vertex v) const { return names_.at(v); }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<Vertex> find(std::string_view token) const;
  Vertex at(std::string_view token) const;

  bool adjacent(Vertex u, Vertex v) const { return u == v || nbhd_[u].contains(v); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  const VertexSet& neighborhood(Vertex v) const { return nbhd_.at(v); }

  // Nondegenerate edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;
  std::size_t edge_count() const { return edge_count_; }
  VertexSet all() const { return VertexSet::Full(size()); }
  VertexSet empty_set() const { return VertexSet(size()); }
  VertexSet set_of(const std::vector<Vertex>& members) const {
    return VertexSet::Of(size(), members);
  }
  std::vector<std::string> tokens(const VertexSet& s) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.adj_ == b.adj_;
  }

 private:
  void index_names();
  void add_edges(const std::vector<Edge>& edges);

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexSet> nbhd_;
  std::size_t edge_count_ = 0;
};

using GraphPtr = std::shared_ptr<const Graph>;

inline GraphPtr share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

// Incremental construction for derived graphs.
class GraphBuilder {
 public:
  Vertex add_vertex(std::string token);
  void add_edge(Vertex u, Vertex v);
  bool has_token(const std::string& token) const { return index_.count(token) != 0; }
  std::size_t size() const { return names_.size(); }
  Graph build() const { return Graph(names_, edges_); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

// Composite token "(a,b)" used for product and copy vertices.
std::string pair_token(std::string_view first, std::string_view second);
// `base` if unused in `g`, otherwise base1, base2, ...
std::string fresh_token(const Graph& g, std::string_view base);

Graph induced_subgraph(const Graph& g, const VertexSet& s);

// Components of the subgraph induced on `s`, ordered by least vertex.
std::vector<VertexSet> components(const Graph& g, const VertexSet& s);
VertexSet component_of(const Graph& g, const VertexSet& s, Vertex v);
bool is_connected(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
// Closed neighbourhood of a set.
VertexSet star(const Graph& g, const VertexSet& s);
// Shortest path inside `s` from `from` to `to`; empty when disconnected.
std::vector<Vertex> shortest_path(const Graph& g, const VertexSet& s, Vertex from, Vertex to);

struct ArcInfo {
  bool arc = false;
  std::vector<Vertex> ends;  // vertices whose removal keeps the set connected
};

// An arc is a connected set in which all but at most two vertices separate it.
ArcInfo is_arc(const Graph& g, const VertexSet& s);
// Members of the arc `s` listed from the end `start` to the other end.
std::vector<Vertex> arc_order(const Graph& g, const VertexSet& s, Vertex start);

// A chordless cycle with a chosen direction of travel.
class OrientedCycle {
 public:
  OrientedCycle() = default;
  // Throws unless `order` lists a chordless cycle of `g` with at least three
  // vertices in traversal order.
  OrientedCycle(const Graph& g, std::vector<Vertex> order);

  std::size_t size() const { return order_.size(); }
  std::size_t universe() const { return pos_.size(); }
  const std::vector<Vertex>& order() const { return order_; }
  Vertex at(std::size_t i) const { return order_[i % order_.size()]; }
  bool contains(Vertex v) const { return v < pos_.size() && pos_[v] >= 0; }
  std::size_t position(Vertex v) const;
  Vertex succ(Vertex v) const { return at(position(v) + 1); }
  Vertex pred(Vertex v) const { return at(position(v) + order_.size() - 1); }
  VertexSet vertices() const;
  // Opposite direction, starting at the same vertex.
  OrientedCycle reversed() const;

  friend bool operator==(const OrientedCycle& a, const OrientedCycle& b) {
    return a.order_ == b.order_;
  }

 private:
  std::vector<Vertex> order_;
  std::vector<std::int64_t> pos_;
};

// Chordless cycles of length >= max(3, min_length). Each cycle is reported once,
// starting at its least vertex and continuing to the lesser of its two
// neighbours. Results are sorted by that vertex sequence.
std::vector<OrientedCycle> induced_cycles(const Graph& g, std::size_t min_length = 3);

// When the whole graph is a chordless cycle, its canonical orientation.
std::optional<OrientedCycle> as_cycle(const Graph& g);

struct CycleDivision {
  VertexSet h, k, c, d;
};

// Checks the four defining conditions of a cycle division.
bool is_cycle_division(const Graph& g, const CycleDivision& div);

inline constexpr std::size_t kDefaultDivisionBound = 16;

// Searches for connected H, K whose intersection is disconnected. Throws
// BudgetExceeded when the graph has more than `bound` vertices.
std::optional<CycleDivision> find_cycle_division(const Graph& g,
                                                 std::size_t bound = kDefaultDivisionBound);
bool is_hereditarily_unicoherent(const Graph& g, std::size_t bound = kDefaultDivisionBound);

// True when distinct vertices outside the connected set `t` that are
// adjacent to `t` always lie in distinct components of the complement.
bool is_adjacently_disconnecting(const Graph& g, const VertexSet& t);

}  // namespace conflux

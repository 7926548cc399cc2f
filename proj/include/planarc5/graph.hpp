#ifndef PLANARC5_GRAPH_HPP
#define PLANARC5_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace planarc5 {

using Vertex = std::uint32_t;
using Word = std::uint64_t;

inline constexpr std::size_t kWordBits = 64;

inline constexpr std::size_t words_for(std::size_t n) { return (n + kWordBits - 1) / kWordBits; }

/// Bitset over the vertex range 0..universe-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t universe) : universe_(universe), words_(words_for(universe), 0) {}
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members) : VertexSet(universe) {
    for (Vertex v : members) insert(v);
  }
  VertexSet(std::size_t universe, std::span<const Word> words) : universe_(universe), words_(words.begin(), words.end()) {
    if (words_.size() != words_for(universe)) throw std::invalid_argument("VertexSet: word count does not match universe");
  }

  static VertexSet full(std::size_t universe) {
    VertexSet s(universe);
    for (Vertex v = 0; v < universe; ++v) s.insert(v);
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::span<const Word> words() const { return words_; }

  bool contains(Vertex v) const { return v < universe_ && (words_[v / kWordBits] >> (v % kWordBits)) & 1U; }

  void insert(Vertex v) {
    check(v);
    words_[v / kWordBits] |= Word{1} << (v % kWordBits);
  }
  void erase(Vertex v) {
    check(v);
    words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits));
  }

  std::size_t size() const {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (Word w = words_[k]; w != 0; w &= w - 1) f(static_cast<Vertex>(k * kWordBits + std::countr_zero(w)));
    }
  }

  std::vector<Vertex> to_vector() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
  }

  VertexSet& operator&=(const VertexSet& o) { return combine(o, [](Word a, Word b) { return a & b; }); }
  VertexSet& operator|=(const VertexSet& o) { return combine(o, [](Word a, Word b) { return a | b; }); }
  VertexSet& operator-=(const VertexSet& o) { return combine(o, [](Word a, Word b) { return a & ~b; }); }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  bool intersects(const VertexSet& o) const {
    same_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & o.words_[k]) return true;
    return false;
  }

 private:
  void check(Vertex v) const {
    if (v >= universe_) throw std::out_of_range("VertexSet: vertex " + std::to_string(v) + " out of range");
  }
  void same_universe(const VertexSet& o) const {
    if (o.universe_ != universe_) throw std::invalid_argument("VertexSet: universe mismatch");
  }
  template <typename Op>
  VertexSet& combine(const VertexSet& o, Op op) {
    same_universe(o);
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] = op(words_[k], o.words_[k]);
    return *this;
  }

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is stored as one bitset row per vertex, rows packed contiguously.
/// Graphs with n <= 64 use a single word per row; larger graphs use
/// ceil(n/64) words per row.
class Graph {
 public:
  Graph() = default;

  /// Throws std::invalid_argument on an endpoint >= n or a self-loop.
  /// Repeated edges are collapsed.
  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u >= n || v >= n)
        throw std::invalid_argument("from_edges: endpoint out of range in edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") for n=" + std::to_string(n));
      if (u == v) throw std::invalid_argument("from_edges: self-loop at vertex " + std::to_string(u));
      g.set(u, v);
    }
    return g;
  }
  static Graph from_edges(std::size_t n, std::initializer_list<std::pair<Vertex, Vertex>> edges) {
    return from_edges(n, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size()));
  }

  static Graph empty(std::size_t n) { return Graph(n); }

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }
  std::size_t words_per_row() const { return wpr_; }

  std::span<const Word> row(Vertex v) const { return {bits_.data() + std::size_t{v} * wpr_, wpr_}; }

  bool has_edge(Vertex u, Vertex v) const {
    return u < n_ && v < n_ && (bits_[std::size_t{u} * wpr_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }

  std::size_t degree(Vertex v) const {
    std::size_t d = 0;
    for (Word w : row(v)) d += static_cast<std::size_t>(std::popcount(w));
    return d;
  }

  VertexSet neighbors(Vertex v) const {
    check(v);
    return VertexSet(n_, row(v));
  }

  std::vector<std::pair<Vertex, Vertex>> edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
  }

  /// Copy of this graph plus a new vertex n adjacent to `nbrs`.
  Graph with_vertex(const VertexSet& nbrs) const {
    if (nbrs.universe() != n_) throw std::invalid_argument("with_vertex: neighbor set universe must equal order");
    Graph g(n_ + 1);
    for (Vertex u = 0; u < n_; ++u) {
      auto src = row(u);
      std::copy(src.begin(), src.end(), g.bits_.begin() + std::size_t{u} * g.wpr_);
    }
    g.m_ = m_;
    nbrs.for_each([&](Vertex v) { g.set(static_cast<Vertex>(n_), v); });
    return g;
  }

  /// Relabels vertex v as perm[v].
  Graph permuted(std::span<const Vertex> perm) const {
    if (perm.size() != n_) throw std::invalid_argument("permuted: permutation size mismatch");
    Graph g(n_);
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (has_edge(u, v)) g.set(perm[u], perm[v]);
    return g;
  }

  bool is_connected() const {
    if (n_ == 0) return true;
    return reachable_from(0, VertexSet(n_)).size() == n_;
  }

  /// Vertices reachable from `start` without entering `blocked`.
  VertexSet reachable_from(Vertex start, const VertexSet& blocked) const {
    check(start);
    VertexSet seen(n_);
    std::vector<Vertex> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      VertexSet next = neighbors(u) - seen - blocked;
      next.for_each([&](Vertex v) {
        seen.insert(v);
        stack.push_back(v);
      });
    }
    return seen;
  }

  /// True when deleting v disconnects the rest of the graph.
  bool is_cut_vertex(Vertex v) const {
    check(v);
    if (n_ <= 2) return false;
    Vertex start = v == 0 ? 1 : 0;
    VertexSet blocked(n_);
    blocked.insert(v);
    return reachable_from(start, blocked).size() != n_ - 1;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  explicit Graph(std::size_t n) : n_(n), wpr_(words_for(n)), bits_(n * words_for(n), 0) {}

  void check(Vertex v) const {
    if (v >= n_) throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range");
  }

  void set(Vertex u, Vertex v) {
    Word& a = bits_[std::size_t{u} * wpr_ + v / kWordBits];
    Word bit = Word{1} << (v % kWordBits);
    if (a & bit) return;
    a |= bit;
    bits_[std::size_t{v} * wpr_ + u / kWordBits] |= Word{1} << (u % kWordBits);
    ++m_;
  }

  std::size_t n_ = 0;
  std::size_t wpr_ = 0;
  std::size_t m_ = 0;
  std::vector<Word> bits_;
};

/// N(u) ∩ N(w). Throws std::invalid_argument when u == w.
inline VertexSet common_neighbors(const Graph& g, Vertex u, Vertex w) {
  if (u == w) throw std::invalid_argument("common_neighbors: u and w must be distinct");
  return g.neighbors(u) & g.neighbors(w);
}

/// Subgraph induced by `s`, relabelled 0..|s|-1 in increasing vertex order.
inline Graph induced_subgraph(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw std::invalid_argument("induced_subgraph: set universe must equal graph order");
  std::vector<Vertex> keep = s.to_vector();
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (Vertex i = 0; i < keep.size(); ++i)
    for (Vertex j = i + 1; j < keep.size(); ++j)
      if (g.has_edge(keep[i], keep[j])) edges.emplace_back(i, j);
  return Graph::from_edges(keep.size(), edges);
}

// Small named graphs used throughout the tests and the CLI.

inline Graph cycle_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, static_cast<Vertex>((i + 1) % n));
  return Graph::from_edges(n, e);
}

inline Graph complete_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

/// K_{a,b} with parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) e.emplace_back(i, static_cast<Vertex>(a + j));
  return Graph::from_edges(a + b, e);
}

}  // namespace planarc5

#endif  // PLANARC5_GRAPH_HPP

#ifndef PLANARC5_LEMMA_LAB_HPP
#define PLANARC5_LEMMA_LAB_HPP

#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "planarc5/counting.hpp"
#include "planarc5/graph.hpp"
#include "planarc5/planarity.hpp"
#include "planarc5/search.hpp"

namespace planarc5 {

/// Forest bound for induced 5-cycles through a path u-v-w.
struct LemmaOneReport {
  Vertex v = 0, u = 0, w = 0;
  VertexSet x;  // vertices of N(u) - N[w] with a neighbor in Y0
  VertexSet y;  // vertices of N(w) - N[u] with a neighbor in X0
  Count bound = 0;
  Count actual = 0;
  bool forest_ok = true;

  bool holds() const { return forest_ok && actual <= bound; }
};

/// True iff the bipartite graph of g-edges between X and Y is acyclic.
/// Throws std::invalid_argument when X and Y overlap.
inline bool cross_forest_check(const Graph& g, const VertexSet& x, const VertexSet& y) {
  if (x.intersects(y)) throw std::invalid_argument("cross_forest_check: X and Y must be disjoint");
  std::vector<Vertex> parent(g.order());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  bool acyclic = true;
  x.for_each([&](Vertex a) {
    (g.neighbors(a) & y).for_each([&](Vertex b) {
      Vertex ra = find(a), rb = find(b);
      if (ra == rb)
        acyclic = false;
      else
        parent[ra] = rb;
    });
  });
  return acyclic;
}

/// u and w must be distinct neighbors of v; they may be adjacent to each other.
inline LemmaOneReport basic_bound(const Graph& g, Vertex v, Vertex u, Vertex w) {
  const std::size_t n = g.order();
  if (v >= n || u >= n || w >= n) throw std::out_of_range("basic_bound: vertex out of range");
  if (u == w) throw std::invalid_argument("basic_bound: u and w must be distinct");
  if (!g.has_edge(v, u) || !g.has_edge(v, w)) throw std::invalid_argument("basic_bound: u and w must be neighbors of v");

  VertexSet nu = g.neighbors(u), nw = g.neighbors(w);
  VertexSet x0 = nu - nw, y0 = nw - nu;
  x0.erase(w);
  y0.erase(u);

  LemmaOneReport r;
  r.v = v;
  r.u = u;
  r.w = w;
  r.x = VertexSet(n);
  r.y = VertexSet(n);
  x0.for_each([&](Vertex a) {
    if (g.neighbors(a).intersects(y0)) r.x.insert(a);
  });
  y0.for_each([&](Vertex b) {
    if (g.neighbors(b).intersects(x0)) r.y.insert(b);
  });
  const std::size_t sides = r.x.size() + r.y.size();
  r.bound = sides == 0 ? 0 : sides - 1;
  r.actual = triple_c5_count(g, u, v, w);
  r.forest_ok = cross_forest_check(g, r.x, r.y);
  return r;
}

/// Calls f(report) for every admissible (v, u, w) with u < w.
template <typename F>
void for_each_basic_bound(const Graph& g, F&& f) {
  for (Vertex v = 0; v < g.order(); ++v) {
    auto nv = g.neighbors(v).to_vector();
    for (std::size_t i = 0; i < nv.size(); ++i)
      for (std::size_t j = i + 1; j < nv.size(); ++j) f(basic_bound(g, v, nv[i], nv[j]));
  }
}

struct EmptyK2kWitness {
  Vertex u = 0;
  Vertex w = 0;
  std::vector<Vertex> centers;
};

/// Common neighbors of u and w in rotation order around u.
inline std::vector<Vertex> common_neighbors_in_rotation(const PlaneEmbedding& e, Vertex u, Vertex w) {
  const VertexSet common = common_neighbors(e.base(), u, w);
  std::vector<Vertex> order;
  for (Vertex z : e.rotation(u))
    if (common.contains(z)) order.push_back(z);
  return order;
}

/// Every pair u < w with k rotation-consecutive common neighbors z1..zk whose
/// 4-cycle u z1 w zk bounds a region holding exactly z2..z(k-1).
inline std::vector<EmptyK2kWitness> find_empty_k2k(const PlaneEmbedding& e, std::size_t k) {
  if (k < 2) throw std::invalid_argument("find_empty_k2k: k must be at least 2");
  const Graph& g = e.base();
  const std::size_t n = g.order();
  std::vector<EmptyK2kWitness> out;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex w = u + 1; w < n; ++w) {
      std::vector<Vertex> order = common_neighbors_in_rotation(e, u, w);
      const std::size_t t = order.size();
      if (t < k) continue;
      for (std::size_t s = 0; s < t; ++s) {
        std::vector<Vertex> run(k);
        for (std::size_t i = 0; i < k; ++i) run[i] = order[(s + i) % t];
        VertexSet interior(n);
        for (std::size_t i = 1; i + 1 < k; ++i) interior.insert(run[i]);
        if (cycle_sides(e, {u, run.front(), w, run.back()}).inside == interior)
          out.push_back({u, w, std::move(run)});
      }
    }
  }
  return out;
}

struct VertexLoad {
  Vertex vertex = 0;
  Count load = 0;
};

/// Vertex of minimum induced-C5 load; ties go to the smallest index.
inline VertexLoad min_vertex_load(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("min_vertex_load: graph has no vertices");
  VertexLoad best{0, vertex_c5_load(g, 0)};
  for (Vertex v = 1; v < g.order() && best.load > 0; ++v) {
    Count c = vertex_c5_load(g, v);
    if (c < best.load) best = {v, c};
  }
  return best;
}

struct LemmaOneSweep {
  std::size_t graphs = 0;
  std::size_t checks = 0;
  std::size_t violations = 0;
};

/// Checks the forest bound on every connected planar graph on n vertices
/// and every admissible (v, u, w).
inline LemmaOneSweep lemma_one_sweep(std::size_t n) {
  LemmaOneSweep s;
  enumerate_planar(n, [&](const Graph& g) {
    ++s.graphs;
    for_each_basic_bound(g, [&](const LemmaOneReport& r) {
      ++s.checks;
      if (!r.holds()) ++s.violations;
    });
  });
  return s;
}

/// Largest value of min_vertex_load over all connected planar graphs on n
/// vertices.
inline Count max_min_vertex_load(std::size_t n) {
  Count best = 0;
  enumerate_planar(n, [&](const Graph& g) { best = std::max(best, min_vertex_load(g).load); });
  return best;
}

}  // namespace planarc5

#endif  // PLANARC5_LEMMA_LAB_HPP

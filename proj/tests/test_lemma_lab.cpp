#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "planarc5/constructions.hpp"
#include "planarc5/lemma_lab.hpp"

using namespace planarc5;

namespace {

// Random planar graph: shuffled edge candidates, each kept if planarity survives.
Graph random_planar(std::mt19937_64& rng, std::size_t n, std::size_t max_edges) {
  std::vector<std::pair<Vertex, Vertex>> cand;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) cand.emplace_back(i, j);
  std::shuffle(cand.begin(), cand.end(), rng);
  std::vector<std::pair<Vertex, Vertex>> kept;
  for (auto e : cand) {
    if (kept.size() >= max_edges) break;
    kept.push_back(e);
    if (!is_planar(Graph::from_edges(n, kept))) kept.pop_back();
  }
  return Graph::from_edges(n, kept);
}

}  // namespace

TEST(BasicBound, ApexTripartite13) {
  Graph g = apex_tripartite(13);
  auto layout = apex_tripartite_layout(13);
  LemmaOneReport r = basic_bound(g, 4, ApexTripartiteLayout::apex, ApexTripartiteLayout::v1);
  EXPECT_EQ(r.x, layout.class_set(13, 1) | layout.class_set(13, 2));
  EXPECT_EQ(r.y, VertexSet(13, {2, 3}));
  EXPECT_EQ(r.bound, 7U);
  EXPECT_EQ(r.actual, 6U);
  EXPECT_TRUE(r.forest_ok);
}

TEST(BasicBound, FiveCycle) {
  // v=0, u=1, x=2, y=3, w=4
  LemmaOneReport r = basic_bound(cycle_graph(5), 0, 1, 4);
  EXPECT_EQ(r.x, VertexSet(5, {2}));
  EXPECT_EQ(r.y, VertexSet(5, {3}));
  EXPECT_EQ(r.bound, 1U);
  EXPECT_EQ(r.actual, 1U);
  EXPECT_TRUE(r.holds());
}

TEST(BasicBound, StarClampsToZero) {
  LemmaOneReport r = basic_bound(complete_bipartite(1, 3), 0, 1, 2);
  EXPECT_TRUE(r.x.empty());
  EXPECT_TRUE(r.y.empty());
  EXPECT_EQ(r.bound, 0U);
  EXPECT_EQ(r.actual, 0U);
}

TEST(BasicBound, AdjacentUWAllowed) {
  LemmaOneReport r = basic_bound(complete_graph(4), 0, 1, 2);
  EXPECT_EQ(r.actual, 0U);
  EXPECT_TRUE(r.holds());
}

TEST(BasicBound, Errors) {
  Graph c5 = cycle_graph(5);
  EXPECT_THROW(basic_bound(c5, 0, 1, 1), std::invalid_argument);
  EXPECT_THROW(basic_bound(c5, 0, 1, 2), std::invalid_argument);  // 2 is not a neighbour of 0
}

TEST(CrossForest, Examples) {
  Graph matching = Graph::from_edges(6, {{0, 3}, {1, 4}, {2, 5}});
  EXPECT_TRUE(cross_forest_check(matching, VertexSet(6, {0, 1, 2}), VertexSet(6, {3, 4, 5})));
  Graph c4 = cycle_graph(4);
  EXPECT_FALSE(cross_forest_check(c4, VertexSet(4, {0, 2}), VertexSet(4, {1, 3})));
  EXPECT_THROW(cross_forest_check(c4, VertexSet(4, {0, 1}), VertexSet(4, {1, 3})), std::invalid_argument);
}

TEST(CrossForest, RandomPlanarGraphsAlwaysAcyclic) {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 6 + rng() % 15;
    Graph g = random_planar(rng, n, 1 + rng() % (3 * n - 6));
    for_each_basic_bound(g, [&](const LemmaOneReport& r) {
      ++checked;
      ASSERT_TRUE(r.forest_ok);
      ASSERT_LE(r.actual, r.bound);
    });
  }
  EXPECT_GT(checked, 1000);
}

TEST(CrossForest, NonPlanarContrast) {
  // u=0, v=1, w=2, x1=3, x2=4, y1=5, y2=6 with x1 y1 x2 y2 a 4-cycle:
  // a subdivided K3,3, where the forest claim fails.
  Graph g = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {0, 4}, {2, 5}, {2, 6}, {3, 5}, {5, 4}, {4, 6}, {6, 3}});
  EXPECT_FALSE(is_planar(g));
  LemmaOneReport r = basic_bound(g, 1, 0, 2);
  EXPECT_EQ(r.x, VertexSet(7, {3, 4}));
  EXPECT_EQ(r.y, VertexSet(7, {5, 6}));
  EXPECT_FALSE(r.forest_ok);
}

TEST(LemmaOneSweep, ExhaustiveUpToEight) {
  for (std::size_t n = 3; n <= 8; ++n) {
    LemmaOneSweep s = lemma_one_sweep(n);
    EXPECT_EQ(s.violations, 0U) << n;
    EXPECT_GT(s.checks, 0U);
  }
}

TEST(EmptyK2k, K29HasWitness) {
  PlaneEmbedding e = embed(complete_bipartite(2, 9));
  auto found = find_empty_k2k(e, 7);
  ASSERT_FALSE(found.empty());
  for (const auto& w : found) {
    EXPECT_EQ(w.u, 0U);
    EXPECT_EQ(w.w, 1U);
    EXPECT_EQ(w.centers.size(), 7U);
  }
}

TEST(EmptyK2k, C5HasNone) { EXPECT_TRUE(find_empty_k2k(embed(cycle_graph(5)), 7).empty()); }

TEST(EmptyK2k, ApexTripartite25ClassFans) {
  Graph g = apex_tripartite(25);
  auto layout = apex_tripartite_layout(25);
  PlaneEmbedding e = embed(g);
  auto found = find_empty_k2k(e, 7);
  for (int c = 0; c < 3; ++c) {
    const Vertex vi = static_cast<Vertex>(1 + c);
    auto it = std::find_if(found.begin(), found.end(), [&](const EmptyK2kWitness& w) {
      return w.u == ApexTripartiteLayout::apex && w.w == vi;
    });
    ASSERT_NE(it, found.end()) << "no witness for (apex, v" << vi << ")";
    VertexSet centers(25);
    for (Vertex z : it->centers) centers.insert(z);
    EXPECT_EQ(centers, layout.class_set(25, c));
  }
}

TEST(EmptyK2k, NonEmptyRegionRejected) {
  // K_{2,7} (u=0, w=1, centers 2..8) with a pendant vertex 9 on center 5,
  // drawn inside the fan; the outer face is u 2 w 8.
  std::vector<std::pair<Vertex, Vertex>> edges = complete_bipartite(2, 7).edges();
  edges.emplace_back(5, 9);
  Graph g = Graph::from_edges(10, edges);
  std::vector<std::vector<Vertex>> rot(10);
  rot[0] = {2, 3, 4, 5, 6, 7, 8};
  rot[1] = {8, 7, 6, 5, 4, 3, 2};
  for (Vertex z = 2; z <= 8; ++z) rot[z] = {0, 1};
  rot[5] = {0, 9, 1};
  rot[9] = {5};
  PlaneEmbedding e = PlaneEmbedding::from_rotation(g, rot);
  e.set_outer_face(e.face_of({0, 2}));
  EXPECT_EQ(cycle_sides(e, {0, 2, 1, 8}).inside, VertexSet(10, {3, 4, 5, 6, 7, 9}));
  EXPECT_TRUE(find_empty_k2k(e, 7).empty());
  // Shorter fans away from the pendant are still empty.
  EXPECT_FALSE(find_empty_k2k(e, 3).empty());
}

TEST(EmptyK2k, RejectsSmallK) { EXPECT_THROW(find_empty_k2k(embed(cycle_graph(5)), 1), std::invalid_argument); }

TEST(MinVertexLoad, Examples) {
  VertexLoad a = min_vertex_load(apex_tripartite(13));
  EXPECT_EQ(a.load, 6U);
  EXPECT_GE(a.vertex, 4U);  // a class vertex
  EXPECT_EQ(min_vertex_load(cycle_graph(5)).load, 1U);
  VertexLoad free = min_vertex_load(complete_graph(4));
  EXPECT_EQ(free.load, 0U);
  EXPECT_EQ(free.vertex, 0U);
}

TEST(MinVertexLoad, TiesGoToSmallestIndex) {
  Graph g = apex_tripartite(13);
  EXPECT_EQ(min_vertex_load(g).vertex, 4U);
}

TEST(MinVertexLoad, ExhaustiveMaximaAreRecorded) {
  // Largest min_vertex_load over all connected planar graphs on n vertices,
  // computed by this exhaustive scan. All lie at or below 2n/3.
  const std::vector<std::pair<std::size_t, Count>> table{{3, 0}, {4, 0}, {5, 1}, {6, 1}, {7, 2}, {8, 5}};
  for (auto [n, expect] : table) {
    Count got = max_min_vertex_load(n);
    EXPECT_EQ(got, expect) << n;
    EXPECT_LE(3 * got, 2 * n) << n;
  }
}

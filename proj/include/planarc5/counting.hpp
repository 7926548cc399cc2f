#ifndef PLANARC5_COUNTING_HPP
#define PLANARC5_COUNTING_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "planarc5/graph.hpp"

namespace planarc5 {

using Count = std::uint64_t;

/// Census of one graph.
struct CountReport {
  Count induced_c5 = 0;
  Count c5_total = 0;
  Count induced_c4 = 0;
  Count c4_total = 0;
  std::vector<Count> vertex_c5_load;

  friend bool operator==(const CountReport&, const CountReport&) = default;
};

namespace detail {

inline Count checked_add(Count a, Count b) {
  Count r = 0;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("cycle count overflows 64 bits");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r = 0;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("cycle count overflows 64 bits");
  return r;
}

inline Count choose2(Count k) { return k < 2 ? 0 : checked_mul(k, k - 1) / 2; }

// popcount(a & b & ~c & ~d) over a row of words.
inline Count popcount_and_andnot(std::span<const Word> a, std::span<const Word> b, std::span<const Word> c,
                                 std::span<const Word> d) {
  Count s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<Count>(std::popcount(a[k] & b[k] & ~c[k] & ~d[k]));
  return s;
}

inline Count popcount_and(std::span<const Word> a, std::span<const Word> b) {
  Count s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += static_cast<Count>(std::popcount(a[k] & b[k]));
  return s;
}

template <typename F>
void for_each_bit(std::span<const Word> row, F&& f) {
  for (std::size_t k = 0; k < row.size(); ++k)
    for (Word w = row[k]; w != 0; w &= w - 1) f(static_cast<Vertex>(k * kWordBits + std::countr_zero(w)));
}

// Bits of a & ~b & ~c, one vertex at a time.
template <typename F>
void for_each_bit_andnot2(std::span<const Word> a, std::span<const Word> b, std::span<const Word> c, F&& f) {
  for (std::size_t k = 0; k < a.size(); ++k)
    for (Word w = a[k] & ~b[k] & ~c[k]; w != 0; w &= w - 1)
      f(static_cast<Vertex>(k * kWordBits + std::countr_zero(w)));
}

}  // namespace detail

/// Number of 5-cycles. Every cycle a-b-c-d-e is met once per choice of the
/// middle vertex b of the path a-b-c and per direction, i.e. 10 times.
/// With `induced`, only 5-sets spanning exactly the cycle's 5 edges count.
inline Count count_c5(const Graph& g, bool induced) {
  const auto n = static_cast<Vertex>(g.order());
  Count closings = 0;
  for (Vertex b = 0; b < n; ++b) {
    auto rb = g.row(b);
    detail::for_each_bit(rb, [&](Vertex a) {
      auto ra = g.row(a);
      detail::for_each_bit(rb, [&](Vertex c) {
        if (c == a) return;
        auto rc = g.row(c);
        if (induced) {
          if (g.has_edge(a, c)) return;
          // d ~ c, d not adjacent to a or b; e ~ a, d and e not adjacent to b or c.
          detail::for_each_bit_andnot2(rc, ra, rb, [&](Vertex d) {
            closings = detail::checked_add(closings, detail::popcount_and_andnot(ra, g.row(d), rb, rc));
          });
        } else {
          detail::for_each_bit(rc, [&](Vertex d) {
            if (d == a || d == b) return;
            auto rd = g.row(d);
            Count e = detail::popcount_and(ra, rd);
            if (g.has_edge(d, b)) --e;  // e == b
            if (g.has_edge(a, c)) --e;  // e == c
            closings = detail::checked_add(closings, e);
          });
        }
      });
    });
  }
  return closings / 10;
}

/// Number of 4-cycles, summed over diagonal pairs {a,c}. Each cycle has two
/// diagonals. In induced mode both diagonals are non-edges.
inline Count count_c4(const Graph& g, bool induced) {
  const auto n = static_cast<Vertex>(g.order());
  Count twice = 0;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex c = a + 1; c < n; ++c) {
      if (induced && g.has_edge(a, c)) continue;
      auto ra = g.row(a), rc = g.row(c);
      Count s = detail::popcount_and(ra, rc);
      Count pairs = detail::choose2(s);
      if (induced && s >= 2) {
        Count inner = 0;  // edges inside N(a) ∩ N(c), counted from both ends
        for (std::size_t k = 0; k < ra.size(); ++k) {
          for (Word w = ra[k] & rc[k]; w != 0; w &= w - 1) {
            auto b = static_cast<Vertex>(k * kWordBits + std::countr_zero(w));
            auto rb = g.row(b);
            for (std::size_t j = 0; j < ra.size(); ++j)
              inner += static_cast<Count>(std::popcount(rb[j] & ra[j] & rc[j]));
          }
        }
        pairs -= inner / 2;
      }
      twice = detail::checked_add(twice, pairs);
    }
  }
  return twice / 2;
}

/// Calls f(std::array<Vertex,5>) once for every induced 5-cycle through v.
/// The array lists the cycle v, b, c, d, e in order with b < e.
template <typename F>
void for_each_induced_c5_through(const Graph& g, Vertex v, F&& f) {
  if (v >= g.order()) throw std::out_of_range("vertex out of range");
  auto rv = g.row(v);
  std::vector<Vertex> nv;
  detail::for_each_bit(rv, [&](Vertex x) { nv.push_back(x); });
  for (std::size_t i = 0; i < nv.size(); ++i) {
    for (std::size_t j = i + 1; j < nv.size(); ++j) {
      const Vertex b = nv[i], e = nv[j];
      if (g.has_edge(b, e)) continue;
      auto rb = g.row(b), re = g.row(e);
      // c ~ b with c not adjacent to v or e; excludes c == v explicitly.
      detail::for_each_bit_andnot2(rb, rv, re, [&](Vertex c) {
        if (c == v) return;
        auto rc = g.row(c);
        for (std::size_t k = 0; k < rc.size(); ++k) {
          for (Word w = rc[k] & re[k] & ~rv[k] & ~rb[k]; w != 0; w &= w - 1) {
            auto d = static_cast<Vertex>(k * kWordBits + std::countr_zero(w));
            if (d == v) continue;
            f(std::array<Vertex, 5>{v, b, c, d, e});
          }
        }
      });
    }
  }
}

/// Number of induced 5-cycles containing v.
inline Count vertex_c5_load(const Graph& g, Vertex v) {
  Count c = 0;
  for_each_induced_c5_through(g, v, [&](const std::array<Vertex, 5>&) { c = detail::checked_add(c, 1); });
  return c;
}

inline std::vector<Count> vertex_c5_loads(const Graph& g) {
  std::vector<Count> loads(g.order());
  for (Vertex v = 0; v < g.order(); ++v) loads[v] = vertex_c5_load(g, v);
  return loads;
}

/// Number of induced 5-cycles containing all of u, v, w.
inline Count triple_c5_count(const Graph& g, Vertex u, Vertex v, Vertex w) {
  if (u == v || v == w || u == w) throw std::invalid_argument("triple_c5_count: vertices must be distinct");
  if (w >= g.order() || u >= g.order()) throw std::out_of_range("vertex out of range");
  Count c = 0;
  for_each_induced_c5_through(g, v, [&](const std::array<Vertex, 5>& cyc) {
    bool has_u = false, has_w = false;
    for (Vertex x : cyc) {
      has_u |= x == u;
      has_w |= x == w;
    }
    if (has_u && has_w) ++c;
  });
  return c;
}

inline CountReport count_report(const Graph& g) {
  CountReport r;
  r.induced_c5 = count_c5(g, true);
  r.c5_total = count_c5(g, false);
  r.induced_c4 = count_c4(g, true);
  r.c4_total = count_c4(g, false);
  r.vertex_c5_load = vertex_c5_loads(g);
  return r;
}

// ---------------------------------------------------------------------------
// Subset-scan oracle. Independent of the counters above: every k-subset of
// V(g) is compared against the pattern under all k! bijections.

namespace detail {

inline constexpr std::size_t kOracleMaxPattern = 5;

// Adjacency of a <=5-vertex graph as a 25-bit matrix mask.
inline std::uint32_t small_adjacency(const Graph& h, std::span<const Vertex> verts) {
  std::uint32_t m = 0;
  const std::size_t k = verts.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j && h.has_edge(verts[i], verts[j])) m |= 1U << (i * kOracleMaxPattern + j);
  return m;
}

inline std::vector<std::uint32_t> pattern_images(const Graph& pattern) {
  const std::size_t k = pattern.order();
  std::vector<Vertex> perm(k);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  std::vector<std::uint32_t> images;
  do {
    // image of the pattern when pattern vertex i is placed at slot perm[i]
    std::uint32_t m = 0;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (i != j && pattern.has_edge(static_cast<Vertex>(i), static_cast<Vertex>(j)))
          m |= 1U << (perm[i] * kOracleMaxPattern + perm[j]);
    images.push_back(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return images;
}

template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<Vertex> idx(k);
  std::iota(idx.begin(), idx.end(), Vertex{0});
  while (true) {
    f(std::span<const Vertex>(idx));
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline void check_pattern(const Graph& pattern) {
  if (pattern.order() > kOracleMaxPattern) throw std::invalid_argument("pattern oracle: pattern has more than 5 vertices");
}

}  // namespace detail

/// Number of vertex subsets of g whose induced subgraph is isomorphic to
/// `pattern` (at most 5 vertices).
inline Count count_induced_pattern_oracle(const Graph& g, const Graph& pattern) {
  detail::check_pattern(pattern);
  auto images = detail::pattern_images(pattern);
  std::sort(images.begin(), images.end());
  Count c = 0;
  detail::for_each_subset(g.order(), pattern.order(), [&](std::span<const Vertex> s) {
    if (std::binary_search(images.begin(), images.end(), detail::small_adjacency(g, s))) ++c;
  });
  return c;
}

/// Number of (not necessarily induced) subgraphs of g isomorphic to
/// `pattern`: edge-preserving injections divided by |Aut(pattern)|.
inline Count count_pattern_copies_oracle(const Graph& g, const Graph& pattern) {
  detail::check_pattern(pattern);
  const auto images = detail::pattern_images(pattern);
  const std::uint32_t identity = images.front();
  const auto automorphisms = static_cast<Count>(std::count(images.begin(), images.end(), identity));
  Count embeddings = 0;
  detail::for_each_subset(g.order(), pattern.order(), [&](std::span<const Vertex> s) {
    const std::uint32_t host = detail::small_adjacency(g, s);
    for (std::uint32_t img : images)
      if ((img & host) == img) ++embeddings;
  });
  return embeddings / automorphisms;
}

}  // namespace planarc5

#endif  // PLANARC5_COUNTING_HPP

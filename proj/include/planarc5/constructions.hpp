#ifndef PLANARC5_CONSTRUCTIONS_HPP
#define PLANARC5_CONSTRUCTIONS_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planarc5/counting.hpp"
#include "planarc5/graph.hpp"

namespace planarc5 {

enum class Family { apex_tripartite, k2_book };
enum class ConstructionObjective { induced_c5, induced_c4 };

struct ConstructionSpec {
  Family family;
  std::size_t n;
  Count expected_count;
  ConstructionObjective objective;
};

inline std::string_view to_string(Family f) { return f == Family::apex_tripartite ? "apex_tripartite" : "k2_book"; }
inline std::string_view to_string(ConstructionObjective o) {
  return o == ConstructionObjective::induced_c5 ? "induced_c5" : "induced_c4";
}

inline std::optional<Family> parse_family(std::string_view s) {
  if (s == "apex_tripartite") return Family::apex_tripartite;
  if (s == "k2_book") return Family::k2_book;
  return std::nullopt;
}

/// Vertex layout of apex_tripartite(n), with k = (n-4)/3:
///   0 = apex u, 1..3 = triangle v1 v2 v3,
///   A = 4..3+k, B = 4+k..3+2k, C = 4+2k..3+3k.
struct ApexTripartiteLayout {
  std::size_t k;
  static constexpr Vertex apex = 0;
  static constexpr Vertex v1 = 1, v2 = 2, v3 = 3;
  Vertex class_begin(int which) const { return static_cast<Vertex>(4 + which * k); }
  VertexSet class_set(std::size_t n, int which) const {
    VertexSet s(n);
    for (std::size_t i = 0; i < k; ++i) s.insert(static_cast<Vertex>(class_begin(which) + i));
    return s;
  }
};

inline ApexTripartiteLayout apex_tripartite_layout(std::size_t n) {
  if (n < 7) throw std::invalid_argument("apex_tripartite: n must be at least 7");
  if ((n - 4) % 3 != 0) throw std::invalid_argument("apex_tripartite: n - 4 must be divisible by 3");
  return {(n - 4) / 3};
}

/// Triangle v1v2v3; class vertices of A, B, C joined to v1, v2, v3 resp.
/// and to the apex u.
inline Graph apex_tripartite(std::size_t n) {
  const auto layout = apex_tripartite_layout(n);
  std::vector<std::pair<Vertex, Vertex>> e{{1, 2}, {2, 3}, {3, 1}};
  for (int c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < layout.k; ++i) {
      auto x = static_cast<Vertex>(layout.class_begin(c) + i);
      e.emplace_back(static_cast<Vertex>(1 + c), x);
      e.emplace_back(ApexTripartiteLayout::apex, x);
    }
  }
  return Graph::from_edges(n, e);
}

/// K_{2,n-2}: vertices 0 and 1 are the two hubs.
inline Graph k2_book(std::size_t n) {
  if (n < 4) throw std::invalid_argument("k2_book: n must be at least 4");
  return complete_bipartite(2, n - 2);
}

inline ConstructionSpec construction_spec(Family family, std::size_t n) {
  switch (family) {
    case Family::apex_tripartite: {
      const auto k = apex_tripartite_layout(n).k;
      return {family, n, detail::checked_mul(3, detail::checked_mul(k, k)), ConstructionObjective::induced_c5};
    }
    case Family::k2_book:
      if (n < 4) throw std::invalid_argument("k2_book: n must be at least 4");
      return {family, n, detail::checked_mul(n - 2, n - 3) / 2, ConstructionObjective::induced_c4};
  }
  throw std::invalid_argument("unknown family");
}

inline Graph build(Family family, std::size_t n) {
  return family == Family::apex_tripartite ? apex_tripartite(n) : k2_book(n);
}

}  // namespace planarc5

#endif  // PLANARC5_CONSTRUCTIONS_HPP

#ifndef PLANARC5_PLANARITY_HPP
#define PLANARC5_PLANARITY_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>

#include "planarc5/graph.hpp"

namespace planarc5 {

class NonPlanarError : public std::runtime_error {
 public:
  NonPlanarError() : std::runtime_error("graph is not planar") {}
};

class DisconnectedError : public std::runtime_error {
 public:
  DisconnectedError() : std::runtime_error("graph is not connected") {}
};

/// Directed edge tail -> head.
struct Dart {
  Vertex tail;
  Vertex head;
  friend bool operator==(const Dart&, const Dart&) = default;
};

/// A face is the closed walk of darts met by the traversal
/// (u,v) -> (v, successor of u in the rotation at v).
using Face = std::vector<Dart>;

struct FaceSet {
  std::vector<Face> faces;

  std::size_t total_length() const {
    std::size_t s = 0;
    for (const auto& f : faces) s += f.size();
    return s;
  }
};

namespace detail {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>,
                                         boost::property<boost::edge_index_t, int>>;

inline BoostGraph to_boost(const Graph& g) {
  BoostGraph bg(g.order());
  for (auto [u, v] : g.edges()) boost::add_edge(u, v, bg);
  auto edge_index = boost::get(boost::edge_index, bg);
  int k = 0;
  for (auto [it, end] = boost::edges(bg); it != end; ++it) boost::put(edge_index, *it, k++);
  return bg;
}

}  // namespace detail

/// Boyer–Myrvold edge-addition planarity test.
inline bool is_planar(const Graph& g) {
  if (g.order() <= 4) return true;
  if (g.size() > 3 * g.order() - 6) return false;
  detail::BoostGraph bg = detail::to_boost(g);
  return boost::boyer_myrvold_planarity_test(bg);
}

/// Combinatorial embedding of a connected planar graph: a rotation system,
/// its faces, and a designated outer face.
class PlaneEmbedding {
 public:
  /// Builds an embedding from an explicit rotation system. Throws
  /// std::invalid_argument if rotation[v] is not a permutation of N(v), and
  /// NonPlanarError if the rotation system is not of genus zero.
  static PlaneEmbedding from_rotation(const Graph& g, std::vector<std::vector<Vertex>> rotation) {
    if (g.order() == 0) throw std::invalid_argument("embedding: empty graph");
    if (!g.is_connected()) throw DisconnectedError();
    if (rotation.size() != g.order()) throw std::invalid_argument("embedding: rotation size mismatch");
    for (Vertex v = 0; v < g.order(); ++v) {
      std::vector<Vertex> sorted = rotation[v];
      std::sort(sorted.begin(), sorted.end());
      if (sorted != g.neighbors(v).to_vector())
        throw std::invalid_argument("embedding: rotation at vertex " + std::to_string(v) + " is not a permutation of N(v)");
    }
    PlaneEmbedding e(g, std::move(rotation));
    const auto euler = static_cast<long long>(g.order()) - static_cast<long long>(g.size()) +
                       static_cast<long long>(e.faces_.faces.size());
    if (euler != 2) throw NonPlanarError();
    return e;
  }

  const Graph& base() const { return base_; }
  const std::vector<Vertex>& rotation(Vertex v) const { return rotation_.at(v); }
  const FaceSet& faces() const { return faces_; }
  std::size_t outer_face() const { return outer_; }

  void set_outer_face(std::size_t f) {
    if (f >= faces_.faces.size()) throw std::out_of_range("set_outer_face: no such face");
    outer_ = f;
  }

  /// Face containing the dart tail -> head.
  std::size_t face_of(Dart d) const { return dart_face_.at(dart_index(d)); }

  /// Position of w in the rotation at v.
  std::size_t rotation_position(Vertex v, Vertex w) const {
    const auto& r = rotation_.at(v);
    auto it = std::find(r.begin(), r.end(), w);
    if (it == r.end())
      throw std::invalid_argument("embedding: " + std::to_string(w) + " is not a neighbor of " + std::to_string(v));
    return static_cast<std::size_t>(it - r.begin());
  }

  /// One line per vertex, "v: n1 n2 ... nk" in rotation order.
  std::string to_text() const {
    std::ostringstream os;
    for (Vertex v = 0; v < base_.order(); ++v) {
      os << v << ':';
      for (Vertex w : rotation_[v]) os << ' ' << w;
      os << '\n';
    }
    return os.str();
  }

 private:
  PlaneEmbedding(const Graph& g, std::vector<std::vector<Vertex>> rotation)
      : base_(g), rotation_(std::move(rotation)), dart_offset_(g.order() + 1, 0) {
    for (Vertex v = 0; v < g.order(); ++v) dart_offset_[v + 1] = dart_offset_[v] + rotation_[v].size();
    trace_faces();
  }

  std::size_t dart_index(Dart d) const { return dart_offset_.at(d.tail) + rotation_position(d.tail, d.head); }

  void trace_faces() {
    const std::size_t darts = dart_offset_.back();
    dart_face_.assign(darts, static_cast<std::size_t>(-1));
    if (darts == 0) {
      faces_.faces.emplace_back();  // a lone vertex: the whole plane
      outer_ = 0;
      return;
    }
    for (Vertex v = 0; v < base_.order(); ++v) {
      for (std::size_t i = 0; i < rotation_[v].size(); ++i) {
        if (dart_face_[dart_offset_[v] + i] != static_cast<std::size_t>(-1)) continue;
        const std::size_t id = faces_.faces.size();
        Face face;
        Dart d{v, rotation_[v][i]};
        while (true) {
          std::size_t idx = dart_index(d);
          if (dart_face_[idx] != static_cast<std::size_t>(-1)) break;
          dart_face_[idx] = id;
          face.push_back(d);
          const auto& r = rotation_[d.head];
          std::size_t p = rotation_position(d.head, d.tail);
          d = Dart{d.head, r[(p + 1) % r.size()]};
        }
        faces_.faces.push_back(std::move(face));
      }
    }
    outer_ = 0;
    for (std::size_t f = 1; f < faces_.faces.size(); ++f)
      if (faces_.faces[f].size() > faces_.faces[outer_].size()) outer_ = f;
  }

  Graph base_;
  std::vector<std::vector<Vertex>> rotation_;
  std::vector<std::size_t> dart_offset_;
  std::vector<std::size_t> dart_face_;
  FaceSet faces_;
  std::size_t outer_ = 0;
};

/// Embeds a connected planar graph. The outer face defaults to the first
/// longest face. Throws NonPlanarError or DisconnectedError.
inline PlaneEmbedding embed(const Graph& g) {
  if (g.order() == 0) throw std::invalid_argument("embed: empty graph");
  if (!g.is_connected()) throw DisconnectedError();
  detail::BoostGraph bg = detail::to_boost(g);
  using EdgeDesc = boost::graph_traits<detail::BoostGraph>::edge_descriptor;
  std::vector<std::vector<EdgeDesc>> boost_embedding(g.order());
  bool planar = boost::boyer_myrvold_planarity_test(boost::boyer_myrvold_params::graph = bg,
                                                    boost::boyer_myrvold_params::embedding = &boost_embedding[0]);
  if (!planar) throw NonPlanarError();
  std::vector<std::vector<Vertex>> rotation(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    for (const auto& e : boost_embedding[v]) {
      auto s = static_cast<Vertex>(boost::source(e, bg));
      auto t = static_cast<Vertex>(boost::target(e, bg));
      rotation[v].push_back(s == v ? t : s);
    }
  }
  return PlaneEmbedding::from_rotation(g, std::move(rotation));
}

inline FaceSet faces(const PlaneEmbedding& e) { return e.faces(); }

/// Parses the "v: n1 n2 ..." export format back into an embedding of `g`.
inline PlaneEmbedding embedding_from_text(const Graph& g, const std::string& text) {
  std::vector<std::vector<Vertex>> rotation(g.order());
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto colon = line.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("embedding text: missing ':' in \"" + line + "\"");
    Vertex v = static_cast<Vertex>(std::stoul(line.substr(0, colon)));
    if (v >= g.order()) throw std::invalid_argument("embedding text: vertex out of range");
    std::istringstream rest(line.substr(colon + 1));
    unsigned long w = 0;
    while (rest >> w) rotation[v].push_back(static_cast<Vertex>(w));
  }
  return PlaneEmbedding::from_rotation(g, std::move(rotation));
}

struct CycleSides {
  VertexSet inside;
  VertexSet outside;
};

/// Splits V minus the cycle into the side away from the outer face (inside)
/// and the side containing it (outside). Faces are merged across every edge
/// not on the cycle; each non-cycle vertex takes the side of its faces.
inline CycleSides cycle_sides(const PlaneEmbedding& e, const std::vector<Vertex>& cycle) {
  const Graph& g = e.base();
  const std::size_t n = g.order();
  const std::size_t len = cycle.size();
  if (len < 3) throw std::invalid_argument("cycle_sides: a cycle needs at least 3 vertices");
  VertexSet on_cycle(n);
  for (Vertex v : cycle) {
    if (v >= n) throw std::invalid_argument("cycle_sides: vertex out of range");
    if (on_cycle.contains(v)) throw std::invalid_argument("cycle_sides: repeated vertex " + std::to_string(v));
    on_cycle.insert(v);
  }
  std::vector<std::pair<Vertex, Vertex>> cycle_edges;
  for (std::size_t i = 0; i < len; ++i) {
    Vertex a = cycle[i], b = cycle[(i + 1) % len];
    if (!g.has_edge(a, b))
      throw std::invalid_argument("cycle_sides: " + std::to_string(a) + "-" + std::to_string(b) + " is not an edge");
    cycle_edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(cycle_edges.begin(), cycle_edges.end());
  auto is_cycle_edge = [&](Vertex a, Vertex b) {
    return std::binary_search(cycle_edges.begin(), cycle_edges.end(), std::make_pair(std::min(a, b), std::max(a, b)));
  };

  const std::size_t nf = e.faces().faces.size();
  std::vector<std::size_t> parent(nf);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (auto [a, b] : g.edges()) {
    if (is_cycle_edge(a, b)) continue;
    std::size_t fa = find(e.face_of({a, b})), fb = find(e.face_of({b, a}));
    if (fa != fb) parent[fa] = fb;
  }

  const std::size_t outer_root = find(e.outer_face());
  CycleSides sides{VertexSet(n), VertexSet(n)};
  for (Vertex v = 0; v < n; ++v) {
    if (on_cycle.contains(v)) continue;
    std::size_t f = find(e.face_of({v, e.rotation(v).front()}));
    (f == outer_root ? sides.outside : sides.inside).insert(v);
  }
  return sides;
}

}  // namespace planarc5

#endif  // PLANARC5_PLANARITY_HPP

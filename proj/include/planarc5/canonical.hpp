#ifndef PLANARC5_CANONICAL_HPP
#define PLANARC5_CANONICAL_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "planarc5/graph.hpp"

namespace planarc5 {

/// Canonical labeling by colour refinement plus individualization search.
/// Limited to single-word graphs (n <= 64); intended for n around 12 or less.
struct CanonicalForm {
  std::vector<Vertex> label;  // label[v] = canonical position of v
  std::vector<Word> code;     // code[i] = canonical adjacency row i

  Graph graph() const {
    const std::size_t n = code.size();
    std::vector<std::pair<Vertex, Vertex>> e;
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if ((code[i] >> j) & 1U) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
  }
};

namespace detail {

class Canonizer {
 public:
  Canonizer(const Graph& g, const std::vector<std::uint32_t>& colour) : n_(g.order()), adj_(n_) {
    if (n_ > kWordBits) throw std::invalid_argument("canonical_form: graphs above 64 vertices are not supported");
    for (Vertex v = 0; v < n_; ++v) adj_[v] = n_ == 0 ? 0 : g.row(v)[0];
    cell_.assign(n_, 0);
    if (!colour.empty()) {
      if (colour.size() != n_) throw std::invalid_argument("canonical_form: colouring size mismatch");
      // Colours become initial cells ordered by colour value.
      std::vector<std::uint32_t> keys(colour);
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      for (Vertex v = 0; v < n_; ++v)
        cell_[v] = static_cast<std::uint32_t>(std::lower_bound(keys.begin(), keys.end(), colour[v]) - keys.begin());
    }
  }

  CanonicalForm run() {
    refine(cell_);
    search(cell_);
    return {best_label_, best_code_};
  }

 private:
  // Split cells by neighbour counts into every cell until stable. The new
  // cell order depends only on (old cell, count vector), so it is invariant
  // under relabelling.
  void refine(std::vector<std::uint32_t>& cell) const {
    std::size_t cells = count_cells(cell);
    std::vector<Vertex> order(n_);
    std::vector<std::vector<std::uint32_t>> sig(n_);
    while (true) {
      for (Vertex v = 0; v < n_; ++v) {
        sig[v].assign(cells + 1, 0);
        sig[v][0] = cell[v];
        for (Word w = adj_[v]; w != 0; w &= w - 1) ++sig[v][1 + cell[std::countr_zero(w)]];
      }
      std::iota(order.begin(), order.end(), Vertex{0});
      std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return sig[a] < sig[b]; });
      std::uint32_t id = 0;
      for (std::size_t i = 0; i < n_; ++i) {
        if (i > 0 && sig[order[i]] != sig[order[i - 1]]) ++id;
        cell[order[i]] = id;
      }
      const std::size_t now = n_ == 0 ? 0 : id + 1;
      if (now == cells) return;
      cells = now;
    }
  }

  static std::size_t count_cells(const std::vector<std::uint32_t>& cell) {
    std::uint32_t mx = 0;
    for (auto c : cell) mx = std::max(mx, c);
    return cell.empty() ? 0 : mx + 1;
  }

  bool twins(Vertex a, Vertex b) const {
    const Word mask = ~((Word{1} << a) | (Word{1} << b));
    return (adj_[a] & mask) == (adj_[b] & mask);
  }

  void search(const std::vector<std::uint32_t>& cell) {
    const std::size_t cells = count_cells(cell);
    if (cells == n_) {
      leaf(cell);
      return;
    }
    // First non-singleton cell.
    std::vector<std::size_t> sizes(cells, 0);
    for (auto c : cell) ++sizes[c];
    std::uint32_t target = 0;
    while (sizes[target] == 1) ++target;

    std::vector<Vertex> members;
    for (Vertex v = 0; v < n_; ++v)
      if (cell[v] == target) members.push_back(v);

    std::vector<Vertex> tried;
    for (Vertex x : members) {
      // Swapping twins is an automorphism fixing everything else, so one
      // representative per twin class suffices.
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex t) { return twins(t, x); })) continue;
      tried.push_back(x);
      std::vector<std::uint32_t> next(cell);
      for (Vertex v = 0; v < n_; ++v)
        if (next[v] > target || (next[v] == target && v != x)) ++next[v];
      refine(next);
      search(next);
    }
  }

  void leaf(const std::vector<std::uint32_t>& cell) {
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[cell[v]] = v;
    std::vector<Word> code(n_, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      Word row = 0;
      for (Word w = adj_[at[i]]; w != 0; w &= w - 1) row |= Word{1} << cell[std::countr_zero(w)];
      code[i] = row;
    }
    if (!have_best_ || code > best_code_) {
      have_best_ = true;
      best_code_ = std::move(code);
      best_label_.assign(cell.begin(), cell.end());
    }
  }

  std::size_t n_;
  std::vector<Word> adj_;
  std::vector<std::uint32_t> cell_;
  std::vector<Vertex> best_label_;
  std::vector<Word> best_code_;
  bool have_best_ = false;
};

}  // namespace detail

/// Canonical form of g, optionally respecting a vertex colouring. Two
/// coloured graphs get equal codes iff a colour-preserving isomorphism exists.
inline CanonicalForm canonical_form(const Graph& g, const std::vector<std::uint32_t>& colour = {}) {
  return detail::Canonizer(g, colour).run();
}

/// True iff some automorphism of g maps a to b.
inline bool same_orbit(const Graph& g, Vertex a, Vertex b) {
  if (a == b) return true;
  std::vector<std::uint32_t> ca(g.order(), 0), cb(g.order(), 0);
  ca[a] = 1;
  cb[b] = 1;
  return canonical_form(g, ca).code == canonical_form(g, cb).code;
}

}  // namespace planarc5

#endif  // PLANARC5_CANONICAL_HPP

#ifndef PLANARC5_VERIFY_HPP
#define PLANARC5_VERIFY_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "planarc5/constructions.hpp"
#include "planarc5/counting.hpp"
#include "planarc5/lemma_lab.hpp"
#include "planarc5/planarity.hpp"
#include "planarc5/search.hpp"

namespace planarc5 {

struct VerifyRow {
  std::string claim;
  Count expected = 0;
  Count actual = 0;
  bool pass = false;
};

struct VerifySuiteResult {
  std::vector<VerifyRow> rows;
  bool pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const VerifyRow& r) { return r.pass; });
  }
};

/// Counters under test; replaceable so the suite itself can be mutation-tested.
struct VerifyCounters {
  std::function<Count(const Graph&, bool)> c5 = [](const Graph& g, bool induced) { return count_c5(g, induced); };
  std::function<Count(const Graph&, bool)> c4 = [](const Graph& g, bool induced) { return count_c4(g, induced); };
};

struct VerifyOptions {
  bool fast = false;  // skip the n = 8 scans and sweeps
  VerifyCounters counters;
};

namespace detail {

inline Count scan_maximum(std::size_t n, const std::function<Count(const Graph&)>& objective) {
  Count best = 0;
  enumerate_planar(n, [&](const Graph& g) { best = std::max(best, objective(g)); });
  return best;
}

}  // namespace detail

/// Exact-value checks of the extremal counts, the two constructions, the
/// forest bound, embedding validity and the empty-fan finder.
inline VerifySuiteResult run_verify_suite(const VerifyOptions& opt = {}) {
  VerifySuiteResult out;
  auto row = [&](std::string claim, Count expected, Count actual) {
    out.rows.push_back({std::move(claim), expected, actual, expected == actual});
  };
  const std::size_t top = opt.fast ? 7 : 8;
  const auto& c5 = opt.counters.c5;
  const auto& c4 = opt.counters.c4;

  for (std::size_t n = 5; n <= top; ++n) {
    const Count expected = n == 5 ? 6 : n == 7 ? 41 : 2 * n * n - 10 * n + 12;
    row("max_c5_n" + std::to_string(n), expected, detail::scan_maximum(n, [&](const Graph& g) { return c5(g, false); }));
  }
  for (std::size_t n = 4; n <= top; ++n)
    row("max_c4_n" + std::to_string(n), (n * n + 3 * n - 22) / 2,
        detail::scan_maximum(n, [&](const Graph& g) { return c4(g, false); }));

  for (std::size_t n : {7, 10, 13, 16, 19, 31, 301})
    row("apex_tripartite_induced_c5_n" + std::to_string(n), (n - 4) * (n - 4) / 3, c5(apex_tripartite(n), true));
  for (std::size_t n : {4, 6, 10, 100})
    row("k2_book_induced_c4_n" + std::to_string(n), (n * n - 5 * n + 6) / 2, c4(k2_book(n), true));

  Count violations = 0;
  for (std::size_t n = 3; n <= 7; ++n) violations += lemma_one_sweep(n).violations;
  row("forest_bound_violations_n_le_7", 0, violations);

  Count euler_failures = 0;
  for (std::size_t n = 1; n <= top; ++n) {
    enumerate_planar(n, [&](const Graph& g) {
      const PlaneEmbedding e = embed(g);
      const auto chi = static_cast<long long>(n) - static_cast<long long>(g.size()) +
                       static_cast<long long>(e.faces().faces.size());
      if (chi != 2) ++euler_failures;
    });
  }
  row("euler_failures_n_le_" + std::to_string(top), 0, euler_failures);

  row("empty_k27_on_k29", 1, find_empty_k2k(embed(complete_bipartite(2, 9)), 7).empty() ? 0 : 1);
  {
    const PlaneEmbedding e = embed(apex_tripartite(25));
    const auto found = find_empty_k2k(e, 7);
    Count pairs = 0;
    for (Vertex vi = 1; vi <= 3; ++vi)
      pairs += std::any_of(found.begin(), found.end(),
                           [&](const EmptyK2kWitness& w) { return w.u == ApexTripartiteLayout::apex && w.w == vi; });
    row("empty_k27_apex_pairs_on_apex_tripartite_25", 3, pairs);
  }
  row("empty_k27_on_c5", 0, find_empty_k2k(embed(cycle_graph(5)), 7).size());

  const Count induced_max7 = detail::scan_maximum(7, [&](const Graph& g) { return c5(g, true); });
  row("apex_tripartite_7_within_induced_c5_max_n7", 1, c5(apex_tripartite(7), true) <= induced_max7 ? 1 : 0);
  return out;
}

}  // namespace planarc5

#endif  // PLANARC5_VERIFY_HPP

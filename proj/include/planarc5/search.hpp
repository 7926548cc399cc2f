#ifndef PLANARC5_SEARCH_HPP
#define PLANARC5_SEARCH_HPP

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "json.hpp"
#include "planarc5/canonical.hpp"
#include "planarc5/counting.hpp"
#include "planarc5/graph.hpp"
#include "planarc5/graph6.hpp"
#include "planarc5/planarity.hpp"

namespace planarc5 {

inline constexpr std::size_t kDefaultSearchLimit = 9;
inline constexpr std::size_t kHardSearchLimit = 12;

class SearchLimitError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void check_search_order(std::size_t n, std::size_t limit) {
  if (limit > kHardSearchLimit)
    throw SearchLimitError("search limit " + std::to_string(limit) + " exceeds the supported maximum " +
                           std::to_string(kHardSearchLimit));
  if (n < 1 || n > limit)
    throw SearchLimitError("n=" + std::to_string(n) + " outside the enumeration range 1.." + std::to_string(limit));
}

// Ordering key for choosing the canonical deletion vertex.
inline std::uint64_t deletion_key(const Graph& g, Vertex v) {
  std::uint64_t nbr_degrees = 0;
  g.neighbors(v).for_each([&](Vertex w) { nbr_degrees += g.degree(w); });
  return (static_cast<std::uint64_t>(g.degree(v)) << 32) | nbr_degrees;
}

// Canonical-augmentation test for a child whose newest vertex is the last
// one. The canonical deletion vertex is the non-cut vertex of maximum
// deletion_key, ties broken by maximum canonical position; the child is kept
// iff the newest vertex lies in that vertex's orbit.
inline bool is_canonical_extension(const Graph& child, const CanonicalForm& canon) {
  const auto n = static_cast<Vertex>(child.order());
  const Vertex fresh = n - 1;
  const std::uint64_t fresh_key = deletion_key(child, fresh);
  std::vector<Vertex> best;
  std::uint64_t best_key = 0;
  for (Vertex v = 0; v < n; ++v) {
    std::uint64_t key = deletion_key(child, v);
    if (key < fresh_key || (key < best_key && !best.empty())) continue;
    if (child.is_cut_vertex(v)) continue;
    if (best.empty() || key > best_key) {
      best.assign(1, v);
      best_key = key;
    } else {
      best.push_back(v);
    }
  }
  if (best_key != fresh_key) return false;
  if (best.size() == 1) return best.front() == fresh;
  Vertex chosen = *std::max_element(best.begin(), best.end(),
                                    [&](Vertex a, Vertex b) { return canon.label[a] < canon.label[b]; });
  return same_orbit(child, chosen, fresh);
}

// Cheap rejection before any canonical labelling: a fresh vertex whose key is
// beaten by some other vertex can never be the deletion vertex. (Cut vertices
// are skipped in the full test, so this only prunes when the beating vertex
// is a non-cut vertex.)
inline bool may_be_canonical(const Graph& child) {
  const auto n = static_cast<Vertex>(child.order());
  const std::uint64_t fresh_key = deletion_key(child, n - 1);
  for (Vertex v = 0; v + 1 < n; ++v)
    if (deletion_key(child, v) > fresh_key && !child.is_cut_vertex(v)) return false;
  return true;
}

}  // namespace detail

/// Calls f(child) once per isomorphism class of connected planar graphs
/// obtained from `parent` by adding a vertex whose deletion is canonical.
template <typename F>
void for_each_canonical_child(const Graph& parent, F&& f) {
  const std::size_t k = parent.order();
  const std::size_t child_order = k + 1;
  const std::size_t max_edges = child_order >= 3 ? 3 * child_order - 6 : child_order - 1;
  std::set<std::vector<Word>> seen;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    if (parent.size() + static_cast<std::size_t>(std::popcount(mask)) > max_edges) continue;
    VertexSet nbrs(k, std::span<const Word>(&mask, 1));
    Graph child = parent.with_vertex(nbrs);
    if (!detail::may_be_canonical(child)) continue;
    CanonicalForm canon = canonical_form(child);
    if (!detail::is_canonical_extension(child, canon)) continue;
    if (seen.count(canon.code)) continue;
    if (!is_planar(child)) continue;
    seen.insert(std::move(canon.code));
    f(child);
  }
}

namespace detail {

template <typename F>
void extend_to(const Graph& g, std::size_t target, F& visit) {
  if (g.order() == target) {
    visit(g);
    return;
  }
  for_each_canonical_child(g, [&](const Graph& child) { extend_to(child, target, visit); });
}

}  // namespace detail

/// Visits every connected planar graph on n vertices exactly once up to
/// isomorphism; returns the number visited. Throws SearchLimitError when n
/// is outside 1..limit.
template <typename F>
std::size_t enumerate_planar(std::size_t n, F&& visitor, std::size_t limit = kDefaultSearchLimit) {
  detail::check_search_order(n, limit);
  std::size_t visited = 0;
  auto counting_visitor = [&](const Graph& g) {
    ++visited;
    visitor(g);
  };
  detail::extend_to(Graph::empty(1), n, counting_visitor);
  return visited;
}

// ---------------------------------------------------------------------------
// Extremal scans

enum class Objective { induced_c5, c5, induced_c4, c4 };

inline std::string_view to_string(Objective o) {
  switch (o) {
    case Objective::induced_c5: return "induced_c5";
    case Objective::c5: return "c5";
    case Objective::induced_c4: return "induced_c4";
    case Objective::c4: return "c4";
  }
  return "?";
}

inline std::optional<Objective> parse_objective(std::string_view s) {
  for (Objective o : {Objective::induced_c5, Objective::c5, Objective::induced_c4, Objective::c4})
    if (to_string(o) == s) return o;
  return std::nullopt;
}

inline Count evaluate(const Graph& g, Objective o) {
  switch (o) {
    case Objective::induced_c5: return count_c5(g, true);
    case Objective::c5: return count_c5(g, false);
    case Objective::induced_c4: return count_c4(g, true);
    case Objective::c4: return count_c4(g, false);
  }
  return 0;
}

/// Maximum of one objective over all connected planar graphs on n vertices.
/// Witnesses are graph6 strings of canonical forms, sorted.
struct ExtremalRecord {
  std::size_t n = 0;
  Objective objective = Objective::c5;
  Count maximum = 0;
  std::vector<std::string> witnesses;
  std::map<Count, Count> histogram;
  Count graphs_visited = 0;
  double elapsed = 0.0;  // seconds; not part of equality

  friend bool operator==(const ExtremalRecord& a, const ExtremalRecord& b) {
    return a.n == b.n && a.objective == b.objective && a.maximum == b.maximum && a.witnesses == b.witnesses &&
           a.histogram == b.histogram && a.graphs_visited == b.graphs_visited;
  }
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Scan state after a prefix of work units; independent of worker count.
struct ScanState {
  std::size_t n = 0;
  Objective objective = Objective::c5;
  std::size_t total_units = 0;
  std::size_t next_unit = 0;
  Count maximum = 0;
  std::set<std::string> witnesses;
  std::map<Count, Count> histogram;
  Count graphs_visited = 0;

  bool complete() const { return next_unit == total_units; }

  void absorb(Count value, const std::string& witness) {
    histogram[value] = detail::checked_add(histogram[value], 1);
    graphs_visited = detail::checked_add(graphs_visited, 1);
    if (value > maximum || witnesses.empty()) {
      maximum = value;
      witnesses.clear();
    }
    if (value == maximum) witnesses.insert(witness);
  }

  void merge(const ScanState& o) {
    for (auto [k, v] : o.histogram) histogram[k] = detail::checked_add(histogram[k], v);
    graphs_visited = detail::checked_add(graphs_visited, o.graphs_visited);
    if (o.witnesses.empty()) return;
    if (o.maximum > maximum || witnesses.empty()) {
      maximum = o.maximum;
      witnesses = o.witnesses;
    } else if (o.maximum == maximum) {
      witnesses.insert(o.witnesses.begin(), o.witnesses.end());
    }
  }

  ExtremalRecord record(double elapsed) const {
    return {n, objective, maximum, {witnesses.begin(), witnesses.end()}, histogram, graphs_visited, elapsed};
  }
};

namespace detail {

inline constexpr std::string_view kCheckpointFormat = "planarc5-scan-checkpoint";
inline constexpr int kCheckpointVersion = 1;

inline std::string fnv1a_hex(std::string_view s) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline nlohmann::json state_payload(const ScanState& s) {
  nlohmann::json hist = nlohmann::json::array();
  for (auto [k, v] : s.histogram) hist.push_back({k, v});
  return {{"format", kCheckpointFormat},
          {"version", kCheckpointVersion},
          {"n", s.n},
          {"objective", to_string(s.objective)},
          {"total_units", s.total_units},
          {"next_unit", s.next_unit},
          {"maximum", s.maximum},
          {"witnesses", s.witnesses},
          {"histogram", hist},
          {"graphs_visited", s.graphs_visited}};
}

}  // namespace detail

/// Writes the state as JSON with a content hash over the payload.
inline void checkpoint_save(const std::filesystem::path& path, const ScanState& s) {
  nlohmann::json payload = detail::state_payload(s);
  nlohmann::json doc = {{"payload", payload}, {"hash", detail::fnv1a_hex(payload.dump())}};
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw CheckpointError("cannot write checkpoint " + tmp.string());
    out << doc.dump() << '\n';
  }
  std::filesystem::rename(tmp, path);
}

/// Reads and validates a checkpoint. Throws CheckpointError on format,
/// version or hash mismatch.
inline ScanState checkpoint_load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CheckpointError("cannot read checkpoint " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("corrupt checkpoint: ") + e.what());
  }
  try {
    const auto& p = doc.at("payload");
    if (doc.at("hash").get<std::string>() != detail::fnv1a_hex(p.dump()))
      throw CheckpointError("corrupt checkpoint: content hash mismatch");
    if (p.at("format").get<std::string>() != detail::kCheckpointFormat)
      throw CheckpointError("not a scan checkpoint");
    if (p.at("version").get<int>() != detail::kCheckpointVersion)
      throw CheckpointError("unsupported checkpoint version " + std::to_string(p.at("version").get<int>()));
    ScanState s;
    s.n = p.at("n").get<std::size_t>();
    auto obj = parse_objective(p.at("objective").get<std::string>());
    if (!obj) throw CheckpointError("checkpoint has unknown objective");
    s.objective = *obj;
    s.total_units = p.at("total_units").get<std::size_t>();
    s.next_unit = p.at("next_unit").get<std::size_t>();
    s.maximum = p.at("maximum").get<Count>();
    for (const auto& w : p.at("witnesses")) s.witnesses.insert(w.get<std::string>());
    for (const auto& kv : p.at("histogram")) s.histogram[kv.at(0).get<Count>()] = kv.at(1).get<Count>();
    s.graphs_visited = p.at("graphs_visited").get<Count>();
    if (s.next_unit > s.total_units) throw CheckpointError("corrupt checkpoint: progress beyond total");
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw CheckpointError(std::string("corrupt checkpoint: ") + e.what());
  }
}

struct ScanOptions {
  std::size_t limit = kDefaultSearchLimit;
  std::size_t workers = 1;
  std::optional<std::filesystem::path> checkpoint;  // saved after every batch
  bool resume = false;                              // load `checkpoint` first
  std::optional<std::size_t> stop_after_units;      // stop early (for tests)
  std::size_t batch_units = 64;
};

struct ScanResult {
  ScanState state;
  ExtremalRecord record;
  bool complete() const { return state.complete(); }
};

namespace detail {

// Work units are the connected planar graphs on n-1 vertices, in generation
// order; each unit contributes its canonical children. n = 1 has a single
// pseudo-unit.
inline std::vector<Graph> scan_units(std::size_t n, std::size_t limit) {
  check_search_order(n, limit);
  std::vector<Graph> units;
  if (n == 1) {
    units.push_back(Graph::empty(0));
    return units;
  }
  enumerate_planar(n - 1, [&](const Graph& g) { units.push_back(g); }, limit);
  return units;
}

inline ScanState scan_unit(const Graph& parent, std::size_t n, Objective objective) {
  ScanState part;
  part.n = n;
  part.objective = objective;
  auto visit = [&](const Graph& g) {
    const Count value = evaluate(g, objective);
    // Only graphs that can still be witnesses need a canonical graph6.
    if (part.witnesses.empty() || value >= part.maximum)
      part.absorb(value, graph6_encode(canonical_form(g).graph()));
    else
      part.absorb(value, {});
  };
  if (parent.order() == 0)
    visit(Graph::empty(1));
  else
    for_each_canonical_child(parent, visit);
  return part;
}

}  // namespace detail

/// Exhaustive scan with optional worker pool and checkpointing. Units are
/// processed in batches; results merge in unit order after each batch, so
/// the final record does not depend on the worker count or on interruptions.
inline ScanResult extremal_scan(std::size_t n, Objective objective, const ScanOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Graph> units = detail::scan_units(n, opt.limit);

  ScanState state;
  if (opt.resume && opt.checkpoint && std::filesystem::exists(*opt.checkpoint)) {
    state = checkpoint_load(*opt.checkpoint);
    if (state.n != n || state.objective != objective)
      throw CheckpointError("checkpoint is for n=" + std::to_string(state.n) + " objective " +
                            std::string(to_string(state.objective)) + ", not n=" + std::to_string(n) + " objective " +
                            std::string(to_string(objective)));
    if (state.total_units != units.size()) throw CheckpointError("checkpoint unit count does not match this build");
  } else {
    state.n = n;
    state.objective = objective;
    state.total_units = units.size();
  }

  const std::size_t workers = std::max<std::size_t>(1, opt.workers);
  const std::size_t batch = std::max<std::size_t>(1, opt.batch_units);
  std::size_t stop = units.size();
  if (opt.stop_after_units) stop = std::min(stop, *opt.stop_after_units);

  while (state.next_unit < stop) {
    const std::size_t lo = state.next_unit;
    const std::size_t hi = std::min(stop, lo + batch);
    std::vector<ScanState> parts(hi - lo);
    std::atomic<std::size_t> cursor{lo};
    auto work = [&] {
      for (std::size_t i; (i = cursor.fetch_add(1)) < hi;) parts[i - lo] = detail::scan_unit(units[i], n, objective);
    };
    if (workers == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t w = 0; w < std::min(workers, hi - lo); ++w) pool.emplace_back(work);
    }
    for (const auto& p : parts) state.merge(p);
    state.next_unit = hi;
    if (opt.checkpoint) checkpoint_save(*opt.checkpoint, state);
  }
  if (opt.checkpoint && state.complete()) checkpoint_save(*opt.checkpoint, state);

  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {state, state.record(elapsed)};
}

inline ExtremalRecord extremal_scan(std::size_t n, Objective objective) {
  return extremal_scan(n, objective, ScanOptions{}).record;
}

}  // namespace planarc5

#endif  // PLANARC5_SEARCH_HPP

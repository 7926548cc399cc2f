// planarc5: count, construct, check lemmas, scan and verify from the shell.
//
// Exit codes: 0 success, 1 domain or verification failure, 2 usage error.
// Records go to stdout as JSON (one per line); diagnostics go to stderr.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "planarc5/constructions.hpp"
#include "planarc5/counting.hpp"
#include "planarc5/graph6.hpp"
#include "planarc5/json_io.hpp"
#include "planarc5/lemma_lab.hpp"
#include "planarc5/planarity.hpp"
#include "planarc5/search.hpp"
#include "planarc5/verify.hpp"

namespace {

using namespace planarc5;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// Reads graph6 lines from --input or stdin and hands each non-blank one to f
// with its 1-based line number.
template <class F>
void for_each_input_line(const std::string& input, F&& f) {
  std::ifstream file;
  if (!input.empty() && input != "-") {
    file.open(input);
    if (!file) throw UsageError("cannot open input file: " + input);
  }
  std::istream& in = file.is_open() ? static_cast<std::istream&>(file) : std::cin;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    f(number, line);
  }
}

json error_record(std::size_t line, const std::string& message) { return {{"line", line}, {"error", message}}; }

// count --------------------------------------------------------------------

struct CountArgs {
  std::string input;
  bool induced_only = false;
};

int run_count(const CountArgs& a) {
  int status = kOk;
  for_each_input_line(a.input, [&](std::size_t number, const std::string& line) {
    try {
      const Graph g = graph6_decode(line);
      json j = count_report(g);
      if (a.induced_only) {
        j.erase("c5_total");
        j.erase("c4_total");
      }
      emit(j);
    } catch (const std::exception& e) {
      emit(error_record(number, e.what()));
      status = kFailure;
    }
  });
  return status;
}

// construct ----------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  std::size_t n = 0;
  std::string sidecar;
  bool graph6_only = false;
};

int run_construct(const ConstructArgs& a) {
  const auto family = parse_family(a.family);
  if (!family) throw UsageError("unknown family: " + a.family + " (expected apex_tripartite or k2_book)");
  ConstructionSpec spec;
  Graph g = Graph::empty(0);
  try {
    spec = construction_spec(*family, a.n);
    g = build(*family, a.n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::string g6 = graph6_encode(g);
  if (!a.sidecar.empty()) {
    std::ofstream out(a.sidecar);
    if (!out) throw std::runtime_error("cannot write sidecar: " + a.sidecar);
    out << json{{"family", to_string(spec.family)}, {"n", spec.n}, {"expected_count", spec.expected_count}}.dump()
        << '\n';
  }
  if (a.graph6_only) {
    std::cout << g6 << '\n';
  } else {
    json j = spec;
    j["graph6"] = g6;
    emit(j);
  }
  return kOk;
}

// lemma --------------------------------------------------------------------

struct LemmaArgs {
  std::string input;
  std::optional<Vertex> v, u, w;
  std::size_t k = 7;
  std::size_t sweep_n = 0;
};

int run_basic_bound(const LemmaArgs& a) {
  const int given = a.v.has_value() + a.u.has_value() + a.w.has_value();
  if (given != 0 && given != 3) throw UsageError("--v, --u and --w must be given together");
  int status = kOk;
  for_each_input_line(a.input, [&](std::size_t number, const std::string& line) {
    try {
      const Graph g = graph6_decode(line);
      const bool planar = is_planar(g);
      auto report = [&](const LemmaOneReport& r) {
        json j = r;
        j["line"] = number;
        j["planar"] = planar;
        j["holds"] = r.holds();
        emit(j);
        // The claim only covers planar graphs; elsewhere the record is informational.
        if (planar && !r.holds()) status = kFailure;
      };
      if (given == 3) {
        if (*a.v >= g.order() || *a.u >= g.order() || *a.w >= g.order())
          throw std::invalid_argument("vertex out of range");
        report(basic_bound(g, *a.v, *a.u, *a.w));
      } else {
        for_each_basic_bound(g, report);
      }
    } catch (const std::exception& e) {
      emit(error_record(number, e.what()));
      status = kFailure;
    }
  });
  return status;
}

int run_empty_k2k(const LemmaArgs& a) {
  if (a.k < 2) throw UsageError("--k must be at least 2");
  int status = kOk;
  for_each_input_line(a.input, [&](std::size_t number, const std::string& line) {
    try {
      const PlaneEmbedding e = embed(graph6_decode(line));
      emit({{"check", "empty_k2k"}, {"line", number}, {"k", a.k}, {"witnesses", find_empty_k2k(e, a.k)}});
    } catch (const std::exception& e) {
      emit(error_record(number, e.what()));
      status = kFailure;
    }
  });
  return status;
}

int run_min_load(const LemmaArgs& a) {
  int status = kOk;
  for_each_input_line(a.input, [&](std::size_t number, const std::string& line) {
    try {
      const Graph g = graph6_decode(line);
      const VertexLoad m = min_vertex_load(g);
      emit({{"check", "min_vertex_load"},
            {"line", number},
            {"n", g.order()},
            {"vertex", m.vertex},
            {"load", m.load},
            {"planar", is_planar(g)}});
    } catch (const std::exception& e) {
      emit(error_record(number, e.what()));
      status = kFailure;
    }
  });
  return status;
}

int run_sweep(const LemmaArgs& a) {
  try {
    detail::check_search_order(a.sweep_n, kDefaultSearchLimit);
  } catch (const SearchLimitError& e) {
    throw UsageError(e.what());
  }
  const LemmaOneSweep s = lemma_one_sweep(a.sweep_n);
  emit({{"check", "basic_bound_sweep"},
        {"n", a.sweep_n},
        {"graphs", s.graphs},
        {"checks", s.checks},
        {"violations", s.violations}});
  return s.violations == 0 ? kOk : kFailure;
}

// scan ---------------------------------------------------------------------

struct ScanArgs {
  std::size_t n = 0;
  std::string objective = "c5";
  std::size_t workers = 1;
  std::size_t limit = kDefaultSearchLimit;
  std::string checkpoint;
  std::optional<std::size_t> stop_after;
  bool csv = false;
};

int run_scan(const ScanArgs& a) {
  const auto objective = parse_objective(a.objective);
  if (!objective) throw UsageError("unknown objective: " + a.objective);
  if (a.workers == 0) throw UsageError("--workers must be positive");
  ScanOptions opt;
  opt.limit = a.limit;
  opt.workers = a.workers;
  opt.stop_after_units = a.stop_after;
  if (!a.checkpoint.empty()) {
    opt.checkpoint = a.checkpoint;
    opt.resume = std::filesystem::exists(a.checkpoint);
    if (opt.resume) std::cerr << "resuming from " << a.checkpoint << '\n';
  }
  ScanResult r;
  try {
    r = extremal_scan(a.n, *objective, opt);
  } catch (const SearchLimitError& e) {
    throw UsageError(e.what());
  }
  if (!r.complete()) {
    emit({{"n", a.n},
          {"objective", to_string(*objective)},
          {"complete", false},
          {"next_unit", r.state.next_unit},
          {"total_units", r.state.total_units}});
    return kOk;
  }
  if (a.csv) {
    std::cout << kExtremalCsvHeader << '\n' << to_csv_row(r.record) << '\n';
  } else {
    emit(r.record);
  }
  return kOk;
}

// verify -------------------------------------------------------------------

int run_verify(bool fast) {
  VerifyOptions opt;
  opt.fast = fast;
  const VerifySuiteResult r = run_verify_suite(opt);
  for (const auto& row : r.rows)
    emit({{"claim", row.claim}, {"expected", row.expected}, {"actual", row.actual}, {"pass", row.pass}});
  emit({{"pass", r.pass()}, {"rows", r.rows.size()}});
  return r.pass() ? kOk : kFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Induced 4- and 5-cycle counting in planar graphs"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "Count cycles in each graph6 line");
  count->add_option("--input", count_args.input, "graph6 file (default stdin)")->envname("PLANARC5_INPUT");
  auto* induced = count->add_flag("--induced", count_args.induced_only, "Report induced counts only");
  bool all = false;
  count->add_flag("--all", all, "Report induced and non-induced counts (default)")->excludes(induced);

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Build an extremal construction");
  construct->add_option("family", construct_args.family, "apex_tripartite or k2_book")->required();
  construct->add_option("n", construct_args.n, "Number of vertices")->required();
  construct->add_option("--sidecar", construct_args.sidecar, "Also write {family, n, expected_count} here");
  construct->add_flag("--graph6", construct_args.graph6_only, "Print only the graph6 line");

  LemmaArgs lemma_args;
  auto* lemma = app.add_subcommand("lemma", "Run structural checks");
  lemma->require_subcommand(1);
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", lemma_args.input, "graph6 file (default stdin)")->envname("PLANARC5_INPUT");
  };
  auto* basic = lemma->add_subcommand("basic-bound", "Triple count against |X|+|Y|-1 and the X-Y forest");
  add_input(basic);
  basic->add_option("--v", lemma_args.v, "Middle vertex");
  basic->add_option("--u", lemma_args.u, "First neighbour of v");
  basic->add_option("--w", lemma_args.w, "Second neighbour of v");
  auto* k2k = lemma->add_subcommand("empty-k2k", "Find empty K2,k fans in the computed embedding");
  add_input(k2k);
  k2k->add_option("--k", lemma_args.k, "Fan size")->capture_default_str();
  auto* minload = lemma->add_subcommand("min-load", "Smallest per-vertex induced C5 load");
  add_input(minload);
  auto* sweep = lemma->add_subcommand("sweep", "Exhaustive basic-bound check over connected planar graphs");
  sweep->add_option("--n", lemma_args.sweep_n, "Number of vertices")->required();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Exhaustive extremal scan over connected planar graphs");
  scan->add_option("n", scan_args.n, "Number of vertices")->required();
  scan->add_option("--objective", scan_args.objective, "induced_c5, c5, induced_c4 or c4")
      ->envname("PLANARC5_OBJECTIVE")
      ->capture_default_str();
  scan->add_option("--workers", scan_args.workers, "Worker threads")->envname("PLANARC5_WORKERS")->capture_default_str();
  scan->add_option("--limit", scan_args.limit, "Largest n accepted")->envname("PLANARC5_LIMIT")->capture_default_str();
  scan->add_option("--checkpoint", scan_args.checkpoint, "Checkpoint file; resumed when present")
      ->envname("PLANARC5_CHECKPOINT");
  scan->add_option("--stop-after", scan_args.stop_after, "Stop after this many work units");
  auto* as_csv = scan->add_flag("--csv", scan_args.csv, "CSV summary instead of JSON");
  bool as_json = false;
  scan->add_flag("--json", as_json, "JSON record (default)")->excludes(as_csv);

  bool fast = false;
  auto* verify = app.add_subcommand("verify", "Check the exact extremal values and constructions");
  verify->add_flag("--fast", fast, "Skip the n = 8 scans");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*count) return run_count(count_args);
    if (*construct) return run_construct(construct_args);
    if (*basic) return run_basic_bound(lemma_args);
    if (*k2k) return run_empty_k2k(lemma_args);
    if (*minload) return run_min_load(lemma_args);
    if (*sweep) return run_sweep(lemma_args);
    if (*scan) return run_scan(scan_args);
    if (*verify) return run_verify(fast);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

#ifndef PLANARC5_JSON_IO_HPP
#define PLANARC5_JSON_IO_HPP

#include <iomanip>
#include <sstream>
#include <string>

#include "json.hpp"
#include "planarc5/constructions.hpp"
#include "planarc5/counting.hpp"
#include "planarc5/lemma_lab.hpp"
#include "planarc5/search.hpp"

namespace planarc5 {

// Flat CountReport object:
//   {"induced_c5":..,"c5_total":..,"induced_c4":..,"c4_total":..,"vertex_c5_load":[..]}
inline void to_json(nlohmann::json& j, const CountReport& r) {
  j = {{"induced_c5", r.induced_c5},
       {"c5_total", r.c5_total},
       {"induced_c4", r.induced_c4},
       {"c4_total", r.c4_total},
       {"vertex_c5_load", r.vertex_c5_load}};
}

inline void from_json(const nlohmann::json& j, CountReport& r) {
  j.at("induced_c5").get_to(r.induced_c5);
  j.at("c5_total").get_to(r.c5_total);
  j.at("induced_c4").get_to(r.induced_c4);
  j.at("c4_total").get_to(r.c4_total);
  j.at("vertex_c5_load").get_to(r.vertex_c5_load);
}

inline void to_json(nlohmann::json& j, const LemmaOneReport& r) {
  j = {{"check", "basic_bound"},
       {"v", r.v},
       {"u", r.u},
       {"w", r.w},
       {"X", r.x.to_vector()},
       {"Y", r.y.to_vector()},
       {"bound", r.bound},
       {"actual", r.actual},
       {"forest_ok", r.forest_ok}};
}

inline void to_json(nlohmann::json& j, const EmptyK2kWitness& w) {
  j = {{"u", w.u}, {"w", w.w}, {"centers", w.centers}};
}

inline void to_json(nlohmann::json& j, const ConstructionSpec& s) {
  j = {{"family", to_string(s.family)},
       {"n", s.n},
       {"objective", to_string(s.objective)},
       {"expected_count", s.expected_count}};
}

inline void to_json(nlohmann::json& j, const ExtremalRecord& r) {
  nlohmann::json hist = nlohmann::json::object();
  for (auto [k, v] : r.histogram) hist[std::to_string(k)] = v;
  j = {{"n", r.n},
       {"objective", to_string(r.objective)},
       {"maximum", r.maximum},
       {"witnesses", r.witnesses},
       {"histogram", hist},
       {"graphs_visited", r.graphs_visited},
       {"elapsed", r.elapsed}};
}

inline const char* kExtremalCsvHeader = "n,objective,maximum,witness_count,graphs_visited,elapsed";

inline std::string to_csv_row(const ExtremalRecord& r) {
  std::ostringstream os;
  os << r.n << ',' << to_string(r.objective) << ',' << r.maximum << ',' << r.witnesses.size() << ','
     << r.graphs_visited << ',' << std::fixed << std::setprecision(3) << r.elapsed;
  return os.str();
}

}  // namespace planarc5

#endif  // PLANARC5_JSON_IO_HPP

#pragma once

// JSON and CSV serialization of verification reports. Exact values are
// written as decimal strings.

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zagreb/oracle.hpp"

namespace zagreb {

using ordered_json = nlohmann::ordered_json;

inline ordered_json degrees_json(const DegreeSequence& d) {
  return ordered_json(std::vector<int>(d.degrees().begin(), d.degrees().end()));
}

inline ordered_json value_json(const IndexValue& v) {
  return ordered_json{{"exact", v.to_string()}, {"log2", v.log2}};
}

inline ordered_json to_json(const ExtremalReport& r) {
  ordered_json quadrants = ordered_json::array();
  for (const auto& q : r.quadrants) {
    ordered_json seqs = ordered_json::array();
    for (const auto& s : q.oracle_sequences) seqs.push_back(degrees_json(s));
    quadrants.push_back({
        {"index", to_string(q.index)},
        {"goal", to_string(q.goal)},
        {"oracle_value", value_json(q.oracle_value)},
        {"oracle_sequences", seqs},
        {"sequences_overflow", q.sequences_overflow},
        {"formula_value", value_json(q.formula_value)},
        {"formula_sequence", degrees_json(q.formula_sequence)},
        {"match", q.match},
    });
  }
  return ordered_json{
      {"n", r.n},
      {"k", r.k},
      {"class_size", r.class_size},
      {"pi2_identity_mismatches", r.pi2_identity_mismatches},
      {"match", r.all_match()},
      {"quadrants", quadrants},
  };
}

inline ordered_json to_json(const std::vector<ExtremalReport>& reports) {
  ordered_json classes = ordered_json::array();
  std::size_t failing = 0;
  for (const auto& r : reports) {
    classes.push_back(to_json(r));
    if (!r.all_match()) ++failing;
  }
  return ordered_json{
      {"classes", reports.size()},
      {"failing", failing},
      {"pass", failing == 0},
      {"reports", classes},
  };
}

inline constexpr const char* kReportCsvHeader = "n,k,index,goal,oracle,formula,match";

inline void write_csv(std::ostream& out, const std::vector<ExtremalReport>& reports) {
  out << kReportCsvHeader << '\n';
  for (const auto& r : reports) {
    for (const auto& q : r.quadrants) {
      out << r.n << ',' << r.k << ',' << to_string(q.index) << ',' << to_string(q.goal) << ','
          << q.oracle_value.to_string() << ',' << q.formula_value.to_string() << ','
          << (q.match && r.pi2_identity_mismatches == 0 ? "true" : "false") << '\n';
    }
  }
}

}  // namespace zagreb

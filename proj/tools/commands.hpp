#pragma once

// Subcommand bodies of the zagreb CLI. Each takes its parsed options plus
// output streams and returns the process exit code, so tests can drive them
// without spawning a process.

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "zagreb/report.hpp"
#include "zagreb/zagreb.hpp"

namespace zagreb::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kParseError = 2,
  kDomainError = 3,
};

inline constexpr const char* kAdmissibilityRule =
    "T(n,k) is non-empty only for 1 <= k <= floor((n-2)/2) or k = n-2";

inline bool parse_index(const std::string& s, Index& out) {
  if (s == "pi1") out = Index::pi1;
  else if (s == "pi2") out = Index::pi2;
  else return false;
  return true;
}

inline bool parse_goal(const std::string& s, Goal& out) {
  if (s == "min") out = Goal::min;
  else if (s == "max") out = Goal::max;
  else return false;
  return true;
}

// ---------------------------------------------------------------- compute

struct ComputeOptions {
  std::string format = "json";  // json | table
};

inline ordered_json tree_summary_json(const Tree& t, std::size_t line) {
  const DegreeSequence seq = degree_sequence_of(t);
  const MaxDegree md = max_degree_count(t);
  return ordered_json{
      {"line", line},
      {"n", t.order()},
      {"degree_sequence", degrees_json(seq)},
      {"delta", md.delta},
      {"k", md.count},
      {"m1", m1(seq)},
      {"m2", m2(t)},
      {"pi1", value_json(pi1(seq))},
      {"pi2", value_json(pi2_edge(t))},
  };
}

class TablePrinter {
public:
  explicit TablePrinter(std::ostream& out) : out_(out) {}

  void row(const Tree& t, std::size_t line) {
    if (!header_done_) {
      out_ << std::left << std::setw(6) << "line" << std::setw(5) << "n" << std::setw(7)
           << "delta" << std::setw(5) << "k" << std::setw(8) << "M1" << std::setw(8) << "M2"
           << std::setw(24) << "Pi1" << std::setw(24) << "Pi2" << std::setw(12) << "log2Pi1"
           << std::setw(12) << "log2Pi2" << "degrees" << '\n';
      header_done_ = true;
    }
    const DegreeSequence seq = degree_sequence_of(t);
    const MaxDegree md = max_degree_count(t);
    const IndexValue p1 = pi1(seq);
    const IndexValue p2 = pi2_edge(t);
    std::ostringstream l1, l2;
    l1 << std::fixed << std::setprecision(4) << p1.log2;
    l2 << std::fixed << std::setprecision(4) << p2.log2;
    out_ << std::left << std::setw(6) << line << std::setw(5) << t.order() << std::setw(7)
         << md.delta << std::setw(5) << md.count << std::setw(8) << m1(seq) << std::setw(8)
         << m2(t) << std::setw(23) << p1.to_string() << ' ' << std::setw(23) << p2.to_string()
         << ' ' << std::setw(11) << l1.str() << ' ' << std::setw(11) << l2.str() << ' '
         << seq.to_string() << '\n';
  }

private:
  std::ostream& out_;
  bool header_done_ = false;
};

// Reads trees from `in`: one graph6 record per line, or edge-list blocks
// ("u v" lines) separated by blank lines. '#' lines are comments.
inline int run_compute(const ComputeOptions& opt, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  if (opt.format != "json" && opt.format != "table") {
    err << "error: compute supports --format json|table\n";
    return kDomainError;
  }
  TablePrinter table(out);
  auto emit = [&](const Tree& t, std::size_t line) {
    if (opt.format == "json") {
      out << tree_summary_json(t, line).dump() << '\n';
    } else {
      table.row(t, line);
    }
  };

  std::string block;
  std::size_t block_start = 0;
  auto flush_block = [&] {
    if (block_start == 0) return;
    Tree t = parse_edgelist(block, block_start);
    emit(t, block_start);
    block.clear();
    block_start = 0;
  };

  std::string line;
  std::size_t line_no = 0;
  try {
    while (std::getline(in, line)) {
      ++line_no;
      std::string_view body = detail::trim(line);
      if (body.empty()) {
        flush_block();
        continue;
      }
      if (body.front() == '#') {
        // Keeps line numbers inside a pending block absolute.
        if (block_start != 0) block += '\n';
        continue;
      }
      if (std::isdigit(static_cast<unsigned char>(body.front()))) {
        if (block_start == 0) block_start = line_no;
        block += line;
        block += '\n';
        continue;
      }
      flush_block();
      try {
        emit(parse_graph6(body), line_no);
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no);
      }
    }
    flush_block();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const NotATreeError& e) {
    err << "error: line " << block_start << ": " << e.what() << '\n';
    return kParseError;
  } catch (const DomainError& e) {
    err << "error: line " << line_no << ": " << e.what() << '\n';
    return kParseError;
  }
  return kOk;
}

// -------------------------------------------------------------- construct

struct ConstructOptions {
  int n = 0;
  int k = 0;
  std::string index = "pi1";
  std::string goal = "min";
  std::string format = "graph6";  // graph6 | edgelist | json
};

inline int run_construct(const ConstructOptions& opt, std::ostream& out, std::ostream& err) {
  Index index{};
  Goal goal{};
  if (!parse_index(opt.index, index) || !parse_goal(opt.goal, goal)) {
    err << "error: --index must be pi1|pi2 and --goal min|max\n";
    return kDomainError;
  }
  if (opt.format != "graph6" && opt.format != "edgelist" && opt.format != "json") {
    err << "error: construct supports --format graph6|edgelist|json\n";
    return kDomainError;
  }
  if (!is_admissible(opt.n, opt.k)) {
    err << "error: class (n=" << opt.n << ", k=" << opt.k << ") is not admissible: "
        << kAdmissibilityRule << '\n';
    return kDomainError;
  }

  const ExtremalSpec spec = extremal_spec(opt.n, opt.k, index, goal);
  const Tree tree = realize(spec.sequence);
  const IndexValue realized = index == Index::pi1 ? pi1(tree) : pi2_edge(tree);
  const MaxDegree md = max_degree_count(tree);
  if (realized != spec.bound || md.count != opt.k ||
      md.delta != spec.sequence.max_degree()) {
    err << "error: realized tree does not attain the bound (" << realized.to_string() << " vs "
        << spec.bound.to_string() << ")\n";
    return kMismatch;
  }

  if (opt.format == "json") {
    ordered_json edges = ordered_json::array();
    for (const Edge& e : tree.edges()) edges.push_back({e.u, e.v});
    out << ordered_json{
               {"n", opt.n},
               {"k", opt.k},
               {"index", to_string(index)},
               {"goal", to_string(goal)},
               {"delta", md.delta},
               {"degree_sequence", degrees_json(spec.sequence)},
               {"bound", value_json(spec.bound)},
               {"graph6", emit_graph6(tree)},
               {"edges", edges},
           }.dump(2)
        << '\n';
    return kOk;
  }

  out << "# n=" << opt.n << " k=" << opt.k << " index=" << to_string(index)
      << " goal=" << to_string(goal) << '\n'
      << "# sequence " << spec.sequence.to_string() << '\n'
      << "# bound " << spec.bound.to_string() << '\n';
  if (opt.format == "graph6") {
    out << emit_graph6(tree) << '\n';
  } else {
    out << emit_edgelist(tree);
  }
  return kOk;
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
  int n_max = 12;
  std::string report_path;  // .csv -> CSV, otherwise JSON; empty -> none
  int jobs = 1;
};

inline int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.n_max < 4 || opt.n_max > kMaxEnumerationOrder) {
    err << "error: --n-max must lie in 4.." << kMaxEnumerationOrder << '\n';
    return kDomainError;
  }
  std::vector<ExtremalReport> reports;
  try {
    reports = verify_grid(opt.n_max, std::max(1, opt.jobs));
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kMismatch;
  }

  std::vector<std::string> failing;
  for (const auto& r : reports) {
    out << "n=" << r.n << " k=" << r.k << " trees=" << r.class_size
        << (r.all_match() ? " ok" : " MISMATCH") << '\n';
    if (r.pi2_identity_mismatches > 0) {
      failing.push_back("(" + std::to_string(r.n) + "," + std::to_string(r.k) +
                        ",pi2,identity)");
    }
    for (const auto& q : r.quadrants) {
      if (!q.match) {
        failing.push_back("(" + std::to_string(r.n) + "," + std::to_string(r.k) + "," +
                          to_string(q.index) + "," + to_string(q.goal) + ")");
      }
    }
  }

  if (!opt.report_path.empty()) {
    std::ofstream file(opt.report_path);
    if (!file) {
      err << "error: cannot write " << opt.report_path << '\n';
      return kDomainError;
    }
    if (opt.report_path.ends_with(".csv")) {
      write_csv(file, reports);
    } else {
      file << to_json(reports).dump(2) << '\n';
    }
  }

  out << reports.size() << " classes, " << failing.size() << " mismatches\n";
  if (!failing.empty()) {
    for (const auto& f : failing) err << "mismatch " << f << '\n';
    return kMismatch;
  }
  return kOk;
}

// ------------------------------------------------------------------ table

struct TableOptions {
  int n_from = 4;
  int n_to = 12;
  std::string format = "text";  // csv | text
};

inline constexpr const char* kTableCsvHeader = "n,k,delta,pi1_min,pi1_max,pi2_min,pi2_max";
inline constexpr int kTableMaxOrder = 2000;

inline int run_table(const TableOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.format != "csv" && opt.format != "text") {
    err << "error: table supports --format csv|text\n";
    return kDomainError;
  }
  if (opt.n_from < 3 || opt.n_to < opt.n_from || opt.n_to > kTableMaxOrder) {
    err << "error: need 3 <= --n-from <= --n-to <= " << kTableMaxOrder << '\n';
    return kDomainError;
  }

  struct Row {
    int n, k, delta;
    std::array<IndexValue, 4> bounds;
  };
  std::vector<Row> rows;
  for (int n = opt.n_from; n <= opt.n_to; ++n) {
    for (int k : admissible_ks(n)) {
      Row row{n, k, class_params(n, k).delta, {}};
      for (std::size_t q = 0; q < kQuadrants.size(); ++q) {
        row.bounds[q] = extremal_spec(n, k, kQuadrants[q].first, kQuadrants[q].second).bound;
      }
      rows.push_back(std::move(row));
    }
  }

  if (opt.format == "csv") {
    out << kTableCsvHeader << '\n';
    for (const auto& r : rows) {
      out << r.n << ',' << r.k << ',' << r.delta;
      for (const auto& b : r.bounds) out << ',' << b.to_string();
      out << '\n';
    }
    return kOk;
  }

  std::array<std::size_t, 4> width{7, 7, 7, 7};
  for (const auto& r : rows) {
    for (std::size_t q = 0; q < 4; ++q) width[q] = std::max(width[q], r.bounds[q].to_string().size());
  }
  const std::array<const char*, 4> names{"pi1_min", "pi1_max", "pi2_min", "pi2_max"};
  out << std::right << std::setw(5) << "n" << std::setw(5) << "k" << std::setw(7) << "delta";
  for (std::size_t q = 0; q < 4; ++q) out << "  " << std::setw(static_cast<int>(width[q])) << names[q];
  for (std::size_t q = 0; q < 4; ++q) out << "  " << std::setw(12) << (std::string("log2_") + names[q]);
  out << '\n';
  for (const auto& r : rows) {
    out << std::setw(5) << r.n << std::setw(5) << r.k << std::setw(7) << r.delta;
    for (std::size_t q = 0; q < 4; ++q) {
      out << "  " << std::setw(static_cast<int>(width[q])) << r.bounds[q].to_string();
    }
    for (std::size_t q = 0; q < 4; ++q) {
      std::ostringstream l;
      l << std::fixed << std::setprecision(4) << r.bounds[q].log2;
      out << "  " << std::setw(12) << l.str();
    }
    out << '\n';
  }
  return kOk;
}

}  // namespace zagreb::cli

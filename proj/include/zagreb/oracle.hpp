#pragma once

// Brute-force ground truth: enumerate every free tree on n vertices, bucket by
// the number of maximum-degree vertices, and compare the true extrema of both
// multiplicative indices with the closed forms from extremal.hpp.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>
#include <vector>

#include "zagreb/enumerate.hpp"
#include "zagreb/extremal.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/tree.hpp"

namespace zagreb {

inline constexpr std::size_t kMaxAttainingSequences = 64;

inline constexpr std::array<std::pair<Index, Goal>, 4> kQuadrants = {{
    {Index::pi1, Goal::min},
    {Index::pi1, Goal::max},
    {Index::pi2, Goal::min},
    {Index::pi2, Goal::max},
}};

struct QuadrantResult {
  Index index = Index::pi1;
  Goal goal = Goal::min;
  IndexValue oracle_value;
  std::vector<DegreeSequence> oracle_sequences;  // sorted, deduplicated
  bool sequences_overflow = false;
  IndexValue formula_value;
  DegreeSequence formula_sequence;
  bool match = false;
};

struct ExtremalReport {
  int n = 0;
  int k = 0;
  std::size_t class_size = 0;
  // Trees whose edge-wise and vertex-wise second index disagree; always 0 for
  // a sound implementation.
  std::size_t pi2_identity_mismatches = 0;
  std::array<QuadrantResult, 4> quadrants;

  const QuadrantResult& quadrant(Index index, Goal goal) const {
    for (const auto& q : quadrants) {
      if (q.index == index && q.goal == goal) return q;
    }
    throw std::logic_error("missing quadrant");
  }

  bool all_match() const {
    return pi2_identity_mismatches == 0 &&
           std::all_of(quadrants.begin(), quadrants.end(),
                       [](const QuadrantResult& q) { return q.match; });
  }
};

namespace detail {

// Running extrema of one class; O(1) memory in the number of trees.
class ClassAccumulator {
public:
  void add(const Tree& t) {
    const DegreeSequence seq = degree_sequence_of(t);
    const IndexValue v1 = pi1(seq);
    const IndexValue v2 = pi2_vertex(seq);
    if (pi2_edge(t) != v2) ++identity_mismatches_;
    for (std::size_t q = 0; q < kQuadrants.size(); ++q) {
      offer(slots_[q], kQuadrants[q].second, kQuadrants[q].first == Index::pi1 ? v1 : v2, seq);
    }
    ++size_;
  }

  std::size_t size() const noexcept { return size_; }

  ExtremalReport report(int n, int k) const {
    ExtremalReport out;
    out.n = n;
    out.k = k;
    out.class_size = size_;
    out.pi2_identity_mismatches = identity_mismatches_;
    for (std::size_t q = 0; q < kQuadrants.size(); ++q) {
      const auto [index, goal] = kQuadrants[q];
      const ExtremalSpec formula = extremal_spec(n, k, index, goal);
      QuadrantResult& r = out.quadrants[q];
      r.index = index;
      r.goal = goal;
      r.oracle_value = slots_[q].best;
      r.oracle_sequences.assign(slots_[q].attaining.begin(), slots_[q].attaining.end());
      r.sequences_overflow = slots_[q].overflow;
      r.formula_value = formula.bound;
      r.formula_sequence = formula.sequence;
      r.match = size_ > 0 && !r.sequences_overflow && r.oracle_value == r.formula_value &&
                r.oracle_sequences.size() == 1 && r.oracle_sequences.front() == r.formula_sequence;
    }
    return out;
  }

private:
  struct Slot {
    bool empty = true;
    IndexValue best;
    std::set<DegreeSequence> attaining;
    bool overflow = false;
  };

  static void offer(Slot& s, Goal goal, const IndexValue& v, const DegreeSequence& seq) {
    const bool better = s.empty || (goal == Goal::min ? v < s.best : v > s.best);
    if (better) {
      s.empty = false;
      s.best = v;
      s.attaining.clear();
      s.overflow = false;
    }
    if (better || v == s.best) {
      if (s.attaining.size() < kMaxAttainingSequences || s.attaining.count(seq)) {
        s.attaining.insert(seq);
      } else {
        s.overflow = true;
      }
    }
  }

  std::size_t size_ = 0;
  std::size_t identity_mismatches_ = 0;
  std::array<Slot, 4> slots_;
};

// One enumeration pass over all trees on n vertices, bucketed by k.
inline std::map<int, ClassAccumulator> accumulate_order(int n) {
  std::map<int, ClassAccumulator> classes;
  for_each_free_tree(n, [&](const Tree& t) { classes[max_degree_count(t).count].add(t); });
  return classes;
}

}  // namespace detail

// Admissible k values for order n, ascending.
inline std::vector<int> admissible_ks(int n) {
  std::vector<int> ks;
  for (int k = 1; k <= n - 2; ++k) {
    if (is_admissible(n, k)) ks.push_back(k);
  }
  return ks;
}

// Every free tree on n vertices, grouped by its number of maximum-degree
// vertices.
inline std::map<int, std::vector<Tree>> classify(int n) {
  std::map<int, std::vector<Tree>> out;
  for_each_free_tree(n, [&](const Tree& t) { out[max_degree_count(t).count].push_back(t); });
  return out;
}

inline ExtremalReport verify_class(int n, int k) {
  if (!is_admissible(n, k)) {
    throw DomainError("class (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                      ") is not admissible");
  }
  detail::ClassAccumulator acc;
  for_each_free_tree(n, [&](const Tree& t) {
    if (max_degree_count(t).count == k) acc.add(t);
  });
  if (acc.size() == 0) {
    throw Error("enumeration found no tree in admissible class (n=" + std::to_string(n) +
                ", k=" + std::to_string(k) + ")");
  }
  return acc.report(n, k);
}

// Reports for every admissible (n, k) with 4 <= n <= n_max, sorted by (n, k).
// Distinct orders are processed on up to `jobs` threads.
inline std::vector<ExtremalReport> verify_grid(int n_max, int jobs = 1) {
  if (n_max > kMaxEnumerationOrder) {
    throw DomainError("n_max above enumeration limit " + std::to_string(kMaxEnumerationOrder));
  }
  constexpr int n_min = 4;
  if (n_max < n_min) return {};

  std::vector<std::vector<ExtremalReport>> per_order(static_cast<std::size_t>(n_max + 1));
  std::vector<std::string> failures(per_order.size());
  std::atomic<int> next_n{n_min};

  auto worker = [&] {
    for (int n = next_n++; n <= n_max; n = next_n++) {
      try {
        auto classes = detail::accumulate_order(n);
        for (int k : admissible_ks(n)) {
          auto it = classes.find(k);
          if (it == classes.end()) {
            throw Error("no tree in admissible class (n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ")");
          }
          per_order[n].push_back(it->second.report(n, k));
        }
        for (const auto& [k, acc] : classes) {
          if (!is_admissible(n, k)) {
            throw Error("tree found in inadmissible class (n=" + std::to_string(n) +
                        ", k=" + std::to_string(k) + ")");
          }
        }
      } catch (const std::exception& e) {
        failures[n] = e.what();
      }
    }
  };

  const int threads = std::clamp(jobs, 1, n_max - n_min + 1);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  }

  std::vector<ExtremalReport> out;
  for (int n = n_min; n <= n_max; ++n) {
    if (!failures[n].empty()) throw Error(failures[n]);
    for (auto& r : per_order[n]) out.push_back(std::move(r));
  }
  return out;
}

}  // namespace zagreb

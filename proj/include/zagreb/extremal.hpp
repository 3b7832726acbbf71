#pragma once

// Closed-form extremal degree sequences and index bounds over the class of
// trees on n vertices with exactly k vertices of maximum degree.

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "zagreb/errors.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/tree.hpp"

namespace zagreb {

enum class Index { pi1, pi2 };
enum class Goal { min, max };

inline const char* to_string(Index i) { return i == Index::pi1 ? "pi1" : "pi2"; }
inline const char* to_string(Goal g) { return g == Goal::min ? "min" : "max"; }

inline IndexValue evaluate(Index index, const DegreeSequence& d) {
  return index == Index::pi1 ? pi1(d) : pi2_vertex(d);
}

// Non-empty iff 1 <= k <= floor((n-2)/2) or k = n-2. Trees with maximum degree
// at least 3 have at least 3k + (n-k) <= 2(n-1), and maximum degree 2 means
// the path, whose n-2 inner vertices all share that degree.
inline bool is_admissible(int n, int k) {
  if (n < 2 || k < 1) return false;
  return k <= (n - 2) / 2 || k == n - 2;
}

inline bool is_path_class(int n, int k) { return n >= 3 && k == n - 2; }

struct ClassParams {
  int n = 0;
  int k = 0;
  int delta = 0;
  int r = 0;
  // Undefined for the path class, where delta - 2 = 0.
  std::optional<int> p;
  std::optional<int> mu;
};

inline ClassParams class_params(int n, int k) {
  if (!is_admissible(n, k)) {
    throw DomainError("class (n=" + std::to_string(n) + ", k=" + std::to_string(k) +
                      ") is empty: need 1 <= k <= floor((n-2)/2) or k = n-2");
  }
  ClassParams c;
  c.n = n;
  c.k = k;
  c.delta = (n - 2) / k + 1;
  c.r = n - 2 - k * (c.delta - 1);
  if (c.delta >= 3) {
    c.p = c.r / (c.delta - 2);
    c.mu = n - 1 - k * (c.delta - 1) - *c.p * (c.delta - 2);
  }
  return c;
}

struct ExtremalSpec {
  Index index = Index::pi1;
  Goal goal = Goal::min;
  DegreeSequence sequence;
  IndexValue bound;
};

namespace detail {

inline IndexValue power_product(std::initializer_list<std::pair<unsigned, unsigned>> factors) {
  IndexValue out;
  for (auto [base, exponent] : factors) accumulate_power(out, base, exponent);
  return out;
}

// (delta^k, (delta-1)^p, mu, 1^(n-k-p-1)); a mu of 1 lands in the leaf block.
inline DegreeSequence concentrated_sequence(const ClassParams& c) {
  std::vector<int> d;
  d.insert(d.end(), c.k, c.delta);
  d.insert(d.end(), *c.p, c.delta - 1);
  d.push_back(*c.mu);
  d.insert(d.end(), c.n - c.k - *c.p - 1, 1);
  return DegreeSequence(std::move(d));
}

// (3^k, 2^(n-2k-2), 1^(k+2)).
inline DegreeSequence cubic_sequence(int n, int k) {
  std::vector<int> d;
  d.insert(d.end(), k, 3);
  d.insert(d.end(), n - 2 * k - 2, 2);
  d.insert(d.end(), k + 2, 1);
  return DegreeSequence(std::move(d));
}

}  // namespace detail

// The extremal degree sequence and the closed-form bound for one quadrant.
// The bound is evaluated from its closed form, not from the sequence, so
// `bound == evaluate(index, sequence)` is a genuine cross-check.
inline ExtremalSpec extremal_spec(int n, int k, Index index, Goal goal) {
  const ClassParams c = class_params(n, k);
  ExtremalSpec out{index, goal, {}, {}};

  if (is_path_class(n, k)) {
    std::vector<int> d(n, 2);
    d[n - 2] = d[n - 1] = 1;
    out.sequence = DegreeSequence(std::move(d));
    out.bound = detail::power_product({{4u, static_cast<unsigned>(n - 2)}});
    return out;
  }

  const auto K = static_cast<unsigned>(k);
  const auto delta = static_cast<unsigned>(c.delta);
  const bool concentrated = (index == Index::pi1) == (goal == Goal::min);
  if (concentrated) {
    const auto p = static_cast<unsigned>(*c.p);
    const auto mu = static_cast<unsigned>(*c.mu);
    out.sequence = detail::concentrated_sequence(c);
    if (index == Index::pi1) {
      out.bound = detail::power_product({{delta, 2 * K}, {delta - 1, 2 * p}, {mu, 2}});
    } else {
      out.bound = detail::power_product(
          {{delta, K * delta}, {delta - 1, p * (delta - 1)}, {mu, mu}});
    }
  } else {
    const auto twos = static_cast<unsigned>(n - 2 * k - 2);
    out.sequence = detail::cubic_sequence(n, k);
    out.bound = detail::power_product({{index == Index::pi1 ? 9u : 27u, K}, {4u, twos}});
  }
  return out;
}

// Deterministic greedy breadth-first realization: vertex i receives the i-th
// largest degree, vertex 0 is the root, and each later vertex attaches to the
// oldest open slot in a FIFO queue.
inline Tree realize(const DegreeSequence& d) {
  if (!d.is_tree_sequence()) {
    throw DomainError("not a tree sequence: " + d.to_string());
  }
  const std::size_t n = d.order();
  if (n == 1) return Tree::from_edges(1, {});

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::deque<Vertex> slots(static_cast<std::size_t>(d[0]), 0);
  for (std::size_t i = 1; i < n; ++i) {
    Vertex parent = slots.front();
    slots.pop_front();
    edges.push_back({parent, static_cast<Vertex>(i)});
    slots.insert(slots.end(), static_cast<std::size_t>(d[i] - 1), static_cast<Vertex>(i));
  }
  return Tree::from_edges(n, edges);
}

}  // namespace zagreb

#pragma once

// Edge-rotation moves used in the extremal arguments, the two monotone ratio
// functions behind them, and exact index ratios for the moves.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "zagreb/errors.hpp"
#include "zagreb/extremal.hpp"
#include "zagreb/indices.hpp"
#include "zagreb/tree.hpp"

namespace zagreb {

using Rational = boost::multiprecision::cpp_rational;

// x / (x + m); increasing in x for fixed m > 0.
inline double f_ratio(double x, double m) {
  if (!(x > 0.0) || !(m > 0.0)) throw DomainError("f_ratio needs x > 0 and m > 0");
  return x / (x + m);
}

// x^x / (x + m)^(x + m), evaluated in log space; decreasing in x for fixed m > 0.
inline double g_ratio(double x, double m) {
  if (!(x > 0.0) || !(m > 0.0)) throw DomainError("g_ratio needs x > 0 and m > 0");
  return std::exp(x * std::log(x) - (x + m) * std::log(x + m));
}

inline Rational f_ratio_exact(unsigned x, unsigned m) {
  if (x == 0 || m == 0) throw DomainError("f_ratio needs x > 0 and m > 0");
  return Rational(BigInt(x), BigInt(x + m));
}

inline Rational g_ratio_exact(unsigned x, unsigned m) {
  if (x == 0 || m == 0) throw DomainError("g_ratio needs x > 0 and m > 0");
  using boost::multiprecision::pow;
  return Rational(pow(BigInt(x), x), pow(BigInt(x + m), x + m));
}

// Sum of d(v) - 1 over vertices with 2 <= d(v) <= Delta - 1.
inline long long edge_rotating_capacity(const Tree& t) {
  const int delta = max_degree_count(t).delta;
  long long total = 0;
  for (std::size_t v = 0; v < t.order(); ++v) {
    const int d = static_cast<int>(t.degree(static_cast<Vertex>(v)));
    if (d >= 2 && d <= delta - 1) total += d - 1;
  }
  return total;
}

enum class MoveKind { degree_shift, leaf_reattach };

// degree_shift: `u` gains one edge, taken from `donor` (its neighbor `moved`
//   is re-hung on u).
// leaf_reattach: edge u-u2 is replaced by u2-z1 for a pendent z1 on u's side.
struct RotationMove {
  MoveKind kind = MoveKind::degree_shift;
  Vertex u = -1;
  Vertex a = -1;  // donor (degree_shift) or u2 (leaf_reattach)
  Vertex b = -1;  // moved neighbor (degree_shift) or z1 (leaf_reattach)
};

namespace detail {

// parent[] of a BFS from `root`; parent[root] == root.
inline std::vector<Vertex> bfs_parents(const Tree& t, Vertex root) {
  std::vector<Vertex> parent(t.order(), -1);
  std::vector<Vertex> queue{root};
  parent[root] = root;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Vertex w : t.neighbors(queue[i])) {
      if (parent[w] == -1) {
        parent[w] = queue[i];
        queue.push_back(w);
      }
    }
  }
  return parent;
}

// The neighbor of `u` through which `v` is reached, or -1 when v == u.
inline Vertex first_hop(const std::vector<Vertex>& parent_from_u, Vertex u, Vertex v) {
  if (v == u) return -1;
  while (parent_from_u[v] != u) v = parent_from_u[v];
  return v;
}

inline Tree replace_edge(const Tree& t, Edge removed, Edge added) {
  std::vector<Edge> edges;
  edges.reserve(t.order());
  for (const Edge& e : t.edges()) {
    if ((e.u == removed.u && e.v == removed.v) || (e.u == removed.v && e.v == removed.u)) continue;
    edges.push_back(e);
  }
  edges.push_back(added);
  return Tree::from_edges(t.order(), edges);
}

inline void check_vertex(const Tree& t, Vertex v, const char* name) {
  if (v < 0 || static_cast<std::size_t>(v) >= t.order()) {
    throw DomainError(std::string(name) + " is not a vertex of the tree");
  }
}

}  // namespace detail

// T - u u2 + u2 z1. Requires: u of maximum degree Delta >= 4, u2 adjacent to u,
// z1 pendent and reached from u through a neighbor other than u2. Afterwards
// d(u) drops by one, d(z1) goes from 1 to 2, and nothing else changes.
inline Tree leaf_reattach(const Tree& t, Vertex u, Vertex u2, Vertex z1) {
  detail::check_vertex(t, u, "u");
  detail::check_vertex(t, u2, "u2");
  detail::check_vertex(t, z1, "z1");
  const int delta = max_degree_count(t).delta;
  if (static_cast<int>(t.degree(u)) != delta) throw DomainError("u is not a maximum-degree vertex");
  if (delta < 4) throw DomainError("leaf_reattach needs maximum degree at least 4");
  if (!t.adjacent(u, u2)) throw DomainError("u2 is not adjacent to u");
  if (t.degree(z1) != 1) throw DomainError("z1 is not a pendent vertex");
  const auto parent = detail::bfs_parents(t, u);
  const Vertex via = detail::first_hop(parent, u, z1);
  if (via == -1 || via == u2) throw DomainError("z1 lies in the branch cut off with u2");
  return detail::replace_edge(t, {u, u2}, {u2, z1});
}

// Deterministic valid leaf_reattach for `u`: smallest u2, then the smallest
// pendent z1 outside u2's branch.
inline std::optional<RotationMove> find_leaf_reattach(const Tree& t, Vertex u) {
  const int delta = max_degree_count(t).delta;
  if (delta < 4 || static_cast<int>(t.degree(u)) != delta) return std::nullopt;
  const Vertex u2 = t.neighbors(u).front();
  const auto parent = detail::bfs_parents(t, u);
  for (std::size_t z = 0; z < t.order(); ++z) {
    const auto z1 = static_cast<Vertex>(z);
    if (t.degree(z1) != 1 || z1 == u) continue;
    const Vertex via = detail::first_hop(parent, u, z1);
    if (via != u2) return RotationMove{MoveKind::leaf_reattach, u, u2, z1};
  }
  return std::nullopt;
}

// Moves one edge from `donor` to `u`: a neighbor w of donor that is not on the
// donor-u path is detached from donor and attached to u. Degrees of u and
// donor change by +1 and -1; all others are unchanged.
inline Tree degree_shift(const Tree& t, Vertex u, Vertex donor) {
  detail::check_vertex(t, u, "u");
  detail::check_vertex(t, donor, "donor");
  if (u == donor) throw DomainError("degree_shift needs distinct vertices");
  if (t.degree(donor) < 2) throw DomainError("donor must have degree at least 2");
  const auto parent = detail::bfs_parents(t, donor);
  const Vertex toward_u = detail::first_hop(parent, donor, u);
  for (Vertex w : t.neighbors(donor)) {
    if (w != toward_u) return detail::replace_edge(t, {donor, w}, {u, w});
  }
  throw std::logic_error("degree_shift: no movable neighbor");
}

// Repeats leaf_reattach on every vertex of the original maximum degree until
// none is left. Returns the trees after each step (T^1 .. T^k).
inline std::vector<Tree> reattach_all(const Tree& t) {
  std::vector<Tree> trail;
  const MaxDegree start = max_degree_count(t);
  if (start.delta < 4) return trail;
  Tree current = t;
  for (std::size_t v = 0; v < t.order(); ++v) {
    if (static_cast<int>(t.degree(static_cast<Vertex>(v))) != start.delta) continue;
    auto move = find_leaf_reattach(current, static_cast<Vertex>(v));
    if (!move) throw std::logic_error("reattach_all: no valid move");
    current = leaf_reattach(current, move->u, move->a, move->b);
    trail.push_back(current);
  }
  return trail;
}

// Raises every vertex of the original maximum degree Delta to Delta + 1, each
// time taking an edge from the lowest-indexed vertex whose degree lies in the
// capacity window 2 .. Delta-1. Needs edge_rotating_capacity(t) >= k.
inline std::vector<Tree> shift_all(const Tree& t) {
  const MaxDegree start = max_degree_count(t);
  if (edge_rotating_capacity(t) < start.count) {
    throw DomainError("edge rotating capacity below the number of maximum-degree vertices");
  }
  std::vector<Tree> trail;
  Tree current = t;
  for (std::size_t v = 0; v < t.order(); ++v) {
    if (static_cast<int>(t.degree(static_cast<Vertex>(v))) != start.delta) continue;
    Vertex donor = -1;
    for (std::size_t w = 0; w < current.order() && donor == -1; ++w) {
      const int d = static_cast<int>(current.degree(static_cast<Vertex>(w)));
      if (d >= 2 && d <= start.delta - 1) donor = static_cast<Vertex>(w);
    }
    if (donor == -1) throw std::logic_error("shift_all: capacity exhausted");
    current = degree_shift(current, static_cast<Vertex>(v), donor);
    trail.push_back(current);
  }
  return trail;
}

// Exact ratio index(after)/index(before) when a degree j becomes j+1 and a
// degree i becomes i-1 (i >= 2), everything else fixed.
inline Rational pair_shift_ratio(unsigned j, unsigned i, Index index) {
  if (i < 2) throw DomainError("the lowered degree must be at least 2");
  using boost::multiprecision::pow;
  if (index == Index::pi1) {
    return Rational(pow(BigInt(j + 1), 2) * pow(BigInt(i - 1), 2),
                    pow(BigInt(j), 2) * pow(BigInt(i), 2));
  }
  return Rational(pow(BigInt(j + 1), j + 1) * pow(BigInt(i - 1), i - 1),
                  pow(BigInt(j), j) * pow(BigInt(i), i));
}

// Ratio for raising a maximum degree Delta to Delta+1 while lowering a degree
// d_i in the window 2 .. Delta-1.
inline Rational degree_shift_ratio(int delta, int d_i, Index index) {
  if (d_i < 2 || d_i > delta - 1) {
    throw DomainError("d_i must satisfy 2 <= d_i <= Delta - 1");
  }
  return pair_shift_ratio(static_cast<unsigned>(delta), static_cast<unsigned>(d_i), index);
}

// Predicted index ratios of leaf_reattach on a vertex of degree Delta.
inline Rational leaf_reattach_ratio(int delta, Index index) {
  using boost::multiprecision::pow;
  const auto D = static_cast<unsigned>(delta);
  if (index == Index::pi1) return Rational(4 * pow(BigInt(D - 1), 2), pow(BigInt(D), 2));
  return Rational(4 * pow(BigInt(D - 1), D - 1), pow(BigInt(D), D));
}

}  // namespace zagreb

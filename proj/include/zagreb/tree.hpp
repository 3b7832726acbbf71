#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <numeric>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "zagreb/errors.hpp"

namespace zagreb {

using Vertex = int;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Unlabeled-vertex tree on the dense vertex set 0..n-1. Validity is checked
// once at construction; every instance satisfies |E| = n - 1, connectivity,
// symmetric adjacency without loops or parallel edges.
class Tree {
public:
  static Tree from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n == 0) throw DomainError("a tree needs at least one vertex");
    std::vector<std::vector<Vertex>> adj(n);
    for (const Edge& e : edges) {
      if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
          static_cast<std::size_t>(e.v) >= n) {
        throw NotATreeError(TreeDefect::vertex_out_of_range, edge_text(e));
      }
      if (e.u == e.v) throw NotATreeError(TreeDefect::self_loop, edge_text(e));
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto& list = adj[v];
      std::sort(list.begin(), list.end());
      auto dup = std::adjacent_find(list.begin(), list.end());
      if (dup != list.end()) {
        throw NotATreeError(TreeDefect::duplicate_edge,
                            edge_text({static_cast<Vertex>(v), *dup}));
      }
    }
    if (reachable_count(adj) != n) {
      throw NotATreeError(TreeDefect::disconnected, "");
    }
    if (edges.size() != n - 1) {
      throw NotATreeError(TreeDefect::wrong_edge_count,
                          std::to_string(edges.size()) + " edges for " +
                              std::to_string(n) + " vertices");
    }
    return Tree(std::move(adj));
  }

  static Tree path(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) {
      edges.push_back({static_cast<Vertex>(i - 1), static_cast<Vertex>(i)});
    }
    return from_edges(n, edges);
  }

  // Vertex 0 is the center.
  static Tree star(std::size_t n) {
    std::vector<Edge> edges;
    for (std::size_t i = 1; i < n; ++i) edges.push_back({0, static_cast<Vertex>(i)});
    return from_edges(n, edges);
  }

  std::size_t order() const noexcept { return adj_.size(); }

  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }

  bool adjacent(Vertex u, Vertex v) const {
    const auto& list = adj_.at(u);
    return std::binary_search(list.begin(), list.end(), v);
  }

  // Edges with u < v, lexicographically sorted.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(order() == 0 ? 0 : order() - 1);
    for (std::size_t u = 0; u < adj_.size(); ++u) {
      for (Vertex v : adj_[u]) {
        if (static_cast<Vertex>(u) < v) out.push_back({static_cast<Vertex>(u), v});
      }
    }
    return out;
  }

  friend bool operator==(const Tree&, const Tree&) = default;

private:
  explicit Tree(std::vector<std::vector<Vertex>> adj) : adj_(std::move(adj)) {}

  static std::string edge_text(const Edge& e) {
    return std::to_string(e.u) + " " + std::to_string(e.v);
  }

  static std::size_t reachable_count(const std::vector<std::vector<Vertex>>& adj) {
    std::vector<char> seen(adj.size(), 0);
    std::queue<Vertex> frontier;
    frontier.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!frontier.empty()) {
      Vertex v = frontier.front();
      frontier.pop();
      for (Vertex w : adj[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          ++count;
          frontier.push(w);
        }
      }
    }
    return count;
  }

  std::vector<std::vector<Vertex>> adj_;
};

// Non-increasing list of vertex degrees. The only place a zero is accepted is
// the one-vertex tree, whose sole degree is 0.
class DegreeSequence {
public:
  DegreeSequence() = default;

  explicit DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
    if (degrees_.empty()) throw DomainError("degree sequence is empty");
    bool lone_isolated = degrees_.size() == 1 && degrees_[0] == 0;
    for (int d : degrees_) {
      if (d < 1 && !lone_isolated) {
        throw DomainError("degree " + std::to_string(d) + " is not positive");
      }
    }
    std::sort(degrees_.begin(), degrees_.end(), std::greater<>());
  }

  std::span<const int> degrees() const noexcept { return degrees_; }
  std::size_t order() const noexcept { return degrees_.size(); }
  int operator[](std::size_t i) const { return degrees_.at(i); }

  int max_degree() const noexcept { return degrees_.empty() ? 0 : degrees_.front(); }

  std::size_t max_degree_count() const {
    return static_cast<std::size_t>(
        std::count(degrees_.begin(), degrees_.end(), max_degree()));
  }

  long long sum() const {
    return std::accumulate(degrees_.begin(), degrees_.end(), 0LL);
  }

  bool is_tree_sequence() const {
    return sum() == 2 * (static_cast<long long>(order()) - 1);
  }

  // counts[i] = number of entries equal to i, for 0 <= i <= max_degree().
  std::vector<std::size_t> multiplicities() const {
    std::vector<std::size_t> counts(static_cast<std::size_t>(max_degree()) + 1, 0);
    for (int d : degrees_) ++counts[d];
    return counts;
  }

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(degrees_[i]);
    }
    return out + ")";
  }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
  friend auto operator<=>(const DegreeSequence&, const DegreeSequence&) = default;

private:
  std::vector<int> degrees_;
};

inline DegreeSequence degree_sequence_of(const Tree& t) {
  std::vector<int> degrees(t.order());
  for (std::size_t v = 0; v < t.order(); ++v) {
    degrees[v] = static_cast<int>(t.degree(static_cast<Vertex>(v)));
  }
  return DegreeSequence(std::move(degrees));
}

// True iff the entries sum to 2(n - 1). Entries below 1 are a domain error.
inline bool is_tree_sequence(std::span<const int> degrees) {
  if (degrees.empty()) throw DomainError("degree list is empty");
  long long sum = 0;
  for (int d : degrees) {
    if (d < 1) throw DomainError("degree " + std::to_string(d) + " is not positive");
    sum += d;
  }
  return sum == 2 * (static_cast<long long>(degrees.size()) - 1);
}

struct MaxDegree {
  int delta = 0;
  int count = 0;

  friend bool operator==(const MaxDegree&, const MaxDegree&) = default;
};

inline MaxDegree max_degree_count(const Tree& t) {
  MaxDegree out;
  for (std::size_t v = 0; v < t.order(); ++v) {
    int d = static_cast<int>(t.degree(static_cast<Vertex>(v)));
    if (d > out.delta) {
      out = {d, 1};
    } else if (d == out.delta) {
      ++out.count;
    }
  }
  return out;
}

}  // namespace zagreb

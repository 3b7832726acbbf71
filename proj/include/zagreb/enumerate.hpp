#pragma once

// Tree generators: isomorph-free free trees by canonical level sequences
// (Wright, Richmond, Odlyzko and McKay), all labeled trees by Pruefer codes,
// and uniformly random labeled trees.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "zagreb/errors.hpp"
#include "zagreb/tree.hpp"

namespace zagreb {

inline constexpr int kMaxEnumerationOrder = 20;

// Builds a tree from a level sequence: entry i is the depth of vertex i in a
// preorder walk, the root has depth 0.
inline Tree tree_from_levels(std::span<const int> levels) {
  std::vector<Edge> edges;
  edges.reserve(levels.size());
  std::vector<Vertex> stack;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    while (!stack.empty() && levels[stack.back()] >= levels[i]) stack.pop_back();
    if (!stack.empty()) edges.push_back({stack.back(), static_cast<Vertex>(i)});
    stack.push_back(static_cast<Vertex>(i));
  }
  return Tree::from_edges(levels.size(), edges);
}

// Streams one representative of every isomorphism class of trees on n
// vertices, in constant amortized time per tree.
//
//   FreeTreeGenerator gen(n);
//   while (gen.next()) use(gen.tree());
class FreeTreeGenerator {
public:
  explicit FreeTreeGenerator(int n) : n_(n) {
    if (n < 1 || n > kMaxEnumerationOrder) {
      throw DomainError("free-tree enumeration supports 1 <= n <= " +
                        std::to_string(kMaxEnumerationOrder));
    }
    // Path of length n-1 rooted at its center: 0,1,...,n/2, 1,...,(n-1)/2.
    for (int i = 0; i <= n / 2; ++i) levels_.push_back(i);
    for (int i = 1; i < (n + 1) / 2; ++i) levels_.push_back(i);
  }

  // Advances to the next tree; false once the stream is exhausted.
  bool next() {
    if (done_) return false;
    if (n_ == 1) {
      done_ = started_;
      started_ = true;
      return !done_;
    }
    if (started_ && !next_rooted(levels_, std::nullopt)) {
      done_ = true;
      return false;
    }
    started_ = true;
    if (!next_free(levels_)) {
      done_ = true;
      return false;
    }
    return true;
  }

  std::span<const int> levels() const noexcept { return levels_; }

  Tree tree() const { return tree_from_levels(levels_); }

private:
  // Length of the first root subtree (the "left" part) and the end index m of
  // that subtree in the level sequence.
  static std::size_t split_point(const std::vector<int>& seq) {
    bool seen_one = false;
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] == 1) {
        if (seen_one) return i;
        seen_one = true;
      }
    }
    return seq.size();
  }

  // Beyer-Hedetniemi successor of a rooted level sequence. When `p` is given,
  // the copy starts from that position.
  static bool next_rooted(std::vector<int>& seq, std::optional<std::size_t> start) {
    std::size_t p;
    if (start) {
      p = *start;
    } else {
      p = seq.size() - 1;
      while (seq[p] == 1) --p;
    }
    if (p == 0) return false;
    std::size_t q = p - 1;
    while (seq[q] != seq[p] - 1) --q;
    for (std::size_t i = p; i < seq.size(); ++i) seq[i] = seq[i - p + q];
    return true;
  }

  // Moves `seq` to the next level sequence that is canonical for a free tree.
  static bool next_free(std::vector<int>& seq) {
    const std::size_t m = split_point(seq);
    // left: levels 1..m-1 shifted up by one; rest: root followed by seq[m..].
    std::vector<int> left(seq.begin() + 1, seq.begin() + static_cast<std::ptrdiff_t>(m));
    for (int& x : left) --x;
    std::vector<int> rest{0};
    rest.insert(rest.end(), seq.begin() + static_cast<std::ptrdiff_t>(m), seq.end());

    const int left_height = *std::max_element(left.begin(), left.end());
    const int rest_height = *std::max_element(rest.begin(), rest.end());
    bool valid = rest_height >= left_height;
    if (valid && rest_height == left_height) {
      if (left.size() > rest.size()) {
        valid = false;
      } else if (left.size() == rest.size() && left > rest) {
        valid = false;
      }
    }
    if (valid) return true;

    const std::size_t p = left.size();
    const int pivot = seq[p];
    if (!next_rooted(seq, p)) return false;
    if (pivot > 2) {
      const std::size_t m2 = split_point(seq);
      int new_left_height = 0;
      for (std::size_t i = 1; i < m2; ++i) new_left_height = std::max(new_left_height, seq[i] - 1);
      const auto suffix = static_cast<std::size_t>(new_left_height + 1);
      for (std::size_t i = 0; i < suffix; ++i) {
        seq[seq.size() - suffix + i] = static_cast<int>(i) + 1;
      }
    }
    return true;
  }

  int n_;
  std::vector<int> levels_;
  bool started_ = false;
  bool done_ = false;
};

template <typename Visitor>
void for_each_free_tree(int n, Visitor&& visit) {
  FreeTreeGenerator gen(n);
  while (gen.next()) visit(gen.tree());
}

// Decodes a Pruefer code over vertices 0..n-1 (length n-2) into its tree.
inline Tree prufer_decode(std::span<const int> code) {
  const std::size_t n = code.size() + 2;
  std::vector<int> degree(n, 1);
  for (int v : code) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) {
      throw DomainError("Pruefer entry out of range");
    }
    ++degree[v];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1) ++ptr;
  std::size_t leaf = ptr;
  for (int v : code) {
    edges.push_back({static_cast<Vertex>(leaf), v});
    if (--degree[v] == 1 && static_cast<std::size_t>(v) < ptr) {
      leaf = static_cast<std::size_t>(v);
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.push_back({static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1)});
  return Tree::from_edges(n, edges);
}

// Visits all n^(n-2) labeled trees on n >= 1 vertices.
template <typename Visitor>
void for_each_labeled_tree(int n, Visitor&& visit) {
  if (n < 1) throw DomainError("labeled-tree enumeration needs n >= 1");
  if (n <= 2) {
    visit(Tree::path(static_cast<std::size_t>(n)));
    return;
  }
  std::vector<int> code(static_cast<std::size_t>(n - 2), 0);
  while (true) {
    visit(prufer_decode(code));
    std::size_t i = 0;
    while (i < code.size() && ++code[i] == n) code[i++] = 0;
    if (i == code.size()) return;
  }
}

// Uniform random labeled tree on n >= 1 vertices.
template <typename Rng>
Tree random_tree(int n, Rng& rng) {
  if (n < 1) throw DomainError("random tree needs n >= 1");
  if (n <= 2) return Tree::path(static_cast<std::size_t>(n));
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& x : code) x = pick(rng);
  return prufer_decode(code);
}

}  // namespace zagreb

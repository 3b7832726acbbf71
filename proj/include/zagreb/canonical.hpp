#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "zagreb/tree.hpp"

namespace zagreb {

// Vertices of minimum eccentricity: one or two, found by peeling leaves.
inline std::vector<Vertex> tree_centers(const Tree& t) {
  const std::size_t n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (std::size_t v = 0; v < n; ++v) all[v] = static_cast<Vertex>(v);
    return all;
  }
  std::vector<std::size_t> remaining_degree(n);
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v) {
    remaining_degree[v] = t.degree(static_cast<Vertex>(v));
    if (remaining_degree[v] == 1) layer.push_back(static_cast<Vertex>(v));
  }
  std::size_t left = n;
  while (left > 2) {
    left -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer) {
      for (Vertex w : t.neighbors(leaf)) {
        if (--remaining_degree[w] == 1) next.push_back(w);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// AHU parenthesis encoding of `t` rooted at `root`: every vertex becomes
// '(' + sorted child encodings + ')'.
inline std::string rooted_encoding(const Tree& t, Vertex root) {
  const std::size_t n = t.order();
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> order;
  order.reserve(n);
  order.push_back(root);
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Vertex w : t.neighbors(order[i])) {
      if (parent[w] == -1) {
        parent[w] = order[i];
        order.push_back(w);
      }
    }
  }

  std::vector<std::vector<std::string>> child_codes(n);
  std::string code;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    auto& kids = child_codes[*it];
    std::sort(kids.begin(), kids.end());
    code = "(";
    for (auto& c : kids) code += c;
    code += ')';
    kids.clear();
    if (*it != root) child_codes[parent[*it]].push_back(std::move(code));
  }
  return code;
}

// Byte string equal for two trees iff they are isomorphic: the encoding rooted
// at the center, or the smaller of the two for a bicentral tree.
inline std::string canonical_form(const Tree& t) {
  const auto centers = tree_centers(t);
  std::string best = rooted_encoding(t, centers.front());
  if (centers.size() == 2) best = std::min(best, rooted_encoding(t, centers.back()));
  return best;
}

}  // namespace zagreb

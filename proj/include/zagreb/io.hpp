#pragma once

// Text encodings of trees: graph6 (short and 4-byte length forms) and a
// plain "u v" edge list.

#include <cctype>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "zagreb/errors.hpp"
#include "zagreb/tree.hpp"

namespace zagreb {

namespace detail {

constexpr int kGraph6Bias = 63;
constexpr std::size_t kGraph6MaxOrder = 258047;

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace detail

// Decodes one graph6 record into a Tree. A leading ">>graph6<<" header and
// surrounding whitespace are ignored. Throws ParseError for bad bytes or a
// length that does not match the vertex count, NotATreeError when the graph
// decodes fine but is not a tree.
inline Tree parse_graph6(std::string_view text) {
  text = detail::trim(text);
  constexpr std::string_view header = ">>graph6<<";
  if (text.starts_with(header)) text.remove_prefix(header.size());
  if (text.empty()) throw ParseError("empty graph6 string");

  for (char c : text) {
    if (c < 63 || c > 126) {
      throw ParseError("graph6 byte out of range: '" + std::string(1, c) + "'");
    }
  }

  std::size_t n = 0;
  std::size_t pos = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - detail::kGraph6Bias);
    pos = 1;
  } else {
    if (text.size() >= 2 && text[1] == 126) {
      throw ParseError("graph6 8-byte order form is not supported");
    }
    if (text.size() < 4) throw ParseError("truncated graph6 order field");
    for (std::size_t i = 1; i < 4; ++i) {
      n = (n << 6) | static_cast<std::size_t>(text[i] - detail::kGraph6Bias);
    }
    pos = 4;
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = (bits + 5) / 6;
  std::string_view data = text.substr(pos);
  if (data.size() != expected) {
    throw ParseError("vertex count mismatch: order " + std::to_string(n) + " needs " +
                     std::to_string(expected) + " data bytes, got " +
                     std::to_string(data.size()));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      int word = data[k / 6] - detail::kGraph6Bias;
      if ((word >> (5 - k % 6)) & 1) {
        edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
      }
    }
  }
  for (; k < expected * 6; ++k) {
    int word = data[k / 6] - detail::kGraph6Bias;
    if ((word >> (5 - k % 6)) & 1) throw ParseError("non-zero graph6 padding bits");
  }

  if (n == 0) throw NotATreeError(TreeDefect::wrong_edge_count, "graph has no vertices");
  return Tree::from_edges(n, edges);
}

inline std::string emit_graph6(const Tree& t) {
  const std::size_t n = t.order();
  if (n > detail::kGraph6MaxOrder) throw DomainError("tree too large for graph6");

  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kGraph6Bias));
  } else {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + detail::kGraph6Bias));
    }
  }

  int word = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      word = (word << 1) | (t.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + detail::kGraph6Bias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>((word << (6 - filled)) + detail::kGraph6Bias));
  }
  return out;
}

// Parses whitespace-separated "u v" pairs, one edge per line, 0-based. Blank
// lines and lines starting with '#' are skipped. The vertex count is one past
// the largest id; an input without edges is the one-vertex tree. `first_line`
// offsets reported line numbers when the text is a slice of a larger input.
inline Tree parse_edgelist(std::string_view text, std::size_t first_line = 1) {
  std::vector<Edge> edges;
  Vertex largest = 0;
  std::size_t line_no = first_line;

  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    std::string_view body = detail::trim(line);
    if (!body.empty() && body.front() != '#') {
      Vertex ends[2] = {0, 0};
      std::size_t found = 0;
      while (!body.empty()) {
        auto stop = body.find_first_of(" \t");
        std::string_view token = body.substr(0, stop);
        if (found == 2) throw ParseError("expected exactly two vertex ids", line_no);
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), ends[found]);
        if (ec != std::errc{} || ptr != token.data() + token.size() || ends[found] < 0) {
          throw ParseError("bad vertex id '" + std::string(token) + "'", line_no);
        }
        ++found;
        body = stop == std::string_view::npos ? std::string_view{}
                                              : detail::trim(body.substr(stop));
      }
      if (found != 2) throw ParseError("expected exactly two vertex ids", line_no);
      edges.push_back({ends[0], ends[1]});
      largest = std::max({largest, ends[0], ends[1]});
    }
    ++line_no;
  }

  return Tree::from_edges(static_cast<std::size_t>(largest) + 1, edges);
}

inline std::string emit_edgelist(const Tree& t) {
  std::string out;
  for (const Edge& e : t.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += '\n';
  }
  return out;
}

}  // namespace zagreb

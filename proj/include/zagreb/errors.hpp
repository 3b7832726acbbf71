#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace zagreb {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Input could not be decoded (bad graph6 bytes, non-integer edge list token...).
class ParseError : public Error {
public:
  explicit ParseError(const std::string& what, std::size_t line = 0)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  // 1-based input line, 0 when unknown.
  std::size_t line() const noexcept { return line_; }

private:
  std::size_t line_;
};

enum class TreeDefect {
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  disconnected,
  wrong_edge_count,
};

inline const char* to_string(TreeDefect d) {
  switch (d) {
    case TreeDefect::vertex_out_of_range: return "vertex out of range";
    case TreeDefect::self_loop: return "self-loop";
    case TreeDefect::duplicate_edge: return "duplicate edge";
    case TreeDefect::disconnected: return "disconnected";
    case TreeDefect::wrong_edge_count: return "wrong edge count";
  }
  return "unknown defect";
}

// The graph was well formed but is not a tree.
class NotATreeError : public Error {
public:
  NotATreeError(TreeDefect defect, const std::string& detail)
      : Error(std::string("not a tree: ") + to_string(defect) +
              (detail.empty() ? "" : " (" + detail + ")")),
        defect_(defect) {}

  TreeDefect defect() const noexcept { return defect_; }

private:
  TreeDefect defect_;
};

// Arguments outside an operation's domain (inadmissible class, bad ratio input...).
class DomainError : public Error {
public:
  using Error::Error;
};

}  // namespace zagreb

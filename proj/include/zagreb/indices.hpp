#pragma once

#include <cmath>
#include <compare>
#include <cstddef>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "zagreb/tree.hpp"

namespace zagreb {

using BigInt = boost::multiprecision::cpp_int;

// Exact index value with a base-2 logarithm kept alongside for display and
// quick ordering. Equality and ordering always use the exact value.
struct IndexValue {
  BigInt exact{1};
  double log2 = 0.0;

  std::string to_string() const { return exact.str(); }

  friend bool operator==(const IndexValue& a, const IndexValue& b) { return a.exact == b.exact; }
  friend std::strong_ordering operator<=>(const IndexValue& a, const IndexValue& b) {
    if (a.exact < b.exact) return std::strong_ordering::less;
    if (b.exact < a.exact) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

namespace detail {

// Multiplies base^exponent into the running value and its log shadow.
inline void accumulate_power(IndexValue& acc, unsigned base, unsigned exponent) {
  if (exponent == 0 || base == 1) return;
  acc.exact *= boost::multiprecision::pow(BigInt(base), exponent);
  acc.log2 += exponent * std::log2(static_cast<double>(base));
}

}  // namespace detail

// Product of squared degrees.
inline IndexValue pi1(const DegreeSequence& d) {
  IndexValue out;
  const auto counts = d.multiplicities();
  for (std::size_t i = 2; i < counts.size(); ++i) {
    detail::accumulate_power(out, static_cast<unsigned>(i), static_cast<unsigned>(2 * counts[i]));
  }
  // The one-vertex tree has degree 0; its index degenerates to 0^2.
  if (!counts.empty() && counts[0] > 0) out = {BigInt(0), -INFINITY};
  return out;
}

// Product of d^d over all degrees.
inline IndexValue pi2_vertex(const DegreeSequence& d) {
  IndexValue out;
  const auto counts = d.multiplicities();
  for (std::size_t i = 2; i < counts.size(); ++i) {
    detail::accumulate_power(out, static_cast<unsigned>(i), static_cast<unsigned>(i * counts[i]));
  }
  return out;
}

// Product over edges of the endpoint-degree products. Computed edge by edge,
// independently of pi2_vertex.
inline IndexValue pi2_edge(const Tree& t) {
  IndexValue out;
  for (const Edge& e : t.edges()) {
    auto du = static_cast<unsigned>(t.degree(e.u));
    auto dv = static_cast<unsigned>(t.degree(e.v));
    out.exact *= BigInt(du) * dv;
    out.log2 += std::log2(static_cast<double>(du)) + std::log2(static_cast<double>(dv));
  }
  return out;
}

inline IndexValue pi1(const Tree& t) { return pi1(degree_sequence_of(t)); }
inline IndexValue pi2_vertex(const Tree& t) { return pi2_vertex(degree_sequence_of(t)); }

// First (additive) Zagreb index: sum of squared degrees.
inline long long m1(const DegreeSequence& d) {
  long long sum = 0;
  for (int x : d.degrees()) sum += static_cast<long long>(x) * x;
  return sum;
}

inline long long m1(const Tree& t) { return m1(degree_sequence_of(t)); }

// Second (additive) Zagreb index: sum over edges of degree products.
inline long long m2(const Tree& t) {
  long long sum = 0;
  for (const Edge& e : t.edges()) {
    sum += static_cast<long long>(t.degree(e.u)) * static_cast<long long>(t.degree(e.v));
  }
  return sum;
}

}  // namespace zagreb

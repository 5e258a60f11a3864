#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include <boost/rational.hpp>

namespace girthcut {

// Wide intermediate for exact products of 64-bit values.
__extension__ using Int128 = __int128;

/// Vertices are dense ids 0..n-1.
using Vertex = int;

/// Exact rational used for every expansion value and every bound.
using Rational = boost::rational<std::int64_t>;

struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string to_string(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

}  // namespace girthcut

#pragma once

#include <initializer_list>
#include <vector>

#include "girthcut/constructions.hpp"
#include "girthcut/digraph.hpp"

namespace girthcut::testing {

inline Digraph graph(int n, std::initializer_list<Edge> edges) {
  const std::vector<Edge> list(edges);
  return Digraph(n, list);
}

inline Digraph triangle() { return graph(3, {{0, 1}, {1, 2}, {2, 0}}); }

// Triangle 0-1-2 and 4-cycle 0-3-4-5 sharing vertex 0.
inline Digraph triangle_and_square() {
  return graph(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 5}, {5, 0}});
}

/// Random digraph with n drawn from [lo, hi] and a random density, so
/// property sweeps cover sparse and dense inputs alike.
inline Digraph random_graph(Rng& rng, int lo, int hi) {
  const int n = lo + static_cast<int>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
  static constexpr double kDensity[] = {0.1, 0.2, 0.35, 0.5, 0.7};
  return random_digraph(n, kDensity[rng.below(5)], rng.next());
}

}  // namespace girthcut::testing

#pragma once

// Brute-force reference implementations. Each one follows the definition
// directly and shares no code path with the library routine it checks.

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "girthcut/digraph.hpp"
#include "girthcut/types.hpp"

namespace girthcut::oracle {

/// Component label per vertex from the reachability matrix: u, v share a
/// label iff each reaches the other. Labels are the smallest member id.
std::vector<int> scc_labels(const Digraph& g);

/// min over all n! vertex orderings of the number of backward edges.
std::int64_t min_fas_by_permutations(const Digraph& g);

/// Smallest k such that some k-subset of edges leaves g acyclic, trying
/// subsets of size 0, 1, ... up to max_k. nullopt if none up to max_k.
std::optional<std::int64_t> min_fas_by_edge_subsets(const Digraph& g, std::int64_t max_k);

/// mu(G) straight from the definition over every admissible subset.
std::optional<Rational> min_expansion(const Digraph& g);

/// Lengths of all simple directed cycles, by DFS from every start vertex.
std::set<int> cycle_lengths(const Digraph& g);

/// Same, restricted to cycles that pass through v.
std::set<int> cycle_lengths_through(const Digraph& g, Vertex v);

/// gcd of the cycle lengths inside the induced subgraph on vertices.
int gcd_of_cycle_lengths(const Digraph& g, const std::vector<Vertex>& vertices);

/// (a, b) >= 0 with a x + b y = n, maximal a, by double loop.
std::optional<std::pair<std::int64_t, std::int64_t>> coin(std::int64_t x, std::int64_t y, std::int64_t n);

/// Pseudoperiodicity from enumerated cycle lengths of each strong component.
bool pseudoperiodic_by_enumeration(const Digraph& g);

}  // namespace girthcut::oracle

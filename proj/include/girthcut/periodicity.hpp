#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "girthcut/digraph.hpp"
#include "girthcut/types.hpp"

namespace girthcut {

inline constexpr int kSpectrumLimit = 18;
inline constexpr int kLambdaEdgeLimit = 20;

/// gcd of all directed cycle lengths of a strong component, computed from BFS
/// distances d as the gcd of |d(v) + 1 - d(w)| over the component's edges.
/// Returns 0 for a single vertex. Throws PreconditionError if the vertex set
/// is not strongly connected.
int component_period(const Digraph& g, std::span<const Vertex> component);

struct ComponentPeriod {
  std::vector<Vertex> vertices;
  int period = 0;  // 0: trivial component without cycles
  /// For period >= 2: classes[i] = vertices at BFS distance = i (mod p) from
  /// the smallest vertex. Every edge goes from class i to class i+1 mod p.
  std::vector<std::vector<Vertex>> classes;
};

struct PeriodReport {
  std::vector<ComponentPeriod> components;  // condensation order
  bool pseudoperiodic = true;
};

PeriodReport pseudoperiodicity(const Digraph& g);
bool is_pseudoperiodic(const Digraph& g);

/// Checks that every edge inside the component advances the class index by
/// exactly one (cyclically).
bool partition_is_valid(const Digraph& g, const ComponentPeriod& component);

/// A minimum edge set whose deletion leaves g pseudoperiodic, searched by
/// increasing size over the edges inside strong components. Throws
/// LimitError when g is not already pseudoperiodic and there are more than
/// edge_limit such edges.
std::vector<Edge> lambda_exact(const Digraph& g, int edge_limit = kLambdaEdgeLimit);

enum class SpectrumMethod { subset_dp, dfs_enumeration };
std::string_view to_string(SpectrumMethod m);

struct SpectrumReport {
  std::vector<int> lengths;                        // ascending
  std::map<int, std::vector<Vertex>> witnesses;    // one simple cycle per length
  SpectrumMethod method = SpectrumMethod::subset_dp;
  bool exact = true;
  std::int64_t work = 0;  // DP states or DFS steps
  int largest_gap = 0;    // max difference between consecutive lengths
  int longest_run = 0;    // longest run of consecutive lengths

  bool contains(int length) const;
};

/// Exact set of simple cycle lengths by path DP over vertex subsets: for each
/// anchor, paths use only larger ids of the anchor's strong component. Throws
/// LimitError when a strong component exceeds limit vertices.
SpectrumReport cycle_spectrum(const Digraph& g, int limit = kSpectrumLimit);

/// Same set by explicit DFS enumeration of simple cycles. Stops after budget
/// steps and then reports exact = false.
SpectrumReport cycle_spectrum_dfs(const Digraph& g, std::int64_t budget = 50'000'000);

/// Smallest length l in [m, m + width] present in the spectrum.
std::optional<int> cycle_length_in_window(const SpectrumReport& s, int m, int width);

/// Coefficients a_i in [0, r-1] with sum a_i * lengths_i = target (mod r), or
/// nullopt when the congruence has no solution. Requires r >= 1.
std::optional<std::vector<std::int64_t>> crt_combine(std::span<const std::int64_t> lengths,
                                                     std::int64_t target, std::int64_t r);

struct CoinRepresentation {
  std::int64_t x = 0;
  std::int64_t y = 0;
  std::int64_t n = 0;
  /// (a, b) with a x + b y = n, a, b >= 0; the representation with the
  /// largest a.
  std::optional<std::pair<std::int64_t, std::int64_t>> coefficients;
};

/// Throws PreconditionError unless x, y are coprime and positive.
CoinRepresentation coin_represent(std::int64_t x, std::int64_t y, std::int64_t n);

/// Closed walk of length = 1 (mod r) through an anchor of an aperiodic strong
/// component, assembled from one cycle per prime factor of r, connecting
/// paths, and repeated laps around those cycles.
struct CoprimeWalk {
  int r = 0;
  Vertex anchor = 0;
  std::vector<Vertex> walk;  // walk.front() == walk.back() == anchor
  std::int64_t length = 0;
  std::vector<std::vector<Vertex>> cycles;  // D_i, each starting at its junction vertex
  std::vector<std::int64_t> laps;           // a_i
  std::int64_t connector_length = 0;        // length of the walk without laps
  std::map<Vertex, int> visits;             // occurrences, closing vertex not counted

  int max_visits() const;
};

/// Throws PreconditionError when the component is not strong, is periodic, or
/// does not contain the anchor, or r < 2.
CoprimeWalk build_coprime_walk(const Digraph& g, std::span<const Vertex> component, int r,
                               Vertex anchor);

/// Validates a walk against g: closed, consecutive pairs are edges, stored
/// length and visit counts match, length = 1 (mod r), visits <= 2r^2.
bool coprime_walk_is_valid(const Digraph& g, const CoprimeWalk& w);

}  // namespace girthcut

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "girthcut/types.hpp"

namespace girthcut {

/// Simple directed graph on vertices 0..n-1: no loops, no parallel edges.
/// Both (u,v) and (v,u) may be present. Immutable once constructed.
class Digraph {
 public:
  Digraph() = default;
  explicit Digraph(int n);
  /// Throws PreconditionError on a loop, a duplicate edge or an endpoint
  /// outside 0..n-1.
  Digraph(int n, std::span<const Edge> edges);

  int order() const noexcept { return n_; }
  std::int64_t size() const noexcept { return m_; }

  bool has_edge(Vertex u, Vertex v) const noexcept {
    const auto bit = static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(v);
    return (bits_[bit >> 6] >> (bit & 63)) & 1U;
  }

  std::span<const Vertex> out(Vertex v) const { return out_[static_cast<std::size_t>(v)]; }
  std::span<const Vertex> in(Vertex v) const { return in_[static_cast<std::size_t>(v)]; }
  int out_degree(Vertex v) const { return static_cast<int>(out(v).size()); }
  int in_degree(Vertex v) const { return static_cast<int>(in(v).size()); }

  /// All edges in lexicographic order.
  std::vector<Edge> edges() const;

  /// G[keep], with keep[i] relabelled to i.
  Digraph induced(std::span<const Vertex> keep) const;
  Digraph without_edges(std::span<const Edge> drop) const;

  friend bool operator==(const Digraph& a, const Digraph& b) {
    return a.n_ == b.n_ && a.out_ == b.out_;
  }

 private:
  int n_ = 0;
  std::int64_t m_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::vector<std::uint64_t> bits_;
};

/// Largest order accepted from edge-list input (the adjacency bit matrix is n^2).
inline constexpr int kMaxOrder = 32768;

// Edge-list text: optional "n=<int>" header, then one "u v" per line.
// '#' starts a comment.
Digraph parse_edge_list(std::string_view text);
Digraph read_edge_list(const std::filesystem::path& path);
std::string format_edge_list(const Digraph& g);

struct GraphStats {
  std::int64_t edge_count = 0;
  std::int64_t gamma = 0;        // unordered non-adjacent pairs
  std::optional<int> girth;      // nullopt iff acyclic
  bool is_oriented = true;       // no 2-cycles
};

GraphStats stats(const Digraph& g);
std::int64_t non_adjacent_pairs(const Digraph& g);
bool is_oriented(const Digraph& g);
std::optional<int> girth(const Digraph& g);

/// g is r-free when it has no directed cycle of length <= r.
inline bool is_r_free(const Digraph& g, int r) {
  const auto len = girth(g);
  return !len || *len > r;
}

enum class Direction { out, in };
std::string_view to_string(Direction d);

/// BFS distance layers N_0 = {source}, N_1, ... and the prefix sizes |M_i|.
struct DistanceLayers {
  Vertex source = 0;
  Direction direction = Direction::out;
  std::vector<std::vector<Vertex>> layers;
  std::vector<int> prefix_sizes;
  std::vector<int> distance;  // -1 when unreachable

  int depth() const { return static_cast<int>(layers.size()) - 1; }
};

/// Exact unweighted distances. max_depth < 0 means unbounded.
DistanceLayers bfs_layers(const Digraph& g, Vertex v, Direction dir, int max_depth = -1);

struct SccDecomposition {
  std::vector<int> component_of;
  /// Components in topological order of the condensation, sources first.
  /// Each vertex list is sorted.
  std::vector<std::vector<Vertex>> components;

  int count() const { return static_cast<int>(components.size()); }
  bool nontrivial(int c) const { return components[static_cast<std::size_t>(c)].size() > 1; }
};

SccDecomposition strong_components(const Digraph& g);
bool is_acyclic(const Digraph& g);
std::optional<std::vector<Vertex>> topological_order(const Digraph& g);

/// Shortest directed cycle through v, from a single out-BFS. The cycle
/// starts at v.
std::optional<std::vector<Vertex>> shortest_cycle_at(const Digraph& g, Vertex v);
/// A globally shortest directed cycle, used as a witness.
std::optional<std::vector<Vertex>> shortest_cycle(const Digraph& g);
/// True iff consecutive vertices (and last->first) are edges and no vertex repeats.
bool is_simple_cycle(const Digraph& g, std::span<const Vertex> cycle);

struct DegreeWitness {
  Vertex vertex = 0;
  int in = 0;
  int out = 0;
  int min_degree() const { return in < out ? in : out; }
};

/// Vertex maximising min(indegree, outdegree); ties to the smallest id.
DegreeWitness max_min_degree_vertex(const Digraph& g);

/// Start vertex for the guided sweep: the vertex of largest total degree among
/// those with indegree and outdegree at least n/10, falling back to
/// max_min_degree_vertex.
Vertex high_degree_vertex(const Digraph& g);

}  // namespace girthcut

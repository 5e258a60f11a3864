#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "girthcut/digraph.hpp"
#include "girthcut/types.hpp"

namespace girthcut {

inline constexpr int kExactMuLimit = 22;

enum class CutSource { exhaustive, sweep, supplied };
std::string_view to_string(CutSource s);

/// A vertex set S with 1 <= |S| <= floor(n/2), its two directed cuts and
/// mu(S) = min(e_out, e_in) / |S|.
struct CutResult {
  std::vector<Vertex> s;  // sorted
  std::int64_t e_out = 0;
  std::int64_t e_in = 0;
  Rational mu;
  CutSource source = CutSource::supplied;
  std::optional<Vertex> sweep_vertex;
  std::optional<Direction> sweep_direction;

  std::int64_t smaller_cut() const { return e_out < e_in ? e_out : e_in; }
};

/// One BFS level of a sweep: N_i and the prefix M_i with its cut sizes.
struct SweepLevel {
  int depth = 0;
  int layer_size = 0;   // |N_i|
  int prefix_size = 0;  // |M_i|
  std::int64_t e_out = 0;
  std::int64_t e_in = 0;
  bool eligible = false;  // |M_i| <= floor(n/2)

  std::int64_t smaller_cut() const { return e_out < e_in ? e_out : e_in; }
  Rational mu() const { return Rational(smaller_cut(), prefix_size); }
};

struct SweepTrace {
  Vertex source = 0;
  Direction direction = Direction::out;
  int n = 0;
  std::vector<SweepLevel> levels;

  /// |N_{i+1}|, zero past the last level.
  int next_layer_size(std::size_t i) const {
    return i + 1 < levels.size() ? levels[i + 1].layer_size : 0;
  }
};

struct SweepResult {
  SweepTrace trace;
  std::optional<CutResult> best;  // nullopt when no prefix is eligible
};

/// Throws PreconditionError unless 1 <= |S| <= floor(n/2) and S is a set of
/// valid vertices.
CutResult expansion_of_set(const Digraph& g, std::span<const Vertex> s);

/// Exhaustive mu(G). Ties go to the smallest |S|, then the lexicographically
/// smallest S. Returns nullopt when n < 2 (no admissible S). Throws
/// LimitError when n > limit.
std::optional<CutResult> exact_mu(const Digraph& g, int limit = kExactMuLimit);

/// Sweeps the BFS prefixes M_0, M_1, ... from v and keeps the admissible
/// prefix of least expansion (first one on ties).
SweepResult sweep_low_expansion(const Digraph& g, Vertex v, Direction dir);

/// All 2n sweeps, vertex-major, out before in.
std::vector<SweepResult> sweep_all(const Digraph& g);

/// Minimum over all sweeps: an upper bound on mu(G).
std::optional<CutResult> best_sweep_cut(const Digraph& g);
std::optional<CutResult> best_sweep_cut(std::span<const SweepResult> sweeps);

/// Both sweeps from high_degree_vertex only.
std::optional<CutResult> guided_sweep_cut(const Digraph& g);

/// A shortest directed cycle through v if its length is at most r, found by
/// meeting an out-ball of radius floor(r/2) with an in-ball of radius
/// ceil(r/2). The cycle starts at v. Requires r >= 2.
std::optional<std::vector<Vertex>> short_cycle_through(const Digraph& g, Vertex v, int r);

/// a_i = (|N_i| + |N_{i+1}|) / mu_ref and the partial sums b_i = a_1 + ... + a_i
/// (b_0 = 0). Indexed by level.
struct GrowthSequences {
  std::vector<Rational> a;
  std::vector<Rational> b;
};
GrowthSequences growth_sequences(const SweepTrace& trace, const Rational& mu_ref);

/// (|N_i| + |N_{i+1}|)^2 >= 4 mu(M_i)|M_i| at one level, in integers.
bool amgm_layer_bound_holds(const SweepTrace& trace, std::size_t level);

struct LayerGrowthReport {
  int levels_checked = 0;            // admissible levels inspected for the AM-GM bound
  std::optional<int> first_amgm_violation;
  bool premise_holds = true;         // mu(M_i) >= mu_ref on every admissible level
  std::optional<int> first_premise_failure;
  int growth_levels = 0;             // levels where b_i >= (2/5) i^2 was checked
  std::optional<int> first_growth_violation;

  bool ok() const { return !first_amgm_violation && !first_growth_violation; }
};

/// Checks the AM-GM layer bound on every admissible level and, on the longest
/// prefix of levels where mu(M_i) >= mu_ref, the growth bound b_i >= (2/5) i^2.
/// A violation is reported, never thrown. Requires mu_ref > 0.
LayerGrowthReport check_layer_growth(const SweepTrace& trace, const Rational& mu_ref);

}  // namespace girthcut

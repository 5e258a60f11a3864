#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "girthcut/digraph.hpp"
#include "girthcut/types.hpp"

namespace girthcut {

inline constexpr int kExactFasLimit = 20;

enum class FasMethod { exact_dp, ordering, recursive_expansion, supplied };
std::string_view to_string(FasMethod m);

enum class BoundFormula {
  corollary,   // 25 n^2 / r^2
  gamma,       // 800 gamma / r^2
  induction,   // 800 r^-2 (gamma - gamma^2 / n^2)
  half_edges,  // m / 2
};
std::string_view to_string(BoundFormula f);

struct CertifiedBound {
  Rational value;
  BoundFormula formula = BoundFormula::half_edges;
};

/// A feedback arc set X. verified_acyclic is only ever set by
/// verify_certificate, never trusted from the producer.
struct FasCertificate {
  FasMethod method = FasMethod::supplied;
  std::vector<Edge> removed;  // sorted
  bool verified_acyclic = false;
  std::optional<CertifiedBound> bound;
  std::optional<int> r_used;

  std::int64_t size() const { return static_cast<std::int64_t>(removed.size()); }
};

/// Checks that every removed edge exists, that g \ X is acyclic and that
/// |X| respects the attached bound. Throws VerificationError (with a cycle
/// witness when g \ X is cyclic); on success sets verified_acyclic.
void verify_certificate(const Digraph& g, FasCertificate& cert);

/// Minimum feedback arc set by ordering DP over vertex subsets, run per strong
/// component. Throws LimitError when a strong component has more than limit
/// vertices.
FasCertificate exact_min_fas(const Digraph& g, int limit = kExactFasLimit);

/// Removes the smaller of the forward and backward edge sets of the order
/// (backward on ties). Default order is 0..n-1. Certified against m/2.
FasCertificate ordering_fas(const Digraph& g, std::span<const Vertex> order = {});

inline Rational corollary_bound(std::int64_t n, int r) {
  return Rational(25 * n * n, static_cast<std::int64_t>(r) * r);
}

/// One cut of the recursive construction.
struct RecursionStep {
  int depth = 0;
  int n = 0;
  int s_size = 0;
  std::int64_t deleted = 0;  // min(e(S, V\S), e(V\S, S))
  Rational mu;
  Rational threshold;        // 25 n / r^2
};

struct RecursionLog {
  std::vector<RecursionStep> steps;
  std::int64_t sweeps = 0;
  std::int64_t amgm_levels = 0;
  std::int64_t amgm_violations = 0;
  int ordering_base_cases = 0;
  int small_base_cases = 0;   // n <= r
};

/// Cut-and-recurse construction for an r-free digraph: find S with
/// mu(S) < 25n/r^2 by sweeping, delete the smaller directed cut, recurse on
/// G[S] and G \ S. For r <= 10 the ordering bound already certifies. The
/// result carries the bound 25n^2/r^2 and is verified.
///
/// Throws VerificationError if g is not r-free (witness: a cycle of length
/// <= r), and Error if a recursion level finds no cut below 25n/r^2.
FasCertificate recursive_expansion_fas(const Digraph& g, int r, RecursionLog* log = nullptr);

struct BoundCheck {
  Rational value;
  bool holds = false;
};

/// Bound evaluation for a cyclic digraph with r = girth - 1.
struct BoundReport {
  int n = 0;
  int r = 0;
  std::int64_t gamma = 0;
  std::int64_t beta = 0;
  bool beta_exact = false;       // false: upper-bound mode
  bool degenerate = false;       // acyclic input, beta = 0
  bool in_theorem_scope = false; // r >= 3
  BoundCheck corollary;          // 25 n^2 / r^2
  BoundCheck gamma_bound;        // 800 gamma / r^2
  BoundCheck induction;          // 800 r^-2 (gamma - gamma^2/n^2)
  std::optional<BoundCheck> sullivan;  // 2 gamma / ((r+1)(r-2)), r >= 3; conjecture
  FasCertificate certificate;

  /// Every proven bound that applies holds. Sullivan is informational.
  bool theorem_checks_pass() const;
};

BoundReport bound_report(const Digraph& g, int exact_limit = kExactFasLimit);

}  // namespace girthcut

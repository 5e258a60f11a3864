#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "girthcut/digraph.hpp"
#include "girthcut/types.hpp"

namespace girthcut {

/// Seeded source used by every generator: std::mt19937_64 (bit-exact by the
/// standard) with bounded draws by rejection, so corpora are reproducible on
/// every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound). bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// True with probability p (53-bit resolution).
  bool chance(double p);
  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Blowup of a p-cycle: parts V_0..V_{p-1} (consecutive ids) with all edges
/// V_i -> V_{i+1 mod p}.
Digraph blowup_cycle(int p, std::span<const int> part_sizes);
Digraph blowup_cycle(int p, int part_size);

/// Two halves V_1, V_2 of size n/2, each a circulant with in/outdegree
/// d = (1 - 2 eps) n / 4, plus every edge V_1 -> V_2.
Digraph two_block_regular(int n, const Rational& eps);

Digraph complete_digraph(int n);
Digraph transitive_tournament(int n);
Digraph directed_cycle(int n);

/// Each unordered pair oriented by a fair coin.
Digraph random_tournament(int n, std::uint64_t seed);
/// Each ordered pair (u,v), u != v, present with probability p.
Digraph random_digraph(int n, double p, std::uint64_t seed);
/// Oriented graph with exactly m edges: a random tournament thinned uniformly.
Digraph random_oriented(int n, std::int64_t m, std::uint64_t seed);

/// r-free digraph: a blowup of an (r+1)-cycle with random part sizes, each
/// blowup edge kept with probability max(density, 1/2), then about
/// density * n random extra edges, each kept only if it closes no cycle of
/// length <= r. Vertex ids are shuffled. For n <= r the result is a random DAG.
Digraph random_r_free(int n, int r, double density, std::uint64_t seed);

enum class Family {
  blowup_cycle,
  two_block_regular,
  complete_digraph,
  transitive_tournament,
  random_tournament,
  random_r_free,
  directed_cycle,
  random_digraph,
};
std::string_view to_string(Family f);
std::optional<Family> parse_family(std::string_view name);

/// A generator invocation. Unused parameters are ignored by a family.
struct GeneratorSpec {
  Family family = Family::directed_cycle;
  int n = 0;
  int p = 0;
  std::vector<int> parts;
  int r = 0;
  Rational eps{0};
  double density = 0.0;
  std::uint64_t seed = 0;
};

struct ExpectedProperties {
  std::optional<std::int64_t> edge_count;
  std::optional<std::int64_t> gamma;
  std::optional<std::optional<int>> girth;  // outer: known at all; inner nullopt: acyclic
  std::optional<int> girth_above;           // girth > value (or acyclic)
  std::optional<std::int64_t> beta;         // exact beta when analytically known
  std::optional<bool> oriented;
};

ExpectedProperties expected_properties(const GeneratorSpec& spec);

/// Builds the graph without any checks.
Digraph build(const GeneratorSpec& spec);
/// Throws VerificationError when g misses a known expected property of spec
/// (beta excepted: it needs an exact solver).
void check_expected(const GeneratorSpec& spec, const Digraph& g);

/// Builds the graph and checks every known expected property; throws
/// VerificationError on a mismatch.
Digraph generate(const GeneratorSpec& spec);

std::string describe(const GeneratorSpec& spec);

}  // namespace girthcut

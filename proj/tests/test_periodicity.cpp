#include <gtest/gtest.h>

#include <numeric>

#include "girthcut/error.hpp"
#include "girthcut/fas.hpp"
#include "girthcut/oracles.hpp"
#include "girthcut/periodicity.hpp"
#include "support.hpp"

namespace girthcut {
namespace {

using testing::graph;
using testing::triangle;
using testing::triangle_and_square;

std::vector<Vertex> all_vertices(const Digraph& g) {
  std::vector<Vertex> v(static_cast<std::size_t>(g.order()));
  std::iota(v.begin(), v.end(), 0);
  return v;
}

TEST(Period, Examples) {
  EXPECT_EQ(component_period(triangle(), all_vertices(triangle())), 3);
  const auto b = blowup_cycle(3, 2);
  EXPECT_EQ(component_period(b, all_vertices(b)), 3);
  const auto chord = graph(3, {{0, 1}, {1, 2}, {2, 0}, {1, 0}});
  EXPECT_EQ(component_period(chord, all_vertices(chord)), 1);
  EXPECT_EQ(component_period(triangle(), std::vector<Vertex>{1}), 0);
  EXPECT_THROW(component_period(transitive_tournament(3), all_vertices(transitive_tournament(3))),
               PreconditionError);
}

TEST(Pseudoperiodicity, BlowupPartitionIsItsParts) {
  const auto report = pseudoperiodicity(blowup_cycle(3, 2));
  EXPECT_TRUE(report.pseudoperiodic);
  ASSERT_EQ(report.components.size(), 1u);
  const auto& c = report.components[0];
  EXPECT_EQ(c.period, 3);
  ASSERT_EQ(c.classes.size(), 3u);
  EXPECT_EQ(c.classes[0], (std::vector<Vertex>{0, 1}));
  EXPECT_EQ(c.classes[1], (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(c.classes[2], (std::vector<Vertex>{4, 5}));
}

TEST(Pseudoperiodicity, Examples) {
  const auto mixed = pseudoperiodicity(triangle_and_square());
  EXPECT_FALSE(mixed.pseudoperiodic);
  EXPECT_EQ(mixed.components[0].period, 1);
  EXPECT_TRUE(is_pseudoperiodic(transitive_tournament(5)));
  // two components with different periods
  const auto two = graph(7, {{0, 1}, {1, 0}, {2, 3}, {3, 4}, {4, 2}, {1, 2}, {5, 6}});
  const auto report = pseudoperiodicity(two);
  EXPECT_TRUE(report.pseudoperiodic);
}

TEST(Pseudoperiodicity, MatchesCycleEnumeration) {
  Rng rng(79);
  for (int t = 0; t < 1000; ++t) {
    const auto g = testing::random_graph(rng, 1, 9);
    EXPECT_EQ(is_pseudoperiodic(g), oracle::pseudoperiodic_by_enumeration(g));
  }
}

TEST(Period, EqualsGcdOfSpectrumAndPartitionIsValid) {
  Rng rng(83);
  std::vector<Digraph> graphs;
  for (int t = 0; t < 400; ++t) graphs.push_back(testing::random_graph(rng, 2, 12));
  for (int p = 2; p <= 7; ++p) graphs.push_back(blowup_cycle(p, 2));
  for (const auto& g : graphs) {
    for (const auto& c : pseudoperiodicity(g).components) {
      if (c.vertices.size() < 2) {
        EXPECT_EQ(c.period, 0);
        continue;
      }
      EXPECT_EQ(c.period, oracle::gcd_of_cycle_lengths(g, c.vertices));
      const auto spectrum = cycle_spectrum(g.induced(c.vertices));
      for (int len : spectrum.lengths) EXPECT_EQ(len % c.period, 0);
      if (c.period >= 2) {
        EXPECT_TRUE(partition_is_valid(g, c));
        EXPECT_EQ(static_cast<int>(c.classes.size()), c.period);
      }
    }
  }
}

TEST(Partition, InvalidPartitionIsDetected) {
  auto report = pseudoperiodicity(blowup_cycle(3, 2));
  auto c = report.components[0];
  std::swap(c.classes[0][0], c.classes[1][0]);
  EXPECT_FALSE(partition_is_valid(blowup_cycle(3, 2), c));
}

TEST(Lambda, Examples) {
  EXPECT_TRUE(lambda_exact(triangle()).empty());
  EXPECT_EQ(lambda_exact(triangle_and_square()).size(), 1u);
  EXPECT_TRUE(lambda_exact(transitive_tournament(5)).empty());
  EXPECT_TRUE(lambda_exact(blowup_cycle(4, 2)).empty());
  EXPECT_THROW(lambda_exact(complete_digraph(6), 20), LimitError);
  EXPECT_TRUE(lambda_exact(blowup_cycle(8, 3), 5).empty());  // already pseudoperiodic
}

TEST(Lambda, AtMostBetaAndLeavesPseudoperiodic) {
  Rng rng(89);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const auto g = testing::random_graph(rng, 2, 8);
    std::vector<Edge> lam;
    try {
      lam = lambda_exact(g, 14);
    } catch (const LimitError&) {
      continue;
    }
    ++checked;
    EXPECT_TRUE(is_pseudoperiodic(g.without_edges(lam)));
    EXPECT_LE(static_cast<std::int64_t>(lam.size()), exact_min_fas(g).size());
    // minimality: no smaller deletion among single edges when lambda = 2
    if (lam.size() == 2)
      for (const auto& e : g.edges()) {
        const std::vector<Edge> one{e};
        EXPECT_FALSE(is_pseudoperiodic(g.without_edges(one)));
      }
  }
  EXPECT_GT(checked, 100);
}

TEST(Spectrum, Examples) {
  EXPECT_EQ(cycle_spectrum(complete_digraph(3)).lengths, (std::vector<int>{2, 3}));
  EXPECT_EQ(cycle_spectrum(blowup_cycle(3, 2)).lengths, (std::vector<int>{3, 6}));
  EXPECT_EQ(cycle_spectrum(blowup_cycle(4, 2)).lengths, (std::vector<int>{4, 8}));
  EXPECT_TRUE(cycle_spectrum(transitive_tournament(6)).lengths.empty());
  EXPECT_THROW(cycle_spectrum(directed_cycle(20), 18), LimitError);
}

TEST(Spectrum, GapAndRun) {
  const auto s = cycle_spectrum(complete_digraph(5));
  EXPECT_EQ(s.lengths, (std::vector<int>{2, 3, 4, 5}));
  EXPECT_EQ(s.longest_run, 4);
  EXPECT_EQ(s.largest_gap, 1);
  EXPECT_EQ(cycle_length_in_window(s, 6, 3), std::nullopt);
  EXPECT_EQ(cycle_length_in_window(s, 3, 0), 3);
}

TEST(Spectrum, DpDfsAndOracleAgree) {
  Rng rng(97);
  for (int t = 0; t < 1000; ++t) {
    const auto g = testing::random_graph(rng, 1, 10);
    const auto dp = cycle_spectrum(g);
    const auto dfs = cycle_spectrum_dfs(g);
    const auto brute = oracle::cycle_lengths(g);
    ASSERT_TRUE(dfs.exact);
    EXPECT_EQ(dp.lengths, std::vector<int>(brute.begin(), brute.end()));
    EXPECT_EQ(dfs.lengths, dp.lengths);
    const auto len = girth(g);
    if (len) {
      EXPECT_EQ(dp.lengths.front(), *len);
    } else {
      EXPECT_TRUE(dp.lengths.empty());
    }
    for (const auto& [length, cycle] : dp.witnesses) {
      EXPECT_EQ(static_cast<int>(cycle.size()), length);
      EXPECT_TRUE(is_simple_cycle(g, cycle));
    }
  }
}

TEST(Spectrum, DfsBudgetMarksInexact) {
  const auto s = cycle_spectrum_dfs(complete_digraph(9), 100);
  EXPECT_FALSE(s.exact);
}

TEST(Crt, Examples) {
  const std::vector<std::int64_t> four{4};
  EXPECT_EQ(crt_combine(four, 1, 3), (std::vector<std::int64_t>{1}));
  const std::vector<std::int64_t> three{6, 10, 15};
  const auto a = crt_combine(three, 1, 30);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ((6 * (*a)[0] + 10 * (*a)[1] + 15 * (*a)[2]) % 30, 1);
  const std::vector<std::int64_t> even{4, 6};
  EXPECT_FALSE(crt_combine(even, 1, 2).has_value());
}

TEST(Crt, SolvableExactlyWhenGcdDividesTarget) {
  Rng rng(101);
  for (int t = 0; t < 2000; ++t) {
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng.below(30));
    std::vector<std::int64_t> lengths(1 + rng.below(3));
    for (auto& x : lengths) x = 1 + static_cast<std::int64_t>(rng.below(40));
    const std::int64_t target = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(r)));
    std::int64_t d = r;
    for (auto x : lengths) d = std::gcd(d, x);
    const auto a = crt_combine(lengths, target, r);
    ASSERT_EQ(a.has_value(), target % d == 0);
    if (a) {
      std::int64_t sum = 0;
      for (std::size_t i = 0; i < lengths.size(); ++i) {
        EXPECT_GE((*a)[i], 0);
        EXPECT_LT((*a)[i], r);
        sum += (*a)[i] * lengths[i];
      }
      EXPECT_EQ(sum % r, target % r);
    }
  }
}

TEST(Coin, Examples) {
  EXPECT_FALSE(coin_represent(3, 5, 7).coefficients.has_value());
  EXPECT_EQ(coin_represent(3, 5, 8).coefficients, std::make_pair(std::int64_t{1}, std::int64_t{1}));
  EXPECT_EQ(coin_represent(1, 7, 23).coefficients, std::make_pair(std::int64_t{23}, std::int64_t{0}));
  EXPECT_THROW(coin_represent(4, 6, 10), PreconditionError);
}

TEST(Coin, ThreeFiveFailures) {
  std::vector<std::int64_t> fails;
  for (std::int64_t n = 1; n <= 200; ++n)
    if (!coin_represent(3, 5, n).coefficients) fails.push_back(n);
  EXPECT_EQ(fails, (std::vector<std::int64_t>{1, 2, 4, 7}));
}

TEST(Coin, AgreesWithDoubleLoop) {
  for (std::int64_t x = 1; x <= 12; ++x)
    for (std::int64_t y = 1; y <= 12; ++y) {
      if (std::gcd(x, y) != 1) continue;
      for (std::int64_t n = 0; n <= 200; ++n) {
        const auto rep = coin_represent(x, y, n);
        ASSERT_EQ(rep.coefficients, oracle::coin(x, y, n)) << x << " " << y << " " << n;
        if (n >= (x - 1) * (y - 1)) {
          EXPECT_TRUE(rep.coefficients.has_value());
        }
      }
    }
}

TEST(CoprimeWalk, TriangleAndSquare) {
  const auto g = triangle_and_square();
  const auto w = build_coprime_walk(g, all_vertices(g), 3, 0);
  EXPECT_TRUE(coprime_walk_is_valid(g, w));
  EXPECT_EQ(w.length % 3, 1);
  EXPECT_EQ(w.walk.front(), 0);
  EXPECT_EQ(w.walk.back(), 0);
}

TEST(CoprimeWalk, CompleteDigraphOnThree) {
  const auto g = complete_digraph(3);
  const auto w = build_coprime_walk(g, all_vertices(g), 2, 0);
  EXPECT_TRUE(coprime_walk_is_valid(g, w));
  EXPECT_EQ(w.length % 2, 1);
}

TEST(CoprimeWalk, PeriodicComponentIsRejected) {
  const auto g = blowup_cycle(3, 2);
  EXPECT_THROW(build_coprime_walk(g, all_vertices(g), 3, 0), PreconditionError);
  EXPECT_THROW(build_coprime_walk(triangle_and_square(), all_vertices(triangle_and_square()), 1, 0),
               PreconditionError);
}

TEST(CoprimeWalk, ValidOnRandomAperiodicComponents) {
  Rng rng(103);
  int built = 0;
  for (int t = 0; t < 400; ++t) {
    const auto g = testing::random_graph(rng, 3, 14);
    for (const auto& c : pseudoperiodicity(g).components) {
      if (c.period != 1) continue;
      const int r = 2 + static_cast<int>(rng.below(11));
      const Vertex anchor = c.vertices[rng.below(c.vertices.size())];
      const auto w = build_coprime_walk(g, c.vertices, r, anchor);
      EXPECT_TRUE(coprime_walk_is_valid(g, w));
      EXPECT_EQ(std::gcd(w.length, std::int64_t{r}), 1);
      EXPECT_LE(w.max_visits(), 2 * r * r);
      ++built;
    }
  }
  EXPECT_GE(built, 50);
}

TEST(CoprimeWalk, ValidatorCatchesTampering) {
  const auto g = triangle_and_square();
  auto w = build_coprime_walk(g, all_vertices(g), 3, 0);
  auto shorter = w;
  shorter.length += 1;
  EXPECT_FALSE(coprime_walk_is_valid(g, shorter));
  auto broken = w;
  broken.walk.insert(broken.walk.begin() + 1, 4);
  EXPECT_FALSE(coprime_walk_is_valid(g, broken));
}

}  // namespace
}  // namespace girthcut

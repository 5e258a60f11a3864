#include <gtest/gtest.h>

#include "girthcut/error.hpp"
#include "girthcut/expansion.hpp"
#include "girthcut/fas.hpp"
#include "girthcut/oracles.hpp"
#include "support.hpp"

namespace girthcut {
namespace {

using testing::triangle;

TEST(ExpansionOfSet, FourCycleConsecutivePair) {
  const std::vector<Vertex> s{0, 1};
  const auto cut = expansion_of_set(directed_cycle(4), s);
  EXPECT_EQ(cut.e_out, 1);
  EXPECT_EQ(cut.e_in, 1);
  EXPECT_EQ(cut.mu, Rational(1, 2));
}

TEST(ExpansionOfSet, CompleteDigraph) {
  const std::vector<Vertex> s{1, 3};
  const auto cut = expansion_of_set(complete_digraph(4), s);
  EXPECT_EQ(cut.e_out, 4);
  EXPECT_EQ(cut.e_in, 4);
  EXPECT_EQ(cut.mu, Rational(2));
}

TEST(ExpansionOfSet, EdgelessAndInvalidSets) {
  const std::vector<Vertex> s{2};
  EXPECT_EQ(expansion_of_set(Digraph(5), s).mu, Rational(0));
  EXPECT_THROW(expansion_of_set(Digraph(5), std::vector<Vertex>{}), PreconditionError);
  EXPECT_THROW(expansion_of_set(Digraph(5), std::vector<Vertex>{0, 1, 2}), PreconditionError);
  EXPECT_THROW(expansion_of_set(Digraph(5), std::vector<Vertex>{1, 1}), PreconditionError);
}

TEST(ExactMu, Examples) {
  EXPECT_EQ(exact_mu(directed_cycle(4))->mu, Rational(1, 2));
  const auto k4 = exact_mu(complete_digraph(4));
  EXPECT_EQ(k4->mu, Rational(2));
  EXPECT_EQ(k4->s.size(), 2u);
  const auto isolated = testing::graph(4, {{0, 1}, {1, 2}, {2, 0}});
  const auto cut = exact_mu(isolated);
  EXPECT_EQ(cut->mu, Rational(0));
  EXPECT_EQ(cut->s, std::vector<Vertex>{3});
  EXPECT_FALSE(exact_mu(Digraph(1)).has_value());
}

TEST(ExactMu, TiesPreferSmallThenLexicographicSets) {
  // every singleton of the 6-cycle has mu 1, every larger arc has mu < 1
  const auto cut = exact_mu(directed_cycle(6));
  EXPECT_EQ(cut->mu, Rational(1, 3));
  EXPECT_EQ(cut->s, (std::vector<Vertex>{0, 1, 2}));
  const auto edgeless = exact_mu(Digraph(4));
  EXPECT_EQ(edgeless->s, std::vector<Vertex>{0});
}

TEST(ExactMu, LimitIsEnforced) { EXPECT_THROW(exact_mu(Digraph(10), 8), LimitError); }

TEST(ExactMu, AgreesWithSubsetOracle) {
  Rng rng(23);
  for (int t = 0; t < 400; ++t) {
    const auto g = testing::random_graph(rng, 2, 12);
    const auto cut = exact_mu(g);
    ASSERT_TRUE(cut.has_value());
    EXPECT_EQ(cut->mu, *oracle::min_expansion(g));
    // the reported set reproduces its own value
    EXPECT_EQ(expansion_of_set(g, cut->s).mu, cut->mu);
  }
}

TEST(Sweep, DirectedEightCycle) {
  const auto sweep = sweep_low_expansion(directed_cycle(8), 0, Direction::out);
  ASSERT_TRUE(sweep.best.has_value());
  EXPECT_EQ(sweep.best->s, (std::vector<Vertex>{0, 1, 2, 3}));
  EXPECT_EQ(sweep.best->mu, Rational(1, 4));
  EXPECT_EQ(sweep.best->source, CutSource::sweep);
  EXPECT_EQ(sweep.best->sweep_vertex, 0);
}

TEST(Sweep, CompleteDigraphOnlySingletonEligible) {
  const auto sweep = sweep_low_expansion(complete_digraph(6), 0, Direction::out);
  ASSERT_TRUE(sweep.best.has_value());
  EXPECT_EQ(sweep.best->s, std::vector<Vertex>{0});
  EXPECT_EQ(sweep.best->mu, Rational(5));
  EXPECT_FALSE(sweep.trace.levels[1].eligible);
}

TEST(Sweep, BlowupOfEightCycle) {
  const auto sweep = sweep_low_expansion(blowup_cycle(8, 2), 0, Direction::out);
  ASSERT_TRUE(sweep.best.has_value());
  EXPECT_LE(sweep.best->mu, Rational(1));
}

TEST(Sweep, PrefixesStrictlyGrow) {
  Rng rng(29);
  for (int t = 0; t < 200; ++t) {
    const auto g = testing::random_graph(rng, 2, 14);
    for (const auto& s : sweep_all(g)) {
      for (std::size_t i = 1; i < s.trace.levels.size(); ++i)
        EXPECT_GT(s.trace.levels[i].prefix_size, s.trace.levels[i - 1].prefix_size);
      if (s.best) {
        EXPECT_EQ(expansion_of_set(g, s.best->s).mu, s.best->mu);
      }
    }
  }
}

TEST(BestSweep, Examples) {
  EXPECT_LE(best_sweep_cut(directed_cycle(8))->mu, Rational(1, 4));
  EXPECT_EQ(best_sweep_cut(Digraph(5))->mu, Rational(0));
  EXPECT_EQ(best_sweep_cut(directed_cycle(7))->mu, exact_mu(directed_cycle(7))->mu);
}

TEST(BestSweep, UpperBoundsExactMu) {
  Rng rng(31);
  for (int t = 0; t < 1000; ++t) {
    const auto g = testing::random_graph(rng, 2, 16);
    const auto sweep = best_sweep_cut(g);
    ASSERT_TRUE(sweep.has_value());
    EXPECT_GE(sweep->mu, exact_mu(g)->mu);
  }
  for (int n = 3; n <= 12; ++n) EXPECT_EQ(best_sweep_cut(directed_cycle(n))->mu, exact_mu(directed_cycle(n))->mu);
}

TEST(GuidedSweep, IsAnUpperBound) {
  Rng rng(37);
  for (int t = 0; t < 100; ++t) {
    const auto g = testing::random_graph(rng, 2, 12);
    const auto guided = guided_sweep_cut(g);
    if (guided) {
      EXPECT_GE(guided->mu, exact_mu(g)->mu);
    }
  }
}

TEST(ShortCycle, Examples) {
  const auto c = short_cycle_through(triangle(), 0, 3);
  ASSERT_TRUE(c.has_value());
  EXPECT_EQ(*c, (std::vector<Vertex>{0, 1, 2}));
  EXPECT_FALSE(short_cycle_through(triangle(), 0, 2).has_value());
  const auto b = blowup_cycle(4, 2);
  for (Vertex v = 0; v < 8; ++v) {
    const auto cycle = short_cycle_through(b, v, 4);
    ASSERT_TRUE(cycle.has_value());
    EXPECT_EQ(cycle->size(), 4u);
  }
  EXPECT_THROW(short_cycle_through(triangle(), 0, 1), PreconditionError);
}

TEST(ShortCycle, IsAShortestCycleThroughTheVertex) {
  Rng rng(41);
  for (int t = 0; t < 300; ++t) {
    const auto g = testing::random_graph(rng, 2, 10);
    for (Vertex v = 0; v < g.order(); ++v) {
      const auto lengths = oracle::cycle_lengths_through(g, v);
      for (int r = 2; r <= g.order(); ++r) {
        const auto c = short_cycle_through(g, v, r);
        const bool exists = !lengths.empty() && *lengths.begin() <= r;
        ASSERT_EQ(c.has_value(), exists);
        if (c) {
          EXPECT_TRUE(is_simple_cycle(g, *c));
          EXPECT_EQ(c->front(), v);
          EXPECT_EQ(static_cast<int>(c->size()), *lengths.begin());
        }
      }
    }
  }
}

TEST(LayerGrowth, HoldsWhenReferenceIsTheMinimum) {
  Rng rng(43);
  for (int t = 0; t < 200; ++t) {
    const auto g = testing::random_graph(rng, 2, 14);
    const auto mu = exact_mu(g)->mu;
    if (mu == Rational(0)) continue;
    for (const auto& s : sweep_all(g)) {
      const auto report = check_layer_growth(s.trace, mu);
      EXPECT_TRUE(report.ok());
      EXPECT_TRUE(report.premise_holds);
    }
  }
}

TEST(LayerGrowth, CyclePremiseFailsAtReferenceOne) {
  const auto sweep = sweep_low_expansion(directed_cycle(8), 0, Direction::out);
  const auto report = check_layer_growth(sweep.trace, Rational(1));
  EXPECT_FALSE(report.premise_holds);
  ASSERT_TRUE(report.first_premise_failure.has_value());
  EXPECT_EQ(*report.first_premise_failure, 1);
  EXPECT_FALSE(report.first_amgm_violation.has_value());
}

TEST(LayerGrowth, SingleVertexIsVacuous) {
  const auto sweep = sweep_low_expansion(Digraph(1), 0, Direction::out);
  const auto report = check_layer_growth(sweep.trace, Rational(1));
  EXPECT_TRUE(report.ok());
  EXPECT_EQ(report.levels_checked, 0);
}

TEST(LayerGrowth, SequencesMatchTheirDefinition) {
  const auto sweep = sweep_low_expansion(blowup_cycle(5, 2), 0, Direction::out);
  const Rational mu(1, 2);
  const auto seq = growth_sequences(sweep.trace, mu);
  ASSERT_EQ(seq.a.size(), sweep.trace.levels.size());
  Rational sum(0);
  for (std::size_t i = 0; i < seq.a.size(); ++i) {
    const int next = sweep.trace.next_layer_size(i);
    EXPECT_EQ(seq.a[i], Rational(sweep.trace.levels[i].layer_size + next) / mu);
    if (i >= 1) sum += seq.a[i];
    EXPECT_EQ(seq.b[i], sum);
  }
}

TEST(AmGm, EveryLevelOfEverySweep) {
  Rng rng(47);
  for (int t = 0; t < 300; ++t) {
    const auto g = testing::random_graph(rng, 2, 16);
    for (const auto& s : sweep_all(g))
      for (std::size_t i = 0; i < s.trace.levels.size(); ++i)
        if (s.trace.levels[i].eligible) {
          EXPECT_TRUE(amgm_layer_bound_holds(s.trace, i));
        }
  }
}

TEST(ShortCycleTheorem, DenseGraphsTriggerThePremise) {
  int triggered = 0;
  Rng rng(53);
  std::vector<Digraph> graphs;
  for (int n = 2; n <= 16; ++n) graphs.push_back(complete_digraph(n));
  for (int t = 0; t < 300; ++t) graphs.push_back(random_digraph(4 + static_cast<int>(rng.below(13)), 0.85, rng.next()));
  for (const auto& g : graphs) {
    const int n = g.order();
    const auto mu = exact_mu(g)->mu;
    if (mu == Rational(0)) continue;
    int r = 9;
    while (Rational(25 * n, r * r) > mu) ++r;
    ++triggered;
    for (Vertex v = 0; v < n; ++v) EXPECT_TRUE(short_cycle_through(g, v, r).has_value());
  }
  EXPECT_GT(triggered, 0);
}

TEST(Duality, MuTimesHalfIsAtMostBeta) {
  Rng rng(59);
  for (int t = 0; t < 300; ++t) {
    const auto g = testing::random_graph(rng, 2, 14);
    const auto mu = exact_mu(g)->mu;
    EXPECT_LE(mu * (g.order() / 2), Rational(exact_min_fas(g).size()));
  }
}

}  // namespace
}  // namespace girthcut

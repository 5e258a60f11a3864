#include <gtest/gtest.h>

#include <numeric>

#include "girthcut/error.hpp"
#include "girthcut/fas.hpp"
#include "girthcut/oracles.hpp"
#include "support.hpp"

namespace girthcut {
namespace {

using testing::triangle;

TEST(ExactFas, Examples) {
  EXPECT_EQ(exact_min_fas(triangle()).size(), 1);
  EXPECT_EQ(exact_min_fas(complete_digraph(4)).size(), 6);
  EXPECT_EQ(exact_min_fas(blowup_cycle(4, 2)).size(), 4);
  EXPECT_EQ(exact_min_fas(transitive_tournament(7)).size(), 0);
}

TEST(ExactFas, CertificateIsVerified) {
  auto cert = exact_min_fas(blowup_cycle(3, 3));
  EXPECT_TRUE(cert.verified_acyclic);
  EXPECT_EQ(cert.method, FasMethod::exact_dp);
  EXPECT_TRUE(std::is_sorted(cert.removed.begin(), cert.removed.end()));
}

TEST(ExactFas, LimitAppliesToComponents) {
  // 30 vertices but every strong component is a triangle
  std::vector<Edge> edges;
  for (int k = 0; k < 10; ++k) {
    edges.push_back({3 * k, 3 * k + 1});
    edges.push_back({3 * k + 1, 3 * k + 2});
    edges.push_back({3 * k + 2, 3 * k});
    if (k > 0) edges.push_back({3 * k - 1, 3 * k});
  }
  EXPECT_EQ(exact_min_fas(Digraph(30, edges), 5).size(), 10);
  EXPECT_THROW(exact_min_fas(directed_cycle(12), 10), LimitError);
}

TEST(ExactFas, AgreesWithEdgeSubsetOracle) {
  Rng rng(61);
  for (int t = 0; t < 400; ++t) {
    const auto g = testing::random_graph(rng, 1, 6);
    const auto beta = exact_min_fas(g).size();
    EXPECT_EQ(oracle::min_fas_by_edge_subsets(g, beta), beta);
  }
}

TEST(ExactFas, AgreesWithPermutationOracle) {
  Rng rng(67);
  for (int t = 0; t < 500; ++t) {
    const auto g = testing::random_graph(rng, 1, 8);
    EXPECT_EQ(exact_min_fas(g).size(), oracle::min_fas_by_permutations(g));
  }
}

TEST(ExactFas, AdditiveOverStrongComponents) {
  Rng rng(71);
  for (int t = 0; t < 300; ++t) {
    const auto g = testing::random_graph(rng, 2, 12);
    std::int64_t sum = 0;
    for (const auto& c : strong_components(g).components) sum += exact_min_fas(g.induced(c)).size();
    EXPECT_EQ(exact_min_fas(g).size(), sum);
  }
}

TEST(OrderingFas, Examples) {
  const std::vector<Vertex> order{0, 1, 2};
  const auto tri = ordering_fas(triangle(), order);
  EXPECT_EQ(tri.removed, (std::vector<Edge>{{2, 0}}));
  const auto k4 = ordering_fas(complete_digraph(4));
  EXPECT_EQ(k4.size(), 6);
  ASSERT_TRUE(k4.bound.has_value());
  EXPECT_EQ(k4.bound->value, Rational(6));
  EXPECT_EQ(k4.bound->formula, BoundFormula::half_edges);
  const auto dag = transitive_tournament(5);
  const auto topo = *topological_order(dag);
  EXPECT_EQ(ordering_fas(dag, topo).size(), 0);
}

TEST(OrderingFas, ForwardEdgesWhenFewer) {
  // order reversed against a path: every edge is backward, none forward
  const auto path = testing::graph(3, {{0, 1}, {1, 2}});
  const std::vector<Vertex> reversed{2, 1, 0};
  EXPECT_EQ(ordering_fas(path, reversed).size(), 0);
}

TEST(OrderingFas, RejectsNonPermutation) {
  const std::vector<Vertex> bad{0, 0, 1};
  EXPECT_THROW(ordering_fas(triangle(), bad), PreconditionError);
  const std::vector<Vertex> short_order{0, 1};
  EXPECT_THROW(ordering_fas(triangle(), short_order), PreconditionError);
}

TEST(Dominance, ExactOrderingHalfEdges) {
  Rng rng(73);
  for (int t = 0; t < 300; ++t) {
    const auto g = testing::random_graph(rng, 1, 12);
    const auto exact = exact_min_fas(g).size();
    auto order = std::vector<Vertex>(static_cast<std::size_t>(g.order()));
    std::iota(order.begin(), order.end(), 0);
    rng.shuffle(order);
    const auto ordering = ordering_fas(g, order);
    EXPECT_LE(exact, ordering.size());
    EXPECT_LE(2 * ordering.size(), g.size());
    EXPECT_TRUE(ordering.verified_acyclic);
  }
}

TEST(VerifyCertificate, RejectsMutantsWithWitness) {
  const auto g = blowup_cycle(4, 2);
  auto cert = exact_min_fas(g);
  cert.removed.erase(cert.removed.begin());
  cert.verified_acyclic = true;  // never trusted
  try {
    verify_certificate(g, cert);
    FAIL() << "mutant accepted";
  } catch (const VerificationError& e) {
    EXPECT_TRUE(is_simple_cycle(g, e.witness()));
  }
  EXPECT_FALSE(cert.verified_acyclic);
}

TEST(VerifyCertificate, RejectsNonEdgesAndBrokenBounds) {
  FasCertificate fake;
  fake.removed = {{0, 2}};
  EXPECT_THROW(verify_certificate(triangle(), fake), VerificationError);
  FasCertificate tight;
  tight.removed = {{0, 1}};
  tight.bound = CertifiedBound{Rational(1, 2), BoundFormula::half_edges};
  EXPECT_THROW(verify_certificate(triangle(), tight), VerificationError);
}

TEST(RecursiveFas, BlowupOfEightCycle) {
  const auto g = blowup_cycle(8, 2);
  const auto cert = recursive_expansion_fas(g, 7);
  EXPECT_TRUE(cert.verified_acyclic);
  ASSERT_TRUE(cert.bound.has_value());
  EXPECT_EQ(cert.bound->value, Rational(25 * 256, 49));
  EXPECT_LE(Rational(cert.size()), cert.bound->value);
  EXPECT_EQ(cert.r_used, 7);
}

TEST(RecursiveFas, LongCycleNeedsOneEdge) {
  RecursionLog log;
  const auto cert = recursive_expansion_fas(directed_cycle(12), 11, &log);
  EXPECT_EQ(cert.size(), 1);
  EXPECT_FALSE(log.steps.empty());
}

TEST(RecursiveFas, AcyclicInput) {
  EXPECT_EQ(recursive_expansion_fas(transitive_tournament(8), 5).size(), 0);
  EXPECT_EQ(recursive_expansion_fas(transitive_tournament(30), 14).size(), 0);
}

TEST(RecursiveFas, RejectsShortCyclesWithWitness) {
  try {
    recursive_expansion_fas(blowup_cycle(4, 2), 4);
    FAIL() << "4-cycle accepted as 4-free";
  } catch (const VerificationError& e) {
    EXPECT_EQ(e.witness().size(), 4u);
  }
  EXPECT_THROW(recursive_expansion_fas(triangle(), 1), PreconditionError);
}

TEST(RecursiveFas, CertifiedOnRandomRFreeGraphs) {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    const int r = 11 + static_cast<int>(seed % 5);
    const int n = 30 + static_cast<int>(seed * 7 % 90);
    const auto g = random_r_free(n, r, 0.3, seed);
    RecursionLog log;
    const auto cert = recursive_expansion_fas(g, r, &log);
    EXPECT_TRUE(cert.verified_acyclic);
    EXPECT_LE(Rational(cert.size()), corollary_bound(n, r));
    EXPECT_EQ(log.amgm_violations, 0);
    for (const auto& step : log.steps) EXPECT_LT(step.mu, step.threshold);
  }
}

TEST(RecursiveFas, DominatedByExactWhenAvailable) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const auto g = random_r_free(16, 4, 0.4, seed);
    const auto len = girth(g);
    if (!len) continue;
    const auto rec = recursive_expansion_fas(g, *len - 1);
    EXPECT_LE(exact_min_fas(g).size(), rec.size());
  }
}

TEST(BoundReport, BlowupOfFourCycle) {
  const auto report = bound_report(blowup_cycle(4, 2));
  EXPECT_EQ(report.beta, 4);
  EXPECT_EQ(report.gamma, 12);
  EXPECT_EQ(report.r, 3);
  EXPECT_EQ(report.gamma_bound.value, Rational(9600, 9));
  EXPECT_TRUE(report.gamma_bound.holds);
  ASSERT_TRUE(report.sullivan.has_value());
  EXPECT_EQ(report.sullivan->value, Rational(6));
  EXPECT_TRUE(report.sullivan->holds);
  EXPECT_TRUE(report.theorem_checks_pass());
}

TEST(BoundReport, TriangleIsOutOfScope) {
  const auto report = bound_report(triangle());
  EXPECT_EQ(report.r, 2);
  EXPECT_FALSE(report.in_theorem_scope);
  EXPECT_EQ(report.gamma_bound.value, Rational(0));
  EXPECT_FALSE(report.gamma_bound.holds);
  EXPECT_TRUE(report.theorem_checks_pass());
  EXPECT_FALSE(report.sullivan.has_value());
}

TEST(BoundReport, SixCycle) {
  const auto report = bound_report(directed_cycle(6));
  EXPECT_EQ(report.beta, 1);
  EXPECT_EQ(report.gamma, 9);
  EXPECT_EQ(report.gamma_bound.value, Rational(288));
  EXPECT_TRUE(report.theorem_checks_pass());
}

TEST(BoundReport, AcyclicIsDegenerate) {
  const auto report = bound_report(transitive_tournament(5));
  EXPECT_TRUE(report.degenerate);
  EXPECT_EQ(report.beta, 0);
  EXPECT_TRUE(report.theorem_checks_pass());
}

TEST(BoundReport, LargeInputsUseUpperBoundMode) {
  // one strong component of 26 vertices, above the exact limit
  const auto report = bound_report(blowup_cycle(13, 2), 20);
  EXPECT_EQ(report.r, 12);
  EXPECT_FALSE(report.beta_exact);
  EXPECT_EQ(report.certificate.method, FasMethod::recursive_expansion);
  EXPECT_TRUE(report.corollary.holds);
}

TEST(GammaBounds, HoldOnRandomRFreeGraphs) {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const int r = 3 + static_cast<int>(seed % 4);
    const auto g = random_r_free(6 + static_cast<int>(seed % 11), r, 0.5, seed);
    const auto report = bound_report(g);
    if (report.degenerate) continue;
    ASSERT_TRUE(report.beta_exact);
    EXPECT_TRUE(report.gamma_bound.holds);
    EXPECT_TRUE(report.induction.holds);
    EXPECT_TRUE(report.corollary.holds);
    ++checked;
  }
  EXPECT_GT(checked, 100);
}

TEST(TightFamily, EqualBlowupsMeetTheLowerBound) {
  for (int p = 3; p <= 8; ++p)
    for (int b = 1; p * b <= 20; ++b) {
      const auto g = blowup_cycle(p, b);
      EXPECT_EQ(exact_min_fas(g).size(), b * b) << "p=" << p << " b=" << b;
    }
}

}  // namespace
}  // namespace girthcut

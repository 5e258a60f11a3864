#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "girthcut/campaign.hpp"
#include "girthcut/error.hpp"
#include "girthcut/serialize.hpp"
#include "support.hpp"

namespace girthcut {
namespace {

using nlohmann::json;

TEST(Analyze, Triangle) {
  const auto j = analyze(testing::triangle());
  EXPECT_EQ(j["n"], 3);
  EXPECT_EQ(j["stats"]["girth"], 3);
  EXPECT_EQ(j["r_free_max"], 2);
  EXPECT_EQ(j["beta"]["mode"], "exact");
  EXPECT_EQ(j["beta"]["value"], 1);
  EXPECT_EQ(j["mu"]["mode"], "exact");
  EXPECT_EQ(j["spectrum"]["report"]["lengths"], json::array({3}));
  EXPECT_EQ(j["lambda"]["value"], 0);
}

TEST(Analyze, BlowupOfFourCycle) {
  const auto j = analyze(blowup_cycle(4, 2));
  EXPECT_EQ(j["stats"]["gamma"], 12);
  EXPECT_EQ(j["beta"]["value"], 4);
  EXPECT_EQ(j["spectrum"]["report"]["lengths"], json::array({4, 8}));
  EXPECT_EQ(j["periods"]["components"][0]["period"], 4);
  EXPECT_TRUE(j["bounds"]["theorem_checks_pass"].get<bool>());
}

TEST(Analyze, EdgelessGraph) {
  const auto j = analyze(Digraph(5));
  EXPECT_TRUE(j["stats"]["girth"].is_null());
  EXPECT_EQ(j["beta"]["value"], 0);
  EXPECT_EQ(j["mu"]["cut"]["mu_num"], 0);
}

TEST(Analyze, LargeGraphsFallBack) {
  Limits limits;
  limits.exact_mu = 10;
  limits.exact_fas = 10;
  limits.spectrum = 10;
  const auto j = analyze(complete_digraph(12), limits);
  EXPECT_EQ(j["mu"]["mode"], "sweep-upper-bound");
  EXPECT_EQ(j["beta"]["mode"], "heuristic");
  EXPECT_EQ(j["spectrum"]["mode"], "skipped");
  EXPECT_EQ(j["lambda"]["mode"], "skipped");
}

TEST(RenderText, IsAProjectionOfTheJson) {
  const auto j = analyze(testing::triangle());
  const auto text = render_text(j);
  EXPECT_NE(text.find("n: 3\n"), std::string::npos);
  EXPECT_NE(text.find("beta.value: 1\n"), std::string::npos);
  EXPECT_NE(text.find("spectrum.report.lengths: [3]\n"), std::string::npos);
}

TEST(Manifest, DefaultHasFortyEntries) {
  const auto m = default_manifest();
  EXPECT_EQ(m.size(), 40u);
  const auto corpus = parse_manifest(m, ".");
  for (const auto& entry : corpus) {
    ASSERT_TRUE(entry.spec.has_value());
    EXPECT_NO_THROW(generate(*entry.spec)) << entry.label();
  }
}

TEST(Manifest, PathsResolveAgainstTheManifestDirectory) {
  const auto corpus = parse_manifest(json::array({"a/b.edges", "/abs.edges", {{"family", "directed-cycle"}, {"n", 4}}}),
                                     "/base");
  ASSERT_EQ(corpus.size(), 3u);
  EXPECT_EQ(corpus[0].path, std::filesystem::path("/base/a/b.edges"));
  EXPECT_EQ(corpus[1].path, std::filesystem::path("/abs.edges"));
  EXPECT_EQ(corpus[2].spec->n, 4);
  EXPECT_THROW(parse_manifest(json::object(), "."), Error);
  EXPECT_THROW(parse_manifest(json::array({7}), "."), Error);
  EXPECT_THROW(parse_manifest(json::array({{{"family", "petersen"}}}), "."), Error);
}

TEST(Serialize, GeneratorSpecRoundTrips) {
  GeneratorSpec spec;
  spec.family = Family::two_block_regular;
  spec.n = 16;
  spec.eps = Rational(1, 8);
  const json j = spec;
  EXPECT_EQ(j["eps"], "1/8");
  const auto back = j.get<GeneratorSpec>();
  EXPECT_EQ(back.eps, spec.eps);
  EXPECT_EQ(build(back), build(spec));
}

TEST(Serialize, CertificateRoundTripDropsTrust) {
  const auto cert = exact_min_fas(blowup_cycle(3, 2));
  const json j = cert;
  EXPECT_EQ(j["size"], 4);
  auto back = j.get<FasCertificate>();
  EXPECT_EQ(back.removed, cert.removed);
  EXPECT_EQ(back.method, FasMethod::supplied);
  EXPECT_FALSE(back.verified_acyclic);
  EXPECT_NO_THROW(verify_certificate(blowup_cycle(3, 2), back));
}

TEST(Serialize, ParseRational) {
  EXPECT_EQ(parse_rational("3/12"), Rational(1, 4));
  EXPECT_EQ(parse_rational("5"), Rational(5));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
}

CampaignConfig small_config() {
  CampaignConfig config;
  config.corpus = parse_manifest(json::array({{{"family", "blowup-cycle"}, {"p", 4}, {"n", 8}},
                                              {{"family", "directed-cycle"}, {"n", 6}},
                                              {{"family", "random-digraph"}, {"n", 9}, {"density", 0.4}, {"seed", 3}},
                                              {{"family", "random-r-free"}, {"n", 40}, {"r", 11}, {"density", 0.3}, {"seed", 4}}}),
                                 ".");
  config.trials = 20;
  config.seed = 5;
  return config;
}

TEST(Campaign, SmallCorpusPasses) {
  const auto result = run_campaign(small_config());
  EXPECT_EQ(result.exit_code(), 0) << result.report["failures"].dump(2) << result.report["errors"].dump(2);
  EXPECT_EQ(result.report["corpus"].size(), 4u);
  EXPECT_GT(result.report["summary"]["fas-certificate"]["pass"].get<int>(), 0);
  EXPECT_GT(result.report["summary"]["oracle-fas"]["pass"].get<int>(), 0);
}

TEST(Campaign, InjectedMutantIsCaughtWithWitness) {
  auto config = small_config();
  config.inject_mutant = true;
  const auto result = run_campaign(config);
  EXPECT_EQ(result.exit_code(), 2);
  bool witnessed = false;
  for (const auto& f : result.report["failures"])
    if (f["check"] == "fas-certificate" && f.contains("witness") && !f["witness"].empty()) witnessed = true;
  EXPECT_TRUE(witnessed);
}

TEST(Campaign, ReportIndependentOfWorkerCount) {
  auto config = small_config();
  const auto one = run_campaign(config);
  config.workers = 4;
  const auto four = run_campaign(config);
  EXPECT_EQ(one.report.dump(), four.report.dump());
}

TEST(Campaign, MissingFileIsAnOperationalError) {
  CampaignConfig config;
  config.corpus = parse_manifest(json::array({"/nonexistent/graph.edges"}), ".");
  config.trials = 0;
  const auto result = run_campaign(config);
  EXPECT_EQ(result.exit_code(), 1);
  EXPECT_EQ(result.operational_errors, 1);
}

TEST(Campaign, WritesReportFiles) {
  auto config = small_config();
  config.trials = 2;
  const auto dir = std::filesystem::temp_directory_path() / "girthcut_test_out";
  std::filesystem::remove_all(dir);
  config.out_dir = dir;
  run_campaign(config);
  std::ifstream in(dir / "report.json");
  const auto j = json::parse(in);
  EXPECT_TRUE(j.contains("timing"));
  EXPECT_TRUE(std::filesystem::exists(dir / "findings.json"));
  std::filesystem::remove_all(dir);
}

TEST(Limits, Validation) {
  Limits ok;
  EXPECT_NO_THROW(ok.validate());
  Limits bad;
  bad.exact_fas = 40;
  EXPECT_THROW(bad.validate(), Error);
  bad = Limits{};
  bad.exact_mu = 1;
  EXPECT_THROW(bad.validate(), Error);
  CampaignConfig config;
  config.workers = 0;
  EXPECT_THROW(config.validate(), Error);
}

}  // namespace
}  // namespace girthcut

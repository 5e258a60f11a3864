#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "girthcut/constructions.hpp"
#include "girthcut/digraph.hpp"
#include "girthcut/expansion.hpp"
#include "girthcut/fas.hpp"
#include "girthcut/periodicity.hpp"

namespace girthcut {

/// Size limits for the exponential routines. Inputs above a limit fall back
/// to a heuristic or are skipped, and the report says which.
struct Limits {
  int exact_fas = kExactFasLimit;        // largest strong component
  int exact_mu = kExactMuLimit;          // n
  int spectrum = kSpectrumLimit;         // largest strong component
  int lambda_edges = kLambdaEdgeLimit;   // edges inside strong components

  /// Throws Error when a limit is outside its safe range.
  void validate() const;
};

nlohmann::json limits_json(const Limits& limits);

/// Full single-graph report: stats, strong components, periods, mu, beta,
/// spectrum and lambda, each labelled exact or heuristic (or skipped).
nlohmann::json analyze(const Digraph& g, const Limits& limits = {});

/// Human-readable projection of a JSON report: one "path: value" line per
/// leaf, arrays of scalars kept inline. Carries nothing the JSON lacks.
std::string render_text(const nlohmann::json& report);

/// One corpus item: a generator spec or an edge-list file.
struct CorpusEntry {
  std::optional<GeneratorSpec> spec;
  std::filesystem::path path;
  std::string label() const;
};

/// Manifest: JSON array whose items are generator-spec objects or edge-list
/// paths (relative paths resolve against base_dir).
std::vector<CorpusEntry> parse_manifest(const nlohmann::json& manifest,
                                        const std::filesystem::path& base_dir);
std::vector<CorpusEntry> load_manifest(const std::filesystem::path& path);

/// The documented 40-graph default corpus.
nlohmann::json default_manifest();

struct CampaignConfig {
  std::vector<CorpusEntry> corpus;
  Limits limits;
  int trials = 200;          // random oracle cross-check graphs
  std::uint64_t seed = 1;
  int workers = 1;
  std::optional<std::filesystem::path> out_dir;
  bool inject_mutant = false;  // verify a certificate with one edge dropped

  void validate() const;
};

struct CampaignReport {
  nlohmann::json report;  // deterministic for a fixed config
  nlohmann::json timing;  // wall clock, kept apart from the report
  nlohmann::json findings = nlohmann::json::array();  // conjecture observations
  int theorem_failures = 0;
  int operational_errors = 0;

  /// 2: a proven statement failed, 1: operational error, 0 otherwise.
  int exit_code() const;
};

/// Runs every check over the corpus and the random trials. Items run on up
/// to config.workers threads; the report is assembled in manifest order. If
/// out_dir is set, writes report.json and findings.json there.
CampaignReport run_campaign(const CampaignConfig& config);

}  // namespace girthcut

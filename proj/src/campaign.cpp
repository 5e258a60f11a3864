#include "girthcut/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <numeric>
#include <thread>

#include "girthcut/error.hpp"
#include "girthcut/oracles.hpp"
#include "girthcut/serialize.hpp"

namespace girthcut {

using nlohmann::json;

std::string CorpusEntry::label() const { return spec ? describe(*spec) : path.string(); }

std::vector<CorpusEntry> parse_manifest(const json& manifest, const std::filesystem::path& base_dir) {
  if (!manifest.is_array()) throw Error("manifest must be a JSON array");
  std::vector<CorpusEntry> corpus;
  for (const auto& item : manifest) {
    CorpusEntry entry;
    if (item.is_string()) {
      entry.path = item.get<std::string>();
      if (entry.path.is_relative()) entry.path = base_dir / entry.path;
    } else if (item.is_object()) {
      entry.spec = item.get<GeneratorSpec>();
    } else {
      throw Error("manifest items must be generator specs or paths, got " + item.dump());
    }
    corpus.push_back(std::move(entry));
  }
  return corpus;
}

std::vector<CorpusEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest " + path.string());
  json manifest;
  try {
    manifest = json::parse(in);
  } catch (const json::parse_error& e) {
    throw Error("manifest " + path.string() + ": " + e.what());
  }
  return parse_manifest(manifest, path.parent_path());
}

json default_manifest() {
  json m = json::array();
  const auto add = [&](json spec) { m.push_back(std::move(spec)); };
  // tight blowups
  for (auto [p, b] : {std::pair{3, 2}, {3, 4}, {3, 6}, {4, 3}, {4, 5}, {5, 2}, {5, 3}, {6, 2}, {7, 2}, {8, 2}})
    add({{"family", "blowup-cycle"}, {"p", p}, {"n", p * b}});
  for (int n : {3, 6, 9, 12}) add({{"family", "directed-cycle"}, {"n", n}});
  for (int n : {3, 5, 8, 12, 16}) add({{"family", "complete-digraph"}, {"n", n}});
  for (int n : {6, 10}) add({{"family", "transitive-tournament"}, {"n", n}});
  add({{"family", "two-block-regular"}, {"n", 8}, {"eps", "1/4"}});
  add({{"family", "two-block-regular"}, {"n", 16}, {"eps", "1/4"}});
  add({{"family", "two-block-regular"}, {"n", 16}, {"eps", "1/8"}});
  for (auto [n, seed] : {std::pair{7, 11}, {9, 12}, {12, 13}})
    add({{"family", "random-tournament"}, {"n", n}, {"seed", seed}});
  for (auto [n, r, seed] : {std::tuple{12, 3, 21}, {14, 4, 22}, {16, 5, 23}, {16, 9, 24}, {40, 11, 25},
                            {80, 12, 26}, {120, 15, 27}, {200, 11, 28}})
    add({{"family", "random-r-free"}, {"n", n}, {"r", r}, {"density", 0.3}, {"seed", seed}});
  for (auto [n, seed] : {std::pair{8, 31}, {10, 32}, {12, 33}, {14, 34}, {16, 35}})
    add({{"family", "random-digraph"}, {"n", n}, {"density", 0.3}, {"seed", seed}});
  return m;
}

void CampaignConfig::validate() const {
  limits.validate();
  if (trials < 0) throw Error("trials must be non-negative");
  if (workers < 1 || workers > 256) throw Error("workers must lie in [1, 256]");
}

int CampaignReport::exit_code() const {
  if (theorem_failures > 0) return 2;
  if (operational_errors > 0) return 1;
  return 0;
}

namespace {

struct Item {
  json record = json::object();
  json failures = json::array();
  json findings = json::array();
  bool operational_error = false;
  double seconds = 0;
};

// Per-check status counts plus failures carrying the graph that reproduces them.
class Recorder {
 public:
  Recorder(Item& item, std::string label) : item_(item), label_(std::move(label)) {
    item_.record["checks"] = json::object();
  }

  void pass(const std::string& check) { bump(check, "pass"); }
  void skip(const std::string& check) { bump(check, "skip"); }
  void inconclusive(const std::string& check) { bump(check, "inconclusive"); }
  void vacuous(const std::string& check) { bump(check, "vacuous"); }

  void fail(const std::string& check, const std::string& detail, const Digraph& g, json witness = nullptr) {
    bump(check, "fail");
    json f{{"graph", label_}, {"check", check}, {"detail", detail}, {"witness_graph", format_edge_list(g)}};
    if (!witness.is_null()) f["witness"] = std::move(witness);
    item_.failures.push_back(std::move(f));
  }

  void expect(bool ok, const std::string& check, const std::string& detail, const Digraph& g,
              json witness = nullptr) {
    if (ok) {
      pass(check);
    } else {
      fail(check, detail, g, std::move(witness));
    }
  }

  void finding(const std::string& check, json body, const Digraph& g) {
    bump(check, "finding");
    body["graph"] = label_;
    body["witness_graph"] = format_edge_list(g);
    item_.findings.push_back(std::move(body));
  }

  void error(const std::string& what) {
    item_.operational_error = true;
    item_.record["error"] = what;
  }

 private:
  void bump(const std::string& check, const char* status) {
    auto& c = item_.record["checks"][check];
    if (c.is_null()) c = json::object();
    c[status] = c.value(status, 0) + 1;
  }

  Item& item_;
  std::string label_;
};

std::string rat(const Rational& q) { return to_string(q); }

int largest_component(const SccDecomposition& scc) {
  std::size_t best = 0;
  for (const auto& c : scc.components) best = std::max(best, c.size());
  return static_cast<int>(best);
}

int edges_inside_components(const Digraph& g, const SccDecomposition& scc) {
  int count = 0;
  for (const auto& e : g.edges())
    count += scc.component_of[static_cast<std::size_t>(e.from)] == scc.component_of[static_cast<std::size_t>(e.to)];
  return count;
}

void check_fas(const Digraph& g, const SccDecomposition& scc, const Limits& limits, bool inject_mutant,
               std::optional<std::int64_t> expected_beta, Recorder& rec, Item& item,
               std::optional<std::int64_t>& beta) {
  if (largest_component(scc) > limits.exact_fas) {
    rec.skip("fas-certificate");
    return;
  }
  auto exact = exact_min_fas(g, limits.exact_fas);
  try {
    verify_certificate(g, exact);
    rec.pass("fas-certificate");
  } catch (const VerificationError& e) {
    rec.fail("fas-certificate", e.what(), g, json{{"cycle", e.witness()}, {"certificate", exact}});
  }
  beta = exact.size();
  item.record["beta"] = *beta;

  if (inject_mutant) {
    if (exact.removed.empty()) {
      rec.skip("fas-certificate");
    } else {
      // negative control: a minimum FAS minus one edge is never a FAS
      FasCertificate mutant = exact;
      mutant.method = FasMethod::supplied;
      mutant.removed.erase(mutant.removed.begin());
      try {
        verify_certificate(g, mutant);
        rec.fail("fas-certificate", "verifier accepted a mutant certificate", g, json{{"certificate", mutant}});
      } catch (const VerificationError& e) {
        rec.fail("fas-certificate", std::string("mutant certificate: ") + e.what(), g,
                 json{{"cycle", e.witness()}, {"certificate", mutant}});
      }
    }
  }

  auto ordering = ordering_fas(g);
  verify_certificate(g, ordering);
  const bool dominated = exact.size() <= ordering.size() && 2 * ordering.size() <= g.size();
  rec.expect(dominated, "fas-dominance",
             "exact " + std::to_string(exact.size()) + ", ordering " + std::to_string(ordering.size()) +
                 ", m " + std::to_string(g.size()),
             g);

  if (expected_beta)
    rec.expect(*expected_beta == exact.size(), "generator-beta",
               "expected beta " + std::to_string(*expected_beta) + ", exact " + std::to_string(exact.size()), g);
}

void check_bounds(const Digraph& g, const Limits& limits, Recorder& rec, Item& item) {
  const auto report = bound_report(g, limits.exact_fas);
  item.record["bounds"] = report;
  if (report.degenerate) return;

  const auto judge = [&](const std::string& name, const BoundCheck& b) {
    if (b.holds) {
      rec.pass(name);
    } else if (report.beta_exact) {
      rec.fail(name, "beta " + std::to_string(report.beta) + " > " + rat(b.value), g,
               json{{"certificate", report.certificate}});
    } else {
      rec.inconclusive(name);
    }
  };
  judge("fas-n2-bound", report.corollary);
  if (report.in_theorem_scope) {
    judge("fas-gamma-bound", report.gamma_bound);
    judge("fas-refined-gamma-bound", report.induction);
  }
  if (report.sullivan) {
    if (!report.beta_exact) {
      rec.inconclusive("sullivan-conjecture");
    } else if (report.sullivan->holds) {
      rec.pass("sullivan-conjecture");
    } else {
      rec.finding("sullivan-conjecture",
                  json{{"n", report.n},
                       {"r", report.r},
                       {"gamma", report.gamma},
                       {"beta", report.beta},
                       {"bound", rat(report.sullivan->value)}},
                  g);
    }
  }
}

void check_recursion(const Digraph& g, const GraphStats& st, Recorder& rec, Item& item) {
  if (!st.girth || *st.girth < 3) {
    rec.skip("recursive-construction");
    return;
  }
  const int r = *st.girth - 1;
  RecursionLog log;
  try {
    auto cert = recursive_expansion_fas(g, r, &log);
    const auto bound = corollary_bound(g.order(), r);
    rec.expect(cert.verified_acyclic && Rational(cert.size()) <= bound, "recursive-construction",
               "size " + std::to_string(cert.size()) + " vs 25n^2/r^2 = " + rat(bound), g,
               json{{"certificate", cert}});
    item.record["recursion"] = json{{"r", r},
                                    {"size", cert.size()},
                                    {"bound", rat(bound)},
                                    {"cuts", log.steps.size()},
                                    {"sweeps", log.sweeps},
                                    {"amgm_levels", log.amgm_levels},
                                    {"ordering_base_cases", log.ordering_base_cases},
                                    {"small_base_cases", log.small_base_cases}};
  } catch (const VerificationError& e) {
    rec.fail("recursive-construction", e.what(), g, json{{"cycle", e.witness()}});
  } catch (const Error& e) {
    rec.fail("recursive-construction", e.what(), g);
  }
  rec.expect(log.amgm_violations == 0, "sweep-amgm",
             std::to_string(log.amgm_violations) + " of " + std::to_string(log.amgm_levels) +
                 " recursion levels break the layer bound",
             g);
}

void check_expansion(const Digraph& g, const Limits& limits, std::optional<std::int64_t> beta, Recorder& rec,
                     Item& item) {
  const int n = g.order();
  if (n < 2 || n > limits.exact_mu) {
    rec.skip("sweep-upper-bound");
    return;
  }
  const auto mu = *exact_mu(g, limits.exact_mu);
  item.record["cut"] = cut_with_trace(mu, nullptr);

  const auto sweeps = sweep_all(g);
  const auto best = best_sweep_cut(sweeps);
  rec.expect(best && best->mu >= mu.mu, "sweep-upper-bound",
             "sweep " + (best ? rat(best->mu) : std::string("none")) + " below exact " + rat(mu.mu), g);

  for (const auto& s : sweeps) {
    bool amgm = true;
    for (std::size_t i = 0; i < s.trace.levels.size(); ++i)
      if (s.trace.levels[i].eligible && !amgm_layer_bound_holds(s.trace, i)) amgm = false;
    rec.expect(amgm, "sweep-amgm",
               "layer bound fails on sweep from " + std::to_string(s.trace.source) + " " +
                   std::string(to_string(s.trace.direction)),
               g, json{{"trace", s.trace}});
    if (mu.mu > 0) {
      const auto growth = check_layer_growth(s.trace, mu.mu);
      rec.expect(growth.ok(), "layer-growth",
                 "growth bound fails on sweep from " + std::to_string(s.trace.source) + " " +
                     std::string(to_string(s.trace.direction)),
                 g, json{{"trace", s.trace}, {"report", growth}});
    }
  }

  if (mu.mu > 0) {
    int r = 9;
    while (Rational(25 * n, r * r) > mu.mu) ++r;
    item.record["short_cycle_r"] = r;
    bool all = true;
    json missing = json::array();
    for (Vertex v = 0; v < n; ++v) {
      const auto cycle = short_cycle_through(g, v, r);
      if (!cycle || !is_simple_cycle(g, *cycle) || static_cast<int>(cycle->size()) > r) {
        all = false;
        missing.push_back(v);
      }
    }
    rec.expect(all, "short-cycle", "vertices without a cycle of length <= " + std::to_string(r), g,
               json{{"vertices", missing}, {"mu", rat(mu.mu)}, {"r", r}});
  } else {
    rec.vacuous("short-cycle");
  }

  if (beta) {
    const Rational lhs = mu.mu * (n / 2);
    rec.expect(lhs <= Rational(*beta), "mu-beta-duality",
               "mu*floor(n/2) = " + rat(lhs) + " > beta " + std::to_string(*beta), g);
  }
}

void check_periods(const Digraph& g, const Limits& limits, Recorder& rec, Item& item) {
  const auto report = pseudoperiodicity(g);
  item.record["periods"] = report;
  for (const auto& comp : report.components) {
    if (comp.vertices.size() < 2) continue;
    if (comp.period >= 2)
      rec.expect(partition_is_valid(g, comp), "period-partition",
                 "an edge skips a class in the period-" + std::to_string(comp.period) + " partition", g,
                 json{{"component", comp.vertices}});
    const int size = static_cast<int>(comp.vertices.size());
    if (size > limits.spectrum) {
      rec.skip("period-gcd");
      continue;
    }
    const auto h = g.induced(comp.vertices);
    const auto spectrum = cycle_spectrum(h, limits.spectrum);
    const int d = std::accumulate(spectrum.lengths.begin(), spectrum.lengths.end(), 0,
                                  [](int a, int b) { return std::gcd(a, b); });
    rec.expect(d == comp.period, "period-gcd",
               "period " + std::to_string(comp.period) + " but spectrum gcd " + std::to_string(d), g,
               json{{"component", comp.vertices}});

    if (comp.period >= 2 && size <= limits.exact_fas) {
      // a p-periodic strong component on m vertices has beta <= (m/p)^2
      const auto beta_h = exact_min_fas(h, limits.exact_fas).size();
      const std::int64_t p = comp.period;
      rec.expect(beta_h * p * p <= std::int64_t{size} * size, "periodic-beta-bound",
                 "beta(H) = " + std::to_string(beta_h) + " > (" + std::to_string(size) + "/" +
                     std::to_string(p) + ")^2",
                 h);
    }
  }
}

void check_spectrum(const Digraph& g, const GraphStats& st, const SccDecomposition& scc, const Limits& limits,
                    Recorder& rec, Item& item) {
  if (largest_component(scc) > limits.spectrum) {
    rec.skip("spectrum-routes");
    return;
  }
  const auto dp = cycle_spectrum(g, limits.spectrum);
  item.record["spectrum"] = dp;
  const auto dfs = cycle_spectrum_dfs(g, 20'000'000);
  if (dfs.exact) {
    rec.expect(dp.lengths == dfs.lengths, "spectrum-routes", "subset DP and DFS enumeration disagree", g,
               json{{"dp", dp.lengths}, {"dfs", dfs.lengths}});
  } else {
    rec.inconclusive("spectrum-routes");
  }
  const std::optional<int> shortest = dp.lengths.empty() ? std::nullopt : std::optional<int>(dp.lengths.front());
  rec.expect(shortest == st.girth, "spectrum-girth", "shortest spectrum length differs from girth", g);
  bool witnesses = dp.witnesses.size() == dp.lengths.size();
  for (const auto& [len, cycle] : dp.witnesses)
    witnesses = witnesses && static_cast<int>(cycle.size()) == len && is_simple_cycle(g, cycle);
  rec.expect(witnesses, "spectrum-witness", "a spectrum witness is not a simple cycle of its length", g);
}

void check_lambda(const Digraph& g, const SccDecomposition& scc, const Limits& limits,
                  std::optional<std::int64_t> beta, Recorder& rec, Item& item) {
  if (edges_inside_components(g, scc) > limits.lambda_edges) {
    rec.skip("lambda-certificate");
    return;
  }
  const auto lam = lambda_exact(g, limits.lambda_edges);
  item.record["lambda"] = lam.size();
  rec.expect(is_pseudoperiodic(g.without_edges(lam)), "lambda-certificate",
             "deleting the lambda set leaves an aperiodic component", g, json{{"edges", lam}});
  if (beta)
    rec.expect(static_cast<std::int64_t>(lam.size()) <= *beta, "lambda-beta",
               "lambda " + std::to_string(lam.size()) + " > beta " + std::to_string(*beta), g);
}

void check_walks(const Digraph& g, Recorder& rec, Item& item) {
  const auto report = pseudoperiodicity(g);
  int built = 0;
  for (const auto& comp : report.components) {
    if (comp.period != 1) continue;
    for (Vertex anchor : {comp.vertices.front(), comp.vertices.back()})
      for (int r : {2, 3, 5, 6}) {
        try {
          const auto w = build_coprime_walk(g, comp.vertices, r, anchor);
          rec.expect(coprime_walk_is_valid(g, w), "coprime-walk",
                     "invalid walk at anchor " + std::to_string(anchor) + ", r " + std::to_string(r), g,
                     json(w));
          ++built;
        } catch (const Error& e) {
          rec.fail("coprime-walk", e.what(), g, json{{"anchor", anchor}, {"r", r}});
        }
      }
  }
  if (built > 0) item.record["coprime_walks"] = built;
}

Item verify_entry(const CorpusEntry& entry, const CampaignConfig& config) {
  Item item;
  const auto label = entry.label();
  item.record["graph"] = label;
  Recorder rec(item, label);
  try {
    Digraph g;
    std::optional<std::int64_t> expected_beta;
    if (entry.spec) {
      g = build(*entry.spec);
      try {
        check_expected(*entry.spec, g);
        rec.pass("generator-properties");
      } catch (const VerificationError& e) {
        rec.fail("generator-properties", e.what(), g);
      }
      expected_beta = expected_properties(*entry.spec).beta;
    } else {
      g = read_edge_list(entry.path);
    }
    const auto st = stats(g);
    const auto scc = strong_components(g);
    item.record["n"] = g.order();
    item.record["stats"] = st;

    std::optional<std::int64_t> beta;
    check_fas(g, scc, config.limits, config.inject_mutant, expected_beta, rec, item, beta);
    check_bounds(g, config.limits, rec, item);
    check_recursion(g, st, rec, item);
    check_expansion(g, config.limits, beta, rec, item);
    check_periods(g, config.limits, rec, item);
    check_spectrum(g, st, scc, config.limits, rec, item);
    check_lambda(g, scc, config.limits, beta, rec, item);
    check_walks(g, rec, item);
  } catch (const std::exception& e) {
    rec.error(e.what());
  }
  return item;
}

bool same_partition(const SccDecomposition& scc, const std::vector<int>& labels) {
  const auto n = labels.size();
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = 0; v < n; ++v)
      if ((scc.component_of[u] == scc.component_of[v]) != (labels[u] == labels[v])) return false;
  return true;
}

Item run_trial(int t, std::uint64_t seed) {
  Item item;
  const auto label = "trial-" + std::to_string(t);
  Recorder rec(item, label);
  try {
    Rng rng(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1)));
    const int n = 2 + static_cast<int>(rng.below(7));
    static constexpr double kDensity[] = {0.15, 0.3, 0.45, 0.6};
    const auto g = random_digraph(n, kDensity[rng.below(4)], rng.next());

    rec.expect(same_partition(strong_components(g), oracle::scc_labels(g)), "oracle-scc",
               "strong components differ from reachability closure", g);
    const auto fas = exact_min_fas(g);
    const auto brute = oracle::min_fas_by_permutations(g);
    rec.expect(fas.size() == brute, "oracle-fas",
               "exact " + std::to_string(fas.size()) + ", permutation minimum " + std::to_string(brute), g);
    const auto dp = cycle_spectrum(g);
    const auto dfs = cycle_spectrum_dfs(g);
    const auto lengths = oracle::cycle_lengths(g);
    const std::vector<int> expected(lengths.begin(), lengths.end());
    rec.expect(dp.lengths == expected && dfs.lengths == expected, "oracle-spectrum",
               "cycle spectrum disagrees with brute-force enumeration", g);
    const auto mu = exact_mu(g);
    const auto brute_mu = oracle::min_expansion(g);
    rec.expect(mu.has_value() == brute_mu.has_value() && (!mu || mu->mu == *brute_mu), "oracle-mu",
               "exact mu disagrees with subset enumeration", g);
    rec.expect(is_pseudoperiodic(g) == oracle::pseudoperiodic_by_enumeration(g), "oracle-pseudoperiodic",
               "pseudoperiodicity disagrees with cycle enumeration", g);
  } catch (const std::exception& e) {
    rec.error(e.what());
  }
  return item;
}

Item run_coin_table() {
  Item item;
  Recorder rec(item, "coin-table");
  const Digraph none(0);
  int disagreements = 0;
  json first = nullptr;
  for (std::int64_t x = 1; x <= 12; ++x)
    for (std::int64_t y = 1; y <= 12; ++y) {
      if (std::gcd(x, y) != 1) continue;
      for (std::int64_t n = 0; n <= 200; ++n)
        if (coin_represent(x, y, n).coefficients != oracle::coin(x, y, n)) {
          ++disagreements;
          if (first.is_null()) first = json{{"x", x}, {"y", y}, {"n", n}};
        }
    }
  rec.expect(disagreements == 0, "coin", std::to_string(disagreements) + " disagreements", none, first);
  return item;
}

void run_parallel(std::vector<std::function<void()>>& tasks, int workers) {
  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (auto i = next++; i < tasks.size(); i = next++) tasks[i]();
  };
  std::vector<std::thread> pool;
  const auto count = std::min<std::size_t>(static_cast<std::size_t>(workers), tasks.size());
  for (std::size_t w = 1; w < count; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config) {
  config.validate();
  using clock = std::chrono::steady_clock;
  const auto seconds_since = [](clock::time_point start) {
    return std::chrono::duration<double>(clock::now() - start).count();
  };
  const auto start = clock::now();

  std::vector<Item> items(config.corpus.size());
  std::vector<Item> trials(static_cast<std::size_t>(config.trials));
  Item coin;
  std::vector<std::function<void()>> tasks;
  for (std::size_t i = 0; i < items.size(); ++i)
    tasks.emplace_back([&, i] {
      const auto t0 = clock::now();
      items[i] = verify_entry(config.corpus[i], config);
      items[i].seconds = seconds_since(t0);
    });
  for (std::size_t t = 0; t < trials.size(); ++t)
    tasks.emplace_back([&, t] { trials[t] = run_trial(static_cast<int>(t), config.seed); });
  tasks.emplace_back([&] { coin = run_coin_table(); });
  run_parallel(tasks, config.workers);

  CampaignReport out;
  json summary = json::object();
  json failures = json::array();
  json errors = json::array();
  json corpus = json::array();
  const auto reduce = [&](const Item& item, bool keep_record) {
    for (const auto& [check, counts] : item.record["checks"].items())
      for (const auto& [status, k] : counts.items())
        summary[check][status] = summary[check].contains(status) ? summary[check][status].get<int>() + k.get<int>()
                                                                 : k.get<int>();
    for (const auto& f : item.failures) failures.push_back(f);
    for (const auto& f : item.findings) out.findings.push_back(f);
    if (item.operational_error) errors.push_back(json{{"item", item.record.value("graph", "trial")},
                                                      {"error", item.record["error"]}});
    if (keep_record) corpus.push_back(item.record);
  };
  json timing_items = json::array();
  for (const auto& item : items) {
    reduce(item, true);
    timing_items.push_back(json{{"graph", item.record["graph"]}, {"seconds", item.seconds}});
  }
  for (const auto& t : trials) reduce(t, false);
  reduce(coin, false);

  out.theorem_failures = static_cast<int>(failures.size());
  out.operational_errors = static_cast<int>(errors.size());
  out.report = json{{"seed", config.seed},
                    {"limits", limits_json(config.limits)},
                    {"trials", config.trials},
                    {"inject_mutant", config.inject_mutant},
                    {"corpus", std::move(corpus)},
                    {"summary", std::move(summary)},
                    {"failures", std::move(failures)},
                    {"errors", std::move(errors)},
                    {"findings_count", out.findings.size()}};
  out.report["exit_code"] = out.exit_code();
  out.timing = json{{"total_seconds", seconds_since(start)}, {"items", std::move(timing_items)}};

  if (config.out_dir) {
    std::filesystem::create_directories(*config.out_dir);
    json full = out.report;
    full["timing"] = out.timing;
    std::ofstream(*config.out_dir / "report.json") << full.dump(2) << '\n';
    std::ofstream(*config.out_dir / "findings.json") << out.findings.dump(2) << '\n';
  }
  return out;
}

}  // namespace girthcut

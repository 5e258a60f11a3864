// girthcut: command-line front end for the analysis library and the
// verification campaign.
//
// Exit status: 0 ok, 1 operational error (bad input, bad config),
// 2 a certificate or proven bound failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "girthcut/campaign.hpp"
#include "girthcut/error.hpp"
#include "girthcut/serialize.hpp"

using namespace girthcut;
using nlohmann::json;

namespace {

struct Common {
  Limits limits;
  std::string format = "json";
  std::string out;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--exact-limit", c.limits.exact_fas, "largest strong component for exact FAS")
      ->envname("GIRTHCUT_EXACT_LIMIT")
      ->capture_default_str();
  cmd->add_option("--mu-limit", c.limits.exact_mu, "largest n for exhaustive mu")
      ->envname("GIRTHCUT_MU_LIMIT")
      ->capture_default_str();
  cmd->add_option("--spectrum-limit", c.limits.spectrum, "largest strong component for the exact spectrum")
      ->envname("GIRTHCUT_SPECTRUM_LIMIT")
      ->capture_default_str();
  cmd->add_option("--lambda-limit", c.limits.lambda_edges, "most edges inside components for exact lambda")
      ->envname("GIRTHCUT_LAMBDA_LIMIT")
      ->capture_default_str();
  cmd->add_option("--format", c.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->envname("GIRTHCUT_FORMAT")
      ->capture_default_str();
  cmd->add_option("--out", c.out, "write to this file (a directory for verify) instead of stdout")
      ->envname("GIRTHCUT_OUT");
}

Digraph load(const std::string& input) {
  if (input == "-") {
    std::string text((std::istreambuf_iterator<char>(std::cin)), std::istreambuf_iterator<char>());
    return parse_edge_list(text);
  }
  return read_edge_list(input);
}

void write(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(out);
  if (!file) throw Error("cannot write " + out);
  file << text;
}

void emit(const json& j, const Common& c) {
  write(c.format == "text" ? render_text(j) : j.dump(2) + "\n", c.out);
}

std::vector<Vertex> parse_list(const std::string& text) {
  std::vector<Vertex> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("malformed integer list '" + text + "'");
    }
  }
  return values;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Feedback arc sets, expansion and cycle structure of directed graphs"};
  app.require_subcommand(1);

  // analyze
  Common analyze_opts;
  std::string analyze_input;
  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one edge-list graph");
  analyze_cmd->add_option("input", analyze_input, "edge-list file, '-' for stdin")->required();
  add_common(analyze_cmd, analyze_opts);

  // verify
  Common verify_opts;
  std::string manifest;
  int trials = 200;
  std::uint64_t seed = 1;
  int workers = 1;
  bool inject_mutant = false;
  bool print_manifest = false;
  auto* verify_cmd = app.add_subcommand("verify", "run every check over a corpus");
  add_common(verify_cmd, verify_opts);
  verify_cmd->add_option("--manifest", manifest, "JSON array of generator specs or edge-list paths")
      ->envname("GIRTHCUT_MANIFEST");
  verify_cmd->add_option("--trials", trials, "random oracle cross-check graphs")
      ->envname("GIRTHCUT_TRIALS")
      ->capture_default_str();
  verify_cmd->add_option("--seed", seed, "seed for the random trials")->envname("GIRTHCUT_SEED")->capture_default_str();
  verify_cmd->add_option("--workers", workers, "worker threads")->envname("GIRTHCUT_WORKERS")->capture_default_str();
  verify_cmd->add_flag("--inject-mutant", inject_mutant, "also verify each exact certificate with one edge dropped");
  verify_cmd->add_flag("--print-manifest", print_manifest, "print the default corpus manifest and exit");

  // construct
  std::string out_construct;
  std::string family;
  GeneratorSpec spec;
  std::string parts;
  std::string eps = "1/4";
  auto* construct_cmd = app.add_subcommand("construct", "generate a graph as an edge list");
  construct_cmd->add_option("family", family, "generator family")->required();
  construct_cmd->add_option("--n", spec.n, "vertex count");
  construct_cmd->add_option("--p", spec.p, "cycle length of a blowup");
  construct_cmd->add_option("--parts", parts, "blowup part sizes, comma separated");
  construct_cmd->add_option("--r", spec.r, "r for random-r-free");
  construct_cmd->add_option("--eps", eps, "epsilon for two-block-regular, as a/b")->capture_default_str();
  construct_cmd->add_option("--density", spec.density, "edge density for random families");
  construct_cmd->add_option("--seed", spec.seed, "seed for random families")->envname("GIRTHCUT_SEED");
  construct_cmd->add_option("--out", out_construct, "write to this file")->envname("GIRTHCUT_OUT");

  // fas
  Common fas_opts;
  std::string fas_input;
  std::string method = "exact";
  int fas_r = 0;
  std::string order;
  std::string check_path;
  auto* fas_cmd = app.add_subcommand("fas", "feedback arc set certificate");
  fas_cmd->add_option("input", fas_input, "edge-list file, '-' for stdin")->required();
  fas_cmd->add_option("--method", method, "exact, ordering or recursive")
      ->check(CLI::IsMember({"exact", "ordering", "recursive"}))
      ->capture_default_str();
  fas_cmd->add_option("--r", fas_r, "r for the recursive method (default girth - 1)");
  fas_cmd->add_option("--order", order, "vertex order for the ordering method, comma separated");
  fas_cmd->add_option("--check", check_path, "verify a certificate JSON file instead of computing one");
  add_common(fas_cmd, fas_opts);

  // cut
  Common cut_opts;
  std::string cut_input;
  bool cut_exact = false;
  bool cut_sweep = false;
  auto* cut_cmd = app.add_subcommand("cut", "low-expansion vertex set");
  cut_cmd->add_option("input", cut_input, "edge-list file, '-' for stdin")->required();
  auto* exact_flag = cut_cmd->add_flag("--exact", cut_exact, "exhaustive minimum");
  cut_cmd->add_flag("--sweep", cut_sweep, "best BFS sweep cut")->excludes(exact_flag);
  add_common(cut_cmd, cut_opts);

  // spectrum
  Common spectrum_opts;
  std::string spectrum_input;
  std::string spectrum_method = "dp";
  std::int64_t budget = 50'000'000;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "set of directed cycle lengths");
  spectrum_cmd->add_option("input", spectrum_input, "edge-list file, '-' for stdin")->required();
  spectrum_cmd->add_option("--method", spectrum_method, "dp or dfs")
      ->check(CLI::IsMember({"dp", "dfs"}))
      ->capture_default_str();
  spectrum_cmd->add_option("--budget", budget, "step budget for dfs")->capture_default_str();
  add_common(spectrum_cmd, spectrum_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  try {
    for (const auto* c : {&analyze_opts, &verify_opts, &fas_opts, &cut_opts, &spectrum_opts}) c->limits.validate();

    if (*analyze_cmd) {
      emit(analyze(load(analyze_input), analyze_opts.limits), analyze_opts);
      return 0;
    }

    if (*verify_cmd) {
      if (print_manifest) {
        std::cout << default_manifest().dump(2) << '\n';
        return 0;
      }
      CampaignConfig config;
      config.corpus = manifest.empty() ? parse_manifest(default_manifest(), ".") : load_manifest(manifest);
      config.limits = verify_opts.limits;
      config.trials = trials;
      config.seed = seed;
      config.workers = workers;
      config.inject_mutant = inject_mutant;
      if (!verify_opts.out.empty()) config.out_dir = verify_opts.out;
      const auto result = run_campaign(config);
      json full = result.report;
      full["timing"] = result.timing;
      if (!config.out_dir) {
        std::cout << (verify_opts.format == "text" ? render_text(full) : full.dump(2) + "\n");
      } else {
        std::cerr << "report written to " << (*config.out_dir / "report.json").string() << '\n';
      }
      std::cerr << result.theorem_failures << " failures, " << result.operational_errors << " errors, "
                << result.findings.size() << " findings\n";
      return result.exit_code();
    }

    if (*construct_cmd) {
      const auto f = parse_family(family);
      if (!f) throw Error("unknown family '" + family + "'");
      spec.family = *f;
      if (!parts.empty()) {
        spec.parts = parse_list(parts);
        if (spec.p == 0) spec.p = static_cast<int>(spec.parts.size());
      }
      spec.eps = parse_rational(eps);
      write(format_edge_list(generate(spec)), out_construct);
      return 0;
    }

    if (*fas_cmd) {
      const auto g = load(fas_input);
      if (!check_path.empty()) {
        std::ifstream in(check_path);
        if (!in) throw Error("cannot open " + check_path);
        auto cert = json::parse(in).get<FasCertificate>();
        try {
          verify_certificate(g, cert);
        } catch (const VerificationError& e) {
          emit(json{{"valid", false}, {"reason", e.what()}, {"witness", e.witness()}}, fas_opts);
          return 2;
        }
        emit(json{{"valid", true}, {"certificate", cert}}, fas_opts);
        return 0;
      }
      FasCertificate cert;
      if (method == "exact") {
        cert = exact_min_fas(g, fas_opts.limits.exact_fas);
      } else if (method == "ordering") {
        const auto perm = order.empty() ? std::vector<Vertex>{} : parse_list(order);
        cert = ordering_fas(g, perm);
      } else {
        int r = fas_r;
        if (r == 0) {
          const auto len = girth(g);
          if (!len) throw PreconditionError("acyclic input: pass --r explicitly");
          r = *len - 1;
        }
        cert = recursive_expansion_fas(g, r);
      }
      verify_certificate(g, cert);
      emit(cert, fas_opts);
      return 0;
    }

    if (*cut_cmd) {
      const auto g = load(cut_input);
      if (g.order() < 2) throw PreconditionError("expansion needs at least two vertices");
      if (cut_sweep || (!cut_exact && g.order() > cut_opts.limits.exact_mu)) {
        const auto sweeps = sweep_all(g);
        const SweepResult* best = nullptr;
        for (const auto& s : sweeps)
          if (s.best && (!best || s.best->mu < best->best->mu)) best = &s;
        emit(cut_with_trace(*best->best, &best->trace), cut_opts);
      } else {
        emit(cut_with_trace(*exact_mu(g, cut_opts.limits.exact_mu), nullptr), cut_opts);
      }
      return 0;
    }

    if (*spectrum_cmd) {
      const auto g = load(spectrum_input);
      emit(spectrum_method == "dp" ? json(cycle_spectrum(g, spectrum_opts.limits.spectrum))
                                   : json(cycle_spectrum_dfs(g, budget)),
           spectrum_opts);
      return 0;
    }
  } catch (const VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

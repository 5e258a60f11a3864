#include <algorithm>
#include <sstream>

#include "girthcut/campaign.hpp"
#include "girthcut/error.hpp"
#include "girthcut/serialize.hpp"

namespace girthcut {

using nlohmann::json;

void Limits::validate() const {
  const auto check = [](const char* name, int value, int lo, int hi) {
    if (value < lo || value > hi)
      throw Error(std::string(name) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) +
                  "], got " + std::to_string(value));
  };
  check("exact-fas limit", exact_fas, 1, 24);
  check("exact-mu limit", exact_mu, 2, 26);
  check("spectrum limit", spectrum, 1, 24);
  check("lambda edge limit", lambda_edges, 0, 26);
}

json limits_json(const Limits& limits) {
  return json{{"exact_fas", limits.exact_fas},
              {"exact_mu", limits.exact_mu},
              {"spectrum", limits.spectrum},
              {"lambda_edges", limits.lambda_edges}};
}

namespace {

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

}  // namespace

json analyze(const Digraph& g, const Limits& limits) {
  limits.validate();
  const int n = g.order();
  const auto st = stats(g);
  const auto scc = strong_components(g);
  const int largest = largest_component(scc);

  json j;
  j["n"] = n;
  j["stats"] = st;
  j["r_free_max"] = st.girth ? json(*st.girth - 1) : json(nullptr);
  j["scc"] = scc;
  j["periods"] = pseudoperiodicity(g);
  j["limits"] = limits_json(limits);

  if (n < 2) {
    j["mu"] = json{{"mode", "undefined"}, {"cut", nullptr}};
  } else if (n <= limits.exact_mu) {
    j["mu"] = json{{"mode", "exact"}, {"cut", cut_with_trace(*exact_mu(g, limits.exact_mu), nullptr)}};
  } else {
    const auto sweeps = sweep_all(g);
    std::optional<CutResult> best;
    const SweepTrace* trace = nullptr;
    for (const auto& s : sweeps)
      if (s.best && (!best || s.best->mu < best->mu)) {
        best = s.best;
        trace = &s.trace;
      }
    j["mu"] = json{{"mode", "sweep-upper-bound"}, {"cut", cut_with_trace(*best, trace)}};
  }

  const auto bounds = bound_report(g, limits.exact_fas);
  j["beta"] = json{{"mode", bounds.beta_exact ? "exact" : "heuristic"},
                   {"value", bounds.beta},
                   {"certificate", bounds.certificate}};
  const Rational density = n > 0 ? Rational(bounds.beta, std::int64_t{n} * n) : Rational(0);
  j["beta_density_num"] = density.numerator();
  j["beta_density_den"] = density.denominator();
  j["bounds"] = bounds;

  if (largest <= limits.spectrum) {
    j["spectrum"] = json{{"mode", "exact"}, {"report", cycle_spectrum(g, limits.spectrum)}};
  } else {
    j["spectrum"] = json{{"mode", "skipped"},
                         {"reason", "largest strong component " + std::to_string(largest) + " > " +
                                        std::to_string(limits.spectrum)}};
  }

  const int inside = edges_inside_components(g, scc);
  if (inside <= limits.lambda_edges) {
    const auto lam = lambda_exact(g, limits.lambda_edges);
    j["lambda"] = json{{"mode", "exact"}, {"value", lam.size()}, {"edges", lam}};
  } else {
    j["lambda"] = json{{"mode", "skipped"},
                       {"reason", std::to_string(inside) + " edges inside strong components > " +
                                      std::to_string(limits.lambda_edges)}};
  }
  return j;
}

namespace {

bool scalar_array(const json& v) {
  return v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); });
}

void flatten(const json& v, const std::string& path, std::ostringstream& out) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [key, child] : v.items()) flatten(child, path.empty() ? key : path + "." + key, out);
  } else if (v.is_array() && !v.empty() && !scalar_array(v)) {
    for (std::size_t i = 0; i < v.size(); ++i) flatten(v[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    // dump() escapes newlines, so an embedded edge list stays on one line
    out << path << ": " << v.dump() << '\n';
  }
}

}  // namespace

std::string render_text(const json& report) {
  std::ostringstream out;
  flatten(report, "", out);
  return out.str();
}

}  // namespace girthcut

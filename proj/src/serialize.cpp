#include "girthcut/serialize.hpp"

#include <charconv>

#include "girthcut/error.hpp"

namespace girthcut {

using nlohmann::json;

namespace {

void put_rational(json& j, const std::string& name, const Rational& q) {
  j[name + "_num"] = q.numerator();
  j[name + "_den"] = q.denominator();
}

json bound_check(const BoundCheck& b) {
  json j;
  put_rational(j, "value", b.value);
  j["holds"] = b.holds;
  return j;
}

}  // namespace

void to_json(json& j, const Edge& e) { j = json::array({e.from, e.to}); }

void from_json(const json& j, Edge& e) {
  if (!j.is_array() || j.size() != 2) throw Error("edge must be a [u, v] pair");
  e.from = j.at(0).get<Vertex>();
  e.to = j.at(1).get<Vertex>();
}

void to_json(json& j, const GraphStats& s) {
  j = json{{"m", s.edge_count}, {"gamma", s.gamma}, {"is_oriented", s.is_oriented}};
  j["girth"] = s.girth ? json(*s.girth) : json(nullptr);
}

void to_json(json& j, const SccDecomposition& s) {
  j = json{{"count", s.count()}, {"components", s.components}};
}

void to_json(json& j, const CutResult& c) {
  j = json{{"s", c.s}, {"e_out", c.e_out}, {"e_in", c.e_in}, {"provenance", to_string(c.source)}};
  put_rational(j, "mu", c.mu);
  if (c.sweep_vertex) j["source"] = *c.sweep_vertex;
  if (c.sweep_direction) j["direction"] = to_string(*c.sweep_direction);
}

void to_json(json& j, const SweepTrace& t) {
  j = json::array();
  for (const auto& lv : t.levels) {
    json level{{"i", lv.depth},
               {"layer", lv.layer_size},
               {"prefix", lv.prefix_size},
               {"e_out", lv.e_out},
               {"e_in", lv.e_in},
               {"eligible", lv.eligible}};
    if (lv.eligible) {
      put_rational(level, "mu", lv.mu());
    } else {
      level["mu_num"] = nullptr;
      level["mu_den"] = nullptr;
    }
    j.push_back(std::move(level));
  }
}

json cut_with_trace(const CutResult& cut, const SweepTrace* trace) {
  json j = cut;
  j["trace"] = trace ? json(*trace) : json::array();
  return j;
}

void to_json(json& j, const LayerGrowthReport& r) {
  const auto opt = [](const std::optional<int>& v) { return v ? json(*v) : json(nullptr); };
  j = json{{"levels_checked", r.levels_checked},
           {"first_amgm_violation", opt(r.first_amgm_violation)},
           {"premise_holds", r.premise_holds},
           {"first_premise_failure", opt(r.first_premise_failure)},
           {"growth_levels", r.growth_levels},
           {"first_growth_violation", opt(r.first_growth_violation)},
           {"ok", r.ok()}};
}

void to_json(json& j, const FasCertificate& c) {
  j = json{{"method", to_string(c.method)},
           {"removed_edges", c.removed},
           {"size", c.size()},
           {"verified_acyclic", c.verified_acyclic}};
  if (c.bound) {
    j["bound_formula"] = to_string(c.bound->formula);
    put_rational(j, "bound", c.bound->value);
  } else {
    j["bound_formula"] = nullptr;
    j["bound_num"] = nullptr;
    j["bound_den"] = nullptr;
  }
  j["r_used"] = c.r_used ? json(*c.r_used) : json(nullptr);
}

void from_json(const json& j, FasCertificate& c) {
  c = FasCertificate{};
  c.method = FasMethod::supplied;
  c.removed = j.at("removed_edges").get<std::vector<Edge>>();
  std::sort(c.removed.begin(), c.removed.end());
  if (j.contains("bound_num") && !j["bound_num"].is_null()) {
    CertifiedBound b;
    b.value = Rational(j.at("bound_num").get<std::int64_t>(), j.at("bound_den").get<std::int64_t>());
    const auto tag = j.value("bound_formula", std::string("m/2"));
    for (auto f : {BoundFormula::corollary, BoundFormula::gamma, BoundFormula::induction, BoundFormula::half_edges})
      if (to_string(f) == tag) b.formula = f;
    c.bound = b;
  }
  if (j.contains("r_used") && !j["r_used"].is_null()) c.r_used = j["r_used"].get<int>();
  // verified_acyclic is never read back; verification recomputes it.
}

void to_json(json& j, const BoundReport& r) {
  j = json{{"n", r.n},
           {"r", r.r},
           {"gamma", r.gamma},
           {"beta", r.beta},
           {"beta_mode", r.beta_exact ? "exact" : "upper-bound"},
           {"degenerate", r.degenerate},
           {"in_theorem_scope", r.in_theorem_scope},
           {"theorem_checks_pass", r.theorem_checks_pass()}};
  if (!r.degenerate) {
    j["bound_25n2_over_r2"] = bound_check(r.corollary);
    j["bound_800gamma_over_r2"] = bound_check(r.gamma_bound);
    j["bound_800_refined"] = bound_check(r.induction);
    j["sullivan"] = r.sullivan ? bound_check(*r.sullivan) : json(nullptr);
  }
}

void to_json(json& j, const PeriodReport& r) {
  j = json{{"pseudoperiodic", r.pseudoperiodic}, {"components", json::array()}};
  for (const auto& c : r.components)
    j["components"].push_back(json{{"vertices", c.vertices}, {"period", c.period}, {"classes", c.classes}});
}

void to_json(json& j, const SpectrumReport& r) {
  j = json{{"lengths", r.lengths},
           {"method", to_string(r.method)},
           {"exact", r.exact},
           {"work", r.work},
           {"largest_gap", r.largest_gap},
           {"longest_run", r.longest_run}};
  json witnesses = json::object();
  for (const auto& [len, cycle] : r.witnesses) witnesses[std::to_string(len)] = cycle;
  j["witnesses"] = std::move(witnesses);
}

void to_json(json& j, const CoprimeWalk& w) {
  j = json{{"r", w.r},
           {"anchor", w.anchor},
           {"walk", w.walk},
           {"length", w.length},
           {"cycles", w.cycles},
           {"laps", w.laps},
           {"connector_length", w.connector_length},
           {"max_visits", w.max_visits()}};
}

void to_json(json& j, const CoinRepresentation& c) {
  j = json{{"x", c.x}, {"y", c.y}, {"n", c.n}};
  if (c.coefficients) {
    j["a"] = c.coefficients->first;
    j["b"] = c.coefficients->second;
  } else {
    j["a"] = nullptr;
    j["b"] = nullptr;
  }
}

void to_json(json& j, const GeneratorSpec& s) {
  j = json{{"family", to_string(s.family)}};
  switch (s.family) {
    case Family::blowup_cycle:
      if (!s.parts.empty()) {
        j["parts"] = s.parts;
      } else {
        j["p"] = s.p;
        j["n"] = s.n;
      }
      break;
    case Family::two_block_regular:
      j["n"] = s.n;
      j["eps"] = to_string(s.eps);
      break;
    case Family::random_r_free:
      j["n"] = s.n;
      j["r"] = s.r;
      j["density"] = s.density;
      j["seed"] = s.seed;
      break;
    case Family::random_digraph:
      j["n"] = s.n;
      j["density"] = s.density;
      j["seed"] = s.seed;
      break;
    case Family::random_tournament:
      j["n"] = s.n;
      j["seed"] = s.seed;
      break;
    default: j["n"] = s.n; break;
  }
}

void from_json(const json& j, GeneratorSpec& s) {
  s = GeneratorSpec{};
  const auto name = j.at("family").get<std::string>();
  const auto family = parse_family(name);
  if (!family) throw Error("unknown generator family '" + name + "'");
  s.family = *family;
  s.n = j.value("n", 0);
  s.p = j.value("p", 0);
  s.r = j.value("r", 0);
  s.density = j.value("density", 0.0);
  s.seed = j.value("seed", std::uint64_t{0});
  if (j.contains("parts")) {
    s.parts = j["parts"].get<std::vector<int>>();
    if (!j.contains("p")) s.p = static_cast<int>(s.parts.size());
  }
  if (j.contains("eps")) {
    const auto& e = j["eps"];
    s.eps = e.is_string() ? parse_rational(e.get<std::string>()) : Rational(e.get<std::int64_t>());
  }
}

Rational parse_rational(std::string_view text) {
  const auto read = [&](std::string_view part) {
    std::int64_t v = 0;
    const auto* end = part.data() + part.size();
    auto [ptr, ec] = std::from_chars(part.data(), end, v);
    if (ec != std::errc{} || ptr != end || part.empty())
      throw Error("malformed rational '" + std::string(text) + "'");
    return v;
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(read(text));
  const auto den = read(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in '" + std::string(text) + "'");
  return Rational(read(text.substr(0, slash)), den);
}

}  // namespace girthcut

#include "girthcut/fas.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "girthcut/error.hpp"
#include "girthcut/expansion.hpp"

namespace girthcut {

std::string_view to_string(FasMethod m) {
  switch (m) {
    case FasMethod::exact_dp: return "exact-dp";
    case FasMethod::ordering: return "ordering";
    case FasMethod::recursive_expansion: return "recursive-expansion";
    case FasMethod::supplied: return "supplied";
  }
  return "supplied";
}

std::string_view to_string(BoundFormula f) {
  switch (f) {
    case BoundFormula::corollary: return "25n^2/r^2";
    case BoundFormula::gamma: return "800gamma/r^2";
    case BoundFormula::induction: return "800(gamma-gamma^2/n^2)/r^2";
    case BoundFormula::half_edges: return "m/2";
  }
  return "m/2";
}

void verify_certificate(const Digraph& g, FasCertificate& cert) {
  cert.verified_acyclic = false;
  for (const auto& e : cert.removed)
    if (e.from < 0 || e.to < 0 || e.from >= g.order() || e.to >= g.order() ||
        !g.has_edge(e.from, e.to))
      throw VerificationError("certificate removes non-edge (" + std::to_string(e.from) + "," +
                              std::to_string(e.to) + ")");
  const auto rest = g.without_edges(cert.removed);
  if (!is_acyclic(rest)) {
    auto cycle = shortest_cycle(rest);
    throw VerificationError("g minus certificate still has a directed cycle",
                            cycle ? *cycle : std::vector<Vertex>{});
  }
  if (cert.bound && Rational(cert.size()) > cert.bound->value)
    throw VerificationError("certificate size " + std::to_string(cert.size()) + " exceeds bound " +
                            to_string(cert.bound->value));
  cert.verified_acyclic = true;
}

namespace {

// Ordering DP on one strong component (k <= 32 vertices, relabelled 0..k-1).
// best[U] = min over v in U of best[U \ v] + |out(v) & (U \ v)|: placing v last
// among U makes its edges into U \ v backward.
std::vector<Vertex> optimal_order(const std::vector<std::uint32_t>& out_mask) {
  const int k = static_cast<int>(out_mask.size());
  const std::size_t states = std::size_t{1} << k;
  std::vector<std::uint16_t> best(states, 0);
  std::vector<std::uint8_t> last(states, 0);
  for (std::size_t u = 1; u < states; ++u) {
    const auto set = static_cast<std::uint32_t>(u);
    std::uint16_t value = std::numeric_limits<std::uint16_t>::max();
    std::uint8_t choice = 0;
    for (std::uint32_t rest = set; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      const std::uint32_t without = set & ~(1U << v);
      const auto cost = static_cast<std::uint16_t>(
          best[without] + std::popcount(out_mask[static_cast<std::size_t>(v)] & without));
      if (cost < value) {
        value = cost;
        choice = static_cast<std::uint8_t>(v);
      }
    }
    best[u] = value;
    last[u] = choice;
  }
  std::vector<Vertex> order(static_cast<std::size_t>(k));
  std::uint32_t set = static_cast<std::uint32_t>(states - 1);
  for (int pos = k - 1; pos >= 0; --pos) {
    const int v = last[set];
    order[static_cast<std::size_t>(pos)] = v;
    set &= ~(1U << v);
  }
  return order;
}

std::vector<Edge> backward_edges(const Digraph& g, std::span<const Vertex> order) {
  std::vector<int> pos(static_cast<std::size_t>(g.order()));
  for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
  std::vector<Edge> back;
  for (const auto& e : g.edges())
    if (pos[static_cast<std::size_t>(e.from)] > pos[static_cast<std::size_t>(e.to)]) back.push_back(e);
  return back;
}

}  // namespace

FasCertificate exact_min_fas(const Digraph& g, int limit) {
  const auto scc = strong_components(g);
  for (const auto& comp : scc.components)
    if (static_cast<int>(comp.size()) > std::min(limit, 24))
      throw LimitError("exact FAS limited to strong components of <= " +
                       std::to_string(std::min(limit, 24)) + " vertices (found " +
                       std::to_string(comp.size()) + ")");

  FasCertificate cert;
  cert.method = FasMethod::exact_dp;
  for (const auto& comp : scc.components) {
    if (comp.size() < 2) continue;
    const auto sub = g.induced(comp);
    std::vector<std::uint32_t> out_mask(comp.size(), 0);
    for (const auto& e : sub.edges()) out_mask[static_cast<std::size_t>(e.from)] |= 1U << e.to;
    const auto order = optimal_order(out_mask);
    for (const auto& e : backward_edges(sub, order))
      cert.removed.push_back({comp[static_cast<std::size_t>(e.from)], comp[static_cast<std::size_t>(e.to)]});
  }
  std::sort(cert.removed.begin(), cert.removed.end());
  verify_certificate(g, cert);
  return cert;
}

FasCertificate ordering_fas(const Digraph& g, std::span<const Vertex> order) {
  std::vector<Vertex> ids;
  if (order.empty() && g.order() > 0) {
    ids.resize(static_cast<std::size_t>(g.order()));
    std::iota(ids.begin(), ids.end(), 0);
    order = ids;
  }
  if (static_cast<int>(order.size()) != g.order())
    throw PreconditionError("order is not a permutation of the vertices");
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : order) {
    if (v < 0 || v >= g.order() || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("order is not a permutation of the vertices");
    seen[static_cast<std::size_t>(v)] = 1;
  }

  const auto back = backward_edges(g, order);
  FasCertificate cert;
  cert.method = FasMethod::ordering;
  if (2 * static_cast<std::int64_t>(back.size()) <= g.size()) {
    cert.removed = back;
  } else {
    std::vector<Edge> all = g.edges();
    std::set_difference(all.begin(), all.end(), back.begin(), back.end(),
                        std::back_inserter(cert.removed));
  }
  cert.bound = CertifiedBound{Rational(g.size(), 2), BoundFormula::half_edges};
  verify_certificate(g, cert);
  return cert;
}

namespace {

struct Recursion {
  int r;
  RecursionLog* log;
  std::vector<Edge> removed;

  // vertices: ids in the input graph; sub = g[vertices] relabelled.
  void run(const Digraph& sub, const std::vector<Vertex>& vertices, int depth) {
    const int n = sub.order();
    if (n <= r) {
      if (log) ++log->small_base_cases;
      return;
    }
    if (sub.size() == 0) return;

    auto sweeps = sweep_all(sub);
    if (log) {
      log->sweeps += static_cast<std::int64_t>(sweeps.size());
      for (const auto& sw : sweeps)
        for (std::size_t i = 0; i < sw.trace.levels.size(); ++i) {
          if (!sw.trace.levels[i].eligible) break;
          ++log->amgm_levels;
          if (!amgm_layer_bound_holds(sw.trace, i)) ++log->amgm_violations;
        }
    }
    const auto cut = best_sweep_cut(sweeps);
    const Rational threshold(25 * static_cast<std::int64_t>(n), static_cast<std::int64_t>(r) * r);
    if (!cut || !(cut->mu < threshold))
      throw Error("no sweep cut below 25n/r^2 at n=" + std::to_string(n) + ", r=" +
                  std::to_string(r) + "; contradicts the short-cycle theorem for an r-free input");

    // Delete S -> V\S unless the reverse cut is strictly smaller.
    const bool delete_out = cut->e_out <= cut->e_in;
    std::vector<char> in_s(static_cast<std::size_t>(n), 0);
    for (Vertex v : cut->s) in_s[static_cast<std::size_t>(v)] = 1;
    std::int64_t deleted = 0;
    for (const auto& e : sub.edges()) {
      const bool a = in_s[static_cast<std::size_t>(e.from)];
      const bool b = in_s[static_cast<std::size_t>(e.to)];
      if ((delete_out && a && !b) || (!delete_out && !a && b)) {
        removed.push_back({vertices[static_cast<std::size_t>(e.from)],
                           vertices[static_cast<std::size_t>(e.to)]});
        ++deleted;
      }
    }
    if (log)
      log->steps.push_back({depth, n, static_cast<int>(cut->s.size()), deleted, cut->mu, threshold});

    std::vector<Vertex> inside, outside, inside_ids, outside_ids;
    for (Vertex v = 0; v < n; ++v) {
      (in_s[static_cast<std::size_t>(v)] ? inside : outside).push_back(v);
      (in_s[static_cast<std::size_t>(v)] ? inside_ids : outside_ids)
          .push_back(vertices[static_cast<std::size_t>(v)]);
    }
    run(sub.induced(inside), inside_ids, depth + 1);
    run(sub.induced(outside), outside_ids, depth + 1);
  }
};

}  // namespace

FasCertificate recursive_expansion_fas(const Digraph& g, int r, RecursionLog* log) {
  if (r < 2) throw PreconditionError("recursive construction needs r >= 2");
  if (const auto cycle = shortest_cycle(g); cycle && static_cast<int>(cycle->size()) <= r)
    throw VerificationError("input is not " + std::to_string(r) + "-free", *cycle);

  FasCertificate cert;
  if (r <= 10) {
    // m/2 < n^2/4 <= 25n^2/r^2
    cert = ordering_fas(g);
    if (log) ++log->ordering_base_cases;
  } else {
    std::vector<Vertex> ids(static_cast<std::size_t>(g.order()));
    std::iota(ids.begin(), ids.end(), 0);
    Recursion rec{r, log, {}};
    rec.run(g, ids, 0);
    cert.removed = std::move(rec.removed);
    std::sort(cert.removed.begin(), cert.removed.end());
  }
  cert.method = FasMethod::recursive_expansion;
  cert.r_used = r;
  cert.bound = CertifiedBound{corollary_bound(g.order(), r), BoundFormula::corollary};
  verify_certificate(g, cert);
  return cert;
}

bool BoundReport::theorem_checks_pass() const {
  if (degenerate) return true;
  if (!corollary.holds) return false;
  if (in_theorem_scope && (!gamma_bound.holds || !induction.holds)) return false;
  return true;
}

BoundReport bound_report(const Digraph& g, int exact_limit) {
  BoundReport report;
  report.n = g.order();
  report.gamma = non_adjacent_pairs(g);
  const auto len = girth(g);
  if (!len) {
    report.degenerate = true;
    report.beta_exact = true;
    report.certificate = FasCertificate{FasMethod::exact_dp, {}, false, std::nullopt, std::nullopt};
    verify_certificate(g, report.certificate);
    return report;
  }
  report.r = *len - 1;
  report.in_theorem_scope = report.r >= 3;

  const auto scc = strong_components(g);
  std::size_t largest = 0;
  for (const auto& c : scc.components) largest = std::max(largest, c.size());
  if (static_cast<int>(largest) <= exact_limit) {
    report.certificate = exact_min_fas(g, exact_limit);
    report.beta_exact = true;
  } else if (report.r >= 2) {
    report.certificate = recursive_expansion_fas(g, report.r);
  } else {
    report.certificate = ordering_fas(g);
  }
  report.beta = report.certificate.size();

  const std::int64_t n = report.n;
  const std::int64_t r2 = static_cast<std::int64_t>(report.r) * report.r;
  const Rational beta(report.beta);
  const Rational gamma(report.gamma);
  report.corollary.value = corollary_bound(n, report.r);
  report.gamma_bound.value = Rational(800) * gamma / r2;
  report.induction.value = Rational(800, r2) * (gamma - gamma * gamma / Rational(n * n));
  report.corollary.holds = beta <= report.corollary.value;
  report.gamma_bound.holds = beta <= report.gamma_bound.value;
  report.induction.holds = beta <= report.induction.value;
  if (report.r >= 3) {
    BoundCheck s;
    s.value = Rational(2) * gamma / Rational((report.r + 1) * static_cast<std::int64_t>(report.r - 2));
    s.holds = beta <= s.value;
    report.sullivan = s;
  }
  return report;
}

}  // namespace girthcut

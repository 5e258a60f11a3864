#include "girthcut/expansion.hpp"

#include <algorithm>
#include <bit>
#include <limits>

#include "girthcut/error.hpp"

namespace girthcut {

std::string_view to_string(CutSource s) {
  switch (s) {
    case CutSource::exhaustive: return "exhaustive";
    case CutSource::sweep: return "sweep";
    case CutSource::supplied: return "supplied";
  }
  return "supplied";
}

CutResult expansion_of_set(const Digraph& g, std::span<const Vertex> s) {
  const int n = g.order();
  if (s.empty()) throw PreconditionError("expansion of an empty set is undefined");
  if (static_cast<int>(s.size()) > n / 2)
    throw PreconditionError("expansion is only defined for |S| <= floor(n/2)");
  std::vector<char> member(static_cast<std::size_t>(n), 0);
  for (Vertex v : s) {
    if (v < 0 || v >= n) throw PreconditionError("vertex " + std::to_string(v) + " out of range");
    if (member[static_cast<std::size_t>(v)]) throw PreconditionError("repeated vertex in S");
    member[static_cast<std::size_t>(v)] = 1;
  }
  CutResult cut;
  cut.s.assign(s.begin(), s.end());
  std::sort(cut.s.begin(), cut.s.end());
  for (Vertex v : cut.s) {
    for (Vertex w : g.out(v)) cut.e_out += member[static_cast<std::size_t>(w)] ? 0 : 1;
    for (Vertex w : g.in(v)) cut.e_in += member[static_cast<std::size_t>(w)] ? 0 : 1;
  }
  cut.mu = Rational(cut.smaller_cut(), static_cast<std::int64_t>(cut.s.size()));
  return cut;
}

std::optional<CutResult> exact_mu(const Digraph& g, int limit) {
  const int n = g.order();
  if (n > limit || n > 30)
    throw LimitError("exact mu limited to n <= " + std::to_string(std::min(limit, 30)) +
                     " (n=" + std::to_string(n) + "); use a sweep upper bound");
  if (n < 2) return std::nullopt;

  std::vector<std::uint32_t> out_mask(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) out_mask[static_cast<std::size_t>(e.from)] |= 1U << e.to;
  std::vector<std::uint32_t> in_mask(static_cast<std::size_t>(n), 0);
  for (const auto& e : g.edges()) in_mask[static_cast<std::size_t>(e.to)] |= 1U << e.from;

  const int half = n / 2;
  const std::uint32_t all = n == 32 ? ~0U : (1U << n) - 1;
  std::uint32_t best = 0;
  std::int64_t best_cut = 0;
  int best_size = 0;
  std::int64_t best_out = 0, best_in = 0;

  for (std::uint32_t s = 1; s <= all && s != 0; ++s) {
    const int size = std::popcount(s);
    if (size > half) continue;
    std::int64_t e_out = 0, e_in = 0;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      e_out += std::popcount(out_mask[static_cast<std::size_t>(v)] & ~s);
      e_in += std::popcount(in_mask[static_cast<std::size_t>(v)] & ~s);
    }
    const std::int64_t cut = std::min(e_out, e_in);
    bool better = false;
    if (best == 0) {
      better = true;
    } else {
      // cut/size vs best_cut/best_size
      const std::int64_t lhs = cut * best_size;
      const std::int64_t rhs = best_cut * size;
      if (lhs != rhs) {
        better = lhs < rhs;
      } else if (size != best_size) {
        better = size < best_size;
      } else {
        const std::uint32_t diff = s ^ best;
        better = (diff & (~diff + 1) & s) != 0;
      }
    }
    if (better) {
      best = s;
      best_cut = cut;
      best_size = size;
      best_out = e_out;
      best_in = e_in;
    }
  }

  CutResult result;
  for (int v = 0; v < n; ++v)
    if (best >> v & 1U) result.s.push_back(v);
  result.e_out = best_out;
  result.e_in = best_in;
  result.mu = Rational(best_cut, best_size);
  result.source = CutSource::exhaustive;
  return result;
}

SweepResult sweep_low_expansion(const Digraph& g, Vertex v, Direction dir) {
  if (v < 0 || v >= g.order()) throw PreconditionError("sweep source out of range");
  const auto layers = bfs_layers(g, v, dir);
  const int n = g.order();
  const int half = n / 2;

  SweepResult result;
  result.trace.source = v;
  result.trace.direction = dir;
  result.trace.n = n;

  std::vector<char> member(static_cast<std::size_t>(n), 0);
  std::int64_t cut_out = 0, cut_in = 0;
  std::optional<std::size_t> best_level;
  for (std::size_t i = 0; i < layers.layers.size(); ++i) {
    for (Vertex u : layers.layers[i]) {
      for (Vertex w : g.out(u)) member[static_cast<std::size_t>(w)] ? --cut_in : ++cut_out;
      for (Vertex w : g.in(u)) member[static_cast<std::size_t>(w)] ? --cut_out : ++cut_in;
      member[static_cast<std::size_t>(u)] = 1;
    }
    SweepLevel level;
    level.depth = static_cast<int>(i);
    level.layer_size = static_cast<int>(layers.layers[i].size());
    level.prefix_size = layers.prefix_sizes[i];
    level.e_out = cut_out;
    level.e_in = cut_in;
    level.eligible = level.prefix_size <= half;
    if (level.eligible && (!best_level || level.mu() < result.trace.levels[*best_level].mu()))
      best_level = i;
    result.trace.levels.push_back(level);
  }

  if (best_level) {
    CutResult cut;
    for (std::size_t i = 0; i <= *best_level; ++i)
      cut.s.insert(cut.s.end(), layers.layers[i].begin(), layers.layers[i].end());
    std::sort(cut.s.begin(), cut.s.end());
    const auto& level = result.trace.levels[*best_level];
    cut.e_out = level.e_out;
    cut.e_in = level.e_in;
    cut.mu = level.mu();
    cut.source = CutSource::sweep;
    cut.sweep_vertex = v;
    cut.sweep_direction = dir;
    result.best = std::move(cut);
  }
  return result;
}

std::vector<SweepResult> sweep_all(const Digraph& g) {
  std::vector<SweepResult> sweeps;
  sweeps.reserve(2 * static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) {
    sweeps.push_back(sweep_low_expansion(g, v, Direction::out));
    sweeps.push_back(sweep_low_expansion(g, v, Direction::in));
  }
  return sweeps;
}

std::optional<CutResult> best_sweep_cut(std::span<const SweepResult> sweeps) {
  const CutResult* best = nullptr;
  for (const auto& sweep : sweeps)
    if (sweep.best && (!best || sweep.best->mu < best->mu)) best = &*sweep.best;
  if (!best) return std::nullopt;
  return *best;
}

std::optional<CutResult> best_sweep_cut(const Digraph& g) {
  if (g.order() < 2) return std::nullopt;
  const auto sweeps = sweep_all(g);
  if (auto best = best_sweep_cut(sweeps)) return best;
  // Unreachable for n >= 2 (M_0 is always admissible); kept as the documented fallback.
  Vertex v = 0;
  for (Vertex u = 1; u < g.order(); ++u)
    if (g.in_degree(u) + g.out_degree(u) < g.in_degree(v) + g.out_degree(v)) v = u;
  const Vertex single[] = {v};
  return expansion_of_set(g, single);
}

std::optional<CutResult> guided_sweep_cut(const Digraph& g) {
  if (g.order() < 2) return std::nullopt;
  const Vertex v = high_degree_vertex(g);
  const SweepResult sweeps[] = {sweep_low_expansion(g, v, Direction::out),
                                sweep_low_expansion(g, v, Direction::in)};
  return best_sweep_cut(sweeps);
}

namespace {

struct Ball {
  std::vector<int> dist;
  std::vector<Vertex> parent;
};

Ball bounded_bfs(const Digraph& g, Vertex v, Direction dir, int radius) {
  Ball ball;
  ball.dist.assign(static_cast<std::size_t>(g.order()), -1);
  ball.parent.assign(static_cast<std::size_t>(g.order()), -1);
  ball.dist[static_cast<std::size_t>(v)] = 0;
  std::vector<Vertex> queue{v};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    const int d = ball.dist[static_cast<std::size_t>(u)];
    if (d == radius) continue;
    for (Vertex w : dir == Direction::out ? g.out(u) : g.in(u)) {
      if (ball.dist[static_cast<std::size_t>(w)] != -1) continue;
      ball.dist[static_cast<std::size_t>(w)] = d + 1;
      ball.parent[static_cast<std::size_t>(w)] = u;
      queue.push_back(w);
    }
  }
  return ball;
}

}  // namespace

std::optional<std::vector<Vertex>> short_cycle_through(const Digraph& g, Vertex v, int r) {
  if (r < 2) throw PreconditionError("short_cycle_through needs r >= 2");
  if (v < 0 || v >= g.order()) throw PreconditionError("vertex out of range");
  const auto fwd = bounded_bfs(g, v, Direction::out, r / 2);
  const auto bwd = bounded_bfs(g, v, Direction::in, r - r / 2);

  Vertex meet = -1;
  int best = std::numeric_limits<int>::max();
  for (Vertex w = 0; w < g.order(); ++w) {
    if (w == v) continue;
    const int a = fwd.dist[static_cast<std::size_t>(w)];
    const int b = bwd.dist[static_cast<std::size_t>(w)];
    if (a < 0 || b < 0) continue;
    if (a + b < best) {
      best = a + b;
      meet = w;
    }
  }
  if (meet < 0 || best > r) return std::nullopt;

  std::vector<Vertex> cycle;
  for (Vertex x = meet; x != v; x = fwd.parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
  cycle.push_back(v);
  std::reverse(cycle.begin(), cycle.end());
  for (Vertex x = bwd.parent[static_cast<std::size_t>(meet)]; x != v;
       x = bwd.parent[static_cast<std::size_t>(x)])
    cycle.push_back(x);
  return cycle;
}

GrowthSequences growth_sequences(const SweepTrace& trace, const Rational& mu_ref) {
  if (mu_ref <= 0) throw PreconditionError("reference expansion must be positive");
  GrowthSequences seq;
  for (std::size_t i = 0; i < trace.levels.size(); ++i) {
    const std::int64_t pair = trace.levels[i].layer_size + trace.next_layer_size(i);
    seq.a.push_back(Rational(pair) / mu_ref);
    seq.b.push_back(i == 0 ? Rational(0) : seq.b.back() + seq.a.back());
  }
  return seq;
}

bool amgm_layer_bound_holds(const SweepTrace& trace, std::size_t level) {
  const auto& lv = trace.levels[level];
  const std::int64_t pair = lv.layer_size + trace.next_layer_size(level);
  // mu(M_i)|M_i| is the smaller cut, an integer.
  return pair * pair >= 4 * lv.smaller_cut();
}

LayerGrowthReport check_layer_growth(const SweepTrace& trace, const Rational& mu_ref) {
  if (mu_ref <= 0) throw PreconditionError("reference expansion must be positive");
  LayerGrowthReport report;
  const Int128 num = mu_ref.numerator();
  const Int128 den = mu_ref.denominator();
  Int128 pair_sum = 0;  // mu_ref * b_i
  for (std::size_t i = 0; i < trace.levels.size(); ++i) {
    const auto& lv = trace.levels[i];
    if (!lv.eligible) break;
    ++report.levels_checked;
    if (!amgm_layer_bound_holds(trace, i) && !report.first_amgm_violation)
      report.first_amgm_violation = static_cast<int>(i);

    if (!report.premise_holds) continue;
    if (lv.mu() < mu_ref) {
      report.premise_holds = false;
      report.first_premise_failure = static_cast<int>(i);
      continue;
    }
    if (i == 0) continue;
    pair_sum += lv.layer_size + trace.next_layer_size(i);
    ++report.growth_levels;
    // b_i >= (2/5) i^2  <=>  5 * pair_sum * den >= 2 * i^2 * num
    const Int128 ii = static_cast<Int128>(i);
    if (5 * pair_sum * den < 2 * ii * ii * num && !report.first_growth_violation)
      report.first_growth_violation = static_cast<int>(i);
  }
  return report;
}

}  // namespace girthcut

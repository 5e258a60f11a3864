#include "girthcut/periodicity.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "girthcut/error.hpp"

namespace girthcut {

namespace {

std::vector<int> component_index(const Digraph& g, std::span<const Vertex> component) {
  std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < component.size(); ++i) {
    const Vertex v = component[i];
    if (v < 0 || v >= g.order()) throw PreconditionError("component vertex out of range");
    index[static_cast<std::size_t>(v)] = static_cast<int>(i);
  }
  return index;
}

// BFS restricted to vertices with index >= 0.
std::vector<int> restricted_bfs(const Digraph& g, const std::vector<int>& index, Vertex root,
                                Direction dir, std::vector<Vertex>* parent = nullptr) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  if (parent) parent->assign(static_cast<std::size_t>(g.order()), -1);
  dist[static_cast<std::size_t>(root)] = 0;
  std::vector<Vertex> queue{root};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex w : dir == Direction::out ? g.out(u) : g.in(u)) {
      if (index[static_cast<std::size_t>(w)] < 0 || dist[static_cast<std::size_t>(w)] >= 0) continue;
      dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
      if (parent) (*parent)[static_cast<std::size_t>(w)] = u;
      queue.push_back(w);
    }
  }
  return dist;
}

std::vector<Vertex> sorted_copy(std::span<const Vertex> vs) {
  std::vector<Vertex> out(vs.begin(), vs.end());
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw PreconditionError("repeated vertex in component");
  return out;
}

// Returns (period, distances from the smallest vertex).
std::pair<int, std::vector<int>> period_and_distances(const Digraph& g,
                                                      std::span<const Vertex> component) {
  if (component.empty()) throw PreconditionError("empty component");
  const auto index = component_index(g, component);
  const Vertex root = *std::min_element(component.begin(), component.end());
  auto dist = restricted_bfs(g, index, root, Direction::out);
  const auto back = restricted_bfs(g, index, root, Direction::in);
  for (Vertex v : component)
    if (dist[static_cast<std::size_t>(v)] < 0 || back[static_cast<std::size_t>(v)] < 0)
      throw PreconditionError("vertex set is not strongly connected");
  int p = 0;
  for (Vertex v : component)
    for (Vertex w : g.out(v))
      if (index[static_cast<std::size_t>(w)] >= 0)
        p = std::gcd(p, std::abs(dist[static_cast<std::size_t>(v)] + 1 - dist[static_cast<std::size_t>(w)]));
  return {p, std::move(dist)};
}

}  // namespace

int component_period(const Digraph& g, std::span<const Vertex> component) {
  return period_and_distances(g, component).first;
}

PeriodReport pseudoperiodicity(const Digraph& g) {
  PeriodReport report;
  for (const auto& comp : strong_components(g).components) {
    ComponentPeriod cp;
    cp.vertices = comp;
    if (comp.size() > 1) {
      auto [p, dist] = period_and_distances(g, comp);
      cp.period = p;
      if (p >= 2) {
        cp.classes.resize(static_cast<std::size_t>(p));
        for (Vertex v : comp)
          cp.classes[static_cast<std::size_t>(dist[static_cast<std::size_t>(v)] % p)].push_back(v);
      } else {
        report.pseudoperiodic = false;
      }
    }
    report.components.push_back(std::move(cp));
  }
  return report;
}

bool is_pseudoperiodic(const Digraph& g) {
  for (const auto& comp : strong_components(g).components)
    if (comp.size() > 1 && component_period(g, comp) < 2) return false;
  return true;
}

bool partition_is_valid(const Digraph& g, const ComponentPeriod& cp) {
  const int p = cp.period;
  if (p < 2) return cp.classes.empty();
  if (static_cast<int>(cp.classes.size()) != p) return false;
  std::vector<int> cls(static_cast<std::size_t>(g.order()), -1);
  std::size_t covered = 0;
  for (int i = 0; i < p; ++i)
    for (Vertex v : cp.classes[static_cast<std::size_t>(i)]) {
      if (cls[static_cast<std::size_t>(v)] != -1) return false;
      cls[static_cast<std::size_t>(v)] = i;
      ++covered;
    }
  if (covered != cp.vertices.size()) return false;
  for (Vertex v : cp.vertices) {
    if (cls[static_cast<std::size_t>(v)] < 0) return false;
    for (Vertex w : g.out(v)) {
      const int cw = cls[static_cast<std::size_t>(w)];
      if (cw >= 0 && cw != (cls[static_cast<std::size_t>(v)] + 1) % p) return false;
    }
  }
  return true;
}

std::vector<Edge> lambda_exact(const Digraph& g, int edge_limit) {
  if (is_pseudoperiodic(g)) return {};  // no search needed, whatever the size
  const auto scc = strong_components(g);
  std::vector<Edge> candidates;
  for (const auto& e : g.edges())
    if (scc.component_of[static_cast<std::size_t>(e.from)] == scc.component_of[static_cast<std::size_t>(e.to)])
      candidates.push_back(e);
  const int m = static_cast<int>(candidates.size());
  if (m > edge_limit)
    throw LimitError("exact lambda limited to " + std::to_string(edge_limit) +
                     " edges inside strong components (found " + std::to_string(m) + ")");

  // Edges between components lie on no cycle, so deleting them never helps.
  for (int k = 0; k <= m; ++k) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      std::vector<Edge> drop;
      for (int i : pick) drop.push_back(candidates[static_cast<std::size_t>(i)]);
      if (is_pseudoperiodic(g.without_edges(drop))) return drop;
      // next combination in lexicographic order
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
  return candidates;  // unreachable: deleting every candidate leaves a DAG
}

std::string_view to_string(SpectrumMethod m) {
  return m == SpectrumMethod::subset_dp ? "subset-dp" : "dfs-enumeration";
}

bool SpectrumReport::contains(int length) const {
  return std::binary_search(lengths.begin(), lengths.end(), length);
}

namespace {

void summarize(SpectrumReport& report) {
  report.lengths.clear();
  for (const auto& [len, cycle] : report.witnesses) report.lengths.push_back(len);
  report.largest_gap = 0;
  report.longest_run = report.lengths.empty() ? 0 : 1;
  int run = 1;
  for (std::size_t i = 1; i < report.lengths.size(); ++i) {
    const int gap = report.lengths[i] - report.lengths[i - 1];
    report.largest_gap = std::max(report.largest_gap, gap);
    run = gap == 1 ? run + 1 : 1;
    report.longest_run = std::max(report.longest_run, run);
  }
}

}  // namespace

SpectrumReport cycle_spectrum(const Digraph& g, int limit) {
  const auto scc = strong_components(g);
  const int cap = std::min(limit, 25);
  for (const auto& comp : scc.components)
    if (static_cast<int>(comp.size()) > cap)
      throw LimitError("subset-dp spectrum limited to strong components of <= " + std::to_string(cap) +
                       " vertices (found " + std::to_string(comp.size()) + ")");

  SpectrumReport report;
  report.method = SpectrumMethod::subset_dp;
  for (const auto& comp : scc.components) {
    for (std::size_t a = 0; a + 1 < comp.size(); ++a) {
      const Vertex anchor = comp[a];
      const std::vector<Vertex> cand(comp.begin() + static_cast<std::ptrdiff_t>(a) + 1, comp.end());
      const int k = static_cast<int>(cand.size());
      std::vector<std::uint32_t> succ(static_cast<std::size_t>(k), 0);
      std::uint32_t start = 0, closes = 0;
      for (int i = 0; i < k; ++i) {
        const Vertex u = cand[static_cast<std::size_t>(i)];
        if (g.has_edge(anchor, u)) start |= 1U << i;
        if (g.has_edge(u, anchor)) closes |= 1U << i;
        for (int j = 0; j < k; ++j)
          if (g.has_edge(u, cand[static_cast<std::size_t>(j)])) succ[static_cast<std::size_t>(i)] |= 1U << j;
      }
      // ends[mask]: endpoints w of paths anchor -> ... -> w using exactly mask.
      std::vector<std::uint32_t> ends(std::size_t{1} << k, 0);
      for (std::uint32_t s = start; s; s &= s - 1) ends[s & (~s + 1)] = s & (~s + 1);
      for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
        const std::uint32_t e = ends[mask];
        if (!e) continue;
        ++report.work;
        const int len = std::popcount(mask) + 1;
        if ((e & closes) && !report.witnesses.contains(len)) {
          // Walk the DP backwards to recover one path.
          std::vector<Vertex> path;
          int cur = std::countr_zero(e & closes);
          std::uint32_t m = mask;
          while (true) {
            path.push_back(cand[static_cast<std::size_t>(cur)]);
            const std::uint32_t prev = m & ~(1U << cur);
            if (!prev) break;
            std::uint32_t options = ends[prev];
            int from = -1;
            for (; options; options &= options - 1) {
              const int i = std::countr_zero(options);
              if (succ[static_cast<std::size_t>(i)] >> cur & 1U) {
                from = i;
                break;
              }
            }
            m = prev;
            cur = from;
          }
          path.push_back(anchor);
          std::reverse(path.begin(), path.end());
          report.witnesses.emplace(len, std::move(path));
        }
        for (std::uint32_t rest = e; rest; rest &= rest - 1) {
          const int w = std::countr_zero(rest);
          for (std::uint32_t ext = succ[static_cast<std::size_t>(w)] & ~mask; ext; ext &= ext - 1)
            ends[mask | (ext & (~ext + 1))] |= ext & (~ext + 1);
        }
      }
    }
  }
  summarize(report);
  return report;
}

SpectrumReport cycle_spectrum_dfs(const Digraph& g, std::int64_t budget) {
  const auto scc = strong_components(g);
  SpectrumReport report;
  report.method = SpectrumMethod::dfs_enumeration;
  std::vector<char> on_path(static_cast<std::size_t>(g.order()), 0);
  std::vector<Vertex> path;
  std::vector<std::size_t> cursor;

  for (Vertex anchor = 0; anchor < g.order() && report.exact; ++anchor) {
    const int comp = scc.component_of[static_cast<std::size_t>(anchor)];
    auto allowed = [&](Vertex w) {
      return w > anchor && scc.component_of[static_cast<std::size_t>(w)] == comp;
    };
    path.assign(1, anchor);
    cursor.assign(1, 0);
    on_path[static_cast<std::size_t>(anchor)] = 1;
    while (!path.empty()) {
      if (++report.work > budget) {
        report.exact = false;
        break;
      }
      const Vertex u = path.back();
      const auto succ = g.out(u);
      auto& pos = cursor.back();
      if (pos == succ.size()) {
        on_path[static_cast<std::size_t>(u)] = 0;
        path.pop_back();
        cursor.pop_back();
        continue;
      }
      const Vertex w = succ[pos++];
      if (w == anchor) {
        report.witnesses.try_emplace(static_cast<int>(path.size()), path);
      } else if (allowed(w) && !on_path[static_cast<std::size_t>(w)]) {
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        cursor.push_back(0);
      }
    }
    for (Vertex v : path) on_path[static_cast<std::size_t>(v)] = 0;
  }
  summarize(report);
  return report;
}

std::optional<int> cycle_length_in_window(const SpectrumReport& s, int m, int width) {
  const auto it = std::lower_bound(s.lengths.begin(), s.lengths.end(), m);
  if (it == s.lengths.end() || *it > m + width) return std::nullopt;
  return *it;
}

namespace {

// Returns (g, s, t) with g = s*a + t*b.
std::tuple<std::int64_t, std::int64_t, std::int64_t> extended_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t s0 = 1, s1 = 0, t0 = 0, t1 = 1;
  while (b != 0) {
    const std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(s0, s1) = std::make_pair(s1, s0 - q * s1);
    std::tie(t0, t1) = std::make_pair(t1, t0 - q * t1);
  }
  return {a, s0, t0};
}

std::int64_t mod(std::int64_t a, std::int64_t r) {
  const std::int64_t x = a % r;
  return x < 0 ? x + r : x;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t r) {
  return mod(static_cast<std::int64_t>(static_cast<Int128>(a) * b % r), r);
}

}  // namespace

std::optional<std::vector<std::int64_t>> crt_combine(std::span<const std::int64_t> lengths,
                                                     std::int64_t target, std::int64_t r) {
  if (r < 1) throw PreconditionError("modulus must be positive");
  // Invariant: g = sum coeff_i * lengths_i (mod r), g = gcd(r, lengths so far).
  std::int64_t g = r;
  std::vector<std::int64_t> coeff(lengths.size(), 0);
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    const auto [d, s, t] = extended_gcd(g, mod(lengths[i], r));
    for (std::size_t j = 0; j < i; ++j) coeff[j] = mulmod(coeff[j], mod(s, r), r);
    coeff[i] = mod(t, r);
    g = d;
  }
  const std::int64_t want = mod(target, r);
  if (want % g != 0) return std::nullopt;
  const std::int64_t scale = want / g;
  for (auto& c : coeff) c = mulmod(c, scale, r);
  return coeff;
}

CoinRepresentation coin_represent(std::int64_t x, std::int64_t y, std::int64_t n) {
  if (x <= 0 || y <= 0 || std::gcd(x, y) != 1)
    throw PreconditionError("coin problem needs coprime positive x, y");
  CoinRepresentation rep{x, y, n, std::nullopt};
  if (n < 0) return rep;
  if (n >= (x - 1) * (y - 1)) {
    // b = n * y^{-1} mod x is the smallest admissible b; a >= 0 above the threshold.
    const auto [g, s, t] = extended_gcd(y, x);
    const std::int64_t b = x == 1 ? 0 : mulmod(mod(n, x), mod(s, x), x);
    rep.coefficients = std::make_pair((n - b * y) / x, b);
    return rep;
  }
  for (std::int64_t b = 0; b * y <= n; ++b)
    if ((n - b * y) % x == 0) {
      rep.coefficients = std::make_pair((n - b * y) / x, b);
      break;
    }
  return rep;
}

int CoprimeWalk::max_visits() const {
  int best = 0;
  for (const auto& [v, c] : visits) best = std::max(best, c);
  return best;
}

namespace {

std::vector<std::int64_t> prime_factors(std::int64_t r) {
  std::vector<std::int64_t> primes;
  for (std::int64_t f = 2; f * f <= r; ++f)
    if (r % f == 0) {
      primes.push_back(f);
      while (r % f == 0) r /= f;
    }
  if (r > 1) primes.push_back(r);
  return primes;
}

// Shortest closed walk through anchor (inside the component) whose length is
// not divisible by f, then one of its simple cycles with that property.
std::vector<Vertex> cycle_not_divisible_by(const Digraph& g, const std::vector<int>& index,
                                           Vertex anchor, std::int64_t f) {
  const auto k = static_cast<std::size_t>(f);
  const auto state = [&](Vertex v, std::size_t res) { return static_cast<std::size_t>(v) * k + res; };
  std::vector<std::int64_t> parent(static_cast<std::size_t>(g.order()) * k, -2);
  std::vector<std::pair<Vertex, std::size_t>> queue{{anchor, 0}};
  parent[state(anchor, 0)] = -1;
  std::optional<std::pair<Vertex, std::size_t>> hit;
  for (std::size_t head = 0; head < queue.size() && !hit; ++head) {
    const auto [u, res] = queue[head];
    for (Vertex w : g.out(u)) {
      if (index[static_cast<std::size_t>(w)] < 0) continue;
      const std::size_t nr = (res + 1) % k;
      if (w == anchor && nr != 0) {
        parent[state(w, nr)] = static_cast<std::int64_t>(state(u, res));
        hit = std::make_pair(w, nr);
        break;
      }
      if (parent[state(w, nr)] != -2) continue;
      parent[state(w, nr)] = static_cast<std::int64_t>(state(u, res));
      queue.emplace_back(w, nr);
    }
  }
  if (!hit) throw PreconditionError("component is periodic");

  std::vector<Vertex> walk;  // anchor ... anchor
  for (std::int64_t s = static_cast<std::int64_t>(state(hit->first, hit->second)); s != -1;
       s = parent[static_cast<std::size_t>(s)])
    walk.push_back(static_cast<Vertex>(static_cast<std::size_t>(s) / k));
  std::reverse(walk.begin(), walk.end());

  // Split the closed walk into simple cycles with a stack.
  std::vector<Vertex> stack;
  std::vector<int> where(static_cast<std::size_t>(g.order()), -1);
  for (Vertex v : walk) {
    if (where[static_cast<std::size_t>(v)] >= 0) {
      const auto from = static_cast<std::size_t>(where[static_cast<std::size_t>(v)]);
      std::vector<Vertex> cycle(stack.begin() + static_cast<std::ptrdiff_t>(from), stack.end());
      if (static_cast<std::int64_t>(cycle.size()) % f != 0) return cycle;
      for (std::size_t i = from + 1; i < stack.size(); ++i) where[static_cast<std::size_t>(stack[i])] = -1;
      stack.resize(from + 1);
      continue;
    }
    where[static_cast<std::size_t>(v)] = static_cast<int>(stack.size());
    stack.push_back(v);
  }
  throw Error("closed walk decomposition found no cycle of the required length");
}

std::vector<Vertex> shortest_path(const Digraph& g, const std::vector<int>& index, Vertex from,
                                  Vertex to) {
  std::vector<Vertex> parent;
  restricted_bfs(g, index, from, Direction::out, &parent);
  std::vector<Vertex> path{to};
  while (path.back() != from) path.push_back(parent[static_cast<std::size_t>(path.back())]);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

CoprimeWalk build_coprime_walk(const Digraph& g, std::span<const Vertex> component, int r,
                               Vertex anchor) {
  if (r < 2) throw PreconditionError("coprime walk needs r >= 2");
  const auto comp = sorted_copy(component);
  if (!std::binary_search(comp.begin(), comp.end(), anchor))
    throw PreconditionError("anchor not in component");
  const int p = component_period(g, comp);
  if (p != 1)
    throw PreconditionError("component has period " + std::to_string(p) +
                            "; no closed walk of length coprime to every r exists");
  const auto index = component_index(g, comp);

  CoprimeWalk result;
  result.r = r;
  result.anchor = anchor;

  // Junction vertices d_0 = anchor, d_i on D_i nearest to d_{i-1}.
  std::vector<Vertex> junction{anchor};
  for (const std::int64_t f : prime_factors(r)) {
    auto cycle = cycle_not_divisible_by(g, index, anchor, f);
    const auto dist = restricted_bfs(g, index, junction.back(), Direction::out);
    std::size_t at = 0;
    for (std::size_t i = 1; i < cycle.size(); ++i) {
      const auto di = dist[static_cast<std::size_t>(cycle[i])];
      const auto da = dist[static_cast<std::size_t>(cycle[at])];
      if (di < da || (di == da && cycle[i] < cycle[at])) at = i;
    }
    std::rotate(cycle.begin(), cycle.begin() + static_cast<std::ptrdiff_t>(at), cycle.end());
    junction.push_back(cycle.front());
    result.cycles.push_back(std::move(cycle));
  }

  // W' = Q'_1 ... Q'_t Q''_t ... Q''_1
  std::vector<Vertex> base{anchor};
  for (std::size_t i = 1; i < junction.size(); ++i) {
    const auto q = shortest_path(g, index, junction[i - 1], junction[i]);
    base.insert(base.end(), q.begin() + 1, q.end());
  }
  for (std::size_t i = junction.size() - 1; i >= 1; --i) {
    const auto q = shortest_path(g, index, junction[i], junction[i - 1]);
    base.insert(base.end(), q.begin() + 1, q.end());
  }
  result.connector_length = static_cast<std::int64_t>(base.size()) - 1;

  std::vector<std::int64_t> lengths;
  for (const auto& c : result.cycles) lengths.push_back(static_cast<std::int64_t>(c.size()));
  auto laps = crt_combine(lengths, 1 - result.connector_length, r);
  if (!laps) throw Error("cycle lengths share a factor with r; congruence unsolvable");
  result.laps = *laps;

  // Splice a_i laps of D_i at the first visit of d_i.
  std::vector<std::vector<std::size_t>> splice_at(base.size());
  for (std::size_t i = 0; i < result.cycles.size(); ++i) {
    const auto pos = static_cast<std::size_t>(
        std::find(base.begin(), base.end(), result.cycles[i].front()) - base.begin());
    splice_at[pos].push_back(i);
  }
  for (std::size_t pos = 0; pos < base.size(); ++pos) {
    result.walk.push_back(base[pos]);
    for (std::size_t i : splice_at[pos])
      for (std::int64_t lap = 0; lap < result.laps[i]; ++lap) {
        const auto& c = result.cycles[i];
        result.walk.insert(result.walk.end(), c.begin() + 1, c.end());
        result.walk.push_back(c.front());
      }
  }
  result.length = static_cast<std::int64_t>(result.walk.size()) - 1;
  for (std::size_t i = 0; i + 1 < result.walk.size(); ++i) ++result.visits[result.walk[i]];

  if (!coprime_walk_is_valid(g, result))
    throw VerificationError("constructed coprime walk failed validation", result.walk);
  return result;
}

bool coprime_walk_is_valid(const Digraph& g, const CoprimeWalk& w) {
  if (w.walk.size() < 2 || w.walk.front() != w.walk.back() || w.walk.front() != w.anchor) return false;
  if (w.length != static_cast<std::int64_t>(w.walk.size()) - 1) return false;
  for (std::size_t i = 0; i + 1 < w.walk.size(); ++i)
    if (!g.has_edge(w.walk[i], w.walk[i + 1])) return false;
  std::map<Vertex, int> counts;
  for (std::size_t i = 0; i + 1 < w.walk.size(); ++i) ++counts[w.walk[i]];
  if (counts != w.visits) return false;
  const std::int64_t r = w.r;
  if (w.length % r != 1 % r || std::gcd(w.length, r) != 1) return false;
  return w.max_visits() <= 2 * w.r * w.r;
}

}  // namespace girthcut

#include "girthcut/constructions.hpp"

#include <algorithm>
#include <numeric>

#include "girthcut/error.hpp"

namespace girthcut {

std::uint64_t Rng::below(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

bool Rng::chance(double p) {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

Digraph blowup_cycle(int p, std::span<const int> part_sizes) {
  if (p < 2) throw PreconditionError("blowup needs p >= 2");
  if (static_cast<int>(part_sizes.size()) != p)
    throw PreconditionError("blowup needs exactly p part sizes");
  std::vector<int> start{0};
  for (int s : part_sizes) {
    if (s < 1) throw PreconditionError("blowup part sizes must be >= 1");
    start.push_back(start.back() + s);
  }
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i) {
    const int j = (i + 1) % p;
    for (int u = start[static_cast<std::size_t>(i)]; u < start[static_cast<std::size_t>(i) + 1]; ++u)
      for (int v = start[static_cast<std::size_t>(j)]; v < start[static_cast<std::size_t>(j) + 1]; ++v)
        edges.push_back({u, v});
  }
  return Digraph(start.back(), edges);
}

Digraph blowup_cycle(int p, int part_size) {
  if (p < 2) throw PreconditionError("blowup needs p >= 2");
  const std::vector<int> sizes(static_cast<std::size_t>(p), part_size);
  return blowup_cycle(p, sizes);
}

Digraph two_block_regular(int n, const Rational& eps) {
  if (n < 2 || n % 2 != 0) throw PreconditionError("two-block example needs even n >= 2");
  const Rational degree = (Rational(1) - 2 * eps) * n / 4;
  if (degree < 0 || degree.denominator() != 1)
    throw PreconditionError("(1 - 2 eps) n / 4 must be a nonnegative integer");
  const int d = static_cast<int>(degree.numerator());
  const int h = n / 2;
  // A circulant on h vertices is oriented only for 2d < h.
  if (2 * d >= h) throw PreconditionError("circulant degree too large for an oriented half");
  std::vector<Edge> edges;
  for (int block = 0; block < 2; ++block)
    for (int i = 0; i < h; ++i)
      for (int k = 1; k <= d; ++k) edges.push_back({block * h + i, block * h + (i + k) % h});
  for (int u = 0; u < h; ++u)
    for (int v = h; v < n; ++v) edges.push_back({u, v});
  return Digraph(n, edges);
}

Digraph complete_digraph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) edges.push_back({u, v});
  return Digraph(n, edges);
}

Digraph transitive_tournament(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return Digraph(n, edges);
}

Digraph directed_cycle(int n) {
  if (n < 2) throw PreconditionError("directed cycle needs n >= 2");
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) edges.push_back({u, (u + 1) % n});
  return Digraph(n, edges);
}

Digraph random_tournament(int n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back(rng.below(2) ? Edge{u, v} : Edge{v, u});
  return Digraph(n, edges);
}

Digraph random_digraph(int n, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && rng.chance(p)) edges.push_back({u, v});
  return Digraph(n, edges);
}

Digraph random_oriented(int n, std::int64_t m, std::uint64_t seed) {
  const std::int64_t pairs = static_cast<std::int64_t>(n) * (n - 1) / 2;
  if (m < 0 || m > pairs) throw PreconditionError("an oriented graph has at most C(n,2) edges");
  Rng rng(seed);
  auto edges = random_tournament(n, rng.next()).edges();
  rng.shuffle(edges);
  edges.resize(static_cast<std::size_t>(m));
  return Digraph(n, edges);
}

namespace {

// True if w is reachable from v in at most max_steps steps.
bool within(const std::vector<std::vector<Vertex>>& out, Vertex v, Vertex w, int max_steps) {
  if (v == w) return true;
  std::vector<int> dist(out.size(), -1);
  dist[static_cast<std::size_t>(v)] = 0;
  std::vector<Vertex> queue{v};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (dist[static_cast<std::size_t>(u)] == max_steps) continue;
    for (Vertex x : out[static_cast<std::size_t>(u)]) {
      if (dist[static_cast<std::size_t>(x)] >= 0) continue;
      if (x == w) return true;
      dist[static_cast<std::size_t>(x)] = dist[static_cast<std::size_t>(u)] + 1;
      queue.push_back(x);
    }
  }
  return false;
}

}  // namespace

Digraph random_r_free(int n, int r, double density, std::uint64_t seed) {
  if (r < 2) throw PreconditionError("random_r_free needs r >= 2");
  if (n < 0) throw PreconditionError("negative vertex count");
  Rng rng(seed);
  std::vector<Vertex> label(static_cast<std::size_t>(n));
  std::iota(label.begin(), label.end(), 0);
  rng.shuffle(label);

  std::vector<Edge> edges;
  if (n <= r) {
    const double p = density > 0 ? density : 0.3;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (rng.chance(p)) edges.push_back({label[static_cast<std::size_t>(i)], label[static_cast<std::size_t>(j)]});
    return Digraph(n, edges);
  }

  const int p = r + 1;
  std::vector<int> sizes(static_cast<std::size_t>(p), 1);
  for (int extra = n - p; extra > 0; --extra) ++sizes[rng.below(static_cast<std::uint64_t>(p))];
  std::vector<int> part(static_cast<std::size_t>(n));
  for (int i = 0, v = 0; i < p; ++i)
    for (int k = 0; k < sizes[static_cast<std::size_t>(i)]; ++k) part[static_cast<std::size_t>(v++)] = i;

  std::vector<std::vector<Vertex>> out(static_cast<std::size_t>(n));
  std::vector<std::vector<char>> present(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 0));
  auto add = [&](Vertex u, Vertex v) {
    out[static_cast<std::size_t>(u)].push_back(v);
    present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
  };
  const double keep = std::max(density, 0.5);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((part[static_cast<std::size_t>(a)] + 1) % p == part[static_cast<std::size_t>(b)] && rng.chance(keep))
        add(label[static_cast<std::size_t>(a)], label[static_cast<std::size_t>(b)]);

  const auto attempts = static_cast<std::int64_t>(density * n + 0.5);
  for (std::int64_t t = 0; t < attempts; ++t) {
    const auto u = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    const auto v = static_cast<Vertex>(rng.below(static_cast<std::uint64_t>(n)));
    if (u == v || present[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] ||
        present[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
      continue;
    // u -> v closes a cycle of length <= r iff v reaches u within r - 1 steps.
    if (within(out, v, u, r - 1)) continue;
    add(u, v);
  }

  for (Vertex u = 0; u < n; ++u)
    for (Vertex v : out[static_cast<std::size_t>(u)]) edges.push_back({u, v});
  return Digraph(n, edges);
}

std::string_view to_string(Family f) {
  switch (f) {
    case Family::blowup_cycle: return "blowup-cycle";
    case Family::two_block_regular: return "two-block-regular";
    case Family::complete_digraph: return "complete-digraph";
    case Family::transitive_tournament: return "transitive-tournament";
    case Family::random_tournament: return "random-tournament";
    case Family::random_r_free: return "random-r-free";
    case Family::directed_cycle: return "directed-cycle";
    case Family::random_digraph: return "random-digraph";
  }
  return "directed-cycle";
}

std::optional<Family> parse_family(std::string_view name) {
  for (auto f : {Family::blowup_cycle, Family::two_block_regular, Family::complete_digraph,
                 Family::transitive_tournament, Family::random_tournament, Family::random_r_free,
                 Family::directed_cycle, Family::random_digraph})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

namespace {

std::int64_t pairs(std::int64_t n) { return n * (n - 1) / 2; }

std::vector<int> blowup_parts(const GeneratorSpec& spec) {
  if (!spec.parts.empty()) return spec.parts;
  // n split over p parts, remainders to the earliest parts.
  if (spec.p < 2 || spec.n < spec.p) throw PreconditionError("blowup spec needs parts or n >= p >= 2");
  std::vector<int> parts(static_cast<std::size_t>(spec.p), spec.n / spec.p);
  for (int i = 0; i < spec.n % spec.p; ++i) ++parts[static_cast<std::size_t>(i)];
  return parts;
}

}  // namespace

ExpectedProperties expected_properties(const GeneratorSpec& spec) {
  ExpectedProperties e;
  switch (spec.family) {
    case Family::blowup_cycle: {
      const auto parts = blowup_parts(spec);
      const int p = static_cast<int>(parts.size());
      const std::int64_t n = std::accumulate(parts.begin(), parts.end(), std::int64_t{0});
      std::int64_t m = 0;
      for (int i = 0; i < p; ++i)
        m += static_cast<std::int64_t>(parts[static_cast<std::size_t>(i)]) * parts[static_cast<std::size_t>((i + 1) % p)];
      e.edge_count = m;
      e.gamma = pairs(n) - (p == 2 ? m / 2 : m);
      e.girth = std::optional<int>(p);
      e.oriented = p > 2;
      if (std::all_of(parts.begin(), parts.end(), [&](int s) { return s == parts.front(); }))
        e.beta = static_cast<std::int64_t>(parts.front()) * parts.front();
      break;
    }
    case Family::two_block_regular: {
      const Rational m = (Rational(1) - spec.eps) * spec.n * spec.n / 2;
      if (m.denominator() == 1) e.edge_count = m.numerator();
      if (e.edge_count) e.gamma = pairs(spec.n) - *e.edge_count;
      e.oriented = true;
      break;
    }
    case Family::complete_digraph:
      e.edge_count = static_cast<std::int64_t>(spec.n) * (spec.n - 1);
      e.gamma = 0;
      e.girth = spec.n >= 2 ? std::optional<int>(2) : std::nullopt;
      e.beta = pairs(spec.n);
      e.oriented = spec.n < 2;
      break;
    case Family::transitive_tournament:
      e.edge_count = pairs(spec.n);
      e.gamma = 0;
      e.girth = std::optional<int>();
      e.beta = 0;
      e.oriented = true;
      break;
    case Family::random_tournament:
      e.edge_count = pairs(spec.n);
      e.gamma = 0;
      e.oriented = true;
      break;
    case Family::random_r_free:
      e.girth_above = spec.r;
      break;
    case Family::directed_cycle:
      e.edge_count = spec.n;
      e.gamma = pairs(spec.n) - (spec.n == 2 ? 1 : spec.n);
      e.girth = std::optional<int>(spec.n);
      e.beta = 1;
      e.oriented = spec.n > 2;
      break;
    case Family::random_digraph:
      break;
  }
  return e;
}

Digraph build(const GeneratorSpec& spec) {
  Digraph g;
  switch (spec.family) {
    case Family::blowup_cycle: {
      const auto parts = blowup_parts(spec);
      g = blowup_cycle(static_cast<int>(parts.size()), parts);
      break;
    }
    case Family::two_block_regular: g = two_block_regular(spec.n, spec.eps); break;
    case Family::complete_digraph: g = complete_digraph(spec.n); break;
    case Family::transitive_tournament: g = transitive_tournament(spec.n); break;
    case Family::random_tournament: g = random_tournament(spec.n, spec.seed); break;
    case Family::random_r_free: g = random_r_free(spec.n, spec.r, spec.density, spec.seed); break;
    case Family::directed_cycle: g = directed_cycle(spec.n); break;
    case Family::random_digraph: g = random_digraph(spec.n, spec.density, spec.seed); break;
  }
  return g;
}

void check_expected(const GeneratorSpec& spec, const Digraph& g) {
  const auto expected = expected_properties(spec);
  const auto st = stats(g);
  const auto fail = [&](const std::string& what) {
    throw VerificationError("generator " + describe(spec) + " produced wrong " + what);
  };
  if (expected.edge_count && *expected.edge_count != st.edge_count) fail("edge count");
  if (expected.gamma && *expected.gamma != st.gamma) fail("gamma");
  if (expected.girth && *expected.girth != st.girth) fail("girth");
  if (expected.girth_above && st.girth && *st.girth <= *expected.girth_above) fail("girth");
  if (expected.oriented && *expected.oriented != st.is_oriented) fail("orientation");
}

Digraph generate(const GeneratorSpec& spec) {
  auto g = build(spec);
  check_expected(spec, g);
  return g;
}

std::string describe(const GeneratorSpec& spec) {
  std::string s(to_string(spec.family));
  s += "(";
  switch (spec.family) {
    case Family::blowup_cycle: {
      s += "p=" + std::to_string(spec.parts.empty() ? spec.p : static_cast<int>(spec.parts.size()));
      if (!spec.parts.empty()) {
        s += ",parts=";
        for (std::size_t i = 0; i < spec.parts.size(); ++i)
          s += (i ? "," : "") + std::to_string(spec.parts[i]);
      } else {
        s += ",n=" + std::to_string(spec.n);
      }
      break;
    }
    case Family::two_block_regular: s += "n=" + std::to_string(spec.n) + ",eps=" + to_string(spec.eps); break;
    case Family::random_r_free:
      s += "n=" + std::to_string(spec.n) + ",r=" + std::to_string(spec.r) +
           ",density=" + std::to_string(spec.density) + ",seed=" + std::to_string(spec.seed);
      break;
    case Family::random_digraph:
      s += "n=" + std::to_string(spec.n) + ",density=" + std::to_string(spec.density) +
           ",seed=" + std::to_string(spec.seed);
      break;
    case Family::random_tournament: s += "n=" + std::to_string(spec.n) + ",seed=" + std::to_string(spec.seed); break;
    default: s += "n=" + std::to_string(spec.n); break;
  }
  return s + ")";
}

}  // namespace girthcut

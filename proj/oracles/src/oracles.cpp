#include "girthcut/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace girthcut::oracle {

namespace {

using Matrix = std::vector<std::vector<char>>;

Matrix adjacency(const Digraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  Matrix a(n, std::vector<char>(n, 0));
  for (const auto& e : g.edges()) a[static_cast<std::size_t>(e.from)][static_cast<std::size_t>(e.to)] = 1;
  return a;
}

// Three-colour DFS over an explicit edge list.
bool acyclic(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n));
  for (const auto& e : edges) out[static_cast<std::size_t>(e.from)].push_back(e.to);
  std::vector<int> colour(static_cast<std::size_t>(n), 0);
  std::function<bool(int)> visit = [&](int u) {
    colour[static_cast<std::size_t>(u)] = 1;
    for (int w : out[static_cast<std::size_t>(u)]) {
      if (colour[static_cast<std::size_t>(w)] == 1) return false;
      if (colour[static_cast<std::size_t>(w)] == 0 && !visit(w)) return false;
    }
    colour[static_cast<std::size_t>(u)] = 2;
    return true;
  };
  for (int v = 0; v < n; ++v)
    if (colour[static_cast<std::size_t>(v)] == 0 && !visit(v)) return false;
  return true;
}

}  // namespace

std::vector<int> scc_labels(const Digraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  auto reach = adjacency(g);
  for (std::size_t v = 0; v < n; ++v) reach[v][v] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (reach[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (reach[k][j]) reach[i][j] = 1;
  std::vector<int> label(n);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t u = 0; u <= v; ++u)
      if (reach[u][v] && reach[v][u]) {
        label[v] = static_cast<int>(u);
        break;
      }
  return label;
}

std::int64_t min_fas_by_permutations(const Digraph& g) {
  std::vector<int> order(static_cast<std::size_t>(g.order()));
  std::iota(order.begin(), order.end(), 0);
  const auto edges = g.edges();
  std::int64_t best = static_cast<std::int64_t>(edges.size());
  std::vector<int> pos(order.size());
  do {
    for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
    std::int64_t back = 0;
    for (const auto& e : edges) back += pos[static_cast<std::size_t>(e.from)] > pos[static_cast<std::size_t>(e.to)];
    best = std::min(best, back);
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::optional<std::int64_t> min_fas_by_edge_subsets(const Digraph& g, std::int64_t max_k) {
  const auto edges = g.edges();
  const auto m = static_cast<std::int64_t>(edges.size());
  for (std::int64_t k = 0; k <= std::min(max_k, m); ++k) {
    // choose k edges to delete via a selection mask permuted in lexicographic order
    std::vector<char> drop(static_cast<std::size_t>(m), 0);
    std::fill(drop.end() - k, drop.end(), 1);
    do {
      std::vector<Edge> kept;
      for (std::size_t i = 0; i < edges.size(); ++i)
        if (!drop[i]) kept.push_back(edges[i]);
      if (acyclic(g.order(), kept)) return k;
    } while (std::next_permutation(drop.begin(), drop.end()));
  }
  return std::nullopt;
}

std::optional<Rational> min_expansion(const Digraph& g) {
  const int n = g.order();
  if (n < 2) return std::nullopt;
  const auto edges = g.edges();
  std::optional<Rational> best;
  std::vector<char> in_s(static_cast<std::size_t>(n), 0);
  // Every bit pattern of length n encodes one subset.
  for (std::uint64_t code = 1; code < (std::uint64_t{1} << n); ++code) {
    int size = 0;
    for (int v = 0; v < n; ++v) {
      in_s[static_cast<std::size_t>(v)] = static_cast<char>((code >> v) & 1U);
      size += in_s[static_cast<std::size_t>(v)];
    }
    if (2 * size > n) continue;
    std::int64_t leaving = 0, entering = 0;
    for (const auto& e : edges) {
      const bool a = in_s[static_cast<std::size_t>(e.from)];
      const bool b = in_s[static_cast<std::size_t>(e.to)];
      leaving += a && !b;
      entering += !a && b;
    }
    const Rational mu(std::min(leaving, entering), size);
    if (!best || mu < *best) best = mu;
  }
  return best;
}

namespace {

void collect_cycles(const Matrix& a, int start, int u, std::vector<char>& used, int length,
                    std::set<int>& lengths, const std::vector<char>* allowed, bool any_start) {
  const int n = static_cast<int>(a.size());
  for (int w = 0; w < n; ++w) {
    if (!a[static_cast<std::size_t>(u)][static_cast<std::size_t>(w)]) continue;
    if (allowed && !(*allowed)[static_cast<std::size_t>(w)]) continue;
    if (w == start) {
      lengths.insert(length);
      continue;
    }
    if (used[static_cast<std::size_t>(w)]) continue;
    if (any_start && w < start) continue;  // each cycle counted from its smallest vertex
    used[static_cast<std::size_t>(w)] = 1;
    collect_cycles(a, start, w, used, length + 1, lengths, allowed, any_start);
    used[static_cast<std::size_t>(w)] = 0;
  }
}

}  // namespace

std::set<int> cycle_lengths(const Digraph& g) {
  const auto a = adjacency(g);
  std::set<int> lengths;
  std::vector<char> used(a.size(), 0);
  for (int s = 0; s < g.order(); ++s) {
    used[static_cast<std::size_t>(s)] = 1;
    collect_cycles(a, s, s, used, 1, lengths, nullptr, true);
    used[static_cast<std::size_t>(s)] = 0;
  }
  return lengths;
}

std::set<int> cycle_lengths_through(const Digraph& g, Vertex v) {
  const auto a = adjacency(g);
  std::set<int> lengths;
  std::vector<char> used(a.size(), 0);
  used[static_cast<std::size_t>(v)] = 1;
  collect_cycles(a, v, v, used, 1, lengths, nullptr, false);
  return lengths;
}

int gcd_of_cycle_lengths(const Digraph& g, const std::vector<Vertex>& vertices) {
  const auto a = adjacency(g);
  std::vector<char> allowed(a.size(), 0);
  for (Vertex v : vertices) allowed[static_cast<std::size_t>(v)] = 1;
  std::set<int> lengths;
  std::vector<char> used(a.size(), 0);
  for (Vertex s : vertices) {
    used[static_cast<std::size_t>(s)] = 1;
    collect_cycles(a, s, s, used, 1, lengths, &allowed, true);
    used[static_cast<std::size_t>(s)] = 0;
  }
  int d = 0;
  for (int len : lengths) d = std::gcd(d, len);
  return d;
}

std::optional<std::pair<std::int64_t, std::int64_t>> coin(std::int64_t x, std::int64_t y, std::int64_t n) {
  for (std::int64_t a = n / x; a >= 0; --a)
    for (std::int64_t b = 0; a * x + b * y <= n; ++b)
      if (a * x + b * y == n) return std::make_pair(a, b);
  return std::nullopt;
}

bool pseudoperiodic_by_enumeration(const Digraph& g) {
  const auto label = scc_labels(g);
  std::map<int, std::vector<Vertex>> groups;
  for (Vertex v = 0; v < g.order(); ++v) groups[label[static_cast<std::size_t>(v)]].push_back(v);
  for (const auto& [root, members] : groups)
    if (members.size() > 1 && gcd_of_cycle_lengths(g, members) < 2) return false;
  return true;
}

}  // namespace girthcut::oracle

#include "girthcut/digraph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "girthcut/error.hpp"

namespace girthcut {

Digraph::Digraph(int n) : Digraph(n, std::span<const Edge>{}) {}

Digraph::Digraph(int n, std::span<const Edge> edges)
    : n_(n),
      stride_(static_cast<std::size_t>(n)),
      out_(static_cast<std::size_t>(n)),
      in_(static_cast<std::size_t>(n)),
      bits_((stride_ * stride_ + 63) / 64 + 1, 0) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (const auto& e : edges) {
    if (e.from < 0 || e.to < 0 || e.from >= n || e.to >= n)
      throw PreconditionError("edge (" + std::to_string(e.from) + "," + std::to_string(e.to) +
                              ") outside vertex range 0.." + std::to_string(n - 1));
    if (e.from == e.to) throw PreconditionError("loop at vertex " + std::to_string(e.from));
    const auto bit = static_cast<std::size_t>(e.from) * stride_ + static_cast<std::size_t>(e.to);
    if ((bits_[bit >> 6] >> (bit & 63)) & 1U)
      throw PreconditionError("duplicate edge (" + std::to_string(e.from) + "," +
                              std::to_string(e.to) + ")");
    bits_[bit >> 6] |= std::uint64_t{1} << (bit & 63);
    out_[static_cast<std::size_t>(e.from)].push_back(e.to);
    in_[static_cast<std::size_t>(e.to)].push_back(e.from);
    ++m_;
  }
  for (auto& adj : out_) std::sort(adj.begin(), adj.end());
  for (auto& adj : in_) std::sort(adj.begin(), adj.end());
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(static_cast<std::size_t>(m_));
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : out(u)) result.push_back({u, v});
  return result;
}

Digraph Digraph::induced(std::span<const Vertex> keep) const {
  std::vector<int> index(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    auto& slot = index[static_cast<std::size_t>(keep[i])];
    if (slot != -1) throw PreconditionError("repeated vertex in induced subgraph");
    slot = static_cast<int>(i);
  }
  std::vector<Edge> sub;
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (Vertex w : out(keep[i]))
      if (int j = index[static_cast<std::size_t>(w)]; j >= 0) sub.push_back({static_cast<int>(i), j});
  return Digraph(static_cast<int>(keep.size()), sub);
}

Digraph Digraph::without_edges(std::span<const Edge> drop) const {
  std::vector<Edge> sorted(drop.begin(), drop.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<Edge> kept;
  for (const auto& e : edges())
    if (!std::binary_search(sorted.begin(), sorted.end(), e)) kept.push_back(e);
  return Digraph(n_, kept);
}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_int(std::string_view token, long long& value) {
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  return ec == std::errc{} && ptr == end;
}

}  // namespace

Digraph parse_edge_list(std::string_view text) {
  std::optional<long long> header_n;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;
  long long max_id = -1;
  std::size_t line_no = 0;
  bool seen_edge = false;

  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.starts_with("n=")) {
      if (header_n || seen_edge) throw ParseError(line_no, "header must precede all edges");
      long long n = 0;
      if (!parse_int(trim(line.substr(2)), n) || n < 0)
        throw ParseError(line_no, "malformed header '" + std::string(line) + "'");
      if (n > kMaxOrder) throw ParseError(line_no, "header n above the supported " + std::to_string(kMaxOrder));
      header_n = n;
      continue;
    }

    const auto space = line.find_first_of(" \t");
    if (space == std::string_view::npos)
      throw ParseError(line_no, "expected 'u v', got '" + std::string(line) + "'");
    const auto first = line.substr(0, space);
    const auto second = trim(line.substr(space));
    long long u = 0;
    long long v = 0;
    if (!parse_int(first, u) || !parse_int(second, v) || u < 0 || v < 0)
      throw ParseError(line_no, "malformed token in '" + std::string(line) + "'");
    if (u == v) throw ParseError(line_no, "loop at vertex " + std::to_string(u));
    if (u >= kMaxOrder || v >= kMaxOrder)
      throw ParseError(line_no, "vertex id above the supported " + std::to_string(kMaxOrder) + " vertices");
    if (header_n && (u >= *header_n || v >= *header_n))
      throw ParseError(line_no, "vertex id exceeds header n=" + std::to_string(*header_n));
    seen_edge = true;
    max_id = std::max({max_id, u, v});
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
    edge_lines.push_back(line_no);
  }

  // Duplicate detection with line numbers before handing off to Digraph.
  std::vector<std::size_t> idx(edges.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return edges[a] < edges[b]; });
  for (std::size_t k = 1; k < idx.size(); ++k)
    if (edges[idx[k]] == edges[idx[k - 1]])
      throw ParseError(edge_lines[idx[k]], "duplicate edge " + std::to_string(edges[idx[k]].from) +
                                               " " + std::to_string(edges[idx[k]].to));

  // Without a header every id below the largest must occur; isolated
  // vertices need an explicit n= line.
  if (!header_n) {
    std::vector<char> seen(static_cast<std::size_t>(max_id + 1), 0);
    for (const auto& e : edges) seen[static_cast<std::size_t>(e.from)] = seen[static_cast<std::size_t>(e.to)] = 1;
    const auto gap = std::find(seen.begin(), seen.end(), 0);
    if (gap != seen.end()) {
      const auto missing = static_cast<Vertex>(gap - seen.begin());
      std::size_t at = 0;
      for (std::size_t i = 0; i < edges.size() && at == 0; ++i)
        if (edges[i].from > missing || edges[i].to > missing) at = edge_lines[i];
      throw ParseError(at, "vertex " + std::to_string(missing) +
                               " never occurs; declare isolated vertices with an n= header");
    }
  }

  const auto n = header_n ? *header_n : max_id + 1;
  return Digraph(static_cast<int>(n), edges);
}

Digraph read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_edge_list(buffer.str());
}

std::string format_edge_list(const Digraph& g) {
  std::string text = "n=" + std::to_string(g.order()) + "\n";
  for (const auto& e : g.edges()) text += std::to_string(e.from) + " " + std::to_string(e.to) + "\n";
  return text;
}

std::int64_t non_adjacent_pairs(const Digraph& g) {
  const std::int64_t n = g.order();
  std::int64_t adjacent = 0;
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.out(u))
      if (u < v || !g.has_edge(v, u)) ++adjacent;
  return n * (n - 1) / 2 - adjacent;
}

bool is_oriented(const Digraph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    for (Vertex v : g.out(u))
      if (g.has_edge(v, u)) return false;
  return true;
}

std::optional<int> girth(const Digraph& g) {
  std::optional<int> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.in_degree(v) == 0 || g.out_degree(v) == 0) continue;
    const auto cycle = shortest_cycle_at(g, v);
    if (cycle && (!best || static_cast<int>(cycle->size()) < *best))
      best = static_cast<int>(cycle->size());
    if (best == 2) break;
  }
  return best;
}

GraphStats stats(const Digraph& g) {
  return {g.size(), non_adjacent_pairs(g), girth(g), is_oriented(g)};
}

std::string_view to_string(Direction d) { return d == Direction::out ? "out" : "in"; }

DistanceLayers bfs_layers(const Digraph& g, Vertex v, Direction dir, int max_depth) {
  DistanceLayers result;
  result.source = v;
  result.direction = dir;
  result.distance.assign(static_cast<std::size_t>(g.order()), -1);
  result.distance[static_cast<std::size_t>(v)] = 0;
  result.layers.push_back({v});
  result.prefix_sizes.push_back(1);
  while (max_depth < 0 || result.depth() < max_depth) {
    const int next_depth = result.depth() + 1;
    std::vector<Vertex> next;
    for (Vertex u : result.layers.back()) {
      const auto nbrs = dir == Direction::out ? g.out(u) : g.in(u);
      for (Vertex w : nbrs) {
        auto& d = result.distance[static_cast<std::size_t>(w)];
        if (d == -1) {
          d = next_depth;
          next.push_back(w);
        }
      }
    }
    if (next.empty()) break;
    std::sort(next.begin(), next.end());
    result.prefix_sizes.push_back(result.prefix_sizes.back() + static_cast<int>(next.size()));
    result.layers.push_back(std::move(next));
  }
  return result;
}

SccDecomposition strong_components(const Digraph& g) {
  // Iterative Tarjan. Components come out in reverse topological order.
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<Vertex> stack;
  std::vector<std::pair<Vertex, std::size_t>> call;
  std::vector<std::vector<Vertex>> reversed;
  int counter = 0;

  for (Vertex root = 0; root < g.order(); ++root) {
    if (index[static_cast<std::size_t>(root)] != -1) continue;
    call.emplace_back(root, 0);
    while (!call.empty()) {
      auto& [v, pos] = call.back();
      const auto vi = static_cast<std::size_t>(v);
      if (pos == 0) {
        index[vi] = low[vi] = counter++;
        stack.push_back(v);
        on_stack[vi] = 1;
      }
      const auto succ = g.out(v);
      if (pos < succ.size()) {
        const Vertex w = succ[pos++];
        const auto wi = static_cast<std::size_t>(w);
        if (index[wi] == -1) {
          call.emplace_back(w, 0);
        } else if (on_stack[wi]) {
          low[vi] = std::min(low[vi], index[wi]);
        }
        continue;
      }
      if (low[vi] == index[vi]) {
        std::vector<Vertex> comp;
        Vertex w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[static_cast<std::size_t>(w)] = 0;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        reversed.push_back(std::move(comp));
      }
      const Vertex finished = v;
      call.pop_back();
      if (!call.empty()) {
        const auto parent = static_cast<std::size_t>(call.back().first);
        low[parent] = std::min(low[parent], low[static_cast<std::size_t>(finished)]);
      }
    }
  }

  SccDecomposition result;
  result.component_of.assign(n, -1);
  result.components.assign(reversed.rbegin(), reversed.rend());
  for (int c = 0; c < result.count(); ++c)
    for (Vertex v : result.components[static_cast<std::size_t>(c)])
      result.component_of[static_cast<std::size_t>(v)] = c;
  return result;
}

std::optional<std::vector<Vertex>> topological_order(const Digraph& g) {
  std::vector<int> indeg(static_cast<std::size_t>(g.order()));
  std::vector<Vertex> order;
  for (Vertex v = 0; v < g.order(); ++v) {
    indeg[static_cast<std::size_t>(v)] = g.in_degree(v);
    if (indeg[static_cast<std::size_t>(v)] == 0) order.push_back(v);
  }
  for (std::size_t head = 0; head < order.size(); ++head)
    for (Vertex w : g.out(order[head]))
      if (--indeg[static_cast<std::size_t>(w)] == 0) order.push_back(w);
  if (static_cast<int>(order.size()) != g.order()) return std::nullopt;
  return order;
}

bool is_acyclic(const Digraph& g) { return topological_order(g).has_value(); }

std::optional<std::vector<Vertex>> shortest_cycle_at(const Digraph& g, Vertex v) {
  // The shortest closed walk through v is a cycle: BFS from v, close through
  // the nearest in-neighbour.
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<int> dist(n, -1);
  std::vector<Vertex> parent(n, -1);
  std::vector<Vertex> queue{v};
  dist[static_cast<std::size_t>(v)] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    if (g.has_edge(u, v)) {
      std::vector<Vertex> cycle;
      for (Vertex x = u; x != -1; x = parent[static_cast<std::size_t>(x)]) cycle.push_back(x);
      std::reverse(cycle.begin(), cycle.end());
      return cycle;
    }
    for (Vertex w : g.out(u)) {
      if (dist[static_cast<std::size_t>(w)] == -1) {
        dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(u)] + 1;
        parent[static_cast<std::size_t>(w)] = u;
        queue.push_back(w);
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> shortest_cycle(const Digraph& g) {
  std::optional<std::vector<Vertex>> best;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.in_degree(v) == 0 || g.out_degree(v) == 0) continue;
    auto cycle = shortest_cycle_at(g, v);
    if (cycle && (!best || cycle->size() < best->size())) best = std::move(cycle);
    if (best && best->size() == 2) break;
  }
  return best;
}

bool is_simple_cycle(const Digraph& g, std::span<const Vertex> cycle) {
  if (cycle.size() < 2) return false;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex u = cycle[i];
    if (u < 0 || u >= g.order() || seen[static_cast<std::size_t>(u)]) return false;
    seen[static_cast<std::size_t>(u)] = 1;
    if (!g.has_edge(u, cycle[(i + 1) % cycle.size()])) return false;
  }
  return true;
}

DegreeWitness max_min_degree_vertex(const Digraph& g) {
  DegreeWitness best;
  bool found = false;
  for (Vertex v = 0; v < g.order(); ++v) {
    DegreeWitness w{v, g.in_degree(v), g.out_degree(v)};
    if (!found || w.min_degree() > best.min_degree()) {
      best = w;
      found = true;
    }
  }
  return best;
}

Vertex high_degree_vertex(const Digraph& g) {
  std::optional<Vertex> best;
  int best_total = -1;
  for (Vertex v = 0; v < g.order(); ++v) {
    // indegree and outdegree >= n/10, compared without division
    if (10 * g.in_degree(v) < g.order() || 10 * g.out_degree(v) < g.order()) continue;
    const int total = g.in_degree(v) + g.out_degree(v);
    if (total > best_total) {
      best = v;
      best_total = total;
    }
  }
  return best ? *best : max_min_degree_vertex(g).vertex;
}

}  // namespace girthcut

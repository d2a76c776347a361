#include "partite/detect.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace partite {

namespace detail {

std::vector<int> degree_descending_order(const std::vector<VertexSet>& adj) {
  std::vector<int> order(adj.size());
  for (std::size_t v = 0; v < adj.size(); ++v) order[v] = static_cast<int>(v);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return adj[a].count() > adj[b].count(); });
  return order;
}

namespace {

bool extend_clique(const std::vector<VertexSet>& adj, VertexSet cand, int need,
                   const std::vector<int>& order, std::vector<int>& current) {
  if (need == 0) return true;
  if (cand.count() < need) return false;
  for (int v : order) {
    if (!cand.test(v)) continue;
    cand.reset(v);  // cliques through v are fully explored below
    current.push_back(v);
    if (extend_clique(adj, cand & adj[v], need - 1, order, current)) return true;
    current.pop_back();
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> find_clique_in(const std::vector<VertexSet>& adj, const VertexSet& cand,
                                               int t, const std::vector<int>& order) {
  std::vector<int> current;
  if (!extend_clique(adj, cand, t, order, current)) return std::nullopt;
  return current;
}

}  // namespace detail

std::optional<Witness> find_clique(const Graph& g, int t) {
  if (t < 1) throw ParameterError("clique size must be >= 1");
  auto order = detail::degree_descending_order(g.rows());
  auto found = detail::find_clique_in(g.rows(), VertexSet::full(g.order()), t, order);
  if (!found) return std::nullopt;
  std::sort(found->begin(), found->end());
  return Witness{WitnessKind::Clique, std::move(*found)};
}

namespace {

// BFS on the bipartite double cover from (s, even).
void parity_bfs(const Graph& g, int s, std::vector<std::array<int, 2>>& dist,
                std::vector<std::array<int, 2>>& parent) {
  const int n = g.order();
  dist.assign(n, {-1, -1});
  parent.assign(n, {-1, -1});
  std::vector<std::pair<int, int>> queue;
  queue.reserve(2 * n);
  dist[s][0] = 0;
  queue.emplace_back(s, 0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    auto [v, p] = queue[qi];
    int nd = dist[v][p] + 1;
    int np = p ^ 1;
    g.neighbors(v).for_each([&](int w) {
      if (dist[w][np] < 0) {
        dist[w][np] = nd;
        parent[w][np] = v;
        queue.emplace_back(w, np);
      }
    });
  }
}

}  // namespace

OddGirthResult odd_girth(const Graph& g) {
  const int n = g.order();
  std::vector<std::array<int, 2>> dist, parent;
  int best = std::numeric_limits<int>::max();
  int best_src = -1;
  for (int s = 0; s < n; ++s) {
    parity_bfs(g, s, dist, parent);
    if (dist[s][1] >= 0 && dist[s][1] < best) {
      best = dist[s][1];
      best_src = s;
    }
  }
  if (best_src < 0) return {OddGirth{std::nullopt}, std::nullopt};

  parity_bfs(g, best_src, dist, parent);
  std::vector<int> seq;
  int v = best_src, p = 1;
  seq.push_back(v);
  while (dist[v][p] > 0) {
    int pv = parent[v][p];
    p ^= 1;
    v = pv;
    seq.push_back(v);
  }
  seq.pop_back();  // drop the closing repeat of the source
  std::reverse(seq.begin(), seq.end());

  // A globally shortest odd closed walk is a simple cycle.
  if (static_cast<int>(seq.size()) != best) throw Error("odd girth reconstruction length mismatch");
  VertexSet distinct(n);
  for (int u : seq) {
    if (distinct.test(u)) throw Error("odd girth witness revisits a vertex");
    distinct.set(u);
  }
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (!g.has_edge(seq[i], seq[(i + 1) % seq.size()])) throw Error("odd girth witness not a cycle");

  return {OddGirth{best}, Witness{WitnessKind::OddCycle, std::move(seq)}};
}

bool is_c_le_free(const Graph& g, int k) {
  if (k < 1) throw ParameterError("odd-cycle family parameter k must be >= 1");
  auto res = odd_girth(g);
  return !res.girth.value || *res.girth.value >= 2 * k + 3;
}

namespace {

bool color_backtrack(const Graph& g, const std::vector<int>& order, std::vector<int>& color,
                     std::size_t pos, int used, int r) {
  if (pos == order.size()) return true;
  int v = order[pos];
  std::uint64_t forbidden = 0;
  g.neighbors(v).for_each([&](int w) {
    if (color[w] >= 0) forbidden |= 1ull << color[w];
  });
  int limit = std::min(used + 1, r);
  for (int c = 0; c < limit; ++c) {
    if ((forbidden >> c) & 1) continue;
    color[v] = c;
    if (color_backtrack(g, order, color, pos + 1, std::max(used, c + 1), r)) return true;
    color[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<Partition> r_partition_exact(const Graph& g, int r) {
  if (r < 1) throw ParameterError("partition class count must be >= 1");
  if (r > 64) throw ParameterError("partition class count above 64 unsupported");
  auto order = detail::degree_descending_order(g.rows());
  std::vector<int> color(g.order(), -1);
  if (!color_backtrack(g, order, color, 0, 0, r)) return std::nullopt;
  int used = 0;
  for (int v = 0; v < g.order(); ++v) used = std::max(used, color[v] + 1);
  Partition p;
  p.classes.assign(used, VertexSet(g.order()));
  for (int v = 0; v < g.order(); ++v) p.classes[color[v]].set(v);
  return p;
}

CycleProfile cycle_adjacency_profile(const Graph& g, const Witness& cycle, int u) {
  if (cycle.kind != WitnessKind::OddCycle) throw ContractError("profile requires an odd-cycle witness");
  const auto& cv = cycle.vertices;
  const int len = static_cast<int>(cv.size());
  if (len < 3 || len % 2 == 0) throw ContractError("witness is not an odd cycle");
  VertexSet on_cycle(g.order());
  for (int i = 0; i < len; ++i) {
    if (!g.has_edge(cv[i], cv[(i + 1) % len])) throw ContractError("witness vertices not consecutively adjacent");
    if (on_cycle.test(cv[i])) throw ContractError("witness repeats a vertex");
    on_cycle.set(cv[i]);
  }
  auto shortest = odd_girth(g).girth.value;
  if (!shortest || *shortest != len)
    throw ContractError("cycle is not a shortest odd cycle of the graph");
  if (u < 0 || u >= g.order()) throw ContractError("vertex out of range");
  if (on_cycle.test(u)) throw ContractError("profile vertex must lie outside the cycle");

  CycleProfile prof;
  std::vector<int> positions;
  for (int i = 0; i < len; ++i) {
    if (g.has_edge(u, cv[i])) {
      positions.push_back(i);
      prof.hits.push_back(cv[i]);
    }
  }
  if (positions.empty()) {
    prof.kind = CycleProfile::Kind::Empty;
  } else if (positions.size() == 1) {
    prof.kind = CycleProfile::Kind::Single;
    prof.first = positions[0];
  } else if (positions.size() == 2) {
    int a = positions[0], b = positions[1];
    int diff = (b - a) % len;
    if (diff == 2) {
      prof.kind = CycleProfile::Kind::Pair;
      prof.first = a;
      prof.second = b;
    } else if (diff == len - 2) {
      prof.kind = CycleProfile::Kind::Pair;
      prof.first = b;
      prof.second = a;
    } else {
      prof.kind = CycleProfile::Kind::Violation;
    }
  } else {
    prof.kind = CycleProfile::Kind::Violation;
  }
  return prof;
}

}  // namespace partite

#include "partite/graph.hpp"

#include <algorithm>

namespace partite {

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  GraphBuilder b(n);
  for (const auto& [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

DegreeProfile degree_profile(const Graph& g) {
  int lo = g.order(), hi = 0;
  for (int v = 0; v < g.order(); ++v) {
    int d = g.degree(v);
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return {lo, hi};
}

bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw ContractError("vertex set universe does not match graph");
  bool ok = true;
  s.for_each([&](int v) {
    if (ok && g.neighbors(v).intersects(s)) ok = false;
  });
  return ok;
}

VertexSet common_neighborhood(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw ContractError("vertex set universe does not match graph");
  if (s.empty()) throw ContractError("common neighborhood of an empty set is undefined");
  VertexSet acc = VertexSet::full(g.order());
  s.for_each([&](int v) { acc &= g.neighbors(v); });
  return acc;
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.order()) throw ContractError("vertex set universe does not match graph");
  if (s.empty()) throw ContractError("induced subgraph on an empty set is undefined");
  std::vector<int> vertex_of = s.to_vector();
  std::vector<int> new_index(g.order(), -1);
  for (std::size_t i = 0; i < vertex_of.size(); ++i) new_index[vertex_of[i]] = static_cast<int>(i);
  GraphBuilder b(static_cast<int>(vertex_of.size()));
  for (std::size_t i = 0; i < vertex_of.size(); ++i) {
    (g.neighbors(vertex_of[i]) & s).for_each([&](int w) {
      if (new_index[w] > static_cast<int>(i)) b.add_edge(static_cast<int>(i), new_index[w]);
    });
  }
  return {b.build(), std::move(vertex_of)};
}

bool validate_partition(const Graph& g, const Partition& p, int r) {
  if (static_cast<int>(p.classes.size()) > r) return false;
  VertexSet seen(g.order());
  for (const auto& cls : p.classes) {
    if (cls.universe() != g.order()) return false;
    if (cls.intersects(seen)) return false;
    seen |= cls;
    if (!is_independent(g, cls)) return false;
  }
  return seen == VertexSet::full(g.order());
}

}  // namespace partite

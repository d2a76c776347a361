#include "doctest.h"

#include <random>

#include "partite/blowup.hpp"
#include "partite/detect.hpp"
#include "oracles.hpp"

using namespace partite;

namespace {

Graph c(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return build_graph(n, edges);
}

Graph k(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
  return build_graph(n, edges);
}

Graph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
  return build_graph(a + b, edges);
}

Graph petersen() {
  return build_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                          {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                          {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
}

bool witness_is_clique(const Graph& g, const Witness& w) {
  if (w.kind != WitnessKind::Clique) return false;
  for (std::size_t i = 0; i < w.vertices.size(); ++i)
    for (std::size_t j = i + 1; j < w.vertices.size(); ++j)
      if (!g.has_edge(w.vertices[i], w.vertices[j])) return false;
  return true;
}

}  // namespace

TEST_CASE("find_clique") {
  auto w = find_clique(k(5), 5);
  REQUIRE(w.has_value());
  CHECK(w->vertices == std::vector<int>{0, 1, 2, 3, 4});

  CHECK_FALSE(find_clique(complete_bipartite(3, 3), 3).has_value());

  auto bg = blowup(pattern_w(3).base, {2, 2, 2, 2, 2, 6});
  CHECK_FALSE(find_clique(bg.graph, 4).has_value());
  auto tri = find_clique(bg.graph, 3);
  REQUIRE(tri.has_value());
  CHECK(witness_is_clique(bg.graph, *tri));
  // The cycle part is triangle-free, so any triangle meets the hub class.
  bool uses_hub = false;
  for (int v : tri->vertices)
    if (v >= bg.class_ranges[5].first && v < bg.class_ranges[5].second) uses_hub = true;
  CHECK(uses_hub);

  CHECK_THROWS_AS(find_clique(k(3), 0), ParameterError);

  // Agreement with the subset oracle on random graphs.
  std::mt19937 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(rng, 8, 0.5);
    for (int t = 2; t <= 5; ++t) {
      auto found = find_clique(g, t);
      CHECK(found.has_value() == oracle::has_clique(g, t));
      if (found) CHECK(witness_is_clique(g, *found));
    }
  }
}

TEST_CASE("odd_girth") {
  auto r5 = odd_girth(c(5));
  CHECK(r5.girth.value == 5);
  REQUIRE(r5.cycle.has_value());
  CHECK(r5.cycle->vertices.size() == 5);

  CHECK_FALSE(odd_girth(complete_bipartite(3, 3)).girth.value.has_value());
  CHECK(odd_girth(k(4)).girth.value == 3);
  CHECK(oracle::shortest_odd_cycle(petersen()) == 5);  // independent path enumeration at n=10
  CHECK(odd_girth(petersen()).girth.value == 5);

  // Witness validity + agreement with the path-enumeration oracle.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);  // up to n = 10
    Graph g = oracle::random_graph(rng, n, 0.25 + 0.05 * (trial % 5));
    auto res = odd_girth(g);
    auto expect = oracle::shortest_odd_cycle(g);
    CHECK(res.girth.value == expect);
    if (res.girth.value) {
      const auto& cyc = res.cycle->vertices;
      CHECK(static_cast<int>(cyc.size()) == *res.girth.value);
      for (std::size_t i = 0; i < cyc.size(); ++i)
        CHECK(g.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));
      std::vector<int> sorted = cyc;
      std::sort(sorted.begin(), sorted.end());
      CHECK(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end());
    }
  }
}

TEST_CASE("is_c_le_free") {
  CHECK(is_c_le_free(c(7), 2));
  CHECK_FALSE(is_c_le_free(c(5), 2));
  CHECK(is_c_le_free(complete_bipartite(4, 4), 3));

  auto bg = blowup(c(9), std::vector<int>(9, 3));
  CHECK(odd_girth(bg.graph).girth.value == 9);
  CHECK(is_c_le_free(bg.graph, 3));
  CHECK_FALSE(is_c_le_free(bg.graph, 4));
  CHECK_THROWS_AS(is_c_le_free(c(5), 0), ParameterError);

  // Equivalent to finding no odd cycle of length 3..2k+1 by direct search.
  std::mt19937 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(rng, 8, 0.3);
    auto len = oracle::shortest_odd_cycle(g);
    for (int k = 1; k <= 4; ++k) CHECK(is_c_le_free(g, k) == (!len || *len > 2 * k + 1));
  }
}

TEST_CASE("r_partition_exact") {
  CHECK_FALSE(r_partition_exact(c(5), 2).has_value());
  auto p3 = r_partition_exact(c(5), 3);
  REQUIRE(p3.has_value());
  CHECK(validate_partition(c(5), *p3, 3));

  auto bg = blowup(c(5), {3, 5, 1, 1, 5});
  CHECK_FALSE(r_partition_exact(bg.graph, 2).has_value());
  auto p = r_partition_exact(bg.graph, 3);
  REQUIRE(p.has_value());
  CHECK(validate_partition(bg.graph, *p, 3));

  // Agreement with dumb backtracking color search.
  std::mt19937 rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);  // up to n = 10
    Graph g = oracle::random_graph(rng, n, 0.5);
    for (int r = 1; r <= 4; ++r) {
      auto part = r_partition_exact(g, r);
      CHECK(part.has_value() == oracle::colorable(g, r));
      if (part) CHECK(validate_partition(g, *part, r));
    }
  }
}

TEST_CASE("cycle_adjacency_profile") {
  // C7 plus a pendant at v1.
  Graph g1 = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {7, 1}});
  auto res1 = odd_girth(g1);
  REQUIRE(res1.girth.value == 7);
  auto prof1 = cycle_adjacency_profile(g1, *res1.cycle, 7);
  CHECK(prof1.kind == CycleProfile::Kind::Single);
  CHECK(prof1.hits == std::vector<int>{1});

  // C7 plus a vertex adjacent to v1 and v3: still odd girth 7, distance-2 pair.
  Graph g2 = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}, {7, 1}, {7, 3}});
  auto res2 = odd_girth(g2);
  REQUIRE(res2.girth.value == 7);
  CHECK(oracle::shortest_odd_cycle(g2) == 7);
  auto prof2 = cycle_adjacency_profile(g2, *res2.cycle, 7);
  CHECK(prof2.kind == CycleProfile::Kind::Pair);
  std::vector<int> hits = prof2.hits;
  std::sort(hits.begin(), hits.end());
  CHECK(hits == std::vector<int>{1, 3});

  // Vertices on the cycle are excluded; isolated outside vertices profile empty.
  Graph g3 = build_graph(8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 0}});
  auto res3 = odd_girth(g3);
  CHECK_THROWS_AS(cycle_adjacency_profile(g3, *res3.cycle, res3.cycle->vertices[0]), ContractError);
  CHECK(cycle_adjacency_profile(g3, *res3.cycle, 7).kind == CycleProfile::Kind::Empty);

  // Not a shortest odd cycle: precondition error.
  Witness longer{WitnessKind::OddCycle, {0, 1, 2, 3, 4}};
  Graph g4 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {5, 0}});
  CHECK(odd_girth(g4).girth.value == 3);
  CHECK_THROWS_AS(cycle_adjacency_profile(g4, longer, 5), ContractError);
}

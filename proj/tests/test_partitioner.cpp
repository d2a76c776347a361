#include "doctest.h"

#include <random>

#include "partite/blowup.hpp"
#include "partite/partitioner.hpp"
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

}  // namespace

using oracle::complete_multipartite;
using oracle::random_hypothesis_graph;

TEST_CASE("maximal_completion") {
  // Every chord of C5 closes a triangle.
  CHECK(maximal_completion(c(5), 2) == c(5));

  // Empty graph on 4 vertices under lexicographic scan becomes a star.
  Graph star = maximal_completion(Graph::empty(4), 2);
  CHECK(star == build_graph(4, {{0, 1}, {0, 2}, {0, 3}}));

  CHECK(maximal_completion(k(4), 4) == k(4));

  CHECK_THROWS_AS(maximal_completion(k(4), 3), CliquePresentError);

  // Output is edge-maximal: adding any remaining non-edge makes a K_{r+1}.
  std::mt19937 rng(17);
  int checked = 0;
  while (checked < 40) {
    int n = 4 + static_cast<int>(rng() % 7);
    int r = 2 + static_cast<int>(rng() % 3);
    Graph g = oracle::random_graph(rng, n, 0.3);
    if (oracle::has_clique(g, r + 1)) continue;
    ++checked;
    Graph m = maximal_completion(g, r);
    CHECK_FALSE(oracle::has_clique(m, r + 1));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        CHECK((!g.has_edge(u, v) || m.has_edge(u, v)));  // supergraph
        if (!m.has_edge(u, v)) CHECK(oracle::has_clique(m.with_edge(u, v), r + 1));
      }
  }
}

TEST_CASE("extract_bipartition") {
  auto sides = extract_bipartition(complete_bipartite(7, 8));
  REQUIRE(sides.is_partition());
  CHECK(validate_partition(complete_bipartite(7, 8), sides.partition(), 2));

  // Star: center has maximum degree; parts are leaves vs center.
  Graph star = build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}});
  auto sp = extract_bipartition(star);
  REQUIRE(sp.is_partition());
  CHECK(sp.partition().classes[0] == VertexSet::of(6, {1, 2, 3, 4, 5}));
  CHECK(sp.partition().classes[1] == VertexSet::of(6, {0}));

  // Edgeless graph: one empty side is fine.
  auto ep = extract_bipartition(Graph::empty(3));
  REQUIRE(ep.is_partition());
  CHECK(validate_partition(Graph::empty(3), ep.partition(), 2));

  // Balanced C5 blowup: non-bipartite, hypothesis fails; violation certificate.
  auto bg = blowup(c(5), {3, 3, 3, 3, 3});
  auto vp = extract_bipartition(bg.graph);
  REQUIRE_FALSE(vp.is_partition());
  const auto& viol = vp.violation();
  CHECK_FALSE(viol.leftover.empty());
  REQUIRE(viol.hypothesis.has_value());
  CHECK_FALSE(viol.hypothesis->holds);
  // The leftover certificate re-verifies: every stuck vertex has neighbors
  // in both classes, so no single move could have placed it.
  REQUIRE(viol.partial_classes.size() == 2);
  viol.leftover.for_each([&](int w) {
    CHECK(bg.graph.neighbors(w).intersects(viol.partial_classes[0]));
    CHECK(bg.graph.neighbors(w).intersects(viol.partial_classes[1]));
  });

  CHECK_THROWS_AS(extract_bipartition(k(3)), CliquePresentError);
}

TEST_CASE("extract_r_partition on structured graphs") {
  Graph turan = complete_multipartite({5, 5, 5});
  auto p = extract_r_partition(turan, 3);
  REQUIRE(p.is_partition());
  CHECK(validate_partition(turan, p.partition(), 3));
  CHECK(p.partition().classes.size() == 3);
  for (const auto& cls : p.partition().classes) CHECK(cls.count() == 5);

  auto p2 = extract_r_partition(complete_bipartite(7, 8), 2);
  REQUIRE(p2.is_partition());
  CHECK(validate_partition(complete_bipartite(7, 8), p2.partition(), 2));

  // W3 blowup with delta exactly at the threshold: hypothesis fails.
  auto bg = blowup(pattern_w(3).base, {2, 2, 2, 2, 2, 6});
  auto v = extract_r_partition(bg.graph, 3);
  REQUIRE_FALSE(v.is_partition());
  REQUIRE(v.violation().hypothesis.has_value());
  CHECK_FALSE(v.violation().hypothesis->holds);
  CHECK(v.violation().step == "degree hypothesis fails");

  CHECK_THROWS_AS(extract_r_partition(k(5), 3), CliquePresentError);
  CHECK_THROWS_AS(extract_r_partition(k(3), 1), ParameterError);
}

TEST_CASE("partitioner soundness on arbitrary free graphs") {
  // Whatever the hypothesis says, a returned partition must validate.
  std::mt19937 rng(29);
  int seen_partitions = 0, seen_violations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    int n = 4 + static_cast<int>(rng() % 7);
    int r = 2 + static_cast<int>(rng() % 3);
    Graph g = oracle::random_graph(rng, n, 0.25 + 0.1 * (trial % 4));
    if (oracle::has_clique(g, r + 1)) continue;
    auto out = extract_r_partition(g, r);
    if (out.is_partition()) {
      ++seen_partitions;
      CHECK(validate_partition(g, out.partition(), r));
    } else {
      ++seen_violations;
      // Any violation must re-verify as a genuine hypothesis failure.
      DegreeProfile prof = degree_profile(g);
      CHECK_FALSE(clique_hypothesis(n, r, prof.delta, prof.Delta).holds);
      // Leftover certificates re-verify structurally: a stuck vertex has
      // neighbors in both classes it could not join.
      const auto& v = out.violation();
      if (!v.leftover.empty() && v.partial_classes.size() == 2) {
        v.leftover.for_each([&](int w) {
          CHECK(g.neighbors(w).intersects(v.partial_classes[0]));
          CHECK(g.neighbors(w).intersects(v.partial_classes[1]));
        });
      }
    }
  }
  CHECK(seen_partitions > 0);
  CHECK(seen_violations > 0);
}

TEST_CASE("partitioner completeness under the hypothesis") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 120; ++trial) {
    int r = 2 + static_cast<int>(rng() % 3);
    Graph g = random_hypothesis_graph(rng, r, 40);
    auto out = extract_r_partition(g, r);
    REQUIRE(out.is_partition());
    CHECK(validate_partition(g, out.partition(), r));
    // Agreement with the exact oracle.
    CHECK(r_partition_exact(g, r).has_value());
  }
  // Deeper recursion levels.
  for (int r : {5, 6}) {
    for (int trial = 0; trial < 25; ++trial) {
      Graph g = random_hypothesis_graph(rng, r, 70);
      auto out = extract_r_partition(g, r);
      REQUIRE(out.is_partition());
      CHECK(validate_partition(g, out.partition(), r));
    }
  }
}

TEST_CASE("completion preserves partitions of the original graph") {
  std::mt19937 rng(37);
  int checked = 0;
  while (checked < 30) {
    int n = 5 + static_cast<int>(rng() % 6);
    int r = 2 + static_cast<int>(rng() % 3);
    Graph g = oracle::random_graph(rng, n, 0.3);
    if (oracle::has_clique(g, r + 1)) continue;
    ++checked;
    Graph m = maximal_completion(g, r);
    auto p = r_partition_exact(m, r);
    if (p) CHECK(validate_partition(g, *p, r));
  }
}

TEST_CASE("exhaustive bipartite extraction, small n") {
  // Every triangle-free graph on <= 6 vertices whose profile meets the
  // triangle-case hypothesis must bipartition constructively.
  for (int n = 2; n <= 6; ++n) {
    int slots = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << slots); ++mask) {
      std::vector<std::pair<int, int>> edges;
      int idx = 0;
      for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u, ++idx)
          if ((mask >> idx) & 1) edges.push_back({u, v});
      Graph g = build_graph(n, edges);
      if (oracle::has_clique(g, 3)) continue;
      DegreeProfile prof = degree_profile(g);
      if (!clique_hypothesis(n, 2, prof.delta, prof.Delta).holds) continue;
      auto out = extract_bipartition(g);
      REQUIRE(out.is_partition());
      CHECK(validate_partition(g, out.partition(), 2));
    }
  }
}

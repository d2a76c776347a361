#include "doctest.h"

#include <random>

#include "partite/blowup.hpp"
#include "partite/detect.hpp"
#include "partite/graph.hpp"
#include "oracles.hpp"

using namespace partite;

namespace {

Graph c5() { return build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}); }

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

TEST_CASE("build_graph basics") {
  Graph g = c5();
  CHECK(g.order() == 5);
  CHECK(g.edge_count() == 5);
  for (int v = 0; v < 5; ++v) CHECK(g.degree(v) == 2);

  Graph single = build_graph(1, {});
  CHECK(single.order() == 1);
  CHECK(single.degree(0) == 0);

  Graph dup = build_graph(4, {{0, 1}, {0, 1}, {2, 3}});
  CHECK(dup.edge_count() == 2);

  CHECK_THROWS_AS(build_graph(3, {{0, 0}}), ParameterError);
  CHECK_THROWS_AS(build_graph(3, {{0, 5}}), ParameterError);
  CHECK_THROWS_AS(Graph::empty(0), ParameterError);
}

TEST_CASE("degree_profile on cycles and blowups") {
  CHECK(degree_profile(c5()) == DegreeProfile{2, 2});

  auto balanced = blowup(c5(), {3, 3, 3, 3, 3});
  CHECK(balanced.graph.order() == 15);
  CHECK(degree_profile(balanced.graph) == DegreeProfile{6, 6});

  auto skewed = blowup(c5(), {3, 5, 1, 1, 5});
  CHECK(degree_profile(skewed.graph) == DegreeProfile{4, 10});

  // Class-by-class: every vertex degree equals the sum of adjacent class sizes.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    Graph pattern = oracle::random_graph(rng, 2 + trial % 5, 0.5);
    std::vector<int> sizes(pattern.order());
    bool any = false;
    for (auto& s : sizes) {
      s = rng() % 4;
      any = any || s > 0;
    }
    if (!any) sizes[0] = 1;
    auto bg = blowup(pattern, sizes);
    for (int cls = 0; cls < pattern.order(); ++cls) {
      int expect = oracle::blowup_class_degree(pattern, sizes, cls);
      for (int v = bg.class_ranges[cls].first; v < bg.class_ranges[cls].second; ++v)
        CHECK(bg.graph.degree(v) == expect);
    }
  }
}

TEST_CASE("is_independent") {
  Graph g = c5();
  CHECK(is_independent(g, VertexSet(5)));
  CHECK(is_independent(g, VertexSet::of(5, {0, 2})));
  CHECK_FALSE(is_independent(g, VertexSet::of(5, {0, 1})));

  // Matches "induced subgraph has zero edges" on random inputs.
  std::mt19937 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph h = oracle::random_graph(rng, 8, 0.4);
    VertexSet s(8);
    for (int v = 0; v < 8; ++v)
      if (rng() % 2) s.set(v);
    if (s.empty()) s.set(0);
    CHECK(is_independent(h, s) == (induced(h, s).graph.edge_count() == 0));
  }
}

TEST_CASE("common_neighborhood") {
  Graph g = c5();
  CHECK(common_neighborhood(g, VertexSet::of(5, {0, 2})) == VertexSet::of(5, {1}));
  CHECK(common_neighborhood(k(4), VertexSet::of(4, {0, 1})) == VertexSet::of(4, {2, 3}));
  CHECK_THROWS_AS(common_neighborhood(g, VertexSet(5)), ContractError);

  // Singleton set recovers the neighborhood.
  std::mt19937 rng(13);
  Graph h = oracle::random_graph(rng, 9, 0.5);
  for (int v = 0; v < 9; ++v) CHECK(common_neighborhood(h, VertexSet::of(9, {v})) == h.neighbors(v));

  // Blowup: two vertices in classes 1 and 3 share exactly class 2.
  auto bg = blowup(c5(), {3, 3, 3, 3, 3});
  VertexSet pair(15);
  pair.set(bg.class_ranges[1].first);
  pair.set(bg.class_ranges[3].first);
  VertexSet expect(15);
  for (int v = bg.class_ranges[2].first; v < bg.class_ranges[2].second; ++v) expect.set(v);
  CHECK(common_neighborhood(bg.graph, pair) == expect);
}

TEST_CASE("induced subgraphs") {
  auto tri = induced(k(5), VertexSet::of(5, {1, 2, 4}));
  CHECK(tri.graph == k(3));
  CHECK(tri.vertex_of == std::vector<int>{1, 2, 4});

  auto path = induced(c5(), VertexSet::of(5, {0, 1, 2}));
  CHECK(path.graph.edge_count() == 2);

  CHECK_THROWS_AS(induced(c5(), VertexSet(5)), ContractError);

  // Blowup classes 1 and 2 induce a complete bipartite 3x5.
  auto bg = blowup(c5(), {3, 5, 1, 1, 5});
  VertexSet s(15);
  for (int v = bg.class_ranges[0].first; v < bg.class_ranges[0].second; ++v) s.set(v);
  for (int v = bg.class_ranges[1].first; v < bg.class_ranges[1].second; ++v) s.set(v);
  auto sub = induced(bg.graph, s);
  CHECK(sub.graph.order() == 8);
  CHECK(sub.graph.edge_count() == 15);
  CHECK(oracle::colorable(sub.graph, 2));
}

TEST_CASE("validate_partition") {
  auto bg = blowup(c5(), {3, 3, 3, 3, 3});
  Partition classes;
  for (auto [b, e] : bg.class_ranges) {
    VertexSet cls(15);
    for (int v = b; v < e; ++v) cls.set(v);
    classes.classes.push_back(cls);
  }
  CHECK(validate_partition(bg.graph, classes, 5));
  CHECK(validate_partition(bg.graph, classes, 7));  // monotone in r
  CHECK_FALSE(validate_partition(bg.graph, classes, 4));

  Graph g = c5();
  // No 2-class split of an odd cycle validates.
  for (int mask = 0; mask < 32; ++mask) {
    VertexSet a(5), b(5);
    for (int v = 0; v < 5; ++v) ((mask >> v) & 1 ? a : b).set(v);
    CHECK_FALSE(validate_partition(g, Partition{{a, b}}, 2));
  }

  Graph kb = complete_bipartite(3, 3);
  Partition sides{{VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {3, 4, 5})}};
  CHECK(validate_partition(kb, sides, 2));

  // Overlapping or incomplete classes fail.
  CHECK_FALSE(validate_partition(kb, Partition{{VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {2, 3, 4, 5})}}, 2));
  CHECK_FALSE(validate_partition(kb, Partition{{VertexSet::of(6, {0, 1, 2})}}, 2));
}

TEST_CASE("vertex set operations") {
  VertexSet s = VertexSet::of(70, {0, 63, 64, 69});
  CHECK(s.count() == 4);
  CHECK(s.first() == 0);
  CHECK(s.complement().count() == 66);
  CHECK_FALSE(s.complement().test(64));
  CHECK(s.subset_of(VertexSet::full(70)));
  CHECK_THROWS_AS(s.test(70), ContractError);
  CHECK_THROWS_AS(VertexSet(3).intersects(VertexSet(4)), ContractError);

  VertexSet t = VertexSet::of(70, {63, 69});
  CHECK(t.subset_of(s));
  CHECK((s & t) == t);
  CHECK((s | t) == s);
  VertexSet diff = s;
  diff.subtract(t);
  CHECK(diff == VertexSet::of(70, {0, 64}));
}

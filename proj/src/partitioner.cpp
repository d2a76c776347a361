#include "partite/partitioner.hpp"

#include <algorithm>

namespace partite {

namespace {

Witness clique_witness(std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  return Witness{WitnessKind::Clique, std::move(vertices)};
}

}  // namespace

Graph maximal_completion(const Graph& g, int r) {
  if (r < 2) throw ParameterError("maximal completion requires r >= 2");
  if (auto w = find_clique(g, r + 1)) throw CliquePresentError(std::move(*w));

  GraphBuilder b(g);
  const int n = g.order();
  auto order = detail::degree_descending_order(b.rows());
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (b.has_edge(u, v)) continue;
      // Adding uv closes a K_{r+1} iff N(u) & N(v) holds a K_{r-1}.
      VertexSet common = b.neighbors(u) & b.neighbors(v);
      if (!detail::find_clique_in(b.rows(), common, r - 1, order)) b.add_edge(u, v);
    }
  }
  return b.build();
}

PartitionOutcome extract_bipartition(const Graph& g) {
  if (auto w = find_clique(g, 3)) throw CliquePresentError(std::move(*w));

  const int n = g.order();
  DegreeProfile prof = degree_profile(g);
  if (prof.Delta == 0) {
    // Edgeless: one side may stay empty.
    return {Partition{{VertexSet::full(n), VertexSet(n)}}};
  }
  HypothesisVerdict verdict = clique_hypothesis(n, 2, prof.delta, prof.Delta);

  int u = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == prof.Delta) {
      u = v;
      break;
    }

  if (prof.delta + prof.Delta >= n) {
    // Case 1: N(u) and its complement partition V.
    VertexSet part1 = g.neighbors(u);
    VertexSet part2 = part1.complement();
    if (!is_independent(g, part1) || !is_independent(g, part2)) {
      return {Violation{"case 1: complement of a maximum neighborhood is not independent",
                        VertexSet(n),
                        {part1, part2},
                        verdict,
                        std::nullopt}};
    }
    return {Partition{{part1, part2}}};
  }

  // Case 2: seed from an edge at maximum degree and grow to local maximality.
  int v = g.neighbors(u).first();
  VertexSet class1 = g.neighbors(v);
  VertexSet class2 = g.neighbors(u);
  VertexSet rest = (class1 | class2).complement();

  bool moved = true;
  while (moved && !rest.empty()) {
    moved = false;
    for (int w = 0; w < n; ++w) {
      if (!rest.test(w)) continue;
      if (!g.neighbors(w).intersects(class1)) {
        class1.set(w);
        rest.reset(w);
        moved = true;
      } else if (!g.neighbors(w).intersects(class2)) {
        class2.set(w);
        rest.reset(w);
        moved = true;
      }
    }
  }
  if (rest.empty()) return {Partition{{class1, class2}}};
  return {Violation{"case 2: leftover set T nonempty at local maximality", rest, {class1, class2}, verdict,
                    std::nullopt}};
}

PartitionOutcome extract_r_partition(const Graph& g, int r) {
  if (r < 2) throw ParameterError("partition extraction requires r >= 2");
  if (auto w = find_clique(g, r + 1)) throw CliquePresentError(std::move(*w));

  const int n = g.order();
  DegreeProfile prof = degree_profile(g);
  HypothesisVerdict verdict = clique_hypothesis(n, r, prof.delta, prof.Delta);
  if (!verdict.holds)
    return {Violation{"degree hypothesis fails", VertexSet(n), {}, verdict, std::nullopt}};

  if (r == 2) return extract_bipartition(g);

  // Hypothesis is monotone under edge addition, so it survives completion.
  Graph gm = maximal_completion(g, r);
  DegreeProfile mprof = degree_profile(gm);
  HypothesisVerdict mverdict = clique_hypothesis(n, r, mprof.delta, mprof.Delta);
  if (!mverdict.holds)
    return {Violation{"hypothesis lost under maximal completion", VertexSet(n), {}, mverdict, std::nullopt}};

  int u = 0;
  for (int v = 0; v < n; ++v)
    if (gm.degree(v) == mprof.Delta) {
      u = v;
      break;
    }
  VertexSet x = gm.neighbors(u);
  auto sub = induced(gm, x);

  DegreeProfile hprof = degree_profile(sub.graph);
  HypothesisVerdict hverdict = clique_hypothesis(sub.graph.order(), r - 1, hprof.delta, hprof.Delta);
  if (!hverdict.holds)
    return {Violation{"inductive hypothesis fails on the maximum-degree neighborhood", x, {}, hverdict,
                      std::nullopt}};

  PartitionOutcome inner = extract_r_partition(sub.graph, r - 1);
  if (!inner.is_partition()) {
    const Violation& iv = inner.violation();
    VertexSet leftover(n);
    iv.leftover.for_each([&](int w) { leftover.set(sub.vertex_of[w]); });
    std::vector<VertexSet> partial;
    for (const auto& cls : iv.partial_classes) {
      VertexSet mapped(n);
      cls.for_each([&](int w) { mapped.set(sub.vertex_of[w]); });
      partial.push_back(std::move(mapped));
    }
    return {Violation{"recursive extraction: " + iv.step, leftover, partial, iv.hypothesis, iv.witness}};
  }

  // Map the r-1 classes of H back into G.
  std::vector<VertexSet> classes;
  for (const auto& cls : inner.partition().classes) {
    VertexSet mapped(n);
    cls.for_each([&](int w) { mapped.set(sub.vertex_of[w]); });
    classes.push_back(std::move(mapped));
  }

  VertexSet rest = x.complement();
  rest.reset(u);
  if (rest.empty()) {
    std::vector<VertexSet> all;
    all.push_back(VertexSet::of(n, {u}));
    for (auto& c : classes) all.push_back(std::move(c));
    return {Partition{std::move(all)}};
  }

  // The completion guarantees a K_{r-1} inside N(u) & N(w) for any outside w.
  int w = rest.first();
  VertexSet common_uw = gm.neighbors(u) & gm.neighbors(w);
  auto order = detail::degree_descending_order(gm.rows());
  auto anchor = detail::find_clique_in(gm.rows(), common_uw, r - 1, order);
  if (!anchor)
    return {Violation{"maximal completion failed to supply a K_{r-1} in a common neighborhood", common_uw,
                      classes, mverdict, std::nullopt}};

  // Align classes so the anchor clique has one vertex per class.
  std::vector<VertexSet> aligned(classes.size(), VertexSet(n));
  std::vector<bool> taken(classes.size(), false);
  bool align_ok = static_cast<int>(classes.size()) == r - 1;
  if (align_ok) {
    for (int i = 0; i < r - 1 && align_ok; ++i) {
      int cls = -1;
      for (std::size_t c = 0; c < classes.size(); ++c)
        if (classes[c].test((*anchor)[i])) {
          cls = static_cast<int>(c);
          break;
        }
      if (cls < 0 || taken[cls]) {
        align_ok = false;
        break;
      }
      taken[cls] = true;
      aligned[i] = classes[cls];
    }
  }
  if (!align_ok)
    return {Violation{"anchor clique does not meet every neighborhood class exactly once", common_uw, classes,
                      mverdict, clique_witness(*anchor)}};

  // Seed the final class from the anchor's common neighborhood, then grow to
  // a maximal independent set outside X.
  VertexSet anchor_set(n);
  for (int a : *anchor) anchor_set.set(a);
  VertexSet class1 = common_neighborhood(gm, anchor_set);
  if (class1.intersects(x))
    return {Violation{"common neighborhood of the anchor clique meets X (a K_{r+1} must exist)", class1 & x,
                      classes, mverdict, clique_witness(*anchor)}};
  if (!is_independent(gm, class1))
    return {Violation{"common neighborhood of the anchor clique is not independent", class1, classes, mverdict,
                      clique_witness(*anchor)}};
  for (int cand = 0; cand < n; ++cand) {
    if (x.test(cand) || class1.test(cand)) continue;
    if (!gm.neighbors(cand).intersects(class1)) class1.set(cand);
  }

  VertexSet z = x | class1;
  z = z.complement();
  if (!z.empty()) {
    std::vector<VertexSet> partial;
    partial.push_back(class1);
    for (const auto& c : aligned) partial.push_back(c);
    return {Violation{"leftover set Z nonempty after growing the final class", z, partial, mverdict,
                      std::nullopt}};
  }

  std::vector<VertexSet> all;
  all.push_back(std::move(class1));
  for (auto& c : aligned) all.push_back(std::move(c));
  Partition p{std::move(all)};
  if (!validate_partition(g, p, r))
    return {Violation{"extracted classes do not form a valid partition of the input graph", VertexSet(n),
                      p.classes, mverdict, std::nullopt}};
  return {std::move(p)};
}

}  // namespace partite

#pragma once

// Labeled-graph enumeration over edge masks with freeness pruning, for small
// n. Edge slots follow graph6 column order: (0,1), (0,2), (1,2), (0,3), ...
// A subtree is pruned as soon as a forbidden structure is forced, and pruned
// masks are still counted, so per-shard scanned totals always sum to 2^E.

#include <array>
#include <bit>
#include <cstdint>
#include <utility>

#include "partite/thresholds.hpp"

namespace partite::enumeration {

inline constexpr int kMaxVertices = 9;

struct MaskGraph {
  int n = 0;
  std::array<std::uint32_t, kMaxVertices> adj{};
  std::array<int, kMaxVertices> deg{};
};

inline int edge_slots(int n) { return n * (n - 1) / 2; }

struct SlotTable {
  std::array<std::pair<int, int>, 36> uv{};
  int count = 0;
};

inline SlotTable make_slot_table(int n) {
  SlotTable t;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) t.uv[t.count++] = {u, v};
  return t;
}

// Does `cand` span a clique on t vertices?
inline bool mask_has_clique(const MaskGraph& g, std::uint32_t cand, int t) {
  if (t <= 0) return true;
  if (std::popcount(cand) < t) return false;
  while (cand) {
    int v = std::countr_zero(cand);
    cand &= cand - 1;
    if (mask_has_clique(g, cand & g.adj[v], t - 1)) return true;
  }
  return false;
}

// Is there a walk of even length in [2, max_len] from u to v? Equivalent to
// the new edge uv closing an odd cycle of length <= max_len + 1.
inline bool even_walk_leq(const MaskGraph& g, int u, int v, int max_len) {
  std::uint32_t visited[2] = {1u << u, 0};
  std::uint32_t frontier = 1u << u;
  int parity = 0;
  for (int len = 1; len <= max_len && frontier; ++len) {
    std::uint32_t next = 0;
    std::uint32_t f = frontier;
    while (f) {
      int x = std::countr_zero(f);
      f &= f - 1;
      next |= g.adj[x];
    }
    parity ^= 1;
    next &= ~visited[parity];
    visited[parity] |= next;
    frontier = next;
    if (parity == 0 && ((visited[0] >> v) & 1)) return true;
  }
  return false;
}

struct Guard {
  Mode mode;
  int max_degree = -1;  // optional cap; -1 disables

  bool blocks(const MaskGraph& g, int u, int v) const {
    if (max_degree >= 0 && (g.deg[u] >= max_degree || g.deg[v] >= max_degree)) return true;
    if (mode.is_clique()) return mask_has_clique(g, g.adj[u] & g.adj[v], mode.param - 1);
    return even_walk_leq(g, u, v, 2 * mode.param);
  }
};

struct EnumTotals {
  std::uint64_t scanned = 0;  // masks covered, including pruned subtrees
  std::uint64_t leaves = 0;   // free graphs visited
};

namespace impl {

template <class LeafFn>
void walk(const SlotTable& tab, int slot_count, const Guard& guard, MaskGraph& g, std::uint64_t& mask,
          int i, EnumTotals& totals, LeafFn& leaf) {
  if (i == slot_count) {
    ++totals.scanned;
    ++totals.leaves;
    leaf(static_cast<const MaskGraph&>(g), mask);
    return;
  }
  walk(tab, slot_count, guard, g, mask, i + 1, totals, leaf);  // slot absent
  auto [u, v] = tab.uv[i];
  if (guard.blocks(g, u, v)) {
    totals.scanned += std::uint64_t{1} << (slot_count - i - 1);
    return;
  }
  g.adj[u] |= 1u << v;
  g.adj[v] |= 1u << u;
  ++g.deg[u];
  ++g.deg[v];
  mask |= std::uint64_t{1} << i;
  walk(tab, slot_count, guard, g, mask, i + 1, totals, leaf);
  mask &= ~(std::uint64_t{1} << i);
  g.adj[u] &= ~(1u << v);
  g.adj[v] &= ~(1u << u);
  --g.deg[u];
  --g.deg[v];
}

}  // namespace impl

// Enumerate the free graphs in one shard: the low `prefix_width` edge slots
// are pinned to the bits of `prefix`.
template <class LeafFn>
EnumTotals enumerate_free_shard(int n, const Guard& guard, std::uint64_t prefix, int prefix_width,
                                LeafFn&& leaf) {
  if (n < 1 || n > kMaxVertices) throw ParameterError("enumeration supports 1 <= n <= 9");
  const SlotTable tab = make_slot_table(n);
  const int slots = tab.count;
  if (prefix_width < 0 || prefix_width > slots) throw ParameterError("bad shard prefix width");

  EnumTotals totals;
  MaskGraph g;
  g.n = n;
  std::uint64_t mask = 0;
  for (int i = 0; i < prefix_width; ++i) {
    if (!((prefix >> i) & 1)) continue;
    auto [u, v] = tab.uv[i];
    if (guard.blocks(g, u, v)) {
      // Every mask in this shard contains the forbidden structure.
      totals.scanned = std::uint64_t{1} << (slots - prefix_width);
      return totals;
    }
    g.adj[u] |= 1u << v;
    g.adj[v] |= 1u << u;
    ++g.deg[u];
    ++g.deg[v];
    mask |= std::uint64_t{1} << i;
  }
  impl::walk(tab, slots, guard, g, mask, prefix_width, totals, leaf);
  return totals;
}

}  // namespace partite::enumeration

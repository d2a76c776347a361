#pragma once

// Structure detection: exact clique search, odd girth with witness cycles,
// exact r-partiteness, and the neighborhood profile of an outside vertex on
// a shortest odd cycle.

#include <optional>
#include <vector>

#include "partite/graph.hpp"

namespace partite {

enum class WitnessKind { Clique, OddCycle };

struct Witness {
  WitnessKind kind;
  std::vector<int> vertices;  // clique: ascending; odd cycle: cyclic order
};

struct OddGirth {
  std::optional<int> value;  // odd, >= 3; nullopt when no odd cycle exists
};

struct OddGirthResult {
  OddGirth girth;
  std::optional<Witness> cycle;
};

// Exact backtracking search for a clique on t vertices, degree-descending order.
std::optional<Witness> find_clique(const Graph& g, int t);

// Parity-layered BFS from every vertex; O(n*m). Witness reconstructed from
// parent pointers on the bipartite double cover.
OddGirthResult odd_girth(const Graph& g);

// True iff g has no odd cycle of length <= 2k+1.
bool is_c_le_free(const Graph& g, int k);

// Exact backtracking r-coloring (degree-descending order, first color class
// symmetry-broken). Oracle for cross-checking the constructive partitioner.
std::optional<Partition> r_partition_exact(const Graph& g, int r);

struct CycleProfile {
  enum class Kind { Empty, Single, Pair, Violation };
  Kind kind = Kind::Empty;
  int first = -1;          // cycle position of the first neighbor
  int second = -1;         // cycle position of the second neighbor (Pair)
  std::vector<int> hits;   // neighbors of u on the cycle, as vertices
};

// Profile of N(u) on a shortest odd cycle C. A result outside
// {empty, single, distance-2 pair} is a structural violation report, not a
// panic: the verifier uses it as a falsification probe.
CycleProfile cycle_adjacency_profile(const Graph& g, const Witness& cycle, int u);

namespace detail {
// Clique search restricted to `cand` over explicit adjacency rows; `order`
// lists all vertices in the preferred branching order.
std::optional<std::vector<int>> find_clique_in(const std::vector<VertexSet>& adj, const VertexSet& cand,
                                               int t, const std::vector<int>& order);
std::vector<int> degree_descending_order(const std::vector<VertexSet>& adj);
}  // namespace detail

}  // namespace partite

#pragma once

// Immutable simple graphs over dense vertex ids 0..n-1 with one bitset row
// per vertex. Graph values are safe to share across threads; GraphBuilder is
// the single-owner mutable companion.

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "partite/errors.hpp"

namespace partite {

class VertexSet {
 public:
  VertexSet() : n_(0) {}
  explicit VertexSet(int universe) : n_(universe), w_(words(universe), 0) {
    if (universe < 0) throw ParameterError("vertex set universe must be >= 0");
  }

  static VertexSet full(int universe) {
    VertexSet s(universe);
    for (int v = 0; v < universe; ++v) s.set(v);
    return s;
  }

  static VertexSet of(int universe, std::initializer_list<int> vs) {
    VertexSet s(universe);
    for (int v : vs) s.set(v);
    return s;
  }

  int universe() const { return n_; }

  bool test(int v) const {
    check_range(v);
    return (w_[v >> 6] >> (v & 63)) & 1;
  }
  void set(int v) {
    check_range(v);
    w_[v >> 6] |= 1ull << (v & 63);
  }
  void reset(int v) {
    check_range(v);
    w_[v >> 6] &= ~(1ull << (v & 63));
  }

  int count() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }

  // Lowest member, or -1 when empty.
  int first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return static_cast<int>(i * 64 + std::countr_zero(w_[i]));
    return -1;
  }

  bool intersects(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  bool subset_of(const VertexSet& o) const {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  VertexSet& subtract(const VertexSet& o) {
    check_same(o);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }

  VertexSet complement() const {
    VertexSet s(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) s.w_[i] = ~w_[i];
    s.trim();
    return s;
  }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        fn(static_cast<int>(i * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int v) { out.push_back(v); });
    return out;
  }

  bool operator==(const VertexSet&) const = default;

 private:
  static std::size_t words(int n) { return (static_cast<std::size_t>(n) + 63) / 64; }

  void trim() {
    if (n_ % 64 != 0 && !w_.empty()) w_.back() &= (~0ull) >> (64 - n_ % 64);
  }
  void check_range(int v) const {
    if (v < 0 || v >= n_) throw ContractError("vertex " + std::to_string(v) + " outside universe of size " + std::to_string(n_));
  }
  void check_same(const VertexSet& o) const {
    if (n_ != o.n_) throw ContractError("vertex set universe mismatch");
  }

  int n_;
  std::vector<std::uint64_t> w_;
};

struct DegreeProfile {
  int delta = 0;
  int Delta = 0;
  bool operator==(const DegreeProfile&) const = default;
};

class Graph {
 public:
  static Graph empty(int n) {
    if (n < 1) throw ParameterError("graph needs at least one vertex");
    return Graph(n);
  }

  int order() const { return n_; }
  bool has_edge(int u, int v) const { return adj_[u].test(v); }
  int degree(int v) const { return adj_[v].count(); }
  const VertexSet& neighbors(int v) const {
    if (v < 0 || v >= n_) throw ContractError("vertex out of range");
    return adj_[v];
  }
  const std::vector<VertexSet>& rows() const { return adj_; }

  std::size_t edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : adj_) twice += row.count();
    return twice / 2;
  }

  VertexSet vertices() const { return VertexSet::full(n_); }

  Graph with_edge(int u, int v) const;

  bool operator==(const Graph&) const = default;

 private:
  explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {}
  friend class GraphBuilder;

  int n_;
  std::vector<VertexSet> adj_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int n) : g_(Graph::empty(n)) {}
  explicit GraphBuilder(const Graph& g) : g_(g) {}

  int order() const { return g_.n_; }
  bool has_edge(int u, int v) const { return g_.has_edge(u, v); }
  const VertexSet& neighbors(int v) const { return g_.adj_[v]; }
  const std::vector<VertexSet>& rows() const { return g_.adj_; }

  // Duplicate edges collapse silently; loops are errors.
  void add_edge(int u, int v) {
    if (u == v)
      throw ParameterError("loop edge (" + std::to_string(u) + "," + std::to_string(v) + ") not allowed");
    if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
      throw ParameterError("edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range for n=" + std::to_string(g_.n_));
    g_.adj_[u].set(v);
    g_.adj_[v].set(u);
  }

  Graph build() const { return g_; }

 private:
  Graph g_;
};

inline Graph Graph::with_edge(int u, int v) const {
  GraphBuilder b(*this);
  b.add_edge(u, v);
  return b.build();
}

struct Partition {
  std::vector<VertexSet> classes;
};

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);
DegreeProfile degree_profile(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);
VertexSet common_neighborhood(const Graph& g, const VertexSet& s);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> vertex_of;  // new index -> original vertex
};
InducedSubgraph induced(const Graph& g, const VertexSet& s);

bool validate_partition(const Graph& g, const Partition& p, int r);

}  // namespace partite

#pragma once

// Constructive extraction of the theorems' conclusions: given a graph meeting
// the degree hypothesis, produce an explicit r-partition by following the
// inductive proof; otherwise return a violation certificate.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "partite/detect.hpp"
#include "partite/graph.hpp"
#include "partite/thresholds.hpp"

namespace partite {

// Thrown when a freeness precondition fails; carries the discovered clique.
struct CliquePresentError : Error {
  Witness witness;
  explicit CliquePresentError(Witness w)
      : Error("graph contains a forbidden clique on " + std::to_string(w.vertices.size()) + " vertices"),
        witness(std::move(w)) {}
};

struct Violation {
  std::string step;                           // which proof step halted
  VertexSet leftover;                          // the T or Z certificate (may be empty)
  std::vector<VertexSet> partial_classes;
  std::optional<HypothesisVerdict> hypothesis; // re-verified verdict
  std::optional<Witness> witness;
};

struct PartitionOutcome {
  std::variant<Partition, Violation> result;

  bool is_partition() const { return std::holds_alternative<Partition>(result); }
  const Partition& partition() const { return std::get<Partition>(result); }
  const Violation& violation() const { return std::get<Violation>(result); }
};

// Edge-maximal K_{r+1}-free supergraph on the same vertices. Candidate
// non-edges are scanned in lexicographic order; an edge is added iff the
// endpoints' common neighborhood contains no K_{r-1}. Any r-partition of the
// result is an r-partition of the input.
Graph maximal_completion(const Graph& g, int r);

// Bipartition of a triangle-free graph following the two proof cases of the
// triangle lemma. Greedy local maximality replaces the proof's global
// maximality; the exchange argument only needs single-vertex moves.
PartitionOutcome extract_bipartition(const Graph& g);

// Recursive r-partition extraction mirroring the induction: complete the
// graph, partition the neighborhood of a maximum-degree vertex into r-1
// classes, and grow the final class from a common neighborhood.
PartitionOutcome extract_r_partition(const Graph& g, int r);

}  // namespace partite

#pragma once

// Brute-force ground truth: exhaustive verification of both theorems on all
// small labeled graphs, tightness oracles for the true extremal delta, the
// corollary sweep over the integer grid, and the shortest-odd-cycle profile
// fuzzer.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "partite/detect.hpp"
#include "partite/graph.hpp"
#include "partite/thresholds.hpp"

namespace partite {

struct Counterexample {
  int n = 0;
  std::uint64_t mask = 0;   // edge mask in graph6 column order
  std::string graph6;
  HypothesisVerdict verdict;
  std::string reason;
};

struct VerifyPerN {
  int n = 0;
  std::uint64_t scanned = 0;
  std::uint64_t free_graphs = 0;
  std::uint64_t hypothesis_holds = 0;
  std::uint64_t extractor_fallbacks = 0;
};

struct VerifyReport {
  Mode mode;
  int n_min = 1;
  int n_max = 0;
  int jobs = 1;
  std::vector<VerifyPerN> per_n;
  std::uint64_t scanned_total = 0;
  std::uint64_t free_total = 0;
  std::uint64_t hypothesis_total = 0;
  std::uint64_t extractor_fallbacks = 0;
  std::vector<Counterexample> counterexamples;
  double wall_seconds = 0.0;
};

// All labeled graphs on 1..n_max vertices (n_max <= 8); every free graph
// whose degree profile meets the hypothesis must partition, both by the
// exact oracle and by the constructive extractor. Sharded by a fixed-width
// edge-mask prefix; reports are bit-identical for any worker count.
VerifyReport exhaustive_verify(int n_max, const Mode& mode, int jobs = 1);

struct TightnessResult {
  int n = 0;
  Mode mode;
  int Delta = 0;
  Rational threshold;
  std::optional<int> max_delta;          // none when no free non-partite graph fits
  std::optional<std::string> witness_graph6;
  std::uint64_t scanned = 0;
};

// Maximum delta over labeled free graphs with Delta(G) = Delta that are not
// r-partite (resp. not bipartite); exhaustive for n <= 8.
TightnessResult tightness_oracle(int n, const Mode& mode, int Delta);

struct CorollaryViolation {
  int n = 0, param = 0, delta = 0, Delta = 0;
};

struct CorollaryReport {
  Mode::Family family = Mode::Family::Clique;
  int n_max = 0;
  int param_max = 0;
  std::uint64_t checked = 0;
  std::uint64_t violations = 0;
  std::vector<CorollaryViolation> samples;  // first few violations, if any
};

// Asserts aes_corollary_holds on every integer tuple of the grid.
CorollaryReport corollary_sweep(int n_max, int param_max, Mode::Family family);

struct Fact31Report {
  int requested_samples = 0;
  int n = 0;
  int k = 0;
  std::uint32_t seed = 0;
  std::uint64_t with_odd_cycle = 0;
  std::uint64_t skipped_no_odd_cycle = 0;
  std::uint64_t vertices_checked = 0;
  std::uint64_t violations = 0;
  std::vector<std::string> violation_graph6;  // first few, if any
};

// Random C_{<=2k+1}-free graphs (subgraphs of long-odd-girth blowups plus
// bipartite noise); every outside vertex is profiled against each sample's
// shortest odd cycle.
Fact31Report fact31_fuzz(int samples, int n, int k, std::uint32_t seed = 20240901);

namespace detail {
Graph graph_from_mask(int n, std::uint64_t mask);
}

}  // namespace partite

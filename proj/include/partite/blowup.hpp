#pragma once

// Extremal blowup families: W_r blowups and C_{2k+3} blowups in their two
// Delta regimes, largest-remainder apportionment of the real-valued part
// sizes, and audits comparing realized parameters against targets.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "partite/detect.hpp"
#include "partite/graph.hpp"
#include "partite/rational.hpp"
#include "partite/thresholds.hpp"

namespace partite {

struct Pattern {
  Graph base;
  std::string name;  // e.g. "W3", "C7"
};

// W_r: join of a 5-cycle (classes 1..5) and a clique on r-2 vertices.
Pattern pattern_w(int r);

// Plain cycle on `length` vertices, length >= 3.
Pattern cycle_pattern(int length);

// C_{2k+3} pattern for the odd-cycle family.
Pattern odd_cycle_pattern(int k);

struct BlownGraph {
  Graph graph;
  std::vector<std::pair<int, int>> class_ranges;  // [begin,end) per class; empty classes vanish
};

// Replace class i by an independent set of sizes[i] vertices; pattern edges
// become complete bipartite connections.
BlownGraph blowup(const Graph& pattern, const std::vector<int>& sizes);

enum class Regime { LowDelta, HighDelta };

struct BlowupSpec {
  Pattern pattern;
  Mode mode;
  Regime regime = Regime::LowDelta;
  Rational alpha_or_beta;           // alpha in the low regime, beta in the high one
  std::vector<Rational> real_sizes; // straight from the formulas, before integerization
  std::vector<int> sizes;           // apportioned, sum exactly n
  int target_n = 0;
  int target_Delta = 0;
};

// Raised when the real sizes drift from n by more than the class count;
// carries both sums.
struct ApportionSumError : InfeasibleError {
  Rational real_sum;
  long long target;
  ApportionSumError(Rational sum, long long n)
      : InfeasibleError("real part sizes sum to " + sum.str() + ", target n = " + std::to_string(n) +
                        "; drift exceeds the class count"),
        real_sum(sum),
        target(n) {}
};

// Largest-remainder apportionment: floors first, then the residual one unit
// at a time to the largest fractional remainders, ties to the lowest class
// index. A negative residual is drained from the smallest remainders, ties
// to the highest class index.
std::vector<int> apportion(const std::vector<Rational>& real_sizes, int n);

// Real-size formulas, exposed with a rational Delta so the symbolic
// identities (sum = n, boundary zeros) can be tested on rational sweeps.
std::vector<Rational> clique_low_real_sizes(int n, int r, const Rational& Delta);
std::vector<Rational> clique_high_real_sizes(int n, int r, const Rational& Delta);
std::vector<Rational> odd_low_real_sizes(int n, int k, const Rational& Delta);
std::vector<Rational> odd_high_real_sizes(int n, int k, const Rational& Delta);

BlowupSpec clique_extremal_spec(int n, int r, int Delta);
BlowupSpec odd_extremal_spec(int n, int k, int Delta);

BlownGraph realize(const BlowupSpec& spec);

struct AuditReport {
  int n = 0;                        // realized order
  DegreeProfile profile;            // recomputed from the realized graph
  bool family_free = false;         // K_{r+1}-free resp. C_{<=2k+1}-free
  std::optional<Witness> freeness_witness;
  bool partite = false;             // r-partite resp. bipartite
  Rational threshold_at_realized;   // threshold evaluated at realized Delta
  Rational gap;                     // threshold_at_realized - realized delta
  int target_n = 0;
  int target_Delta = 0;
  int delta_deviation = 0;          // realized Delta - target Delta
  Rational real_size_sum;
  bool size_sum_matches_n = false;
  std::vector<std::string> flags;   // discrepancies; never suppressed
};

// Every field is recomputed from the realized graph, never copied from the
// targets.
AuditReport audit_construction(const BlowupSpec& spec);

}  // namespace partite

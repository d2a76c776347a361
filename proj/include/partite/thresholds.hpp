#pragma once

// Exact evaluation of the minimum-degree thresholds and hypothesis
// predicates, in both rational form and integer-inequality form.

#include <string>

#include "partite/errors.hpp"
#include "partite/rational.hpp"

namespace partite {

struct Mode {
  enum class Family { Clique, Odd };
  Family family = Family::Clique;
  int param = 2;  // r for cliques, k for odd cycles

  static Mode clique(int r) {
    if (r < 2) throw ParameterError("clique family requires r >= 2");
    return {Family::Clique, r};
  }
  static Mode odd(int k) {
    if (k < 1) throw ParameterError("odd-cycle family requires k >= 1");
    return {Family::Odd, k};
  }

  bool is_clique() const { return family == Family::Clique; }
  std::string name() const { return is_clique() ? "clique" : "odd"; }
  // Classes needed by the conclusion: r for cliques, 2 for odd cycles.
  int conclusion_classes() const { return is_clique() ? param : 2; }

  bool operator==(const Mode&) const = default;
};

enum class ThresholdBranch { First, Second };

struct HypothesisVerdict {
  Rational threshold;
  ThresholdBranch branch = ThresholdBranch::First;  // ties report the first branch
  bool holds = false;
  bool integer_form_holds = false;  // must always equal `holds`
};

// min{ ((3r-4)n - Delta)/(3r-2), ((r-1)n - Delta - 1)/(r-1) }
Rational clique_threshold(int n, int r, int Delta);

// min{ (2n - Delta)/(2k+2), (n - 1 - Delta)/k }; k = 1 coincides with the
// triangle case of clique_threshold at r = 2.
Rational odd_threshold(int n, int k, int Delta);

HypothesisVerdict clique_hypothesis(int n, int r, int delta, int Delta);
HypothesisVerdict odd_hypothesis(int n, int k, int delta, int Delta);

// Integer-inequality forms alone (used on hot enumeration paths).
bool clique_hypothesis_integer(int n, int r, int delta, int Delta);
bool odd_hypothesis_integer(int n, int k, int delta, int Delta);

Rational threshold(int n, const Mode& mode, int Delta);
HypothesisVerdict hypothesis(int n, const Mode& mode, int delta, int Delta);

// Classical minimum-degree bound: (3r-4)n/(3r-1) resp. 2n/(2k+3).
Rational classical_bound(int n, const Mode& mode);

// True iff delta > classical bound implies the refined hypothesis holds.
bool aes_corollary_holds(int n, const Mode& mode, int delta, int Delta);

}  // namespace partite

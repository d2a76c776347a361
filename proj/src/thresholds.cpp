#include "partite/thresholds.hpp"

namespace partite {

namespace {

void check_degree_args(int n, int delta, int Delta) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (delta < 0 || Delta < delta || Delta > n - 1)
    throw ParameterError("degrees must satisfy 0 <= delta <= Delta <= n-1");
}

void check_Delta(int n, int Delta) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (Delta < 0 || Delta > n - 1) throw ParameterError("Delta must satisfy 0 <= Delta <= n-1");
}

}  // namespace

Rational clique_threshold(int n, int r, int Delta) {
  if (r < 2) throw ParameterError("clique family requires r >= 2");
  check_Delta(n, Delta);
  Rational b1(static_cast<long long>(3 * r - 4) * n - Delta, 3 * r - 2);
  Rational b2(static_cast<long long>(r - 1) * n - Delta - 1, r - 1);
  return Rational::min(b1, b2);
}

Rational odd_threshold(int n, int k, int Delta) {
  if (k < 1) throw ParameterError("odd-cycle family requires k >= 1");
  check_Delta(n, Delta);
  Rational b1(2LL * n - Delta, 2 * k + 2);
  Rational b2(static_cast<long long>(n) - 1 - Delta, k);
  return Rational::min(b1, b2);
}

bool clique_hypothesis_integer(int n, int r, int delta, int Delta) {
  long long d = delta, D = Delta, nn = n;
  return (3LL * r - 2) * d + D > (3LL * r - 4) * nn || (r - 1LL) * d + D >= (r - 1LL) * nn;
}

bool odd_hypothesis_integer(int n, int k, int delta, int Delta) {
  long long d = delta, D = Delta, nn = n;
  return (2LL * k + 2) * d + D > 2 * nn || static_cast<long long>(k) * d + D + 1 > nn;
}

HypothesisVerdict clique_hypothesis(int n, int r, int delta, int Delta) {
  if (r < 2) throw ParameterError("clique family requires r >= 2");
  check_degree_args(n, delta, Delta);
  Rational b1(static_cast<long long>(3 * r - 4) * n - Delta, 3 * r - 2);
  Rational b2(static_cast<long long>(r - 1) * n - Delta - 1, r - 1);
  HypothesisVerdict v;
  v.threshold = Rational::min(b1, b2);
  v.branch = b1 <= b2 ? ThresholdBranch::First : ThresholdBranch::Second;
  v.holds = Rational(delta) > v.threshold;
  v.integer_form_holds = clique_hypothesis_integer(n, r, delta, Delta);
  return v;
}

HypothesisVerdict odd_hypothesis(int n, int k, int delta, int Delta) {
  if (k < 1) throw ParameterError("odd-cycle family requires k >= 1");
  check_degree_args(n, delta, Delta);
  Rational b1(2LL * n - Delta, 2 * k + 2);
  Rational b2(static_cast<long long>(n) - 1 - Delta, k);
  HypothesisVerdict v;
  v.threshold = Rational::min(b1, b2);
  v.branch = b1 <= b2 ? ThresholdBranch::First : ThresholdBranch::Second;
  v.holds = Rational(delta) > v.threshold;
  v.integer_form_holds = odd_hypothesis_integer(n, k, delta, Delta);
  return v;
}

Rational threshold(int n, const Mode& mode, int Delta) {
  return mode.is_clique() ? clique_threshold(n, mode.param, Delta) : odd_threshold(n, mode.param, Delta);
}

HypothesisVerdict hypothesis(int n, const Mode& mode, int delta, int Delta) {
  return mode.is_clique() ? clique_hypothesis(n, mode.param, delta, Delta)
                          : odd_hypothesis(n, mode.param, delta, Delta);
}

Rational classical_bound(int n, const Mode& mode) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (mode.is_clique()) return Rational(static_cast<long long>(3 * mode.param - 4) * n, 3 * mode.param - 1);
  return Rational(2LL * n, 2 * mode.param + 3);
}

bool aes_corollary_holds(int n, const Mode& mode, int delta, int Delta) {
  check_degree_args(n, delta, Delta);
  if (!(Rational(delta) > classical_bound(n, mode))) return true;  // vacuous
  return hypothesis(n, mode, delta, Delta).holds;
}

}  // namespace partite

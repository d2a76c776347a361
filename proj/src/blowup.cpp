#include "partite/blowup.hpp"

#include <algorithm>
#include <numeric>

namespace partite {

Pattern pattern_w(int r) {
  if (r < 2) throw ParameterError("W_r requires r >= 2");
  GraphBuilder b(r + 3);
  for (int i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);       // the 5-cycle
  for (int i = 0; i < 5; ++i)
    for (int j = 5; j < r + 3; ++j) b.add_edge(i, j);           // join
  for (int i = 5; i < r + 3; ++i)
    for (int j = i + 1; j < r + 3; ++j) b.add_edge(i, j);       // the clique part
  return {b.build(), "W" + std::to_string(r)};
}

Pattern cycle_pattern(int length) {
  if (length < 3) throw ParameterError("cycle pattern needs length >= 3");
  GraphBuilder b(length);
  for (int i = 0; i < length; ++i) b.add_edge(i, (i + 1) % length);
  return {b.build(), "C" + std::to_string(length)};
}

Pattern odd_cycle_pattern(int k) {
  if (k < 1) throw ParameterError("odd-cycle family requires k >= 1");
  return cycle_pattern(2 * k + 3);
}

BlownGraph blowup(const Graph& pattern, const std::vector<int>& sizes) {
  const int m = pattern.order();
  if (static_cast<int>(sizes.size()) != m)
    throw ParameterError("blowup needs one size per pattern class: expected " + std::to_string(m) +
                         ", got " + std::to_string(sizes.size()));
  long long total = 0;
  for (int s : sizes) {
    if (s < 0) throw ParameterError("blowup sizes must be nonnegative");
    total += s;
  }
  if (total < 1) throw ParameterError("blowup has no vertices");

  std::vector<std::pair<int, int>> ranges(m);
  int offset = 0;
  for (int i = 0; i < m; ++i) {
    ranges[i] = {offset, offset + sizes[i]};
    offset += sizes[i];
  }
  GraphBuilder b(static_cast<int>(total));
  for (int i = 0; i < m; ++i) {
    pattern.neighbors(i).for_each([&](int j) {
      if (j <= i) return;
      for (int u = ranges[i].first; u < ranges[i].second; ++u)
        for (int v = ranges[j].first; v < ranges[j].second; ++v) b.add_edge(u, v);
    });
  }
  return {b.build(), std::move(ranges)};
}

std::vector<int> apportion(const std::vector<Rational>& real_sizes, int n) {
  const int m = static_cast<int>(real_sizes.size());
  if (m == 0) throw ParameterError("apportionment needs at least one class");
  Rational sum(0);
  for (int i = 0; i < m; ++i) {
    if (real_sizes[i] < Rational(0))
      throw InfeasibleError("negative real size at class " + std::to_string(i + 1) + ": " + real_sizes[i].str());
    sum = sum + real_sizes[i];
  }
  Rational drift = sum - Rational(n);
  if (drift > Rational(m) || Rational(-m) > drift) throw ApportionSumError(sum, n);

  std::vector<int> sizes(m);
  std::vector<Rational> rem(m, Rational(0));
  long long residual = n;
  for (int i = 0; i < m; ++i) {
    long long fl = real_sizes[i].floor();
    sizes[i] = static_cast<int>(fl);
    rem[i] = real_sizes[i] - Rational(fl);
    residual -= fl;
  }
  if (residual > 0) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (rem[a] == rem[b]) return a < b;
      return rem[b] < rem[a];
    });
    while (residual > 0)
      for (int idx : order) {
        if (residual == 0) break;
        ++sizes[idx];
        --residual;
      }
  } else if (residual < 0) {
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (rem[a] == rem[b]) return a > b;
      return rem[a] < rem[b];
    });
    while (residual < 0)
      for (int idx : order) {
        if (residual == 0) break;
        if (sizes[idx] > 0) {
          --sizes[idx];
          ++residual;
        }
      }
  }
  return sizes;
}

std::vector<Rational> clique_low_real_sizes(int n, int r, const Rational& Delta) {
  Rational alpha = Delta / Rational(n) - Rational(3 * r - 4, 3 * r - 1);
  Rational nn(n);
  Rational big = (Rational(1, 3 * r - 1) + Rational(r, 3 * r - 2) * alpha) * nn;
  Rational small = (Rational(1, 3 * r - 1) - Rational(2 * r - 1, 3 * r - 2) * alpha) * nn;
  Rational hub = (Rational(3, 3 * r - 1) + Rational(1, 3 * r - 2) * alpha) * nn;
  std::vector<Rational> x(r + 3);
  x[0] = x[1] = x[4] = big;
  x[2] = x[3] = small;
  for (int i = 5; i < r + 3; ++i) x[i] = hub;
  return x;
}

std::vector<Rational> clique_high_real_sizes(int n, int r, const Rational& Delta) {
  Rational beta = Delta / Rational(n) - Rational(2 * r - 2, 2 * r - 1);
  Rational nn(n);
  std::vector<Rational> y(r + 3);
  y[0] = (Rational(1, 2 * r - 1) - beta) * nn - Rational(2);
  y[1] = y[4] = (Rational(1, 2 * r - 1) + beta / Rational(2 * r - 2)) * nn;
  y[2] = y[3] = Rational(1);
  for (int i = 5; i < r + 3; ++i) y[i] = (Rational(2, 2 * r - 1) + beta / Rational(r - 1)) * nn;
  return y;
}

std::vector<Rational> odd_low_real_sizes(int n, int k, const Rational& Delta) {
  Rational alpha = Rational(k + 2, 2) * (Delta / Rational(n) - Rational(2, 2 * k + 3));
  Rational nn(n);
  Rational big = (Rational(1, 2 * k + 3) + alpha / Rational(k + 2)) * nn;
  Rational small = (Rational(1, 2 * k + 3) - alpha / Rational(k + 1)) * nn;
  std::vector<Rational> x(2 * k + 3);
  for (int i = 1; i <= 2 * k + 3; ++i)
    x[i - 1] = (i % 4 == 1 || i % 4 == 2) ? big : small;
  return x;
}

std::vector<Rational> odd_high_real_sizes(int n, int k, const Rational& Delta) {
  if (k < 2) throw ParameterError("high-Delta odd family requires k >= 2");
  Rational beta = Delta / Rational(n) - Rational(2, k + 2);
  Rational nn(n);
  const int m = 2 * k + 3;
  std::vector<Rational> y(m);
  Rational big = (Rational(1, k + 2) + beta / Rational(2)) * nn;
  if (k % 2 == 0) {
    Rational mid = (Rational(k, k * (k + 2)) - beta / Rational(k)) * nn - Rational(2 * k + 1, k);
    for (int i = 1; i <= m; ++i) {
      if (i == 1 || i == 3)
        y[i - 1] = big;
      else if (i == 2)
        y[i - 1] = Rational(1);
      else if (i % 4 == 1 || i % 4 == 2)
        y[i - 1] = mid;
      else
        y[i - 1] = Rational(1);
    }
  } else {
    Rational mid2 = (Rational(k, k * (k + 2)) - beta / Rational(k)) * nn - Rational(2 * k + 1, k);
    Rational mid3 = (Rational(k, (k - 1) * (k + 2)) - beta / Rational(k - 1)) * nn - Rational(2 * k, k - 1);
    for (int i = 1; i <= m; ++i) {
      if (i == 1 || i == 3)
        y[i - 1] = big;
      else if (i == 2)
        y[i - 1] = mid2;
      else if (i % 4 == 0 || i % 4 == 1)
        y[i - 1] = Rational(1);
      else
        y[i - 1] = mid3;
    }
  }
  return y;
}

namespace {

void check_construction_args(int n, int Delta) {
  if (n < 1) throw ParameterError("n must be >= 1");
  if (Delta < 0 || Delta > n - 1) throw ParameterError("Delta must satisfy 0 <= Delta <= n-1");
}

void check_nonnegative(const std::vector<Rational>& sizes, const char* family) {
  for (std::size_t i = 0; i < sizes.size(); ++i)
    if (sizes[i] < Rational(0))
      throw InfeasibleError(std::string(family) + " size for class " + std::to_string(i + 1) +
                            " is negative: " + sizes[i].str());
}

}  // namespace

BlowupSpec clique_extremal_spec(int n, int r, int Delta) {
  if (r < 2) throw ParameterError("clique family requires r >= 2");
  check_construction_args(n, Delta);
  Rational DeltaR(Delta);
  Rational boundary(static_cast<long long>(2 * r - 2) * n, 2 * r - 1);
  BlowupSpec spec{pattern_w(r), Mode::clique(r), Regime::LowDelta, Rational(0), {}, {}, n, Delta};
  if (DeltaR < boundary) {
    spec.regime = Regime::LowDelta;
    spec.alpha_or_beta = DeltaR / Rational(n) - Rational(3 * r - 4, 3 * r - 1);
    if (spec.alpha_or_beta < Rational(0))
      throw InfeasibleError("target Delta below (3r-4)n/(3r-1): x1 = x2 = x5 would shrink below the balanced size");
    spec.real_sizes = clique_low_real_sizes(n, r, DeltaR);
  } else {
    spec.regime = Regime::HighDelta;
    spec.alpha_or_beta = DeltaR / Rational(n) - Rational(2 * r - 2, 2 * r - 1);
    spec.real_sizes = clique_high_real_sizes(n, r, DeltaR);
    if (spec.real_sizes[0] < Rational(1))
      throw InfeasibleError("y1 = (1/(2r-1) - beta)n - 2 < 1: target Delta too close to n");
  }
  check_nonnegative(spec.real_sizes, "clique-family");
  spec.sizes = apportion(spec.real_sizes, n);
  return spec;
}

BlowupSpec odd_extremal_spec(int n, int k, int Delta) {
  if (k < 2) throw ParameterError("odd-cycle construction requires k >= 2");
  check_construction_args(n, Delta);
  Rational DeltaR(Delta);
  Rational boundary(2LL * n, k + 2);
  BlowupSpec spec{odd_cycle_pattern(k), Mode::odd(k), Regime::LowDelta, Rational(0), {}, {}, n, Delta};
  if (DeltaR < boundary) {
    spec.regime = Regime::LowDelta;
    spec.alpha_or_beta = Rational(k + 2, 2) * (DeltaR / Rational(n) - Rational(2, 2 * k + 3));
    if (spec.alpha_or_beta < Rational(0))
      throw InfeasibleError("target Delta below 2n/(2k+3): x_i for i = 1,2 (mod 4) would shrink below the balanced size");
    spec.real_sizes = odd_low_real_sizes(n, k, DeltaR);
  } else {
    spec.regime = Regime::HighDelta;
    spec.alpha_or_beta = DeltaR / Rational(n) - Rational(2, k + 2);
    spec.real_sizes = odd_high_real_sizes(n, k, DeltaR);
  }
  check_nonnegative(spec.real_sizes, "odd-family");
  spec.sizes = apportion(spec.real_sizes, n);
  return spec;
}

BlownGraph realize(const BlowupSpec& spec) { return blowup(spec.pattern.base, spec.sizes); }

AuditReport audit_construction(const BlowupSpec& spec) {
  BlownGraph bg = realize(spec);
  const Graph& g = bg.graph;
  const Mode& mode = spec.mode;

  AuditReport rep;
  rep.n = g.order();
  rep.profile = degree_profile(g);
  rep.target_n = spec.target_n;
  rep.target_Delta = spec.target_Delta;

  if (mode.is_clique()) {
    auto w = find_clique(g, mode.param + 1);
    rep.family_free = !w.has_value();
    rep.freeness_witness = std::move(w);
  } else {
    auto res = odd_girth(g);
    rep.family_free = !res.girth.value || *res.girth.value >= 2 * mode.param + 3;
    if (!rep.family_free) rep.freeness_witness = std::move(res.cycle);
  }

  // Blowups with every kept class nonempty are r-partite iff the pattern
  // induced on the nonempty classes is; cross-check by direct coloring at
  // small order.
  const int r_eff = mode.conclusion_classes();
  VertexSet nonempty(spec.pattern.base.order());
  for (int i = 0; i < spec.pattern.base.order(); ++i)
    if (spec.sizes[i] > 0) nonempty.set(i);
  auto sub = induced(spec.pattern.base, nonempty);
  rep.partite = r_partition_exact(sub.graph, r_eff).has_value();
  if (g.order() <= 30) {
    bool direct = r_partition_exact(g, r_eff).has_value();
    if (direct != rep.partite) {
      rep.flags.push_back("partiteness cross-check mismatch between pattern and realized graph");
      rep.partite = direct;
    }
  }

  rep.threshold_at_realized = threshold(rep.n, mode, rep.profile.Delta);
  rep.gap = rep.threshold_at_realized - Rational(rep.profile.delta);
  rep.delta_deviation = rep.profile.Delta - spec.target_Delta;

  rep.real_size_sum = Rational(0);
  for (const auto& s : spec.real_sizes) rep.real_size_sum = rep.real_size_sum + s;
  rep.size_sum_matches_n = rep.real_size_sum == Rational(spec.target_n);

  const int tol = mode.param + 2;
  if (!rep.size_sum_matches_n)
    rep.flags.push_back("real sizes sum to " + rep.real_size_sum.str() + " != n = " +
                        std::to_string(spec.target_n));
  if (rep.delta_deviation > tol || rep.delta_deviation < -tol)
    rep.flags.push_back("realized Delta " + std::to_string(rep.profile.Delta) + " deviates from target " +
                        std::to_string(spec.target_Delta) + " by more than " + std::to_string(tol));
  if (rep.gap > Rational(tol))
    rep.flags.push_back("realized delta " + std::to_string(rep.profile.delta) +
                        " sits more than " + std::to_string(tol) + " below threshold " +
                        rep.threshold_at_realized.str());
  if (Rational(0) > rep.gap)
    rep.flags.push_back("realized delta exceeds the threshold at realized Delta");
  if (!rep.family_free) rep.flags.push_back("realized graph is not family-free");
  bool all_classes_kept = nonempty.count() == spec.pattern.base.order();
  if (rep.partite && all_classes_kept)
    rep.flags.push_back("realized graph is " + std::to_string(r_eff) + "-partite despite full pattern");

  return rep;
}

}  // namespace partite

#include "partite/report.hpp"

#include "partite/graph6.hpp"

namespace partite {

using nlohmann::json;

json to_json(const Rational& r) {
  return json{{"num", r.num()}, {"den", r.den()}, {"str", r.str()}, {"decimal", r.to_double()}};
}

json to_json(const DegreeProfile& p) { return json{{"delta", p.delta}, {"Delta", p.Delta}}; }

json to_json(const Witness& w) {
  return json{{"kind", w.kind == WitnessKind::Clique ? "clique" : "odd-cycle"}, {"vertices", w.vertices}};
}

json to_json(const VertexSet& s) { return json(s.to_vector()); }

json to_json(const Partition& p) {
  json classes = json::array();
  for (const auto& cls : p.classes) classes.push_back(to_json(cls));
  return json{{"classes", classes}};
}

json to_json(const HypothesisVerdict& v) {
  return json{{"threshold", to_json(v.threshold)},
              {"branch", v.branch == ThresholdBranch::First ? "first" : "second"},
              {"holds", v.holds},
              {"integer_form_holds", v.integer_form_holds}};
}

json to_json(const Violation& v) {
  json partial = json::array();
  for (const auto& cls : v.partial_classes) partial.push_back(to_json(cls));
  json j{{"step", v.step}, {"leftover", to_json(v.leftover)}, {"partial_classes", partial}};
  j["hypothesis"] = v.hypothesis ? to_json(*v.hypothesis) : json(nullptr);
  j["witness"] = v.witness ? to_json(*v.witness) : json(nullptr);
  return j;
}

json to_json(const PartitionOutcome& o) {
  if (o.is_partition()) return json{{"outcome", "partition"}, {"partition", to_json(o.partition())}};
  return json{{"outcome", "violation"}, {"violation", to_json(o.violation())}};
}

json to_json(const BlowupSpec& s) {
  json real = json::array();
  for (const auto& x : s.real_sizes) real.push_back(to_json(x));
  return json{{"pattern", s.pattern.name},
              {"family", s.mode.name()},
              {"param", s.mode.param},
              {"regime", s.regime == Regime::LowDelta ? "low-Delta" : "high-Delta"},
              {"alpha_or_beta", to_json(s.alpha_or_beta)},
              {"real_sizes", real},
              {"sizes", s.sizes},
              {"target_n", s.target_n},
              {"target_Delta", s.target_Delta}};
}

json to_json(const AuditReport& a) {
  json j{{"n", a.n},
         {"degree", to_json(a.profile)},
         {"family_free", a.family_free},
         {"partite", a.partite},
         {"threshold_at_realized", to_json(a.threshold_at_realized)},
         {"gap", to_json(a.gap)},
         {"target_n", a.target_n},
         {"target_Delta", a.target_Delta},
         {"delta_deviation", a.delta_deviation},
         {"real_size_sum", to_json(a.real_size_sum)},
         {"size_sum_matches_n", a.size_sum_matches_n},
         {"flags", a.flags}};
  j["freeness_witness"] = a.freeness_witness ? to_json(*a.freeness_witness) : json(nullptr);
  return j;
}

json to_json(const VerifyReport& r) {
  json per_n = json::array();
  for (const auto& row : r.per_n)
    per_n.push_back(json{{"n", row.n},
                         {"scanned", row.scanned},
                         {"free_graphs", row.free_graphs},
                         {"hypothesis_holds", row.hypothesis_holds},
                         {"extractor_fallbacks", row.extractor_fallbacks}});
  json cex = json::array();
  for (const auto& c : r.counterexamples)
    cex.push_back(json{{"n", c.n},
                       {"mask", c.mask},
                       {"graph6", c.graph6},
                       {"hypothesis", to_json(c.verdict)},
                       {"reason", c.reason}});
  return json{{"family", r.mode.name()},
              {"param", r.mode.param},
              {"n_min", r.n_min},
              {"n_max", r.n_max},
              {"jobs", r.jobs},
              {"per_n", per_n},
              {"scanned_total", r.scanned_total},
              {"free_total", r.free_total},
              {"hypothesis_total", r.hypothesis_total},
              {"extractor_fallbacks", r.extractor_fallbacks},
              {"counterexamples", cex},
              {"wall_seconds", r.wall_seconds}};
}

json to_json(const TightnessResult& t) {
  json j{{"n", t.n},
         {"family", t.mode.name()},
         {"param", t.mode.param},
         {"Delta", t.Delta},
         {"threshold", to_json(t.threshold)},
         {"scanned", t.scanned}};
  j["max_delta"] = t.max_delta ? json(*t.max_delta) : json(nullptr);
  j["witness_graph6"] = t.witness_graph6 ? json(*t.witness_graph6) : json(nullptr);
  return j;
}

json to_json(const CorollaryReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back(json{{"n", s.n}, {"param", s.param}, {"delta", s.delta}, {"Delta", s.Delta}});
  return json{{"family", r.family == Mode::Family::Clique ? "clique" : "odd"},
              {"n_max", r.n_max},
              {"param_max", r.param_max},
              {"checked", r.checked},
              {"violations", r.violations},
              {"violation_samples", samples}};
}

json to_json(const Fact31Report& r) {
  return json{{"requested_samples", r.requested_samples},
              {"n", r.n},
              {"k", r.k},
              {"seed", r.seed},
              {"with_odd_cycle", r.with_odd_cycle},
              {"skipped_no_odd_cycle", r.skipped_no_odd_cycle},
              {"vertices_checked", r.vertices_checked},
              {"violations", r.violations},
              {"violation_graph6", r.violation_graph6}};
}

json make_envelope(const std::string& command, json parameters, json results, double timing_ms) {
  return json{{"command", command},
              {"parameters", std::move(parameters)},
              {"results", std::move(results)},
              {"version", kToolkitVersion},
              {"timing_ms", timing_ms}};
}

}  // namespace partite

// Command-line surface: graph6 in/out, JSON reports on stdout, diagnostics
// on stderr. Exit codes: 0 success / zero counterexamples, 1 usage, 2
// verification found counterexamples, 3 input parse failure.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "partite/blowup.hpp"
#include "partite/graph6.hpp"
#include "partite/partitioner.hpp"
#include "partite/report.hpp"
#include "partite/verifier.hpp"

using namespace partite;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitCounterexample = 2;
constexpr int kExitParse = 3;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
};

Graph read_graph(const std::string& path) {
  std::string text;
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file: " + path, 0);
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  // First non-empty line carries the graph.
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    bool blank = true;
    for (char ch : line)
      if (!isspace(static_cast<unsigned char>(ch))) blank = false;
    if (!blank) return graph6_decode(line);
  }
  throw ParseError("no graph6 line found in " + path, 0);
}

Mode make_mode(const std::string& family, int r, int k) {
  if (family == "clique") {
    if (r < 2) throw ParameterError("--family clique needs --r >= 2");
    return Mode::clique(r);
  }
  if (family == "odd") {
    if (k < 1) throw ParameterError("--family odd needs --k >= 1");
    return Mode::odd(k);
  }
  throw ParameterError("--family must be clique or odd");
}

BlowupSpec make_spec(const Mode& mode, int n, int delta_max) {
  return mode.is_clique() ? clique_extremal_spec(n, mode.param, delta_max)
                          : odd_extremal_spec(n, mode.param, delta_max);
}

void emit(const std::string& command, json parameters, json results, const Timer& timer) {
  std::cout << make_envelope(command, std::move(parameters), std::move(results), timer.ms()).dump(2)
            << std::endl;
}

int cmd_construct(const Mode& mode, int n, int delta_max, const std::string& out, bool audit) {
  Timer timer;
  BlowupSpec spec = make_spec(mode, n, delta_max);
  BlownGraph bg = realize(spec);
  std::string encoded = graph6_encode(bg.graph);
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw Error("cannot write " + out);
    f << encoded << "\n";
  }
  json results{{"spec", to_json(spec)}, {"graph6", encoded}, {"n", bg.graph.order()}};
  if (audit) results["audit"] = to_json(audit_construction(spec));
  emit("construct",
       json{{"family", mode.name()},
            {"param", mode.param},
            {"n", n},
            {"delta_max", delta_max},
            {"out", out},
            {"audit", audit}},
       results, timer);
  return kExitOk;
}

int cmd_check(const Mode& mode, const std::string& in) {
  Timer timer;
  Graph g = read_graph(in);
  DegreeProfile prof = degree_profile(g);
  json results{{"n", g.order()}, {"edges", g.edge_count()}, {"degree", to_json(prof)}};

  if (mode.is_clique()) {
    auto w = find_clique(g, mode.param + 1);
    results["free"] = !w.has_value();
    results["freeness_witness"] = w ? to_json(*w) : json(nullptr);
  } else {
    auto res = odd_girth(g);
    bool free = !res.girth.value || *res.girth.value >= 2 * mode.param + 3;
    results["free"] = free;
    results["odd_girth"] = res.girth.value ? json(*res.girth.value) : json(nullptr);
    results["freeness_witness"] = (!free && res.cycle) ? to_json(*res.cycle) : json(nullptr);
  }

  results["threshold"] = to_json(threshold(g.order(), mode, prof.Delta));
  results["hypothesis"] = to_json(hypothesis(g.order(), mode, prof.delta, prof.Delta));
  if (g.order() <= 30) {
    auto part = r_partition_exact(g, mode.conclusion_classes());
    results["partite"] = part.has_value();
  } else {
    results["partite"] = nullptr;  // skipped at this size
  }
  emit("check", json{{"family", mode.name()}, {"param", mode.param}, {"in", in}}, results, timer);
  return kExitOk;
}

int cmd_partition(const std::string& in, int r) {
  Timer timer;
  Graph g = read_graph(in);
  auto outcome = extract_r_partition(g, r);
  json results = to_json(outcome);
  bool counterexample = false;
  if (outcome.is_partition()) {
    bool valid = validate_partition(g, outcome.partition(), r);
    results["validated"] = valid;
    counterexample = !valid;
  } else {
    const auto& v = outcome.violation();
    // A violation under a verified hypothesis would contradict the theorem.
    counterexample = v.hypothesis && v.hypothesis->holds;
  }
  emit("partition", json{{"in", in}, {"r", r}}, results, timer);
  return counterexample ? kExitCounterexample : kExitOk;
}

int cmd_verify(const Mode& mode, int n_max, bool deep, int jobs) {
  Timer timer;
  int cap = deep ? 8 : 7;
  if (n_max > cap)
    throw ParameterError("--n-max " + std::to_string(n_max) + " exceeds the cap " + std::to_string(cap) +
                         (deep ? "" : " (pass --deep to raise it to 8)"));
  auto rep = exhaustive_verify(n_max, mode, jobs);
  emit("verify",
       json{{"family", mode.name()}, {"param", mode.param}, {"n_max", n_max}, {"deep", deep}, {"jobs", jobs}},
       to_json(rep), timer);
  return rep.counterexamples.empty() ? kExitOk : kExitCounterexample;
}

int cmd_tightness(const Mode& mode, int n, int delta_max) {
  Timer timer;
  auto res = tightness_oracle(n, mode, delta_max);
  emit("tightness",
       json{{"family", mode.name()}, {"param", mode.param}, {"n", n}, {"delta_max", delta_max}},
       to_json(res), timer);
  return kExitOk;
}

int cmd_sweep(const Mode& mode, int n, const std::string& range, const std::string& csv_path) {
  Timer timer;
  int lo = 0, hi = 0, step = 1;
  {
    std::vector<std::string> parts;
    std::stringstream ss(range);
    std::string piece;
    while (std::getline(ss, piece, ':')) parts.push_back(piece);
    if (parts.size() < 2 || parts.size() > 3) throw ParameterError("--delta-range expects A:B[:STEP]");
    lo = std::stoi(parts[0]);
    hi = std::stoi(parts[1]);
    if (parts.size() == 3) step = std::stoi(parts[2]);
    if (step < 1 || hi < lo) throw ParameterError("--delta-range expects A <= B and STEP >= 1");
  }
  std::ofstream csv(csv_path, std::ios::binary);
  if (!csv) throw Error("cannot write " + csv_path);
  csv << "delta_max,regime,threshold_num,threshold_den,threshold_dec,realized_delta,realized_Delta,gap\n";
  int rows = 0, infeasible = 0;
  for (int Delta = lo; Delta <= hi; Delta += step) {
    Rational thr = threshold(n, mode, Delta);
    try {
      BlowupSpec spec = make_spec(mode, n, Delta);
      AuditReport audit = audit_construction(spec);
      csv << Delta << ',' << (spec.regime == Regime::LowDelta ? "low" : "high") << ',' << thr.num() << ','
          << thr.den() << ',' << thr.to_double() << ',' << audit.profile.delta << ',' << audit.profile.Delta
          << ',' << audit.gap.str() << "\n";
    } catch (const InfeasibleError&) {
      csv << Delta << ",infeasible," << thr.num() << ',' << thr.den() << ',' << thr.to_double() << ",,,\n";
      ++infeasible;
    }
    ++rows;
  }
  emit("sweep",
       json{{"family", mode.name()},
            {"param", mode.param},
            {"n", n},
            {"delta_range", range},
            {"csv", csv_path}},
       json{{"rows", rows}, {"infeasible", infeasible}}, timer);
  return kExitOk;
}

int cmd_fuzz(int samples, int n, int k, std::uint32_t seed) {
  Timer timer;
  auto rep = fact31_fuzz(samples, n, k, seed);
  emit("fuzz", json{{"fact31", true}, {"samples", samples}, {"n", n}, {"k", k}, {"seed", seed}},
       to_json(rep), timer);
  return rep.violations == 0 ? kExitOk : kExitCounterexample;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"partite: exact toolkit for degree-threshold partiteness of clique-free and short-odd-cycle-free graphs"};
  app.require_subcommand(1);

  std::string family = "clique", in_path, out_path, csv_path, delta_range;
  int r = -1, k = -1, n = 0, delta_max = -1, n_max = 7, jobs = 0, samples = 10000;
  std::uint32_t seed = 20240901;
  bool audit = false, deep = false, fact31 = false;

  auto add_family = [&](CLI::App* cmd) {
    cmd->add_option("--family", family, "clique or odd")->required();
    cmd->add_option("--r", r, "clique parameter r (>= 2)");
    cmd->add_option("--k", k, "odd-cycle parameter k");
  };

  auto* construct = app.add_subcommand("construct", "build an extremal blowup for the given targets");
  add_family(construct);
  construct->add_option("--n", n, "target vertex count")->required();
  construct->add_option("--delta-max", delta_max, "target maximum degree")->required();
  construct->add_option("--out", out_path, "write graph6 to this file");
  construct->add_flag("--audit", audit, "include a full audit of the realized graph");

  auto* check = app.add_subcommand("check", "degree profile, freeness, threshold and hypothesis verdict");
  add_family(check);
  check->add_option("--in", in_path, "graph6 input file (- for stdin)")->required();

  auto* partition = app.add_subcommand("partition", "constructively extract an r-partition");
  partition->add_option("--in", in_path, "graph6 input file (- for stdin)")->required();
  partition->add_option("--r", r, "number of classes")->required();

  auto* verify = app.add_subcommand("verify", "exhaustive theorem check over all labeled graphs");
  add_family(verify);
  verify->add_option("--n-max", n_max, "largest vertex count (cap 7, or 8 with --deep)")->required();
  verify->add_flag("--deep", deep, "raise the exhaustive cap from 7 to 8");
  verify->add_option("--jobs", jobs, "worker threads (default: available parallelism)");

  auto* tightness = app.add_subcommand("tightness", "exact extremal delta for fixed n and Delta");
  add_family(tightness);
  tightness->add_option("--n", n, "vertex count (<= 8)")->required();
  tightness->add_option("--delta-max", delta_max, "required maximum degree")->required();

  auto* sweep = app.add_subcommand("sweep", "CSV of thresholds and realized constructions over Delta targets");
  add_family(sweep);
  sweep->add_option("--n", n, "vertex count")->required();
  sweep->add_option("--delta-range", delta_range, "A:B[:STEP]")->required();
  sweep->add_option("--csv", csv_path, "output CSV path")->required();

  auto* fuzz = app.add_subcommand("fuzz", "randomized structural checks");
  fuzz->add_flag("--fact31", fact31, "profile outside vertices on shortest odd cycles")->required();
  fuzz->add_option("--samples", samples, "number of samples");
  fuzz->add_option("--n", n, "vertex count per sample")->required();
  fuzz->add_option("--k", k, "odd-cycle parameter k")->required();
  fuzz->add_option("--seed", seed, "RNG seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(make_mode(family, r, k), n, delta_max, out_path, audit);
    if (check->parsed()) return cmd_check(make_mode(family, r, k), in_path);
    if (partition->parsed()) return cmd_partition(in_path, r);
    if (verify->parsed()) return cmd_verify(make_mode(family, r, k), n_max, deep, jobs);
    if (tightness->parsed()) return cmd_tightness(make_mode(family, r, k), n, delta_max);
    if (sweep->parsed()) return cmd_sweep(make_mode(family, r, k), n, delta_range, csv_path);
    if (fuzz->parsed()) return cmd_fuzz(samples, n, k, seed);
  } catch (const ParseError& e) {
    std::cerr << "parse error at byte " << e.offset << ": " << e.what() << "\n";
    return kExitParse;
  } catch (const CliquePresentError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

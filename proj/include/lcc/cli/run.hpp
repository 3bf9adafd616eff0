#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lcc/errors.hpp"
#include "lcc/exact/oracle.hpp"
#include "lcc/gap/gap_lab.hpp"
#include "lcc/generators.hpp"
#include "lcc/instances.hpp"
#include "lcc/io/formats.hpp"
#include "lcc/lp/builders.hpp"
#include "lcc/lp/neppc.hpp"
#include "lcc/rounding/cgw.hpp"
#include "lcc/rounding/lemmas.hpp"
#include "lcc/rounding/pivot.hpp"
#include "lcc/two_cluster/two_cluster.hpp"

// Dispatch layer behind the lcc executable. run() turns a validated
// RunConfig into one JSON object per trial; emit() writes them as JSON lines
// or TSV. Nothing here parses argv, so tests drive it directly.

namespace lcc::cli {

using json = nlohmann::json;

/// Partition oracles run automatically up to this size (Bell(10) = 115975).
inline constexpr int kAutoExactNodes = 10;
/// Bipartition oracles are cheaper and run automatically up to this size.
inline constexpr int kAutoTwoClusterNodes = 16;
inline constexpr int kMaxTrials = 100000;

inline const std::set<std::string>& commands() {
  static const std::set<std::string> c = {"solve-lambdacc", "solve-motifcc", "solve-2cc",
                                          "solve-2motif",   "exact",         "gap-demo",
                                          "check-lp"};
  return c;
}

struct RunConfig {
  std::string command;
  /// Instance file. When empty, input_text is parsed instead, and when that
  /// is empty too a random instance of size n is drawn per trial.
  std::string input_path;
  std::string input_text;
  std::optional<double> lambda;
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<int> k;
  std::uint64_t seed = 0;
  std::string algorithm;  // empty picks the command's default
  double tol = 1e-7;
  std::string format = "json";
  int trials = 1;
  double epsilon = 0.01;
  std::optional<PivotRule> pivot_rule;
  ThresholdMode threshold_mode = ThresholdMode::kStrict;
  std::optional<int> n;
  int d = 3;
  double density = 0.5;
  bool run_exact = true;
};

inline PivotRule parse_pivot_rule(const std::string& s) {
  if (s == "random") return PivotRule::kRandom;
  if (s == "lowest") return PivotRule::kLowest;
  if (s == "ratio") return PivotRule::kRatio;
  throw ParameterError("unknown pivot rule '" + s + "' (random, lowest, ratio)");
}

inline ThresholdMode parse_threshold_mode(const std::string& s) {
  if (s == "strict") return ThresholdMode::kStrict;
  if (s == "inclusive") return ThresholdMode::kInclusive;
  throw ParameterError("unknown threshold mode '" + s + "' (strict, inclusive)");
}

inline const char* to_string(ThresholdMode m) {
  return m == ThresholdMode::kStrict ? "strict" : "inclusive";
}

namespace detail {

inline std::string default_algorithm(const std::string& command) {
  if (command == "solve-lambdacc") return "three-lp";
  if (command == "solve-motifcc") return "cgw";
  if (command == "solve-2cc") return "exhaustive";
  if (command == "solve-2motif") return "papt";
  if (command == "exact") return "lambdacc";
  if (command == "check-lp") return "lambdacc";
  return "gap";
}

inline std::set<std::string> allowed_algorithms(const std::string& command) {
  if (command == "solve-2cc") return {"exhaustive", "local-search"};
  if (command == "exact") return {"lambdacc", "cc", "motif", "2cc", "2motif"};
  if (command == "check-lp") return {"lambdacc", "motif"};
  return {default_algorithm(command)};
}

/// Whether the command reads a hypergraph for the chosen algorithm.
inline bool wants_hypergraph(const std::string& command, const std::string& algorithm) {
  return command == "solve-motifcc" || command == "solve-2motif" ||
         (command == "exact" && (algorithm == "motif" || algorithm == "2motif")) ||
         (command == "check-lp" && algorithm == "motif");
}

inline bool needs_lambda(const std::string& command, const std::string& algorithm) {
  return command == "solve-lambdacc" || command == "solve-2cc" ||
         (command == "exact" && (algorithm == "lambdacc" || algorithm == "2cc")) ||
         (command == "check-lp" && algorithm == "lambdacc");
}

inline void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw ParameterError(std::string(name) + " must be finite");
}

}  // namespace detail

/// Checks every field against the preconditions of the operation it will
/// reach and fills in the command's default algorithm.
inline RunConfig validate(RunConfig c) {
  if (!commands().count(c.command)) throw ParameterError("unknown command '" + c.command + "'");
  if (c.algorithm.empty()) c.algorithm = detail::default_algorithm(c.command);
  if (!detail::allowed_algorithms(c.command).count(c.algorithm))
    throw ParameterError("algorithm '" + c.algorithm + "' is not available for " + c.command);
  if (c.trials < 1 || c.trials > kMaxTrials)
    throw ParameterError("trials must lie in [1, " + std::to_string(kMaxTrials) + "]");
  detail::require_finite(c.tol, "tol");
  if (!(c.tol > 0.0 && c.tol < 1e-2)) throw ParameterError("tol must lie in (0, 0.01)");
  if (c.format != "json" && c.format != "tsv")
    throw ParameterError("format must be json or tsv");
  if (!(c.epsilon > 0.0 && c.epsilon < 1.0)) throw ParameterError("epsilon must lie in (0,1)");
  if (!(c.density >= 0.0 && c.density <= 1.0)) throw ParameterError("density must lie in [0,1]");
  if (c.lambda) {
    detail::require_finite(*c.lambda, "lambda");
    LambdaParams{*c.lambda, 0.0}.validate();
  } else if (detail::needs_lambda(c.command, c.algorithm)) {
    throw ParameterError(c.command + " needs --lambda");
  }
  if (c.k && *c.k < 2) throw ParameterError("k must be at least 2");
  if (c.gamma || c.delta) {
    if (c.command != "solve-motifcc" && !(c.command == "check-lp" && c.algorithm == "motif"))
      throw ParameterError("gamma/delta only apply to solve-motifcc and check-lp motif");
    CgwParams{c.gamma.value_or(0.25), c.delta.value_or(0.5)}.validate();
  }
  if (c.pivot_rule) {
    if (c.command == "solve-motifcc" && *c.pivot_rule == PivotRule::kRatio)
      throw ParameterError("the ratio pivot rule is only defined for solve-lambdacc");
    if (c.command != "solve-lambdacc" && c.command != "solve-motifcc")
      throw ParameterError("pivot rule only applies to solve-lambdacc and solve-motifcc");
  }
  if (c.n && *c.n < 1) throw ParameterError("n must be positive");
  if (c.command == "gap-demo") {
    if (c.d < 2) throw ParameterError("gap-demo needs d >= 2");
    if (c.input_path.empty() && c.input_text.empty() && !c.n)
      throw ParameterError("gap-demo needs --n or --input");
  } else if (c.input_path.empty() && c.input_text.empty() && !c.n) {
    throw ParameterError(c.command + " needs --input or --n");
  }
  if (c.n && detail::wants_hypergraph(c.command, c.algorithm) && *c.n < c.k.value_or(3))
    throw ParameterError("n must be at least k");
  return c;
}

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline json instance_summary(const Graph& g) {
  return {{"type", "graph"}, {"n", g.n()}, {"edges", g.num_edges()}};
}

inline json instance_summary(const SignedGraph& sg) {
  std::size_t plus = 0, minus = 0;
  for (int i = 0; i < sg.n(); ++i)
    for (int j = i + 1; j < sg.n(); ++j) {
      plus += sg.plus(i, j) != 0.0;
      minus += sg.minus(i, j) != 0.0;
    }
  return {{"type", "signed_graph"}, {"n", sg.n()}, {"positive", plus}, {"negative", minus}};
}

inline json instance_summary(const SignedHypergraph& h) {
  return {{"type", "hypergraph"},
          {"k", h.k()},
          {"n", h.n()},
          {"hyperedges", h.size()},
          {"probability_constrained", h.probability_constrained()},
          {"unweighted", h.unweighted()},
          {"complete", h.is_complete()}};
}

inline json clusters_json(const Clustering& c) { return c.normalized().clusters(); }

inline json optional_json(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

inline json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

/// Fields shared by every solve/exact report.
inline json base_report(const RunConfig& c, std::uint64_t seed, json instance) {
  return {{"command", c.command}, {"seed", seed}, {"instance", std::move(instance)}};
}

inline void put_certificate(json& r, const RoundingCertificate& cert) {
  r["algorithm"] = cert.algorithm;
  json params = json::object();
  for (const auto& [k, v] : cert.params) params[k] = v;
  r["params"] = std::move(params);
  r["objective"] = cert.rounded_objective;
  r["lp_bound"] = optional_json(cert.lp_objective);
  r["guarantee"] = optional_json(cert.guarantee);
  r["ratio_vs_lp"] = optional_json(cert.ratio_vs_lp());
  r["note"] = cert.note;
}

inline void put_exact(json& r, double exact) {
  r["exact_objective"] = exact;
  r["ratio_vs_exact"] = finite_or_null(cost_ratio(r["objective"].get<double>(), exact));
}

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

/// Instance source: parsed once from text, or drawn per trial from the seed.
class Source {
 public:
  explicit Source(const RunConfig& c) : c_(c) {
    if (!c.input_path.empty()) text_ = read_file(c.input_path);
    else text_ = c.input_text;
  }

  bool from_text() const { return !text_.empty(); }

  Graph graph(std::uint64_t seed) const {
    if (from_text()) return io::parse_graph(text_);
    return gen::random_graph(*c_.n, c_.density, seed);
  }

  SignedGraph signed_graph(std::uint64_t seed) const {
    if (from_text()) return io::parse_signed_graph(text_);
    return build_lambdacc_instance(graph(seed), LambdaParams{c_.lambda.value_or(0.5), 0.0});
  }

  /// Drawn instances are complete: probability-constrained for the LP
  /// commands, unweighted with positive share `density` for the two-cluster ones.
  SignedHypergraph hypergraph(std::uint64_t seed) const {
    if (from_text()) {
      auto h = io::parse_hypergraph(text_);
      if (c_.k && *c_.k != h.k())
        throw InputError("--k " + std::to_string(*c_.k) + " does not match the input's k = " +
                         std::to_string(h.k()));
      return h;
    }
    const int k = c_.k.value_or(3);
    if (c_.command == "solve-2motif" || c_.algorithm == "2motif")
      return gen::random_unweighted_hypergraph(k, *c_.n, c_.density, seed);
    if (c_.lambda) {
      const auto signs = gen::random_tuple_signs(k, *c_.n, c_.density, seed);
      return build_lambda_hypergraph(signs, *c_.n, k, LambdaParams{*c_.lambda, 0.0}).hypergraph;
    }
    return gen::random_probability_hypergraph(k, *c_.n, seed);
  }

 private:
  const RunConfig& c_;
  std::string text_;
};

inline json run_lambdacc(const RunConfig& c, const Source& src, std::uint64_t seed) {
  const auto g = src.graph(seed);
  const LambdaParams p{*c.lambda, 0.0};
  const auto sg = build_lambdacc_instance(g, p);
  ThreeLpOptions opt;
  opt.seed = seed;
  opt.rule = c.pivot_rule.value_or(PivotRule::kRandom);
  opt.mode = c.threshold_mode;
  opt.tol = c.tol;
  Stopwatch sw;
  const auto res = three_lp(sg, p, opt);
  auto r = base_report(c, seed, instance_summary(g));
  put_certificate(r, res.certificate);
  r["params"]["pivot_rule"] = to_string(opt.rule);
  r["params"]["threshold_mode"] = to_string(opt.mode);
  r["clusters"] = clusters_json(res.clustering);
  if (c.run_exact && g.n() <= kAutoExactNodes) put_exact(r, exact_cc(sg).cost);
  r["wall_time_ms"] = sw.ms();
  return r;
}

inline json run_motifcc(const RunConfig& c, const Source& src, std::uint64_t seed) {
  const auto h = src.hypergraph(seed);
  CgwOptions opt;
  if (c.gamma || c.delta) {
    const auto def = cgw_default_params(h.k());
    opt.params = CgwParams{c.gamma.value_or(def.gamma), c.delta.value_or(def.delta)};
  }
  opt.rule = c.pivot_rule.value_or(PivotRule::kLowest);
  opt.seed = seed;
  opt.tol = c.tol;
  opt.lambda = c.lambda;
  Stopwatch sw;
  const auto res = cgw_solve(h, opt);
  auto r = base_report(c, seed, instance_summary(h));
  put_certificate(r, res.certificate);
  r["params"]["pivot_rule"] = to_string(opt.rule);
  r["rounds"] = res.trace.size();
  r["clusters"] = clusters_json(res.clustering);
  if (c.run_exact && h.n() <= kAutoExactNodes) put_exact(r, exact_motif(h).cost);
  r["wall_time_ms"] = sw.ms();
  return r;
}

inline json run_2cc(const RunConfig& c, const Source& src, std::uint64_t seed) {
  const auto g = src.graph(seed);
  const LambdaParams p{*c.lambda, 0.0};
  const auto sg = build_lambdacc_instance(g, p);
  Stopwatch sw;
  const auto cut = reduce_2lcc_to_minuncut(sg, p);
  MinUncutOptions opt;
  opt.mode = c.algorithm == "local-search" ? MinUncutMode::kLocalSearch : MinUncutMode::kExhaustive;
  opt.seed = seed;
  const auto res = min_uncut_solve(cut, opt);
  Bipartition original{std::vector<char>(res.bipartition.side.begin(),
                                         res.bipartition.side.begin() + g.n())};
  const auto clustering = original.to_clustering();
  auto r = base_report(c, seed, instance_summary(g));
  r["algorithm"] = "min_uncut_" + c.algorithm;
  r["params"] = {{"lambda", p.lambda}, {"gadget_nodes", cut.n_total}};
  r["objective"] = cc_objective(sg, clustering);
  r["uncut"] = res.uncut;
  r["lp_bound"] = nullptr;
  r["ratio_vs_lp"] = nullptr;
  // Exhaustive search over the gadget is exact for the two-cluster problem.
  r["guarantee"] = opt.mode == MinUncutMode::kExhaustive ? json(1.0) : json(nullptr);
  r["note"] = opt.mode == MinUncutMode::kExhaustive ? "exact over all bipartitions"
                                                    : "local search: no proven factor";
  r["clusters"] = clusters_json(clustering);
  if (c.run_exact && g.n() <= kAutoTwoClusterNodes) put_exact(r, two_cluster_exact(sg).cost);
  r["wall_time_ms"] = sw.ms();
  return r;
}

inline json run_2motif(const RunConfig& c, const Source& src, std::uint64_t seed) {
  const auto h = src.hypergraph(seed);
  Stopwatch sw;
  const auto res = pick_a_pivot_tuple(h);
  auto r = base_report(c, seed, instance_summary(h));
  put_certificate(r, res.certificate);
  r["pivot_tuple"] = res.pivot_tuple;
  r["clusters"] = clusters_json(res.bipartition.to_clustering());
  if (c.run_exact && h.n() <= kAutoTwoClusterNodes) put_exact(r, two_cluster_exact(h).cost);
  r["wall_time_ms"] = sw.ms();
  return r;
}

inline json exact_report(const RunConfig& c, std::uint64_t seed, json instance,
                         const std::string& algorithm, double cost, const Clustering& clustering) {
  auto r = base_report(c, seed, std::move(instance));
  r["algorithm"] = algorithm;
  r["params"] = json::object();
  if (c.lambda) r["params"]["lambda"] = *c.lambda;
  r["objective"] = cost;
  r["lp_bound"] = nullptr;
  r["guarantee"] = 1.0;
  r["ratio_vs_lp"] = nullptr;
  r["clusters"] = clusters_json(clustering);
  return r;
}

inline json run_exact_cmd(const RunConfig& c, const Source& src, std::uint64_t seed) {
  Stopwatch sw;
  json r;
  const auto& a = c.algorithm;
  if (a == "lambdacc" || a == "2cc") {
    const auto g = src.graph(seed);
    const auto sg = build_lambdacc_instance(g, LambdaParams{*c.lambda, 0.0});
    if (a == "lambdacc") {
      const auto e = exact_cc(sg);
      r = exact_report(c, seed, instance_summary(g), "exact_cc", e.cost, e.clustering);
      r["partitions_evaluated"] = e.partitions_evaluated;
    } else {
      const auto e = two_cluster_exact(sg);
      r = exact_report(c, seed, instance_summary(g), "two_cluster_exact", e.cost,
                       e.bipartition.to_clustering());
    }
  } else if (a == "cc") {
    const auto sg = src.signed_graph(seed);
    const auto e = exact_cc(sg);
    r = exact_report(c, seed, instance_summary(sg), "exact_cc", e.cost, e.clustering);
    r["partitions_evaluated"] = e.partitions_evaluated;
  } else {
    const auto h = src.hypergraph(seed);
    if (a == "motif") {
      const auto e = exact_motif(h);
      r = exact_report(c, seed, instance_summary(h), "exact_motif", e.cost, e.clustering);
      r["partitions_evaluated"] = e.partitions_evaluated;
    } else {
      const auto e = two_cluster_exact(h);
      r = exact_report(c, seed, instance_summary(h), "two_cluster_exact", e.cost,
                       e.bipartition.to_clustering());
    }
  }
  r["wall_time_ms"] = sw.ms();
  return r;
}

inline json gap_json(const GapReport& g) {
  return {{"n", g.n},
          {"d", g.d},
          {"seed", g.seed},
          {"epsilon", g.epsilon},
          {"lambda_star", g.lambda_star},
          {"S_star", g.S_star},
          {"expansion_c", g.expansion_c},
          {"lambda_used", g.lambda_used},
          {"lambda_clamped", g.lambda_clamped},
          {"witness_edge_value", g.witness_edge_value},
          {"witness_cost", g.witness_cost},
          {"lp_opt", g.lp_opt},
          {"exact_opt", optional_json(g.exact_opt)},
          {"gap_ratio", optional_json(g.gap_ratio)},
          {"bound_chain", g.bound_chain},
          {"witness_feasible", g.witness_feasible},
          {"lp_below_witness", g.lp_below_witness},
          {"lp_below_exact", g.lp_below_exact},
          {"invariants_ok", g.all_invariants()}};
}

inline json run_gap(const RunConfig& c, const Source& src, std::uint64_t seed) {
  Stopwatch sw;
  Graph g = src.from_text() ? src.graph(seed) : random_regular_graph(*c.n, c.d, seed);
  const int d = src.from_text() ? g.regular_degree().value_or(-1) : c.d;
  if (d < 2) throw InputError("gap-demo: input graph must be d-regular with d >= 2");
  auto r = gap_json(gap_report(g, d, c.epsilon, seed));
  r["command"] = c.command;
  r["wall_time_ms"] = sw.ms();
  return r;
}

inline json run_check_lambdacc(const RunConfig& c, const Source& src, std::uint64_t seed) {
  const auto g = src.graph(seed);
  const LambdaParams p{*c.lambda, 0.0};
  const auto sg = build_lambdacc_instance(g, p);
  Stopwatch sw;
  const auto model = build_cc_lp(sg);
  const auto sol = lp::solve_lp(model.model, c.tol);
  if (!sol.optimal())
    throw SolverError(std::string("check-lp: LP solve ended with status ") + lp::to_string(sol.status));
  const auto x = model.distances(sol);
  const double row_violation = model.model.max_violation(sol.x);
  const auto tri = check_triangle_feasible(x, 1e-6);
  const auto neppc = solve_neppc(g, p, c.tol);
  const bool neppc_ok = neppc.solution.optimal();
  const double neppc_diff =
      neppc_ok ? std::abs(neppc.solution.objective_value - sol.objective_value) : INFINITY;
  const auto pg = build_pivot_graph(x, 1.0 / 3.0, c.threshold_mode);
  const auto costs = lp_pair_costs(sg, x);
  const auto vzw = check_vzw_conditions(sg, pg, costs, alpha_guarantee(p.lambda), 1e-6);
  auto r = base_report(c, seed, instance_summary(g));
  r["algorithm"] = "audit_lambdacc";
  r["params"] = {{"lambda", p.lambda}, {"threshold_mode", to_string(c.threshold_mode)}};
  r["lp_objective"] = sol.objective_value;
  r["lp_iterations"] = sol.iterations;
  r["max_row_violation"] = row_violation;
  r["triangle_violations"] = tri.size();
  r["neppc_objective"] = neppc_ok ? json(neppc.solution.objective_value) : json(nullptr);
  r["neppc_rounds"] = neppc.rounds;
  r["neppc_cuts"] = neppc.constraints.size();
  r["neppc_matches"] = neppc_diff <= 1e-5;
  r["vzw_violations"] = vzw.size();
  r["ok"] = row_violation <= 1e-6 && tri.empty() && neppc_diff <= 1e-5 && vzw.empty();
  r["wall_time_ms"] = sw.ms();
  return r;
}

inline json run_check_motif(const RunConfig& c, const Source& src, std::uint64_t seed) {
  const auto h = src.hypergraph(seed);
  const auto def = cgw_default_params(h.k());
  const CgwParams params{c.gamma.value_or(def.gamma), c.delta.value_or(def.delta)};
  Stopwatch sw;
  const auto model = build_motif_lp(h);
  const auto sol = lp::solve_lp(model.model, c.tol);
  if (!sol.optimal())
    throw SolverError(std::string("check-lp: LP solve ended with status ") + lp::to_string(sol.status));
  const auto x = model.distances(sol);
  const auto xE = model.hyperedge_values(sol, h.k());
  const double row_violation = model.model.max_violation(sol.x);
  const auto tri = check_triangle_feasible(x, 1e-6);
  const auto l1 = check_lemma1(h, x, xE, 1e-6);
  // Lemmas 2 and 3 presuppose every k-tuple is present.
  std::size_t l23 = 0;
  if (h.is_complete()) l23 = check_lemmas_all_pivots(h, x, xE, params.gamma, 1e-6).size();
  auto r = base_report(c, seed, instance_summary(h));
  r["algorithm"] = "audit_motif";
  r["params"] = {{"gamma", params.gamma}, {"delta", params.delta}, {"k", h.k()}};
  r["lp_objective"] = sol.objective_value;
  r["lp_iterations"] = sol.iterations;
  r["max_row_violation"] = row_violation;
  r["triangle_violations"] = tri.size();
  r["lemma1_failures"] = l1.size();
  r["lemma23_failures"] = h.is_complete() ? json(l23) : json(nullptr);
  r["ok"] = row_violation <= 1e-6 && tri.empty() && l1.empty() && l23 == 0;
  r["wall_time_ms"] = sw.ms();
  return r;
}

inline json run_one(const RunConfig& c, const Source& src, std::uint64_t seed) {
  if (c.command == "solve-lambdacc") return run_lambdacc(c, src, seed);
  if (c.command == "solve-motifcc") return run_motifcc(c, src, seed);
  if (c.command == "solve-2cc") return run_2cc(c, src, seed);
  if (c.command == "solve-2motif") return run_2motif(c, src, seed);
  if (c.command == "exact") return run_exact_cmd(c, src, seed);
  if (c.command == "gap-demo") return run_gap(c, src, seed);
  if (c.algorithm == "motif") return run_check_motif(c, src, seed);
  return run_check_lambdacc(c, src, seed);
}

inline void flatten(const json& j, const std::string& prefix,
                    std::vector<std::pair<std::string, std::string>>& out) {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
    const auto& v = it.value();
    if (v.is_object()) flatten(v, key, out);
    else if (v.is_array()) continue;  // clusters and node lists stay JSON-only
    else if (v.is_null()) out.emplace_back(key, "NA");
    else if (v.is_string()) out.emplace_back(key, v.get<std::string>());
    else out.emplace_back(key, v.dump());
  }
}

}  // namespace detail

/// One report per trial, in seed order seed, seed+1, ...
inline std::vector<json> run(const RunConfig& config) {
  const auto c = validate(config);
  const detail::Source src(c);
  std::vector<json> out;
  out.reserve(c.trials);
  for (int t = 0; t < c.trials; ++t) out.push_back(detail::run_one(c, src, c.seed + t));
  return out;
}

/// JSON lines, or a TSV table whose columns are the scalar fields of the
/// first report with nested objects dotted.
inline std::string emit(const std::vector<json>& reports, const std::string& format) {
  std::ostringstream os;
  if (format == "json") {
    for (const auto& r : reports) os << r.dump() << '\n';
    return os.str();
  }
  if (format != "tsv") throw ParameterError("format must be json or tsv");
  if (reports.empty()) return "";
  std::vector<std::pair<std::string, std::string>> first;
  detail::flatten(reports.front(), "", first);
  for (std::size_t i = 0; i < first.size(); ++i) os << (i ? "\t" : "") << first[i].first;
  os << '\n';
  for (const auto& r : reports) {
    std::vector<std::pair<std::string, std::string>> row;
    detail::flatten(r, "", row);
    std::map<std::string, std::string> by_key(row.begin(), row.end());
    for (std::size_t i = 0; i < first.size(); ++i) {
      auto it = by_key.find(first[i].first);
      os << (i ? "\t" : "") << (it == by_key.end() ? "NA" : it->second);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace lcc::cli

// lcc: command-line front end for the correlation clustering toolkit.
//
//   lcc solve-lambdacc --input g.txt --lambda 0.5 --seed 7
//   lcc gap-demo --n 10 --d 3 --seed 1
//
// Exit codes: 0 success, 2 parse/input error, 3 parameter error,
// 4 size cap, 5 solver failure.

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lcc/cli/run.hpp"

int main(int argc, char** argv) {
  lcc::cli::RunConfig cfg;
  std::string pivot_rule, threshold_mode;
  bool no_exact = false;

  CLI::App app{"Correlation clustering toolkit: LP rounding, two-cluster algorithms, exact oracles"};
  app.add_option("command", cfg.command, "solve-lambdacc | solve-motifcc | solve-2cc | "
                                         "solve-2motif | exact | gap-demo | check-lp")
      ->required();
  app.add_option("--input,-i", cfg.input_path, "instance file (graph, signed graph or hypergraph)");
  app.add_option("--lambda", cfg.lambda, "LambdaCC resolution in (0,1)");
  app.add_option("--gamma", cfg.gamma, "CGW near-set radius");
  app.add_option("--delta", cfg.delta, "CGW absorption fraction");
  app.add_option("--k", cfg.k, "tuple size for drawn hypergraphs");
  app.add_option("--seed", cfg.seed, "base seed; trial t uses seed + t");
  app.add_option("--trials", cfg.trials, "number of seeded trials");
  app.add_option("--tol", cfg.tol, "LP tolerance");
  app.add_option("--epsilon", cfg.epsilon, "gap-demo lambda perturbation");
  app.add_option("--algorithm", cfg.algorithm, "variant; see README");
  app.add_option("--pivot-rule", pivot_rule, "random | lowest | ratio");
  app.add_option("--threshold-mode", threshold_mode, "strict | inclusive");
  app.add_option("--format", cfg.format, "json | tsv");
  app.add_option("--n", cfg.n, "size of a drawn instance when no --input is given");
  app.add_option("--d", cfg.d, "degree for gap-demo");
  app.add_option("--density", cfg.density, "edge or positive-tuple probability of drawn instances");
  app.add_flag("--no-exact", no_exact, "skip the automatic oracle comparison");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 3;
  }

  try {
    if (!pivot_rule.empty()) cfg.pivot_rule = lcc::cli::parse_pivot_rule(pivot_rule);
    if (!threshold_mode.empty()) cfg.threshold_mode = lcc::cli::parse_threshold_mode(threshold_mode);
    cfg.run_exact = !no_exact;
    std::cout << lcc::cli::emit(lcc::cli::run(cfg), cfg.format);
  } catch (const lcc::Error& e) {
    std::fprintf(stderr, "lcc: %s\n", e.what());
    return e.exit_code();
  } catch (const std::exception& e) {
    std::fprintf(stderr, "lcc: internal error: %s\n", e.what());
    return 1;
  }
  return 0;
}

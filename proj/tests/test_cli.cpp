#include <gtest/gtest.h>

#include "lcc/cli/run.hpp"

using namespace lcc;
using cli::RunConfig;

namespace {

RunConfig config(std::string command) {
  RunConfig c;
  c.command = std::move(command);
  return c;
}

cli::json strip_time(cli::json j) {
  j.erase("wall_time_ms");
  return j;
}

}  // namespace

TEST(Validate, Errors) {
  auto c = config("solve-lambdacc");
  c.n = 5;
  EXPECT_THROW(cli::validate(c), ParameterError);  // no lambda
  c.lambda = 1.5;
  EXPECT_THROW(cli::validate(c), ParameterError);
  c.lambda = 0.5;
  EXPECT_EQ(cli::validate(c).algorithm, "three-lp");
  c.trials = 0;
  EXPECT_THROW(cli::validate(c), ParameterError);
  c.trials = 1;
  c.format = "xml";
  EXPECT_THROW(cli::validate(c), ParameterError);
  c.format = "json";
  c.gamma = 0.2;
  EXPECT_THROW(cli::validate(c), ParameterError);  // gamma on the wrong command
  c.gamma.reset();
  c.n.reset();
  EXPECT_THROW(cli::validate(c), ParameterError);  // no input

  EXPECT_THROW(cli::validate(config("frobnicate")), ParameterError);
  auto m = config("solve-motifcc");
  m.n = 5;
  m.pivot_rule = PivotRule::kRatio;
  EXPECT_THROW(cli::validate(m), ParameterError);
  m.pivot_rule.reset();
  m.gamma = 2.0;
  EXPECT_THROW(cli::validate(m), ParameterError);
  m.gamma = 0.25;
  EXPECT_NO_THROW(cli::validate(m));
  m.algorithm = "papt";
  EXPECT_THROW(cli::validate(m), ParameterError);
  EXPECT_THROW(cli::parse_pivot_rule("best"), ParameterError);
  EXPECT_THROW(cli::parse_threshold_mode("loose"), ParameterError);
}

TEST(Run, LambdaccP3) {
  auto c = config("solve-lambdacc");
  c.input_text = "3 2\n0 1\n1 2\n";
  c.lambda = 0.5;
  c.seed = 7;
  const auto r = cli::run(c).at(0);
  EXPECT_DOUBLE_EQ(r["objective"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(r["guarantee"].get<double>(), 3.0);
  EXPECT_DOUBLE_EQ(r["ratio_vs_exact"].get<double>(), 1.0);
  EXPECT_EQ(r["seed"].get<std::uint64_t>(), 7u);
  for (const char* key : {"command", "instance", "algorithm", "params", "lp_bound", "ratio_vs_lp",
                          "clusters", "exact_objective", "wall_time_ms"})
    EXPECT_TRUE(r.contains(key)) << key;
}

TEST(Run, TwoMotifAllPositive) {
  auto c = config("solve-2motif");
  c.input_text = "3 4 4\n0 1 2 1 0\n0 1 3 1 0\n0 2 3 1 0\n1 2 3 1 0\n";
  const auto r = cli::run(c).at(0);
  EXPECT_DOUBLE_EQ(r["objective"].get<double>(), 0.0);
}

TEST(Run, GapDemo) {
  auto c = config("gap-demo");
  c.n = 10;
  c.d = 3;
  c.seed = 1;
  const auto r = cli::run(c).at(0);
  EXPECT_TRUE(r["invariants_ok"].get<bool>());
  EXPECT_TRUE(r["bound_chain"].get<bool>());
  EXPECT_TRUE(r["witness_feasible"].get<bool>());
  EXPECT_GE(r["gap_ratio"].get<double>(), 1.0 - 1e-6);
}

TEST(Run, DeterministicApartFromWallTime) {
  for (const char* cmd : {"solve-lambdacc", "solve-motifcc", "solve-2cc", "solve-2motif", "check-lp"}) {
    auto c = config(cmd);
    c.n = 7;
    c.trials = 3;
    c.seed = 11;
    if (std::string(cmd) != "solve-motifcc" && std::string(cmd) != "solve-2motif") c.lambda = 0.3;
    auto a = cli::run(c), b = cli::run(c);
    ASSERT_EQ(a.size(), 3u);
    for (std::size_t t = 0; t < a.size(); ++t) {
      EXPECT_EQ(strip_time(a[t]).dump(), strip_time(b[t]).dump()) << cmd;
      EXPECT_EQ(a[t]["seed"].get<std::uint64_t>(), 11 + t);
    }
  }
}

TEST(Run, RatiosWithinBounds) {
  const double tol = 1e-6;
  struct Case {
    const char* command;
    std::optional<double> lambda;
    const char* algorithm;
  };
  for (const Case& k : {Case{"solve-lambdacc", 0.2, ""}, Case{"solve-lambdacc", 0.6, ""},
                        Case{"solve-motifcc", std::nullopt, ""}, Case{"solve-motifcc", 0.5, ""},
                        Case{"solve-2cc", 0.4, ""}, Case{"solve-2cc", 0.4, "local-search"},
                        Case{"solve-2motif", std::nullopt, ""}}) {
    auto c = config(k.command);
    c.n = 8;
    c.trials = 5;
    c.lambda = k.lambda;
    c.algorithm = k.algorithm;
    for (const auto& r : cli::run(c)) {
      if (!r["ratio_vs_lp"].is_null()) EXPECT_GE(r["ratio_vs_lp"].get<double>(), 1.0 - tol) << k.command;
      ASSERT_TRUE(r.contains("ratio_vs_exact")) << k.command;
      if (!r["guarantee"].is_null() && !r["ratio_vs_exact"].is_null())
        EXPECT_LE(r["ratio_vs_exact"].get<double>(), r["guarantee"].get<double>() + tol) << k.command;
    }
  }
}

TEST(Run, ExactCommand) {
  auto c = config("exact");
  c.algorithm = "cc";
  c.input_text = "3 2 1\n0 1 0.5\n0 2 0.5\n1 2 0.5\n";
  const auto r = cli::run(c).at(0);
  EXPECT_DOUBLE_EQ(r["objective"].get<double>(), 0.5);
  EXPECT_EQ(r["partitions_evaluated"].get<std::uint64_t>(), 5u);

  auto big = config("exact");
  big.lambda = 0.5;
  big.n = 13;
  EXPECT_THROW(cli::run(big), SizeCapError);
}

TEST(Run, CheckLp) {
  auto c = config("check-lp");
  c.n = 7;
  c.lambda = 0.4;
  c.trials = 2;
  for (const auto& r : cli::run(c)) {
    EXPECT_TRUE(r["ok"].get<bool>());
    EXPECT_TRUE(r["neppc_matches"].get<bool>());
  }
  auto m = config("check-lp");
  m.algorithm = "motif";
  m.n = 6;
  const auto r = cli::run(m).at(0);
  EXPECT_TRUE(r["ok"].get<bool>());
  EXPECT_EQ(r["lemma23_failures"].get<int>(), 0);
}

TEST(Run, InputErrors) {
  auto c = config("solve-lambdacc");
  c.lambda = 0.5;
  c.input_text = "3 1\n1 1\n";
  EXPECT_THROW(cli::run(c), ParseError);
  c.input_text.clear();
  c.input_path = "/nonexistent/file.graph";
  EXPECT_THROW(cli::run(c), InputError);
  auto m = config("solve-motifcc");
  m.input_text = "3 4 1\n0 1 2 1 0\n";
  m.k = 4;
  EXPECT_THROW(cli::run(m), InputError);
}

TEST(Emit, JsonLinesAndTsv) {
  auto c = config("gap-demo");
  c.n = 8;
  c.trials = 2;
  const auto reports = cli::run(c);
  const auto js = cli::emit(reports, "json");
  EXPECT_EQ(std::count(js.begin(), js.end(), '\n'), 2);
  const auto tsv = cli::emit(reports, "tsv");
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 3);
  const auto header = tsv.substr(0, tsv.find('\n'));
  EXPECT_NE(header.find("lambda_star"), std::string::npos);
  EXPECT_NE(header.find("invariants_ok"), std::string::npos);
  EXPECT_EQ(header.find("S_star"), std::string::npos);  // arrays stay JSON-only
}

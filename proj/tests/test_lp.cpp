#include <gtest/gtest.h>

#include <sstream>

#include "lcc/exact/oracle.hpp"
#include "lcc/gap/gap_lab.hpp"
#include "lcc/generators.hpp"
#include "lcc/lp/builders.hpp"
#include "lcc/lp/neppc.hpp"
#include "lcc/lp/simplex.hpp"

using namespace lcc;

namespace {

SignedGraph conflict_triangle() {
  SignedGraph sg(3);
  sg.set(0, 1, 0.5, 0.0);
  sg.set(0, 2, 0.5, 0.0);
  sg.set(1, 2, 0.0, 0.5);
  return sg;
}

lp::LPSolution solve(const lp::LPModel& m) {
  auto s = lp::solve_lp(m, 1e-7);
  EXPECT_TRUE(s.optimal()) << lp::to_string(s.status);
  return s;
}

/// Objective of the LP at the clustering's indicator point.
double lp_value_at(const CorrelationLP& lp, const Clustering& c,
                   const std::map<int, const SignedHypergraph*>& levels) {
  std::vector<double> x = c.pair_indicators();
  x.resize(lp.model.num_vars(), 0.0);
  for (const auto& [k, vars] : lp.hyperedge_vars) {
    const auto& edges = levels.at(k)->edges();
    for (std::size_t e = 0; e < vars.size(); ++e) x[vars[e]] = c.splits(edges[e].nodes) ? 1.0 : 0.0;
  }
  EXPECT_LE(lp.model.max_violation(x), 1e-12);
  return lp.model.objective_at(x);
}

}  // namespace

TEST(Simplex, LowerBoundRow) {
  lp::LPModel m;
  const int x = m.add_variable("x", 0.0, 1.0, 1.0);
  m.add_row({{x, 1.0}}, lp::Relation::kGreaterEqual, 0.3);
  const auto s = solve(m);
  EXPECT_NEAR(s.x[0], 0.3, 1e-9);
  EXPECT_NEAR(s.objective_value, 0.3, 1e-9);
}

TEST(Simplex, NoRowsGoesToFavorableBounds) {
  lp::LPModel m;
  m.add_variable("a", -1.0, 2.0, 1.0);
  m.add_variable("b", -1.0, 2.0, -3.0);
  m.add_variable("c", 0.0, 5.0, 0.0);
  m.add_objective_constant(4.0);
  const auto s = solve(m);
  EXPECT_DOUBLE_EQ(s.x[0], -1.0);
  EXPECT_DOUBLE_EQ(s.x[1], 2.0);
  EXPECT_NEAR(s.objective_value, 4.0 - 1.0 - 6.0, 1e-12);
}

TEST(Simplex, InfeasibleAndUnbounded) {
  lp::LPModel inf;
  const int x = inf.add_variable("x", 0.0, 1.0, 1.0);
  inf.add_row({{x, 1.0}}, lp::Relation::kGreaterEqual, 2.0);
  EXPECT_EQ(lp::solve_lp(inf, 1e-7).status, lp::LPStatus::kInfeasible);

  lp::LPModel unb;
  const int y = unb.add_variable("y", 0.0, lp::kInf, -1.0);
  const int z = unb.add_variable("z", 0.0, 1.0, 0.0);
  unb.add_row({{y, 1.0}, {z, -1.0}}, lp::Relation::kGreaterEqual, 0.0);
  EXPECT_EQ(lp::solve_lp(unb, 1e-7).status, lp::LPStatus::kUnbounded);
}

TEST(Simplex, EqualityRowsAndFreeVariables) {
  // min x + 2y s.t. x + y = 1, x - y <= 0.2, x,y free
  lp::LPModel m;
  const int x = m.add_variable("x", -lp::kInf, lp::kInf, 1.0);
  const int y = m.add_variable("y", -lp::kInf, lp::kInf, 2.0);
  m.add_row({{x, 1.0}, {y, 1.0}}, lp::Relation::kEqual, 1.0);
  m.add_row({{x, 1.0}, {y, -1.0}}, lp::Relation::kLessEqual, 0.2);
  const auto s = solve(m);
  EXPECT_NEAR(s.x[0], 0.6, 1e-9);
  EXPECT_NEAR(s.x[1], 0.4, 1e-9);
  EXPECT_NEAR(s.objective_value, 1.4, 1e-9);
}

TEST(Simplex, RejectsInvalidModel) {
  lp::LPModel m;
  m.add_variable("x", 1.0, 0.0, 1.0);
  EXPECT_THROW(lp::solve_lp(m, 1e-7), InputError);
}

TEST(Simplex, BlandOnlyAgreesWithDefault) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto sg = build_lambdacc_instance(gen::random_graph(7, 0.4, seed), {0.35, 0.0});
    const auto lp = build_cc_lp(sg);
    lp::SimplexOptions bland;
    bland.bland_only = true;
    bland.perturbation = 0.0;
    const auto a = lp::solve_lp(lp.model, lp::SimplexOptions{});
    const auto b = lp::solve_lp(lp.model, bland);
    ASSERT_TRUE(a.optimal());
    ASSERT_TRUE(b.optimal());
    EXPECT_NEAR(a.objective_value, b.objective_value, 1e-7);
  }
}

TEST(Simplex, Deterministic) {
  const auto sg = build_lambdacc_instance(gen::random_graph(8, 0.5, 9), {0.3, 0.0});
  const auto lp = build_cc_lp(sg);
  const auto a = lp::solve_lp(lp.model, 1e-7);
  const auto b = lp::solve_lp(lp.model, 1e-7);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Simplex, PluggableBackend) {
  const lp::LPBackend backend = lp::default_backend();
  const auto lp = build_cc_lp(conflict_triangle());
  EXPECT_NEAR(backend(lp.model, 1e-7).objective_value, 0.5, 1e-9);
}

TEST(CcLp, Shape) {
  const auto lp = build_cc_lp(build_lambdacc_instance(Graph::cycle(6), {0.5, 0.0}));
  EXPECT_EQ(lp.model.num_vars(), 15);
  EXPECT_EQ(lp.model.num_rows(), 3 * 20);
}

TEST(CcLp, SingleNegativePair) {
  SignedGraph sg(2);
  sg.set(0, 1, 0.0, 0.4);
  const auto s = solve(build_cc_lp(sg).model);
  EXPECT_NEAR(s.x[0], 1.0, 1e-9);
  EXPECT_NEAR(s.objective_value, 0.0, 1e-9);
}

TEST(CcLp, ConflictTriangle) {
  const auto s = solve(build_cc_lp(conflict_triangle()).model);
  EXPECT_NEAR(s.objective_value, 0.5, 1e-9);
}

TEST(CcLp, AllPositive) {
  const auto sg = build_lambdacc_instance(Graph::complete(5), {0.4, 0.0});
  const auto s = solve(build_cc_lp(sg).model);
  EXPECT_NEAR(s.objective_value, 0.0, 1e-9);
  for (double v : s.x) EXPECT_NEAR(v, 0.0, 1e-9);
}

TEST(CcLp, LowerBoundsExactOptimum) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    const double lambda = 0.15 + 0.7 * static_cast<double>(seed % 7) / 6.0;
    const auto sg = build_lambdacc_instance(gen::random_graph(n, 0.45, seed), {lambda, 0.0});
    const auto lp = build_cc_lp(sg);
    const auto s = solve(lp.model);
    EXPECT_LE(s.objective_value, exact_cc(sg).cost + 1e-6) << "seed " << seed;
    EXPECT_TRUE(check_triangle_feasible(lp.distances(s), 1e-6).empty());
  }
}

TEST(CcLp, IntegralPointsMatchObjective) {
  SignedGraph sg(5);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) sg.set(i, j, u(rng), u(rng));
  const auto lp = build_cc_lp(sg);
  enumerate_partitions(5, [&](const Clustering& c) {
    EXPECT_NEAR(lp_value_at(lp, c, {}), cc_objective(sg, c), 1e-12);
  });
}

TEST(MotifLp, SinglePositiveEdge) {
  SignedHypergraph h(3, 3, {{{0, 1, 2}, 1.0, 0.0}});
  const auto s = solve(build_motif_lp(h).model);
  EXPECT_NEAR(s.objective_value, 0.0, 1e-9);
  for (double v : s.x) EXPECT_NEAR(v, 0.0, 1e-9);
}

TEST(MotifLp, SingleNegativeEdge) {
  SignedHypergraph h(3, 3, {{{0, 1, 2}, 0.0, 1.0}});
  const auto lp = build_motif_lp(h);
  const auto s = solve(lp.model);
  EXPECT_NEAR(s.objective_value, 0.0, 1e-9);
  EXPECT_NEAR(lp.hyperedge_values(s, 3)[0], 1.0, 1e-9);
  EXPECT_EQ(lp.model.num_vars(), 4);
}

TEST(MotifLp, OverlappingEdgesBelowExact) {
  SignedHypergraph h(3, 4, {{{0, 1, 2}, 1.0, 0.0}, {{0, 1, 3}, 0.0, 1.0}});
  const auto s = solve(build_motif_lp(h).model);
  EXPECT_LE(s.objective_value, exact_motif(h).cost + 1e-9);
}

TEST(MotifLp, IntegralPointsAndLowerBound) {
  const auto h = gen::random_probability_hypergraph(3, 6, 8);
  const auto lp = build_motif_lp(h);
  enumerate_partitions(6, [&](const Clustering& c) {
    EXPECT_NEAR(lp_value_at(lp, c, {{3, &h}}), motif_objective(h, c), 1e-12);
  });
  EXPECT_LE(solve(lp.model).objective_value, exact_motif(h).cost + 1e-6);
}

TEST(MixedLp, DegenerateLevelsMatchSingleLevelModels) {
  const auto sg = build_lambdacc_instance(gen::random_graph(5, 0.5, 4), {0.4, 0.0});
  const auto h2 = pair_hypergraph(sg);
  const auto h3 = gen::random_probability_hypergraph(3, 5, 6);
  const MixedMotifInstance only2({{2, h2}, {3, h3}}, {{2, 1.0}, {3, 0.0}});
  const MixedMotifInstance only3({{2, h2}, {3, h3}}, {{2, 0.0}, {3, 1.0}});
  EXPECT_NEAR(solve(build_mixed_lp(only2).model).objective_value,
              solve(build_motif_lp(h2).model).objective_value, 1e-7);
  EXPECT_NEAR(solve(build_mixed_lp(only2).model).objective_value,
              solve(build_cc_lp(sg).model).objective_value, 1e-7);
  EXPECT_NEAR(solve(build_mixed_lp(only3).model).objective_value,
              solve(build_motif_lp(h3).model).objective_value, 1e-7);
}

TEST(MixedLp, IntegralPointsMatchMixedObjective) {
  const auto h2 = pair_hypergraph(build_lambdacc_instance(gen::random_graph(5, 0.5, 1), {0.3, 0.0}));
  const auto h3 = gen::random_probability_hypergraph(3, 5, 3);
  const MixedMotifInstance m({{2, h2}, {3, h3}}, {{2, 1.0}, {3, 1.0}});
  const auto lp = build_mixed_lp(m);
  enumerate_partitions(5, [&](const Clustering& c) {
    EXPECT_NEAR(lp_value_at(lp, c, {{2, &h2}, {3, &h3}}), mixed_motif_objective(m, c), 1e-12);
  });
  EXPECT_LE(solve(lp.model).objective_value, exact_motif(m).cost + 1e-6);
}

TEST(TriangleCheck, Examples) {
  const Clustering c({0, 1, 0, 2, 1});
  EXPECT_TRUE(check_triangle_feasible(PairDistances(5, c.pair_indicators()), 1e-9).empty());
  const auto v = check_triangle_feasible(PairDistances(3, {1.0, 0.0, 0.0}), 1e-9);
  ASSERT_FALSE(v.empty());
  EXPECT_EQ(v[0].i, 0);
  EXPECT_EQ(v[0].j, 1);
  EXPECT_EQ(v[0].k, 2);
}

TEST(Neppc, RelaxedModelExamples) {
  const auto p3 = Graph::path(3);
  const LambdaParams p{0.5, 0.0};
  const auto empty = build_neppc_lp_relaxed(p3, p, {});
  const auto s = solve(empty);
  EXPECT_NEAR(s.objective_value, 0.0, 1e-9);
  EXPECT_NEAR(s.x[pair_index(3, 0, 2)], 1.0, 1e-9);
  const std::vector<NeppcConstraint> one{{{0, 1, 2}}};
  EXPECT_NEAR(solve(build_neppc_lp_relaxed(p3, p, one)).objective_value, 0.5, 1e-9);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto g = gen::random_connected_graph(7, 0.4, seed);
    const auto m = build_neppc_lp_relaxed(g, {0.3, 0.0}, {});
    EXPECT_NEAR(m.objective_at(std::vector<double>(m.num_vars(), 0.0)), 0.3 * g.num_non_edges(),
                1e-12);
  }
}

TEST(Neppc, RejectsDisconnectedAndBadPaths) {
  EXPECT_THROW(build_neppc_lp_relaxed(Graph(4, {{0, 1}, {2, 3}}), {0.5, 0.0}, {}), InputError);
  const std::vector<NeppcConstraint> bad{{{0, 2, 1}}};
  EXPECT_THROW(build_neppc_lp_relaxed(Graph::path(3), {0.5, 0.0}, bad), InputError);
}

TEST(Neppc, SeparationExamples) {
  const auto p3 = Graph::path(3);
  std::vector<double> x(3, 0.0);
  x[pair_index(3, 0, 2)] = 1.0;
  const auto cut = neppc_separation(p3, x, 1e-7);
  ASSERT_TRUE(cut.has_value());
  EXPECT_EQ(cut->path, (std::vector<int>{0, 1, 2}));
  x[pair_index(3, 0, 1)] = 0.5;
  x[pair_index(3, 1, 2)] = 0.5;
  EXPECT_FALSE(neppc_separation(p3, x, 1e-7).has_value());
}

TEST(Neppc, PetersenWitnessHasNoViolation) {
  const auto pet = Graph::petersen();
  const auto w = neppc_witness(pet, 3, 0.5);
  EXPECT_FALSE(neppc_separation(pet, w.x, 1e-9).has_value());
}

TEST(Neppc, SolveExamples) {
  const auto r = solve_neppc(Graph::path(3), {0.5, 0.0});
  ASSERT_TRUE(r.solution.optimal());
  EXPECT_NEAR(r.solution.objective_value, 0.5, 1e-9);
  const auto k5 = solve_neppc(Graph::complete(5), {0.5, 0.0});
  ASSERT_TRUE(k5.solution.optimal());
  EXPECT_NEAR(k5.solution.objective_value, 0.0, 1e-9);
  EXPECT_TRUE(k5.constraints.empty());
}

TEST(Neppc, MatchesTriangleLpAndIsMonotone) {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    const double lambda = 0.2 + 0.1 * static_cast<double>(seed % 6);
    const auto g = gen::random_connected_graph(n, 0.4, seed);
    const LambdaParams p{lambda, 0.0};
    const auto r = solve_neppc(g, p);
    ASSERT_TRUE(r.solution.optimal()) << "seed " << seed;
    const auto tri = solve(build_cc_lp(build_lambdacc_instance(g, p)).model);
    EXPECT_NEAR(r.solution.objective_value, tri.objective_value, 1e-5) << "seed " << seed;
    for (std::size_t i = 1; i < r.objective_trace.size(); ++i)
      EXPECT_GE(r.objective_trace[i], r.objective_trace[i - 1] - 1e-9);
    for (double v : r.objective_trace) EXPECT_LE(v, tri.objective_value + 1e-7);
  }
}

TEST(LpFormat, WritesOneRowPerLine) {
  const auto lp = build_cc_lp(conflict_triangle());
  std::ostringstream os;
  lp::write_lp_format(os, lp.model);
  const auto text = os.str();
  EXPECT_NE(text.find("Minimize"), std::string::npos);
  EXPECT_NE(text.find("x_0_1"), std::string::npos);
  EXPECT_NE(text.find("End"), std::string::npos);
}

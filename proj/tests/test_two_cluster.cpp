#include <gtest/gtest.h>

#include "lcc/exact/oracle.hpp"
#include "lcc/generators.hpp"
#include "lcc/two_cluster/two_cluster.hpp"

using namespace lcc;

namespace {

SignedHypergraph k2_two_pairs() {
  // Positive pairs {0,1} and {2,3}; every cross pair negative.
  std::vector<Hyperedge> e;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const bool pos = (i == 0 && j == 1) || (i == 2 && j == 3);
      e.push_back({{i, j}, pos ? 1.0 : 0.0, pos ? 0.0 : 1.0});
    }
  return SignedHypergraph(2, 4, std::move(e));
}

Bipartition from_mask(int n, std::uint64_t mask) {
  Bipartition b{std::vector<char>(n)};
  for (int i = 0; i < n; ++i) b.side[i] = (mask >> i) & 1;
  return b;
}

}  // namespace

TEST(TwoClusterExact, Examples) {
  const auto pos = build_lambdacc_instance(Graph::complete(5), {0.5, 0.0});
  const auto r = two_cluster_exact(pos);
  EXPECT_DOUBLE_EQ(r.cost, 0.0);
  EXPECT_EQ(r.bipartition.to_clustering().num_clusters(), 1);

  SignedHypergraph neg(3, 3, {{{0, 1, 2}, 0.0, 1.0}});
  const auto rn = two_cluster_exact(neg);
  EXPECT_DOUBLE_EQ(rn.cost, 0.0);
  EXPECT_EQ(rn.bipartition.to_clustering().num_clusters(), 2);
}

TEST(TwoClusterExact, MatchesPartitionEnumerationRestricted) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto sg = build_lambdacc_instance(gen::random_graph(7, 0.5, seed), {0.4, 0.0});
    double best = 1e18;
    enumerate_partitions(7, [&](const Clustering& c) {
      if (c.num_clusters() <= 2) best = std::min(best, cc_objective(sg, c));
    });
    EXPECT_NEAR(two_cluster_exact(sg).cost, best, 1e-12);
  }
}

TEST(TwoClusterExact, SizeCap) {
  EXPECT_THROW(two_cluster_exact(SignedGraph(25)), SizeCapError);
}

TEST(Papt, K2AllPositive) {
  std::vector<Hyperedge> e;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) e.push_back({{i, j}, 1.0, 0.0});
  const auto r = pick_a_pivot_tuple(SignedHypergraph(2, 5, std::move(e)));
  EXPECT_DOUBLE_EQ(r.cost, 0.0);
  EXPECT_EQ(r.bipartition.to_clustering().num_clusters(), 1);
}

TEST(Papt, K2TwoPositivePairs) {
  const auto r = pick_a_pivot_tuple(k2_two_pairs());
  EXPECT_DOUBLE_EQ(r.cost, 0.0);
  EXPECT_EQ(r.pivot_tuple, (std::vector<int>{0}));
  EXPECT_EQ(r.bipartition.to_clustering().clusters(), (std::vector<std::vector<int>>{{0, 1}, {2, 3}}));
  EXPECT_EQ(r.candidates, 4u);
}

TEST(Papt, CandidateCountAndDeterminism) {
  const auto h = gen::random_unweighted_hypergraph(3, 8, 0.5, 3);
  const auto a = pick_a_pivot_tuple(h);
  const auto b = pick_a_pivot_tuple(h);
  EXPECT_EQ(a.candidates, binomial(8, 2));
  EXPECT_EQ(a.bipartition, b.bipartition);
  EXPECT_EQ(a.pivot_tuple, b.pivot_tuple);
}

TEST(Papt, RejectsWeightedOrIncomplete) {
  EXPECT_THROW(pick_a_pivot_tuple(gen::random_probability_hypergraph(3, 5, 1)), InputError);
  EXPECT_THROW(pick_a_pivot_tuple(SignedHypergraph(3, 5, {{{0, 1, 2}, 1, 0}})), InputError);
}

TEST(Papt, Within7OfOptimumK3) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 6 + static_cast<int>(seed % 4);
    const auto h = gen::random_unweighted_hypergraph(3, n, 0.5, seed);
    const auto r = pick_a_pivot_tuple(h);
    const double opt = two_cluster_exact(h).cost;
    EXPECT_LE(opt, r.cost + 1e-12);
    EXPECT_LE(r.cost, 7.0 * opt + 1e-9) << "seed " << seed;
    EXPECT_LE(r.cost, *papt_guarantee(3, n).finite * opt + 1e-9) << "seed " << seed;
  }
}

TEST(PaptGuarantee, Values) {
  EXPECT_DOUBLE_EQ(papt_guarantee(2, 6).asymptotic, 3.0);
  EXPECT_DOUBLE_EQ(*papt_guarantee(2, 6).uniform, 3.0);
  EXPECT_NEAR(*papt_guarantee(3, 10).finite, 6.4, 1e-9);
  EXPECT_DOUBLE_EQ(papt_guarantee(4, 10).asymptotic, 17.0);
  EXPECT_FALSE(papt_guarantee(4, 5).finite.has_value());
  EXPECT_THROW(papt_guarantee(1, 5), ParameterError);
  EXPECT_THROW(papt_guarantee(4, 3), ParameterError);
}

TEST(PaptGuarantee, K3FiniteFactorAtMost7) {
  for (int n = 4; n <= 200; ++n) {
    const auto g = papt_guarantee(3, n);
    ASSERT_TRUE(g.finite.has_value());
    EXPECT_LE(*g.finite, 7.0) << "n " << n;
  }
}

TEST(MinUncutTo2Lcc, CyclesAndComplete) {
  const auto c5 = reduce_minuncut_to_2lcc(Graph::cycle(5));
  EXPECT_EQ(c5.positive_pairs, 5u);
  EXPECT_DOUBLE_EQ(c5.params.lambda, 5.0 / 6.0);
  EXPECT_FALSE(c5.bipartite);
  const auto c7 = reduce_minuncut_to_2lcc(Graph::cycle(7));
  EXPECT_EQ(c7.positive_pairs, 14u);
  EXPECT_DOUBLE_EQ(c7.params.lambda, 14.0 / 15.0);
  EXPECT_TRUE(reduce_minuncut_to_2lcc(Graph::cycle(6)).bipartite);
  EXPECT_THROW(reduce_minuncut_to_2lcc(Graph::complete(3)), ParameterError);
}

TEST(MinUncutTo2Lcc, SandwichOverAllBipartitions) {
  std::vector<Graph> graphs{Graph::cycle(5), Graph::cycle(7)};
  for (std::uint64_t seed = 0; seed < 10; ++seed)
    graphs.push_back(gen::random_non_bipartite_graph(7, 0.4, seed));
  for (const auto& g : graphs) {
    if (g.num_non_edges() == 0) continue;
    const auto red = reduce_minuncut_to_2lcc(g);
    const double lambda = red.params.lambda;
    const auto cut = cut_graph_from(g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.n()); ++mask) {
      const auto b = from_mask(g.n(), mask);
      const double uncut = uncut_weight(cut, b);
      const double lam = cc_objective(red.instance, b.to_clustering());
      ASSERT_LE(lambda * uncut, lam + 1e-9);
      ASSERT_LE(lam, 2 * lambda * uncut + 1e-9);
    }
  }
}

TEST(TwoLccToMinUncut, GadgetExamples) {
  SignedGraph pos(2);
  pos.set(0, 1, 0.5, 0.0);
  const auto gp = reduce_2lcc_to_minuncut(pos, {0.5, 0.0});
  EXPECT_EQ(gp.n_total, 3);
  Bipartition sep{{0, 1, 0}}, sep2{{0, 1, 1}}, tog{{0, 0, 0}};
  EXPECT_DOUBLE_EQ(std::min(uncut_weight(gp, sep), uncut_weight(gp, sep2)), 0.5);
  EXPECT_DOUBLE_EQ(uncut_weight(gp, Bipartition{{0, 0, 1}}), 0.0);
  EXPECT_DOUBLE_EQ(uncut_weight(gp, tog), 1.0);

  SignedGraph neg(2);
  neg.set(0, 1, 0.0, 0.5);
  const auto gn = reduce_2lcc_to_minuncut(neg, {0.5, 0.0});
  EXPECT_EQ(gn.n_total, 2);
  EXPECT_DOUBLE_EQ(uncut_weight(gn, Bipartition{{0, 0}}), 0.5);
  EXPECT_DOUBLE_EQ(uncut_weight(gn, Bipartition{{0, 1}}), 0.0);

  EXPECT_THROW(reduce_2lcc_to_minuncut(pos, {0.3, 0.0}), InputError);
}

TEST(TwoLccToMinUncut, SoundnessOnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const int n = 4 + static_cast<int>(seed % 4);
    const double lambda = 0.2 + 0.6 * static_cast<double>(seed % 5) / 4.0;
    const auto sg = build_lambdacc_instance(gen::random_graph(n, 0.5, seed), {lambda, 0.0});
    const auto cut = reduce_2lcc_to_minuncut(sg, {lambda, 0.0});
    const auto res = min_uncut_solve(cut);
    EXPECT_NEAR(res.uncut, two_cluster_exact(sg).cost, 1e-9) << "seed " << seed;
    Bipartition orig{std::vector<char>(res.bipartition.side.begin(), res.bipartition.side.begin() + n)};
    EXPECT_NEAR(cc_objective(sg, orig.to_clustering()), res.uncut, 1e-9);
  }
}

TEST(MinUncutSolve, Examples) {
  EXPECT_DOUBLE_EQ(min_uncut_solve(cut_graph_from(Graph::cycle(6))).uncut, 0.0);
  EXPECT_DOUBLE_EQ(min_uncut_solve(cut_graph_from(Graph::cycle(5))).uncut, 1.0);
}

TEST(MinUncutSolve, LocalSearchNeverBeatsExhaustive) {
  int equal = 0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto g = cut_graph_from(gen::random_graph(10, 0.5, seed));
    const double ex = min_uncut_solve(g).uncut;
    MinUncutOptions o;
    o.mode = MinUncutMode::kLocalSearch;
    o.seed = seed;
    const double ls = min_uncut_solve(g, o).uncut;
    EXPECT_GE(ls, ex - 1e-12);
    equal += ls == ex;
  }
  EXPECT_GT(equal, 0);
}

TEST(MinUncutSolve, Validation) {
  WeightedCutGraph big{25, 25, {}, {}};
  EXPECT_THROW(min_uncut_solve(big), SizeCapError);
  WeightedCutGraph bad{2, 2, {{0, 0, 1.0}}, {}};
  EXPECT_THROW(min_uncut_solve(bad), InputError);
  WeightedCutGraph aux{4, 2, {{2, 3, 1.0}}, {{0, 1}, {0, 1}}};
  EXPECT_THROW(min_uncut_solve(aux), InputError);
  MinUncutOptions o;
  o.mode = MinUncutMode::kLocalSearch;
  o.restarts = 0;
  EXPECT_THROW(min_uncut_solve(cut_graph_from(Graph::cycle(4)), o), ParameterError);
}

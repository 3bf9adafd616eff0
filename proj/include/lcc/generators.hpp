#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lcc/combinatorics.hpp"
#include "lcc/errors.hpp"
#include "lcc/instances.hpp"

// Seeded random instance families used by tests, the acceptance harness and
// the CLI. Every generator is a pure function of its arguments.

namespace lcc::gen {

/// G(n, p).
inline Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

/// G(n, p) conditioned on `accept`, by rejection over derived seeds.
template <class Accept>
Graph random_graph_if(int n, double p, std::uint64_t seed, Accept&& accept,
                      int attempts = 10000) {
  std::mt19937_64 seeds(seed);
  for (int a = 0; a < attempts; ++a) {
    auto g = random_graph(n, p, seeds());
    if (accept(g)) return g;
  }
  throw ParameterError("random graph: no accepted draw; try another seed or density");
}

inline Graph random_connected_graph(int n, double p, std::uint64_t seed) {
  return random_graph_if(n, p, seed, [](const Graph& g) { return g.is_connected(); });
}

inline Graph random_non_bipartite_graph(int n, double p, std::uint64_t seed) {
  return random_graph_if(n, p, seed, [](const Graph& g) { return !g.is_bipartite(); });
}

/// Complete k-uniform hypergraph with w+ uniform in [0,1] and w- = 1 - w+.
inline SignedHypergraph random_probability_hypergraph(int k, int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Hyperedge> edges;
  for_each_subset(n, k, [&](std::span<const int> t) {
    const double wp = u(rng);
    edges.push_back({{t.begin(), t.end()}, wp, 1.0 - wp});
  });
  return SignedHypergraph(k, n, std::move(edges));
}

/// Random signs on every k-tuple; positive with probability p_positive.
inline std::vector<SignedTuple> random_tuple_signs(int k, int n, double p_positive,
                                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p_positive);
  std::vector<SignedTuple> out;
  for_each_subset(n, k, [&](std::span<const int> t) {
    out.push_back({{t.begin(), t.end()}, coin(rng)});
  });
  return out;
}

/// Complete unweighted instance: each tuple is (1,0) or (0,1).
inline SignedHypergraph random_unweighted_hypergraph(int k, int n, double p_positive,
                                                     std::uint64_t seed) {
  std::vector<Hyperedge> edges;
  for (auto& s : random_tuple_signs(k, n, p_positive, seed))
    edges.push_back({std::move(s.nodes), s.positive ? 1.0 : 0.0, s.positive ? 0.0 : 1.0});
  return SignedHypergraph(k, n, std::move(edges));
}

/// Complete instance whose positive tuples weigh 1-lambda and negative ones lambda.
inline LambdaHypergraph random_lambda_hypergraph(int k, int n, double lambda, double p_positive,
                                                 std::uint64_t seed) {
  const auto signs = random_tuple_signs(k, n, p_positive, seed);
  return build_lambda_hypergraph(signs, n, k, LambdaParams{lambda, 0.0});
}

/// Planted clusters: tuples inside one block lean positive, others negative,
/// each sign flipped with probability noise. Gives instances with structure.
inline SignedHypergraph planted_unweighted_hypergraph(int k, int n, int blocks, double noise,
                                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> block(0, blocks - 1);
  std::vector<int> label(n);
  for (auto& l : label) l = block(rng);
  std::bernoulli_distribution flip(noise);
  std::vector<Hyperedge> edges;
  for_each_subset(n, k, [&](std::span<const int> t) {
    bool pos = true;
    for (int v : t) pos = pos && label[v] == label[t[0]];
    if (flip(rng)) pos = !pos;
    edges.push_back({{t.begin(), t.end()}, pos ? 1.0 : 0.0, pos ? 0.0 : 1.0});
  });
  return SignedHypergraph(k, n, std::move(edges));
}

}  // namespace lcc::gen

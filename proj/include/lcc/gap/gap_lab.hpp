#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcc/combinatorics.hpp"
#include "lcc/errors.hpp"
#include "lcc/exact/oracle.hpp"
#include "lcc/instances.hpp"
#include "lcc/lp/builders.hpp"
#include "lcc/lp/neppc.hpp"
#include "lcc/lp/simplex.hpp"
#include "lcc/rounding/certificate.hpp"

namespace lcc {

inline constexpr int kMaxSubsetNodes = 24;
inline constexpr int kRegularGraphAttempts = 10000;

/// Simple connected d-regular graph from the pairing model: n*d stubs are
/// matched uniformly at random and the draw is rejected if it has a loop, a
/// repeated edge, or is disconnected.
inline Graph random_regular_graph(int n, int d, std::uint64_t seed) {
  if (n < 1 || d < 0) throw ParameterError("random_regular_graph: need n >= 1 and d >= 0");
  if (d >= n) throw ParameterError("random_regular_graph: need d < n");
  if ((static_cast<long>(n) * d) % 2 != 0)
    throw ParameterError("random_regular_graph: n*d must be even");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v)
    for (int r = 0; r < d; ++r) stubs.push_back(v);
  std::vector<char> adj(static_cast<std::size_t>(n) * n);
  for (int attempt = 0; attempt < kRegularGraphAttempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::fill(adj.begin(), adj.end(), 0);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      const int u = std::min(stubs[i], stubs[i + 1]);
      const int v = std::max(stubs[i], stubs[i + 1]);
      auto& cell = adj[static_cast<std::size_t>(u) * n + v];
      simple = u != v && !cell;
      cell = 1;
      edges.emplace_back(u, v);
    }
    if (!simple) continue;
    Graph g(n, std::move(edges));
    if (g.is_connected()) return g;
  }
  throw ParameterError("random_regular_graph: no simple connected draw after " +
                       std::to_string(kRegularGraphAttempts) + " attempts; try another seed");
}

namespace detail {

inline void check_subset_cap(const Graph& g, const char* who) {
  if (g.n() > kMaxSubsetNodes)
    throw SizeCapError(std::string(who) + " capped at n = " + std::to_string(kMaxSubsetNodes) +
                       ", got " + std::to_string(g.n()));
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  std::vector<std::uint32_t> m(g.n(), 0);
  for (auto [u, v] : g.edges()) {
    m[u] |= std::uint32_t{1} << v;
    m[v] |= std::uint32_t{1} << u;
  }
  return m;
}

inline int cut_size(std::span<const std::uint32_t> adj, std::uint32_t S) {
  int c = 0;
  for (std::uint32_t rest = S; rest; rest &= rest - 1)
    c += std::popcount(adj[std::countr_zero(rest)] & ~S);
  return c;
}

inline std::vector<int> members(std::uint32_t S) {
  std::vector<int> out;
  for (; S; S &= S - 1) out.push_back(std::countr_zero(S));
  return out;
}

}  // namespace detail

/// Exact fraction num/den with a nonnegative numerator and positive denominator.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  bool operator<(const Ratio& o) const { return num * o.den < o.num * den; }
  bool operator==(const Ratio& o) const { return num * o.den == o.num * den; }
};

struct SparsestCut {
  Ratio lambda_star;
  std::vector<int> witness;

  double value() const { return lambda_star.value(); }
};

/// min over nonempty proper S of cut(S) / (|S| |V \ S|). The witness is the
/// smaller side of a minimizer, ties broken by the lexicographically least
/// sorted node list.
inline SparsestCut scaled_sparsest_cut(const Graph& g) {
  detail::check_subset_cap(g, "scaled_sparsest_cut");
  const int n = g.n();
  if (n < 2) throw InputError("scaled_sparsest_cut: need at least two nodes");
  const auto adj = detail::adjacency_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  SparsestCut best;
  bool have = false;
  for (std::uint32_t S = 1; S < full; ++S) {
    const int s = std::popcount(S);
    if (2 * s > n) continue;  // the complement is the same cut
    const Ratio r{detail::cut_size(adj, S), static_cast<std::int64_t>(s) * (n - s)};
    auto side = detail::members(S);
    if (2 * s == n) {
      auto other = detail::members(full & ~S);
      if (other < side) side = std::move(other);
    }
    const bool better =
        !have || r < best.lambda_star ||
        (r == best.lambda_star &&
         (side.size() < best.witness.size() ||
          (side.size() == best.witness.size() && side < best.witness)));
    if (better) {
      best.lambda_star = r;
      best.witness = std::move(side);
      have = true;
    }
  }
  return best;
}

/// min over nonempty S with |S| <= n/2 of cut(S) / |S|.
inline Ratio expansion_ratio(const Graph& g) {
  detail::check_subset_cap(g, "expansion_constant");
  const int n = g.n();
  if (n < 2) throw InputError("expansion_constant: need at least two nodes");
  const auto adj = detail::adjacency_masks(g);
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  Ratio best{1, 0};
  for (std::uint32_t S = 1; S < full; ++S) {
    const int s = std::popcount(S);
    if (2 * s > n) continue;
    const Ratio r{detail::cut_size(adj, S), s};
    if (r < best) best = r;
  }
  return best;
}

inline double expansion_constant(const Graph& g) { return expansion_ratio(g).value(); }

struct NeppcWitness {
  std::vector<double> x;  // pair_index order
  double objective = 0.0;
  double edge_value = 0.0;
  double log_d_n = 0.0;
};

/// Edges get 2 / log_d n; a non-edge gets 1 when its hop distance is at
/// least (log_d n) / 2 and 0 otherwise. Edge values above 1 are allowed.
inline NeppcWitness neppc_witness(const Graph& g, int d, double lambda) {
  if (!g.is_connected()) throw InputError("neppc_witness: graph must be connected");
  if (d < 2) throw ParameterError("neppc_witness: need d >= 2");
  if (!(lambda > 0.0 && lambda < 1.0)) throw ParameterError("neppc_witness: lambda must lie in (0,1)");
  const int n = g.n();
  NeppcWitness w;
  w.log_d_n = std::log(static_cast<double>(n)) / std::log(static_cast<double>(d));
  w.edge_value = 2.0 / w.log_d_n;
  w.x.assign(num_pairs(n), 0.0);
  for (int i = 0; i < n; ++i) {
    const auto dist = g.bfs_distances(i);
    for (int j = i + 1; j < n; ++j) {
      const auto p = pair_index(n, i, j);
      if (g.has_edge(i, j)) {
        w.x[p] = w.edge_value;
        w.objective += (1.0 - lambda) * w.x[p];
      } else {
        w.x[p] = dist[j] >= w.log_d_n / 2.0 ? 1.0 : 0.0;
        w.objective += lambda * (1.0 - w.x[p]);
      }
    }
  }
  return w;
}

/// Bounds of the path LP plus x_ij <= shortest path under edge values x for
/// every non-edge, each within tol.
inline bool check_neppc_feasible(const Graph& g, std::span<const double> x, double tol = 1e-9) {
  const int n = g.n();
  if (x.size() != num_pairs(n)) throw InputError("check_neppc_feasible: one value per pair expected");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double v = x[pair_index(n, i, j)];
      if (v < -tol) return false;
      if (!g.has_edge(i, j) && v > 1.0 + tol) return false;
    }
  return neppc_violations(g, x, tol).empty();
}

inline constexpr int kMaxGapExactNodes = kMaxExactCcNodes;

struct GapReport {
  int n = 0;
  int d = 0;
  std::uint64_t seed = 0;
  double epsilon = 0.0;
  double lambda_star = 0.0;
  std::vector<int> S_star;
  double expansion_c = 0.0;
  double lambda_used = 0.0;
  /// lambda_used was pulled below (1+eps) lambda* to stay inside (0,1).
  bool lambda_clamped = false;
  double witness_edge_value = 0.0;
  double witness_cost = 0.0;
  double lp_opt = 0.0;
  std::optional<double> exact_opt;
  std::optional<double> gap_ratio;

  bool bound_chain = false;       // c/n <= lambda* <= d/(n-1)
  bool witness_feasible = false;
  bool lp_below_witness = false;  // lp_opt <= witness_cost
  bool lp_below_exact = true;     // lp_opt <= exact_opt, vacuous without the oracle

  bool all_invariants() const {
    return bound_chain && witness_feasible && lp_below_witness && lp_below_exact;
  }
};

/// Runs the gap experiment at lambda slightly above the scaled sparsest cut.
inline GapReport gap_report(const Graph& g, int d, double epsilon = 0.01, std::uint64_t seed = 0,
                            double tol = 1e-6) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw ParameterError("gap_report: epsilon must lie in (0,1)");
  if (g.regular_degree() != d)
    throw InputError("gap_report: graph is not " + std::to_string(d) + "-regular");
  if (!g.is_connected()) throw InputError("gap_report: graph must be connected");
  GapReport r;
  r.n = g.n();
  r.d = d;
  r.seed = seed;
  r.epsilon = epsilon;
  const auto sc = scaled_sparsest_cut(g);
  r.lambda_star = sc.value();
  r.S_star = sc.witness;
  const auto c = expansion_ratio(g);
  r.expansion_c = c.value();
  // c/n <= lambda* <= d/(n-1), compared exactly.
  const Ratio lo{c.num, c.den * r.n};
  const Ratio hi{d, r.n - 1};
  r.bound_chain = !(sc.lambda_star < lo) && !(hi < sc.lambda_star);

  r.lambda_used = (1.0 + epsilon) * r.lambda_star;
  if (r.lambda_used >= 1.0) {
    r.lambda_clamped = true;
    r.lambda_used = r.lambda_star < 1.0 ? 0.5 * (r.lambda_star + 1.0) : 1.0 - epsilon / 2.0;
  }
  const LambdaParams p{r.lambda_used, 0.0};

  const auto w = neppc_witness(g, d, r.lambda_used);
  r.witness_edge_value = w.edge_value;
  r.witness_cost = w.objective;
  r.witness_feasible = check_neppc_feasible(g, w.x, 1e-9);

  const auto sg = build_lambdacc_instance(g, p);
  const auto lp_model = build_cc_lp(sg);
  const auto sol = lp::solve_lp(lp_model.model, 1e-7);
  if (!sol.optimal())
    throw SolverError(std::string("gap_report: LP solve ended with status ") +
                      lp::to_string(sol.status));
  r.lp_opt = sol.objective_value;
  r.lp_below_witness = r.lp_opt <= r.witness_cost + tol;
  if (r.n <= kMaxGapExactNodes) {
    r.exact_opt = exact_cc(sg).cost;
    r.lp_below_exact = r.lp_opt <= *r.exact_opt + tol;
    r.gap_ratio = cost_ratio(*r.exact_opt, r.lp_opt);
  }
  return r;
}

}  // namespace lcc

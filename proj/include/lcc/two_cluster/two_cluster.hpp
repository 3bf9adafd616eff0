#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcc/combinatorics.hpp"
#include "lcc/errors.hpp"
#include "lcc/instances.hpp"
#include "lcc/rounding/certificate.hpp"

namespace lcc {

inline constexpr int kMaxTwoClusterNodes = 24;

/// Two-sided clustering; either side may be empty.
struct Bipartition {
  std::vector<char> side;

  int n() const { return static_cast<int>(side.size()); }
  Clustering to_clustering() const {
    return Clustering(std::vector<int>(side.begin(), side.end()));
  }
  bool operator==(const Bipartition&) const = default;
};

struct CutEdge {
  int u, v;
  double w;
};

/// Weighted graph for Min Uncut. Nodes [n_original, n_total) are auxiliary
/// nodes added by a gadget; aux_pairs[m - n_original] names the original pair
/// the auxiliary node stands for.
struct WeightedCutGraph {
  int n_total = 0;
  int n_original = 0;
  std::vector<CutEdge> edges;
  std::vector<std::pair<int, int>> aux_pairs;

  void validate() const {
    if (n_original < 0 || n_total < n_original)
      throw InputError("cut graph: bad node counts");
    if (aux_pairs.size() != static_cast<std::size_t>(n_total - n_original))
      throw InputError("cut graph: auxiliary map does not match node count");
    for (const auto& e : edges) {
      if (e.u < 0 || e.v < 0 || e.u >= n_total || e.v >= n_total || e.u == e.v)
        throw InputError("cut graph: bad edge endpoints");
      if (!(e.w >= 0.0) || !std::isfinite(e.w))
        throw InputError("cut graph: edge weights must be finite and nonnegative");
    }
  }
};

/// Total weight of edges whose endpoints share a side.
inline double uncut_weight(const WeightedCutGraph& g, const Bipartition& b) {
  if (b.n() != g.n_total) throw InputError("uncut_weight: bipartition size mismatch");
  double s = 0.0;
  for (const auto& e : g.edges)
    if (b.side[e.u] == b.side[e.v]) s += e.w;
  return s;
}

inline WeightedCutGraph cut_graph_from(const Graph& g) {
  WeightedCutGraph out{g.n(), g.n(), {}, {}};
  for (auto [u, v] : g.edges()) out.edges.push_back({u, v, 1.0});
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive two-cluster oracles
// ---------------------------------------------------------------------------

struct TwoClusterResult {
  Bipartition bipartition;
  double cost = 0.0;
};

namespace detail {

inline void check_two_cluster_cap(int n, const char* who) {
  if (n > kMaxTwoClusterNodes)
    throw SizeCapError(std::string(who) + " capped at n = " +
                       std::to_string(kMaxTwoClusterNodes) + ", got " + std::to_string(n));
}

/// Minimizes cost(mask) over masks with bit 0 clear; first minimum wins.
template <class Cost>
TwoClusterResult min_over_bipartitions(int n, Cost&& cost) {
  TwoClusterResult best;
  best.cost = std::numeric_limits<double>::infinity();
  const std::uint64_t count = n <= 1 ? 1 : (std::uint64_t{1} << (n - 1));
  std::uint64_t best_mask = 0;
  for (std::uint64_t half = 0; half < count; ++half) {
    const std::uint64_t mask = half << 1;
    const double c = cost(mask);
    if (c < best.cost) {
      best.cost = c;
      best_mask = mask;
    }
  }
  best.bipartition.side.resize(n);
  for (int i = 0; i < n; ++i) best.bipartition.side[i] = (best_mask >> i) & 1;
  return best;
}

}  // namespace detail

/// Optimal two-cluster correlation clustering by enumerating 2^(n-1) splits.
inline TwoClusterResult two_cluster_exact(const SignedGraph& sg) {
  const int n = sg.n();
  detail::check_two_cluster_cap(n, "two_cluster_exact");
  struct W { int i, j; double plus, minus; };
  std::vector<W> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sg.plus(i, j) != 0.0 || sg.minus(i, j) != 0.0)
        pairs.push_back({i, j, sg.plus(i, j), sg.minus(i, j)});
  return detail::min_over_bipartitions(n, [&](std::uint64_t mask) {
    double c = 0.0;
    for (const auto& p : pairs)
      c += (((mask >> p.i) ^ (mask >> p.j)) & 1) ? p.plus : p.minus;
    return c;
  });
}

inline TwoClusterResult two_cluster_exact(const SignedHypergraph& h) {
  const int n = h.n();
  detail::check_two_cluster_cap(n, "two_cluster_exact");
  struct W { std::uint64_t bits; double plus, minus; };
  std::vector<W> tuples;
  for (const auto& e : h.edges()) {
    std::uint64_t b = 0;
    for (int v : e.nodes) b |= std::uint64_t{1} << v;
    tuples.push_back({b, e.w_plus, e.w_minus});
  }
  return detail::min_over_bipartitions(n, [&](std::uint64_t mask) {
    double c = 0.0;
    for (const auto& t : tuples) {
      const std::uint64_t on = mask & t.bits;
      c += (on == 0 || on == t.bits) ? t.minus : t.plus;
    }
    return c;
  });
}

// ---------------------------------------------------------------------------
// Pick-A-Pivot-Tuple
// ---------------------------------------------------------------------------

struct PaptGuarantee {
  /// 1 + (k/2) C(n-1,k-1) / C(n/2,k-1); empty when n < 2(k-1).
  std::optional<double> finite;
  /// 1 + k 2^(k-2).
  double asymptotic = 0.0;
  /// Factor valid for every n: 3 for k = 2, 7 for k = 3.
  std::optional<double> uniform;
};

/// C(n/2, k-1) is evaluated as a real binomial, so odd n needs no rounding.
inline PaptGuarantee papt_guarantee(int k, int n) {
  if (k < 2 || n < k) throw ParameterError("papt_guarantee: need 2 <= k <= n");
  PaptGuarantee g;
  g.asymptotic = 1.0 + k * std::ldexp(1.0, k - 2);
  if (n >= 2 * (k - 1)) {
    const double num = static_cast<double>(binomial(n - 1, k - 1));
    g.finite = 1.0 + 0.5 * k * num / binomial_real(n / 2.0, k - 1);
  }
  if (k == 2) g.uniform = 3.0;
  if (k == 3) g.uniform = 7.0;
  return g;
}

struct PaptResult {
  Bipartition bipartition;
  double cost = 0.0;
  std::vector<int> pivot_tuple;
  std::size_t candidates = 0;
  RoundingCertificate certificate;
};

/// For every (k-1)-tuple K, side 1 is K plus every u with K + {u} positive;
/// returns the cheapest candidate, ties to the lexicographically first K.
inline PaptResult pick_a_pivot_tuple(const SignedHypergraph& h) {
  if (!h.unweighted()) throw InputError("pick_a_pivot_tuple: instance must be unweighted");
  if (!h.is_complete())
    throw InputError("pick_a_pivot_tuple: instance must list every k-tuple");
  const int n = h.n(), k = h.k();
  PaptResult best;
  best.cost = std::numeric_limits<double>::infinity();
  std::vector<int> tuple(k);
  for_each_subset(n, k - 1, [&](std::span<const int> K) {
    Bipartition b{std::vector<char>(n, 0)};
    for (int v : K) b.side[v] = 1;
    for (int u = 0; u < n; ++u) {
      if (std::find(K.begin(), K.end(), u) != K.end()) continue;
      tuple.assign(K.begin(), K.end());
      tuple.push_back(u);
      std::sort(tuple.begin(), tuple.end());
      if (h.edges()[*h.find(tuple)].w_plus == 1.0) b.side[u] = 1;
    }
    ++best.candidates;
    const double c = motif_objective(h, b.to_clustering());
    if (c < best.cost) {
      best.cost = c;
      best.bipartition = std::move(b);
      best.pivot_tuple.assign(K.begin(), K.end());
    }
  });
  auto& cert = best.certificate;
  cert.algorithm = "pick_a_pivot_tuple";
  cert.params = {{"k", static_cast<double>(k)}};
  cert.rounded_objective = best.cost;
  const auto g = papt_guarantee(k, n);
  if (g.finite && g.uniform) cert.guarantee = std::min(*g.finite, *g.uniform);
  else if (g.finite) cert.guarantee = *g.finite;
  else if (g.uniform) cert.guarantee = *g.uniform;
  else cert.note = "finite-n factor undefined for n < 2(k-1)";
  return best;
}

// ---------------------------------------------------------------------------
// Min Uncut <-> two-cluster LambdaCC
// ---------------------------------------------------------------------------

struct MinUncutReduction {
  SignedGraph instance;
  LambdaParams params;
  std::size_t positive_pairs = 0;
  /// Bipartite inputs have uncut weight 0 and are solvable directly.
  bool bipartite = false;
};

/// Edges become negative pairs, non-edges positive pairs, with
/// lambda = |E+| / (1 + |E+|).
inline MinUncutReduction reduce_minuncut_to_2lcc(const Graph& g) {
  const std::size_t m_plus = g.num_non_edges();
  if (m_plus == 0)
    throw ParameterError("reduce_minuncut_to_2lcc: graph is complete, so lambda = 0 lies outside (0,1)");
  MinUncutReduction r;
  r.positive_pairs = m_plus;
  r.params.lambda = static_cast<double>(m_plus) / (1.0 + static_cast<double>(m_plus));
  r.bipartite = g.is_bipartite();
  r.instance = SignedGraph(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      if (g.has_edge(i, j)) r.instance.set(i, j, 0.0, r.params.lambda);
      else r.instance.set(i, j, 1.0 - r.params.lambda, 0.0);
    }
  return r;
}

/// Negative weight w- on (i,j) becomes edge (i,j) of weight w-; positive
/// weight w+ becomes auxiliary node m with edges (i,m), (m,j) of weight w+.
inline WeightedCutGraph reduce_2lcc_to_minuncut(const SignedGraph& sg) {
  const int n = sg.n();
  WeightedCutGraph out{n, n, {}, {}};
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (sg.minus(i, j) > 0.0) out.edges.push_back({i, j, sg.minus(i, j)});
      if (sg.plus(i, j) > 0.0) {
        const int m = out.n_total++;
        out.aux_pairs.emplace_back(i, j);
        out.edges.push_back({i, m, sg.plus(i, j)});
        out.edges.push_back({m, j, sg.plus(i, j)});
      }
    }
  return out;
}

inline WeightedCutGraph reduce_2lcc_to_minuncut(const SignedGraph& sg, const LambdaParams& p) {
  p.validate();
  if (!is_lambda_weighting(sg, p.lambda, 1e-9))
    throw InputError("reduce_2lcc_to_minuncut: instance is not a LambdaCC weighting");
  return reduce_2lcc_to_minuncut(sg);
}

enum class MinUncutMode { kExhaustive, kLocalSearch };

struct MinUncutOptions {
  MinUncutMode mode = MinUncutMode::kExhaustive;
  std::uint64_t seed = 0;
  int restarts = 20;
};

struct MinUncutResult {
  Bipartition bipartition;
  double uncut = 0.0;
};

namespace detail {

/// Auxiliary nodes get the side that leaves less of their weight uncut;
/// only their own edges depend on the choice.
inline void place_aux_nodes(const WeightedCutGraph& g,
                            const std::vector<std::vector<std::pair<int, double>>>& adj,
                            std::vector<char>& side) {
  for (int m = g.n_original; m < g.n_total; ++m) {
    double same0 = 0.0, same1 = 0.0;
    for (auto [v, w] : adj[m]) (side[v] == 0 ? same0 : same1) += w;
    side[m] = same0 <= same1 ? 0 : 1;  // side s leaves same_s uncut
  }
}

inline std::vector<std::vector<std::pair<int, double>>> adjacency(const WeightedCutGraph& g) {
  std::vector<std::vector<std::pair<int, double>>> adj(g.n_total);
  for (const auto& e : g.edges) {
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  return adj;
}

}  // namespace detail

/// Exhaustive mode enumerates the original nodes and places each auxiliary
/// node in closed form; auxiliary nodes must only touch original nodes.
/// Local search runs best-improvement single-node flips from seeded random
/// starts.
inline MinUncutResult min_uncut_solve(const WeightedCutGraph& g, const MinUncutOptions& opt = {}) {
  g.validate();
  const auto adj = detail::adjacency(g);
  MinUncutResult best;
  best.uncut = std::numeric_limits<double>::infinity();
  if (opt.mode == MinUncutMode::kExhaustive) {
    for (int m = g.n_original; m < g.n_total; ++m)
      for (auto [v, w] : adj[m])
        if (v >= g.n_original)
          throw InputError("min_uncut_solve: auxiliary nodes must only touch original nodes");
    detail::check_two_cluster_cap(g.n_original, "min_uncut_solve (exhaustive)");
    std::vector<char> side(g.n_total, 0);
    const int n = g.n_original;
    const std::uint64_t count = n <= 1 ? 1 : (std::uint64_t{1} << (n - 1));
    for (std::uint64_t half = 0; half < count; ++half) {
      for (int i = 0; i < n; ++i) side[i] = ((half << 1) >> i) & 1;
      detail::place_aux_nodes(g, adj, side);
      const Bipartition b{side};
      const double u = uncut_weight(g, b);
      if (u < best.uncut) {
        best.uncut = u;
        best.bipartition = b;
      }
    }
    return best;
  }
  if (opt.restarts < 1) throw ParameterError("min_uncut_solve: restarts must be positive");
  std::mt19937_64 rng(opt.seed);
  std::bernoulli_distribution coin(0.5);
  const int n = g.n_total;
  for (int r = 0; r < opt.restarts; ++r) {
    std::vector<char> side(n);
    for (auto& s : side) s = coin(rng);
    while (true) {
      // Gain of flipping v: uncut weight at v's side minus at the other side.
      int best_v = -1;
      double best_gain = 1e-12;
      for (int v = 0; v < n; ++v) {
        double gain = 0.0;
        for (auto [u, w] : adj[v]) gain += side[u] == side[v] ? w : -w;
        if (gain > best_gain) {
          best_gain = gain;
          best_v = v;
        }
      }
      if (best_v < 0) break;
      side[best_v] ^= 1;
    }
    const Bipartition b{side};
    const double u = uncut_weight(g, b);
    if (u < best.uncut) {
      best.uncut = u;
      best.bipartition = b;
    }
  }
  return best;
}

}  // namespace lcc

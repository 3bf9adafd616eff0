#pragma once

#include <algorithm>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "lcc/combinatorics.hpp"
#include "lcc/instances.hpp"
#include "lcc/lp/builders.hpp"
#include "lcc/lp/model.hpp"
#include "lcc/lp/simplex.hpp"

namespace lcc {

/// A positive path first..last along graph edges closed by the non-edge
/// (first, last): x_{first,last} <= sum of x along the path.
struct NeppcConstraint {
  std::vector<int> path;

  int first() const { return path.front(); }
  int last() const { return path.back(); }
  bool operator==(const NeppcConstraint&) const = default;
};

/// Checks that consecutive path nodes are edges and the endpoints are not.
inline bool is_valid_neppc(const Graph& g, const NeppcConstraint& c) {
  if (c.path.size() < 3) return false;
  for (std::size_t i = 0; i + 1 < c.path.size(); ++i)
    if (!g.has_edge(c.path[i], c.path[i + 1])) return false;
  return c.first() != c.last() && !g.has_edge(c.first(), c.last());
}

/// Pair variables for every pair: edges carry (1-lambda) x with x >= 0 and no
/// upper bound, non-edges carry lambda (1 - x) with 0 <= x <= 1. Only the
/// supplied path rows are included.
inline lp::LPModel build_neppc_lp_relaxed(const Graph& g, const LambdaParams& p,
                                          std::span<const NeppcConstraint> active) {
  p.validate();
  if (!g.is_connected())
    throw InputError(
        "neppc: graph is disconnected; solve each connected component separately");
  const int n = g.n();
  lp::LPModel m;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (g.has_edge(i, j)) {
        m.add_variable(detail::pair_name(i, j), 0.0, lp::kInf, 1.0 - p.lambda);
      } else {
        m.add_variable(detail::pair_name(i, j), 0.0, 1.0, -p.lambda);
        m.add_objective_constant(p.lambda);
      }
    }
  for (const auto& c : active) {
    if (!is_valid_neppc(g, c)) throw InputError("neppc: constraint is not a positive path closed by a non-edge");
    std::vector<lp::Term> terms{{static_cast<int>(pair_index(n, c.first(), c.last())), 1.0}};
    for (std::size_t i = 0; i + 1 < c.path.size(); ++i)
      terms.push_back({static_cast<int>(pair_index(n, c.path[i], c.path[i + 1])), -1.0});
    m.add_row(std::move(terms), lp::Relation::kLessEqual, 0.0);
  }
  return m;
}

struct ShortestPaths {
  std::vector<double> dist;
  std::vector<int> parent;
};

/// Dijkstra over graph edges with lengths x_e (clamped at zero). Parents
/// change only on strict improvement; the heap orders ties by node id.
inline ShortestPaths edge_length_shortest_paths(const Graph& g, std::span<const double> x,
                                                int source) {
  const int n = g.n();
  ShortestPaths sp{std::vector<double>(n, lp::kInf), std::vector<int>(n, -1)};
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  sp.dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > sp.dist[u]) continue;
    for (int v : g.neighbors(u)) {
      const double nd = d + std::max(0.0, x[pair_index(n, u, v)]);
      if (nd < sp.dist[v]) {
        sp.dist[v] = nd;
        sp.parent[v] = u;
        pq.push({nd, v});
      }
    }
  }
  return sp;
}

struct NeppcCut {
  NeppcConstraint constraint;
  double violation = 0.0;
};

/// For every non-edge whose value exceeds its shortest positive path by more
/// than tol, the shortest such path. The shortest path is the most violated
/// constraint for that non-edge.
inline std::vector<NeppcCut> neppc_violations(const Graph& g, std::span<const double> x,
                                              double tol) {
  const int n = g.n();
  std::vector<NeppcCut> out;
  for (int s = 0; s < n; ++s) {
    const auto sp = edge_length_shortest_paths(g, x, s);
    for (int t = s + 1; t < n; ++t) {
      if (g.has_edge(s, t) || !std::isfinite(sp.dist[t])) continue;
      const double viol = x[pair_index(n, s, t)] - sp.dist[t];
      if (viol <= tol) continue;
      NeppcConstraint c;
      for (int v = t; v >= 0; v = sp.parent[v]) c.path.push_back(v);
      std::reverse(c.path.begin(), c.path.end());
      out.push_back({std::move(c), viol});
    }
  }
  return out;
}

/// A most violated path constraint, or nothing when x satisfies all of them
/// within tol. Ties go to the lowest non-edge in pair order.
inline std::optional<NeppcConstraint> neppc_separation(const Graph& g, std::span<const double> x,
                                                       double tol = 1e-7) {
  auto cuts = neppc_violations(g, x, tol);
  if (cuts.empty()) return std::nullopt;
  auto best = std::max_element(cuts.begin(), cuts.end(), [](const auto& a, const auto& b) {
    return a.violation < b.violation;
  });
  return best->constraint;
}

struct NeppcResult {
  lp::LPSolution solution;
  std::vector<NeppcConstraint> constraints;
  /// Relaxed optimum after each round.
  std::vector<double> objective_trace;
  int rounds = 0;
};

/// Cutting-plane solve of the path LP: each round re-solves the relaxed model
/// and adds the shortest violated path for every violated non-edge.
inline NeppcResult solve_neppc(const Graph& g, const LambdaParams& p, double tol = 1e-7,
                               int max_rounds = 500) {
  NeppcResult res;
  while (true) {
    const auto model = build_neppc_lp_relaxed(g, p, res.constraints);
    res.solution = lp::solve_lp(model, tol);
    ++res.rounds;
    if (!res.solution.optimal()) return res;
    res.objective_trace.push_back(res.solution.objective_value);
    auto cuts = neppc_violations(g, res.solution.x, tol);
    if (cuts.empty()) return res;
    if (res.rounds >= max_rounds) {
      res.solution.status = lp::LPStatus::kIterationLimit;
      return res;
    }
    for (auto& c : cuts) {
      if (std::find(res.constraints.begin(), res.constraints.end(), c.constraint) !=
          res.constraints.end()) {
        // A repeated cut means the solver returned a point outside its own rows.
        res.solution.status = lp::LPStatus::kIterationLimit;
        return res;
      }
      res.constraints.push_back(std::move(c.constraint));
    }
  }
}

}  // namespace lcc

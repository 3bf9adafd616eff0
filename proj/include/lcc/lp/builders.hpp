#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "lcc/combinatorics.hpp"
#include "lcc/instances.hpp"
#include "lcc/lp/model.hpp"

namespace lcc {

/// Symmetric pairwise distances with x_ii = 0, indexed like pair_index().
class PairDistances {
 public:
  PairDistances() = default;
  PairDistances(int n, std::vector<double> values) : n_(n), values_(std::move(values)) {
    if (values_.size() != num_pairs(n)) throw InputError("distances: wrong number of pair values");
  }

  int n() const { return n_; }
  double operator()(int i, int j) const {
    return i == j ? 0.0 : values_[pair_index(n_, i, j)];
  }
  std::span<const double> values() const { return values_; }

 private:
  int n_ = 0;
  std::vector<double> values_;
};

/// LP relaxation whose first C(n,2) variables are the pair distances x_ij in
/// pair_index() order, followed by hyperedge variables per tuple size.
struct CorrelationLP {
  lp::LPModel model;
  int n = 0;
  /// Tuple size -> variable id per hyperedge, aligned with the level's edges().
  std::map<int, std::vector<int>> hyperedge_vars;

  PairDistances distances(const lp::LPSolution& sol) const {
    return PairDistances(n, std::vector<double>(sol.x.begin(), sol.x.begin() + num_pairs(n)));
  }
  std::vector<double> hyperedge_values(const lp::LPSolution& sol, int k) const {
    std::vector<double> out;
    for (int v : hyperedge_vars.at(k)) out.push_back(sol.x[v]);
    return out;
  }
};

namespace detail {

inline std::string pair_name(int i, int j) {
  return "x_" + std::to_string(i) + "_" + std::to_string(j);
}

inline void add_pair_variables(lp::LPModel& m, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m.add_variable(pair_name(i, j), 0.0, 1.0, 0.0);
}

/// All 3*C(n,3) rows x_ij <= x_ik + x_jk.
inline void add_triangle_rows(lp::LPModel& m, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        const int ij = static_cast<int>(pair_index(n, i, j));
        const int ik = static_cast<int>(pair_index(n, i, k));
        const int jk = static_cast<int>(pair_index(n, j, k));
        m.add_row({{ij, 1.0}, {ik, -1.0}, {jk, -1.0}}, lp::Relation::kLessEqual, 0.0);
        m.add_row({{ik, 1.0}, {ij, -1.0}, {jk, -1.0}}, lp::Relation::kLessEqual, 0.0);
        m.add_row({{jk, 1.0}, {ij, -1.0}, {ik, -1.0}}, lp::Relation::kLessEqual, 0.0);
      }
}

/// Hyperedge variables plus the linking rows x_uv <= x_E and
/// (k-1) x_E <= sum of pair variables inside E. Objective scaled by rho.
inline std::vector<int> add_hyperedge_level(lp::LPModel& m, int n, const SignedHypergraph& h,
                                            double rho) {
  std::vector<int> vars;
  vars.reserve(h.size());
  const int k = h.k();
  for (const auto& e : h.edges()) {
    std::string name = "xE";
    for (int v : e.nodes) name += "_" + std::to_string(v);
    const int var = m.add_variable(name, 0.0, 1.0, rho * (e.w_plus - e.w_minus));
    m.add_objective_constant(rho * e.w_minus);
    std::vector<lp::Term> sum{{var, static_cast<double>(k - 1)}};
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b) {
        const int p = static_cast<int>(pair_index(n, e.nodes[a], e.nodes[b]));
        m.add_row({{p, 1.0}, {var, -1.0}}, lp::Relation::kLessEqual, 0.0);
        sum.push_back({p, -1.0});
      }
    m.add_row(std::move(sum), lp::Relation::kLessEqual, 0.0);
    vars.push_back(var);
  }
  return vars;
}

}  // namespace detail

/// Metric LP relaxation of weighted correlation clustering. The constant
/// sum of w- is carried in the objective so LP values compare directly with
/// clustering costs.
inline CorrelationLP build_cc_lp(const SignedGraph& sg) {
  CorrelationLP out;
  out.n = sg.n();
  detail::add_pair_variables(out.model, sg.n());
  const auto wp = sg.plus_weights();
  const auto wm = sg.minus_weights();
  for (std::size_t p = 0; p < wp.size(); ++p) out.model.add_cost(static_cast<int>(p), wp[p] - wm[p]);
  out.model.add_objective_constant(sg.total_minus());
  detail::add_triangle_rows(out.model, sg.n());
  return out;
}

/// LP relaxation of the hypergraph objective.
inline CorrelationLP build_motif_lp(const SignedHypergraph& h) {
  CorrelationLP out;
  out.n = h.n();
  detail::add_pair_variables(out.model, h.n());
  detail::add_triangle_rows(out.model, h.n());
  out.hyperedge_vars[h.k()] = detail::add_hyperedge_level(out.model, h.n(), h, 1.0);
  return out;
}

/// Shared pair variables; the size-2 level charges pair variables directly,
/// larger levels get their own hyperedge variables. Levels with rho_t = 0 are
/// left out of the model.
inline CorrelationLP build_mixed_lp(const MixedMotifInstance& m) {
  CorrelationLP out;
  out.n = m.n();
  detail::add_pair_variables(out.model, m.n());
  for (const auto& [t, h] : m.levels()) {
    const double rho = m.rho(t);
    if (rho <= 0.0 || t != 2) continue;
    for (const auto& e : h.edges()) {
      const int p = static_cast<int>(pair_index(m.n(), e.nodes[0], e.nodes[1]));
      out.model.add_cost(p, rho * (e.w_plus - e.w_minus));
      out.model.add_objective_constant(rho * e.w_minus);
    }
  }
  detail::add_triangle_rows(out.model, m.n());
  for (const auto& [t, h] : m.levels()) {
    const double rho = m.rho(t);
    if (rho <= 0.0 || t == 2) continue;
    out.hyperedge_vars[t] = detail::add_hyperedge_level(out.model, m.n(), h, rho);
  }
  return out;
}

struct TriangleViolation {
  int i, j, k;  // x_ij > x_ik + x_jk
  double amount;
};

/// Every ordered triple violating the triangle inequality by more than tol.
inline std::vector<TriangleViolation> check_triangle_feasible(const PairDistances& x,
                                                              double tol) {
  std::vector<TriangleViolation> out;
  const int n = x.n();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        const double gap = x(i, j) - x(i, k) - x(j, k);
        if (gap > tol) out.push_back({i, j, k, gap});
      }
  return out;
}

}  // namespace lcc

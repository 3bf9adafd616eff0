#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "lcc/lp/model.hpp"

namespace lcc::lp {

struct SimplexOptions {
  /// Primal feasibility tolerance; also bounds the reported constraint error.
  double tol = 1e-7;
  /// Reduced-cost threshold for optimality.
  double optimality_tol = 1e-9;
  /// 0 picks a limit proportional to the model size.
  long max_iterations = 0;
  /// Use the smallest-index rule for every pivot instead of only after a
  /// run of degenerate pivots.
  bool bland_only = false;
  int degenerate_run_before_bland = 50;
  int refresh_interval = 100;
  /// Scale of the deterministic right-hand-side shifts that break ties in
  /// degenerate vertices; 0 disables. The shifts are removed before the
  /// solution is reported.
  double perturbation = 1e-9;
};

namespace detail {

/// Dense-tableau bounded-variable primal simplex. Columns are structural
/// variables, one slack per row, then phase-one artificials.
class BoundedSimplex {
 public:
  BoundedSimplex(const LPModel& model, const SimplexOptions& opt)
      : model_(model), opt_(opt), n_(model.num_vars()), m_(model.num_rows()) {}

  LPSolution solve() {
    model_.validate();
    setup();
    LPSolution sol;
    const long limit = opt_.max_iterations > 0
                           ? opt_.max_iterations
                           : 50L * (static_cast<long>(m_) + n_) + 10000L;

    if (num_artificial_ > 0) {
      std::vector<double> c(cols_, 0.0);
      for (int j = n_ + m_; j < cols_; ++j) c[j] = 1.0;
      const LPStatus s = iterate(c, limit);
      if (s == LPStatus::kIterationLimit) return finish(sol, s);
      refresh_values();
      double infeas = 0.0;
      for (int j = n_ + m_; j < cols_; ++j) infeas += std::max(0.0, x_[j]);
      if (infeas > opt_.tol) return finish(sol, LPStatus::kInfeasible);
      for (int j = n_ + m_; j < cols_; ++j) {
        lo_[j] = hi_[j] = 0.0;
        if (pos_[j] < 0) x_[j] = 0.0;
      }
    }
    std::vector<double> c(cols_, 0.0);
    for (int j = 0; j < n_; ++j) c[j] = model_.costs()[j];
    LPStatus s = iterate(c, limit);
    if (s == LPStatus::kOptimal && perturbed_) {
      rhs_ = original_rhs_;
      perturbed_ = false;
      refresh_values();
      if (!dual_cleanup(limit)) return finish(sol, LPStatus::kInfeasible);
      s = iterate(c, limit);
    }
    return finish(sol, s);
  }

 private:
  double& at(int i, int j) { return tab_[static_cast<std::size_t>(i) * cols_ + j]; }

  void setup() {
    const auto& lo = model_.lower();
    const auto& hi = model_.upper();
    columns_.assign(n_, {});
    for (int i = 0; i < m_; ++i)
      for (const auto& t : model_.rows()[i].terms)
        if (t.coef != 0.0) columns_[t.var].push_back({i, t.coef});

    std::vector<double> xs(n_);
    for (int j = 0; j < n_; ++j)
      xs[j] = std::isfinite(lo[j]) ? lo[j] : (std::isfinite(hi[j]) ? hi[j] : 0.0);

    // Residual r = b - A x_N decides whether each slack can start basic.
    std::vector<double> r(m_);
    rhs_.resize(m_);
    for (int i = 0; i < m_; ++i) {
      const auto& row = model_.rows()[i];
      rhs_[i] = row.rhs;
    }
    original_rhs_ = rhs_;
    if (opt_.perturbation > 0.0) {
      // Inequality rows are loosened by a small amount drawn from a fixed
      // seed, so every solve of the same model takes the same path.
      std::mt19937_64 rng(0x5eed);
      std::uniform_real_distribution<double> u(1.0, 2.0);
      for (int i = 0; i < m_; ++i) {
        const auto rel = model_.rows()[i].relation;
        if (rel == Relation::kEqual) continue;
        const double d = opt_.perturbation * u(rng) * (1.0 + std::abs(rhs_[i]));
        rhs_[i] += rel == Relation::kLessEqual ? d : -d;
        perturbed_ = true;
      }
    }
    for (int i = 0; i < m_; ++i) {
      const auto& row = model_.rows()[i];
      double lhs = 0.0;
      for (const auto& t : row.terms) lhs += t.coef * xs[t.var];
      r[i] = rhs_[i] - lhs;
    }
    std::vector<int> art_row;
    std::vector<double> slack_lo(m_), slack_hi(m_);
    std::vector<char> slack_basic(m_);
    for (int i = 0; i < m_; ++i) {
      switch (model_.rows()[i].relation) {
        case Relation::kLessEqual: slack_lo[i] = 0.0; slack_hi[i] = kInf; break;
        case Relation::kGreaterEqual: slack_lo[i] = -kInf; slack_hi[i] = 0.0; break;
        case Relation::kEqual: slack_lo[i] = 0.0; slack_hi[i] = 0.0; break;
      }
      slack_basic[i] = r[i] >= slack_lo[i] && r[i] <= slack_hi[i];
      if (!slack_basic[i]) art_row.push_back(i);
    }
    num_artificial_ = static_cast<int>(art_row.size());
    cols_ = n_ + m_ + num_artificial_;
    tab_.assign(static_cast<std::size_t>(m_) * cols_, 0.0);
    lo_.assign(cols_, 0.0);
    hi_.assign(cols_, 0.0);
    x_.assign(cols_, 0.0);
    basis_.assign(m_, -1);
    pos_.assign(cols_, -1);
    art_sign_.assign(m_, 0.0);

    for (int j = 0; j < n_; ++j) {
      lo_[j] = lo[j];
      hi_[j] = hi[j];
      x_[j] = xs[j];
    }
    for (int i = 0; i < m_; ++i) {
      lo_[n_ + i] = slack_lo[i];
      hi_[n_ + i] = slack_hi[i];
    }
    int a = 0;
    std::vector<int> row_art(m_, -1);
    for (int i : art_row) row_art[i] = a++;

    for (int i = 0; i < m_; ++i) {
      // Row i of B^{-1}A: identity basis up to the sign of an artificial.
      double sign = 1.0;
      if (row_art[i] >= 0) sign = r[i] >= 0.0 ? 1.0 : -1.0;
      for (const auto& t : model_.rows()[i].terms) at(i, t.var) += sign * t.coef;
      at(i, n_ + i) = sign;
      if (row_art[i] >= 0) {
        const int col = n_ + m_ + row_art[i];
        art_sign_[i] = sign;
        at(i, col) = 1.0;
        lo_[col] = 0.0;
        hi_[col] = kInf;
        basis_[i] = col;
        x_[col] = std::abs(r[i]);
        const double s = r[i] > slack_hi[i] ? slack_hi[i] : slack_lo[i];
        x_[n_ + i] = s;
        x_[col] = std::abs(r[i] - s);
      } else {
        basis_[i] = n_ + i;
        x_[n_ + i] = r[i];
      }
      pos_[basis_[i]] = i;
    }
    art_of_row_ = row_art;
  }

  /// Recomputes basic values from the nonbasic ones: x_B = B^{-1}(b - N x_N).
  /// The slack block of the tableau holds B^{-1}.
  void refresh_values() {
    std::vector<double> r = rhs_;
    for (int j = 0; j < n_; ++j) {
      if (pos_[j] >= 0 || x_[j] == 0.0) continue;
      for (const auto& [i, a] : columns_[j]) r[i] -= a * x_[j];
    }
    for (int i = 0; i < m_; ++i) {
      const int sj = n_ + i;
      if (pos_[sj] < 0) r[i] -= x_[sj];
      if (art_of_row_[i] >= 0) {
        const int aj = n_ + m_ + art_of_row_[i];
        if (pos_[aj] < 0) r[i] -= art_sign_[i] * x_[aj];
      }
    }
    for (int i = 0; i < m_; ++i) {
      const double* row = &tab_[static_cast<std::size_t>(i) * cols_ + n_];
      double v = 0.0;
      for (int k = 0; k < m_; ++k)
        if (row[k] != 0.0) v += row[k] * r[k];
      x_[basis_[i]] = v;
    }
  }

  void compute_reduced_costs(const std::vector<double>& c) {
    d_ = c;
    for (int i = 0; i < m_; ++i) {
      const double cb = c[basis_[i]];
      if (cb == 0.0) continue;
      const double* row = &tab_[static_cast<std::size_t>(i) * cols_];
      for (int j = 0; j < cols_; ++j)
        if (row[j] != 0.0) d_[j] -= cb * row[j];
    }
    for (int i = 0; i < m_; ++i) d_[basis_[i]] = 0.0;
  }

  LPStatus iterate(const std::vector<double>& c, long limit) {
    compute_reduced_costs(c);
    int degenerate_run = 0;
    long since_refresh = 0;
    while (true) {
      if (iterations_ >= limit) return LPStatus::kIterationLimit;
      if (since_refresh >= opt_.refresh_interval) {
        refresh_values();
        compute_reduced_costs(c);
        since_refresh = 0;
      }
      const bool bland = opt_.bland_only || degenerate_run >= opt_.degenerate_run_before_bland;

      // Pricing.
      int q = -1;
      double best = 0.0;
      for (int j = 0; j < cols_; ++j) {
        if (pos_[j] >= 0 || lo_[j] == hi_[j]) continue;
        const double dj = d_[j];
        double score = 0.0;
        if (dj < -opt_.optimality_tol && x_[j] < hi_[j]) score = -dj;
        else if (dj > opt_.optimality_tol && x_[j] > lo_[j]) score = dj;
        if (score <= 0.0) continue;
        if (bland) {
          q = j;
          break;
        }
        if (score > best) {
          best = score;
          q = j;
        }
      }
      if (q < 0) {
        // Confirm with fresh values and prices before declaring optimality.
        if (since_refresh > 0) {
          refresh_values();
          compute_reduced_costs(c);
          since_refresh = 0;
          if (has_candidate()) continue;
        }
        return LPStatus::kOptimal;
      }
      const double dir = d_[q] < 0.0 ? 1.0 : -1.0;

      // Ratio test.
      double theta = (std::isfinite(lo_[q]) && std::isfinite(hi_[q])) ? hi_[q] - lo_[q] : kInf;
      int leave = -1;
      double leave_pivot = 0.0;
      for (int i = 0; i < m_; ++i) {
        const double a = at(i, q);
        if (std::abs(a) < kPivotTol) continue;
        const double rate = -a * dir;
        const int b = basis_[i];
        double t;
        if (rate < 0.0) {
          if (!std::isfinite(lo_[b])) continue;
          t = (x_[b] - lo_[b]) / -rate;
        } else {
          if (!std::isfinite(hi_[b])) continue;
          t = (hi_[b] - x_[b]) / rate;
        }
        t = std::max(t, 0.0);
        bool take = false;
        if (t < theta - kTieTol) {
          take = true;
        } else if (t <= theta + kTieTol && leave >= 0) {
          take = bland ? b < basis_[leave] : std::abs(a) > std::abs(leave_pivot);
        } else if (t <= theta + kTieTol && leave < 0 && t < theta) {
          take = true;
        }
        if (take) {
          theta = t;
          leave = i;
          leave_pivot = a;
        }
      }
      if (!std::isfinite(theta)) return LPStatus::kUnbounded;

      ++iterations_;
      ++since_refresh;
      degenerate_run = theta <= kTieTol ? degenerate_run + 1 : 0;

      const double step = dir * theta;
      if (step != 0.0) {
        x_[q] += step;
        for (int i = 0; i < m_; ++i) {
          const double a = at(i, q);
          if (a != 0.0) x_[basis_[i]] -= a * step;
        }
      }
      if (leave < 0) {
        x_[q] = dir > 0 ? hi_[q] : lo_[q];
        continue;
      }
      const int b = basis_[leave];
      x_[b] = (-leave_pivot * dir) < 0.0 ? lo_[b] : hi_[b];
      pivot(leave, q);
    }
  }

  /// Dual simplex pivots that restore primal feasibility after the shifts
  /// are removed. The basis stays dual feasible, so the result is optimal.
  /// False when some row cannot be repaired (the model is infeasible).
  bool dual_cleanup(long limit) {
    constexpr double kFeasTol = 1e-11;
    while (iterations_ < limit) {
      int r = -1;
      double worst = kFeasTol;
      for (int i = 0; i < m_; ++i) {
        const int b = basis_[i];
        const double v = std::max(lo_[b] - x_[b], x_[b] - hi_[b]);
        if (v > worst) {
          worst = v;
          r = i;
        }
      }
      if (r < 0) return true;
      const int b = basis_[r];
      const bool raise = x_[b] < lo_[b];
      const double target = raise ? lo_[b] : hi_[b];
      // Moving nonbasic j by t changes x_b by -alpha_rj t.
      int q = -1;
      double best = kInf, best_alpha = 0.0;
      for (int j = 0; j < cols_; ++j) {
        if (pos_[j] >= 0 || lo_[j] == hi_[j]) continue;
        const double a = at(r, j);
        if (std::abs(a) < kPivotTol) continue;
        const double want = raise ? -a : a;  // sign of the useful step in x_j
        const bool up = want > 0.0;
        if (up && x_[j] >= hi_[j]) continue;
        if (!up && x_[j] <= lo_[j]) continue;
        const double ratio = std::abs(d_[j]) / std::abs(a);
        if (ratio < best - kTieTol || (ratio <= best + kTieTol && std::abs(a) > std::abs(best_alpha))) {
          best = ratio;
          q = j;
          best_alpha = a;
        }
      }
      if (q < 0) return false;
      ++iterations_;
      const double step = (x_[b] - target) / best_alpha;
      x_[q] += step;
      for (int i = 0; i < m_; ++i) {
        const double a = at(i, q);
        if (a != 0.0) x_[basis_[i]] -= a * step;
      }
      x_[b] = target;
      pivot(r, q);
    }
    return false;
  }

  bool has_candidate() const {
    for (int j = 0; j < cols_; ++j) {
      if (pos_[j] >= 0 || lo_[j] == hi_[j]) continue;
      if (d_[j] < -opt_.optimality_tol && x_[j] < hi_[j]) return true;
      if (d_[j] > opt_.optimality_tol && x_[j] > lo_[j]) return true;
    }
    return false;
  }

  void pivot(int r, int q) {
    double* prow = &tab_[static_cast<std::size_t>(r) * cols_];
    const double inv = 1.0 / prow[q];
    nz_.clear();
    for (int j = 0; j < cols_; ++j) {
      if (prow[j] == 0.0) continue;
      prow[j] *= inv;
      if (std::abs(prow[j]) < kDropTol) {
        prow[j] = 0.0;
        continue;
      }
      nz_.push_back(j);
    }
    prow[q] = 1.0;
    for (int i = 0; i < m_; ++i) {
      if (i == r) continue;
      double* row = &tab_[static_cast<std::size_t>(i) * cols_];
      const double f = row[q];
      if (f == 0.0) continue;
      for (int j : nz_) {
        double v = row[j] - f * prow[j];
        row[j] = std::abs(v) < kDropTol ? 0.0 : v;
      }
      row[q] = 0.0;
    }
    const double f = d_[q];
    if (f != 0.0)
      for (int j : nz_) d_[j] -= f * prow[j];
    d_[q] = 0.0;
    pos_[basis_[r]] = -1;
    basis_[r] = q;
    pos_[q] = r;
  }

  LPSolution& finish(LPSolution& sol, LPStatus s) {
    refresh_values();
    sol.status = s;
    sol.iterations = iterations_;
    sol.x.assign(x_.begin(), x_.begin() + n_);
    for (int j = 0; j < n_; ++j) {
      if (std::abs(sol.x[j] - lo_[j]) < kSnapTol) sol.x[j] = lo_[j];
      if (std::abs(sol.x[j] - hi_[j]) < kSnapTol) sol.x[j] = hi_[j];
    }
    sol.objective_value = model_.objective_at(sol.x);
    return sol;
  }

  static constexpr double kPivotTol = 1e-9;
  static constexpr double kTieTol = 1e-12;
  static constexpr double kDropTol = 1e-13;
  static constexpr double kSnapTol = 1e-11;

  const LPModel& model_;
  SimplexOptions opt_;
  int n_, m_;
  int cols_ = 0;
  int num_artificial_ = 0;
  long iterations_ = 0;
  std::vector<double> tab_;
  std::vector<double> lo_, hi_, x_, d_, rhs_, original_rhs_, art_sign_;
  bool perturbed_ = false;
  std::vector<int> basis_, pos_, art_of_row_, nz_;
  std::vector<std::vector<std::pair<int, double>>> columns_;
};

}  // namespace detail

/// Solves a minimization LP with the in-repo bounded-variable simplex.
/// Dantzig pricing on a slightly perturbed right-hand side, falling back to
/// Bland's rule on degenerate stalls, then dual pivots on the exact one.
inline LPSolution solve_lp(const LPModel& model, const SimplexOptions& opt = {}) {
  return detail::BoundedSimplex(model, opt).solve();
}

inline LPSolution solve_lp(const LPModel& model, double tol) {
  SimplexOptions opt;
  opt.tol = tol;
  return solve_lp(model, opt);
}

/// Any callable honoring the solve_lp contract can stand in for the simplex.
using LPBackend = std::function<LPSolution(const LPModel&, double tol)>;

inline LPBackend default_backend() {
  return [](const LPModel& m, double tol) { return solve_lp(m, tol); };
}

}  // namespace lcc::lp

#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "lcc/errors.hpp"
#include "lcc/instances.hpp"
#include "lcc/lp/builders.hpp"
#include "lcc/lp/simplex.hpp"
#include "lcc/rounding/certificate.hpp"
#include "lcc/rounding/pivot.hpp"

namespace lcc {

struct CgwParams {
  double gamma = 0.25;
  double delta = 0.5;

  void validate() const {
    if (!(gamma > 0.0 && gamma < 1.0 && delta > 0.0 && delta < 1.0))
      throw ParameterError("cgw: gamma and delta must lie in (0,1)");
  }
  bool operator==(const CgwParams&) const = default;
};

inline CgwParams cgw_default_params(int k) {
  if (k < 2) throw ParameterError("cgw_default_params: k must be at least 2");
  return {1.0 / (2.0 * (k - 1)), 0.5};
}

/// One pivot step of the rounding: W is the unclustered set before the step.
struct CgwStep {
  std::vector<int> W;
  int pivot = -1;
  std::vector<int> near;  // T_u
  double mean = 0.0;      // mean of x_ui over T_u, 0 when T_u is empty
  bool absorbed = false;  // cluster is {u} + T_u rather than {u}
};

struct CgwRoundResult {
  Clustering clustering;
  std::vector<CgwStep> trace;
};

/// Threshold rounding over pair distances. Each step takes a pivot u from W,
/// T_u = {i in W \ {u} : x_ui <= gamma}; the cluster is {u} + T_u when
/// sum x_ui over T_u < gamma delta |T_u|, else {u}.
inline CgwRoundResult cgw_round(const PairDistances& x, const CgwParams& params,
                                PivotRule rule = PivotRule::kLowest, std::uint64_t seed = 0) {
  params.validate();
  if (rule == PivotRule::kRatio) throw ParameterError("cgw: ratio pivot rule is not defined here");
  const int n = x.n();
  std::mt19937_64 rng(seed);
  std::vector<int> W(n);
  for (int i = 0; i < n; ++i) W[i] = i;
  std::vector<int> labels(n, -1);
  CgwRoundResult out;
  int next_label = 0;
  while (!W.empty()) {
    CgwStep step;
    step.W = W;
    step.pivot = W.front();
    if (rule == PivotRule::kRandom) {
      std::uniform_int_distribution<std::size_t> pick(0, W.size() - 1);
      step.pivot = W[pick(rng)];
    }
    const int u = step.pivot;
    double sum = 0.0;
    for (int i : W)
      if (i != u && x(u, i) <= params.gamma) {
        step.near.push_back(i);
        sum += x(u, i);
      }
    const auto t = static_cast<double>(step.near.size());
    step.mean = step.near.empty() ? 0.0 : sum / t;
    step.absorbed = !step.near.empty() && sum < params.gamma * params.delta * t;
    labels[u] = next_label;
    if (step.absorbed)
      for (int i : step.near) labels[i] = next_label;
    ++next_label;
    std::erase_if(W, [&](int v) { return labels[v] >= 0; });
    out.trace.push_back(std::move(step));
  }
  out.clustering = Clustering(std::move(labels));
  return out;
}

struct CgwOptions {
  std::optional<CgwParams> params;  // defaults to cgw_default_params(k)
  PivotRule rule = PivotRule::kLowest;
  std::uint64_t seed = 0;
  double tol = 1e-7;
  /// Extension to lambda-weighted hyperedges: the factor holds for lambda >= 1/2.
  std::optional<double> lambda;
};

struct CgwResult {
  Clustering clustering;
  RoundingCertificate certificate;
  lp::LPSolution lp;
  PairDistances distances;
  std::vector<CgwStep> trace;
};

namespace detail {

inline void require_metric(const PairDistances& x, double tol) {
  const auto viol = check_triangle_feasible(x, tol);
  if (!viol.empty()) {
    const auto& v = viol.front();
    throw InputError("cgw: distances violate the triangle inequality at (" + std::to_string(v.i) +
                     "," + std::to_string(v.j) + "," + std::to_string(v.k) + ") by " +
                     std::to_string(v.amount));
  }
}

inline lp::LPSolution solve_or_throw(const lp::LPModel& m, double tol, const char* who) {
  auto sol = lp::solve_lp(m, tol);
  if (!sol.optimal())
    throw SolverError(std::string(who) + ": LP solve ended with status " +
                      lp::to_string(sol.status));
  return sol;
}

inline bool is_lambda_hypergraph(const SignedHypergraph& h, double lambda) {
  constexpr double eps = 1e-12;
  for (const auto& e : h.edges()) {
    const bool pos = std::abs(e.w_plus - (1.0 - lambda)) < eps && e.w_minus == 0.0;
    const bool neg = e.w_plus == 0.0 && std::abs(e.w_minus - lambda) < eps;
    if (!pos && !neg) return false;
  }
  return true;
}

/// 4(k-1) when the defaults are used on a complete instance whose weights
/// are probability constrained or lambda-weighted with lambda >= 1/2.
inline void cgw_certify(RoundingCertificate& cert, int k, const CgwParams& used,
                        bool weights_ok, bool complete) {
  const bool defaults = used == cgw_default_params(k);
  cert.params = {{"gamma", used.gamma}, {"delta", used.delta}, {"k", static_cast<double>(k)}};
  if (!defaults) {
    cert.note = "unproven: non-default gamma/delta";
  } else if (!weights_ok) {
    cert.note = "unproven: weights are neither probability constrained nor lambda >= 1/2";
  } else if (!complete) {
    cert.note = "unproven: instance does not list every k-tuple";
  } else {
    cert.guarantee = 4.0 * (k - 1);
    if (k > 6) cert.note = "factor for k > 6 is untested";
  }
}

}  // namespace detail

/// Solves the motif LP and rounds it.
inline CgwResult cgw_solve(const SignedHypergraph& h, const CgwOptions& opt = {}) {
  const auto params = opt.params.value_or(cgw_default_params(h.k()));
  params.validate();
  auto model = build_motif_lp(h);
  CgwResult out;
  out.lp = detail::solve_or_throw(model.model, opt.tol, "cgw");
  out.distances = model.distances(out.lp);
  detail::require_metric(out.distances, 1e-6);
  auto r = cgw_round(out.distances, params, opt.rule, opt.seed);
  out.clustering = std::move(r.clustering);
  out.trace = std::move(r.trace);
  auto& cert = out.certificate;
  cert.algorithm = "cgw";
  cert.lp_objective = out.lp.objective_value;
  cert.rounded_objective = motif_objective(h, out.clustering);
  cert.seed = opt.seed;
  const bool weights_ok = h.probability_constrained() ||
                          (opt.lambda && *opt.lambda >= 0.5 && detail::is_lambda_hypergraph(h, *opt.lambda));
  detail::cgw_certify(cert, h.k(), params, weights_ok, h.is_complete());
  if (opt.lambda) cert.params["lambda"] = *opt.lambda;
  return out;
}

/// Mixed objective: pair distances come from the mixed LP; the factor is
/// the one for the largest active motif size.
inline CgwResult cgw_solve(const MixedMotifInstance& m, const CgwOptions& opt = {}) {
  const int k = m.max_active_k();
  const auto params = opt.params.value_or(cgw_default_params(k));
  params.validate();
  auto model = build_mixed_lp(m);
  CgwResult out;
  out.lp = detail::solve_or_throw(model.model, opt.tol, "cgw");
  out.distances = model.distances(out.lp);
  detail::require_metric(out.distances, 1e-6);
  auto r = cgw_round(out.distances, params, opt.rule, opt.seed);
  out.clustering = std::move(r.clustering);
  out.trace = std::move(r.trace);
  auto& cert = out.certificate;
  cert.algorithm = "cgw_mixed";
  cert.lp_objective = out.lp.objective_value;
  cert.rounded_objective = mixed_motif_objective(m, out.clustering);
  cert.seed = opt.seed;
  bool weights_ok = true, complete = true;
  for (const auto& [t, h] : m.levels())
    if (m.rho(t) > 0.0) {
      weights_ok = weights_ok && h.probability_constrained();
      complete = complete && h.is_complete();
    }
  detail::cgw_certify(cert, k, params, weights_ok, complete);
  return out;
}

/// Rounds externally supplied distances; they must be a metric within tol.
inline CgwRoundResult cgw_round_checked(const PairDistances& x, const CgwParams& params,
                                        PivotRule rule = PivotRule::kLowest,
                                        std::uint64_t seed = 0, double tol = 1e-6) {
  detail::require_metric(x, tol);
  return cgw_round(x, params, rule, seed);
}

}  // namespace lcc

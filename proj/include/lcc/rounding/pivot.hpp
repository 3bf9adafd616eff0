#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "lcc/combinatorics.hpp"
#include "lcc/errors.hpp"
#include "lcc/instances.hpp"
#include "lcc/lp/builders.hpp"
#include "lcc/lp/simplex.hpp"
#include "lcc/rounding/certificate.hpp"

namespace lcc {

enum class PivotRule {
  kRandom,  ///< seeded uniform choice among unclustered nodes
  kLowest,  ///< lowest unclustered index
  kRatio,   ///< minimize charged cost / LP cost of the pairs the pivot decides
};

enum class ThresholdMode {
  kStrict,     ///< x < threshold joins F+
  kInclusive,  ///< x <= threshold joins F+
};

inline const char* to_string(PivotRule r) {
  switch (r) {
    case PivotRule::kRandom: return "random";
    case PivotRule::kLowest: return "lowest";
    case PivotRule::kRatio: return "ratio";
  }
  return "?";
}

/// Complete signed graph G' = (V, F+, F-) obtained by thresholding LP
/// distances.
class PivotGraph {
 public:
  PivotGraph() = default;
  PivotGraph(int n, std::vector<char> positive) : n_(n), positive_(std::move(positive)) {
    if (positive_.size() != num_pairs(n)) throw InputError("pivot graph: wrong pair count");
  }

  int n() const { return n_; }
  bool positive(int i, int j) const { return positive_[pair_index(n_, i, j)] != 0; }

  std::size_t num_positive() const {
    return static_cast<std::size_t>(std::count(positive_.begin(), positive_.end(), 1));
  }

 private:
  int n_ = 0;
  std::vector<char> positive_;
};

inline PivotGraph build_pivot_graph(const PairDistances& x, double threshold = 1.0 / 3.0,
                                    ThresholdMode mode = ThresholdMode::kStrict) {
  const auto v = x.values();
  std::vector<char> pos(v.size());
  for (std::size_t p = 0; p < v.size(); ++p)
    pos[p] = mode == ThresholdMode::kStrict ? v[p] < threshold : v[p] <= threshold;
  return PivotGraph(x.n(), std::move(pos));
}

/// Per-pair LP charge c_ij = w+ x_ij + w- (1 - x_ij).
inline std::vector<double> lp_pair_costs(const SignedGraph& sg, const PairDistances& x) {
  const auto wp = sg.plus_weights();
  const auto wm = sg.minus_weights();
  const auto xv = x.values();
  std::vector<double> c(xv.size());
  for (std::size_t p = 0; p < xv.size(); ++p) c[p] = wp[p] * xv[p] + wm[p] * (1.0 - xv[p]);
  return c;
}

/// Weights and LP charges used by the ratio pivot rule.
struct RatioPivotData {
  const SignedGraph* weights = nullptr;
  std::span<const double> lp_costs;
};

struct PivotResult {
  Clustering clustering;
  std::vector<int> pivots;  // in selection order
};

namespace detail {

/// Charged cost and LP cost of every pair decided when `k` pivots over the
/// remaining node set.
inline std::pair<double, double> pivot_charge(const PivotGraph& pg, const RatioPivotData& data,
                                              const std::vector<int>& remaining,
                                              const std::vector<char>& in_cluster) {
  const int n = pg.n();
  const auto wp = data.weights->plus_weights();
  const auto wm = data.weights->minus_weights();
  double alg = 0.0, lp = 0.0;
  for (std::size_t a = 0; a < remaining.size(); ++a)
    for (std::size_t b = a + 1; b < remaining.size(); ++b) {
      const int i = remaining[a], j = remaining[b];
      const bool ci = in_cluster[i], cj = in_cluster[j];
      if (!ci && !cj) continue;
      const auto p = pair_index(n, i, j);
      alg += (ci && cj) ? wm[p] : wp[p];
      lp += data.lp_costs[p];
    }
  return {alg, lp};
}

}  // namespace detail

/// Repeatedly picks a pivot among the unclustered nodes and clusters it with
/// its unclustered F+ neighbors.
inline PivotResult pivot_cluster(const PivotGraph& pg, PivotRule rule, std::uint64_t seed = 0,
                                 const RatioPivotData* ratio = nullptr) {
  if (rule == PivotRule::kRatio && (ratio == nullptr || ratio->weights == nullptr ||
                                    ratio->lp_costs.size() != num_pairs(pg.n())))
    throw ParameterError("ratio pivot rule needs instance weights and LP pair costs");
  const int n = pg.n();
  std::mt19937_64 rng(seed);
  std::vector<int> remaining(n);
  for (int i = 0; i < n; ++i) remaining[i] = i;
  std::vector<int> labels(n, -1);
  PivotResult out;
  int next_label = 0;
  std::vector<char> mark(n, 0);

  auto members_of = [&](int k) {
    std::vector<int> m{k};
    for (int v : remaining)
      if (v != k && pg.positive(k, v)) m.push_back(v);
    return m;
  };

  while (!remaining.empty()) {
    int pivot = remaining.front();
    if (rule == PivotRule::kRandom) {
      std::uniform_int_distribution<std::size_t> pick(0, remaining.size() - 1);
      pivot = remaining[pick(rng)];
    } else if (rule == PivotRule::kRatio) {
      double best = std::numeric_limits<double>::infinity();
      for (int k : remaining) {
        const auto members = members_of(k);
        for (int v : members) mark[v] = 1;
        const auto [alg, lp] = detail::pivot_charge(pg, *ratio, remaining, mark);
        for (int v : members) mark[v] = 0;
        double r;
        if (lp > 0.0) r = alg / lp;
        else r = alg > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
        if (r < best) {
          best = r;
          pivot = k;
        }
      }
    }
    const auto members = members_of(pivot);
    for (int v : members) labels[v] = next_label;
    ++next_label;
    out.pivots.push_back(pivot);
    std::erase_if(remaining, [&](int v) { return labels[v] >= 0; });
  }
  out.clustering = Clustering(std::move(labels));
  return out;
}

/// Approximation factor of LP thresholding at 1/3 followed by pivoting:
/// 3 for lambda >= 1/2, else max{1/lambda, (6 - 3 lambda)/(1 + lambda)}.
inline double alpha_guarantee(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0))
    throw ParameterError("alpha_guarantee: lambda must lie in (0,1)");
  if (lambda >= 0.5) return 3.0;
  return std::max(1.0 / lambda, (6.0 - 3.0 * lambda) / (1.0 + lambda));
}

/// Lambda at which the two branches of alpha_guarantee meet.
inline double alpha_branch_point() { return (5.0 - std::sqrt(13.0)) / 6.0; }

struct ThreeLpOptions {
  std::uint64_t seed = 0;
  PivotRule rule = PivotRule::kRandom;
  ThresholdMode mode = ThresholdMode::kStrict;
  double threshold = 1.0 / 3.0;
  double tol = 1e-7;
};

struct ThreeLpResult {
  Clustering clustering;
  RoundingCertificate certificate;
  lp::LPSolution lp;
  PairDistances distances;
  PivotGraph pivot_graph;
  std::vector<double> lp_costs;
  std::vector<int> pivots;
};

/// Solve the metric LP, threshold distances at 1/3 into G', pivot on G'.
inline ThreeLpResult three_lp(const SignedGraph& sg, const LambdaParams& p,
                              const ThreeLpOptions& opt = {}) {
  p.validate();
  if (!is_lambda_weighting(sg, p.lambda, 1e-9))
    throw InputError("three_lp: instance is not a LambdaCC weighting for lambda = " +
                     std::to_string(p.lambda));
  auto lp_model = build_cc_lp(sg);
  ThreeLpResult out;
  out.lp = lp::solve_lp(lp_model.model, opt.tol);
  if (!out.lp.optimal())
    throw SolverError(std::string("three_lp: LP solve ended with status ") +
                      lp::to_string(out.lp.status));
  out.distances = lp_model.distances(out.lp);
  out.pivot_graph = build_pivot_graph(out.distances, opt.threshold, opt.mode);
  out.lp_costs = lp_pair_costs(sg, out.distances);
  const RatioPivotData data{&sg, out.lp_costs};
  auto piv = pivot_cluster(out.pivot_graph, opt.rule, opt.seed, &data);
  out.clustering = std::move(piv.clustering);
  out.pivots = std::move(piv.pivots);

  auto& cert = out.certificate;
  cert.algorithm = "three_lp";
  cert.params = {{"lambda", p.lambda}, {"threshold", opt.threshold}};
  cert.lp_objective = out.lp.objective_value;
  cert.rounded_objective = cc_objective(sg, out.clustering);
  cert.seed = opt.seed;
  if (std::abs(opt.threshold - 1.0 / 3.0) < 1e-15) {
    cert.guarantee = alpha_guarantee(p.lambda);
    cert.note = std::string("pivot rule ") + to_string(opt.rule) +
                (opt.rule == PivotRule::kRatio ? "; bound holds per run"
                                               : "; bound holds in expectation over pivots");
  } else {
    cert.note = "non-default threshold: no proven factor";
  }
  return out;
}

enum class VzwCondition { kPositivePair, kNegativePair, kBadTriplet };

struct VzwViolation {
  VzwCondition condition;
  int i, j, k;  // k = -1 for pair conditions; bad triplet has (i,j),(j,k) in F+
  double lhs, rhs;
};

/// Conditions under which pivoting on G' is an alpha-approximation against
/// the LP charges c: w- <= alpha c on F+ pairs, w+ <= alpha c on F- pairs,
/// and w+_ij + w+_jk + w-_ik <= alpha (c_ij + c_jk + c_ik) on every bad
/// triplet ((i,j),(j,k) in F+, (i,k) in F-).
inline std::vector<VzwViolation> check_vzw_conditions(const SignedGraph& sg, const PivotGraph& pg,
                                                      std::span<const double> c, double alpha,
                                                      double tol = 1e-6) {
  const int n = sg.n();
  if (pg.n() != n || c.size() != num_pairs(n))
    throw InputError("check_vzw_conditions: size mismatch");
  std::vector<VzwViolation> out;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto p = pair_index(n, i, j);
      if (pg.positive(i, j)) {
        if (sg.minus(i, j) > alpha * c[p] + tol)
          out.push_back({VzwCondition::kPositivePair, i, j, -1, sg.minus(i, j), alpha * c[p]});
      } else if (sg.plus(i, j) > alpha * c[p] + tol) {
        out.push_back({VzwCondition::kNegativePair, i, j, -1, sg.plus(i, j), alpha * c[p]});
      }
    }
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      if (i == j || !pg.positive(i, j)) continue;
      for (int k = i + 1; k < n; ++k) {
        if (k == j || !pg.positive(j, k) || pg.positive(i, k)) continue;
        const double lhs = sg.plus(i, j) + sg.plus(j, k) + sg.minus(i, k);
        const double rhs =
            alpha * (c[pair_index(n, i, j)] + c[pair_index(n, j, k)] + c[pair_index(n, i, k)]);
        if (lhs > rhs + tol) out.push_back({VzwCondition::kBadTriplet, i, j, k, lhs, rhs});
      }
    }
  return out;
}

}  // namespace lcc

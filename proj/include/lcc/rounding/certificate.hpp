#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>

namespace lcc {

/// rounded / lp, with 0/0 read as 1.
inline double cost_ratio(double rounded, double lp, double zero_tol = 1e-9) {
  if (lp > zero_tol) return rounded / lp;
  return rounded <= zero_tol ? 1.0 : std::numeric_limits<double>::infinity();
}

/// What a rounding run produced and which factor it is entitled to claim.
struct RoundingCertificate {
  std::string algorithm;
  std::map<std::string, double> params;
  /// LP lower bound; empty for algorithms that do not solve an LP.
  std::optional<double> lp_objective;
  double rounded_objective = 0.0;
  /// Proven approximation factor; empty when no theorem covers the inputs.
  std::optional<double> guarantee;
  std::string note;
  std::uint64_t seed = 0;

  std::optional<double> ratio_vs_lp() const {
    if (!lp_objective) return std::nullopt;
    return cost_ratio(rounded_objective, *lp_objective);
  }
};

}  // namespace lcc

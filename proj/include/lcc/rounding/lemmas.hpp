#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "lcc/combinatorics.hpp"
#include "lcc/errors.hpp"
#include "lcc/instances.hpp"
#include "lcc/lp/builders.hpp"
#include "lcc/rounding/cgw.hpp"

// Property checks relating pair distances x_ij and hyperedge values x_E of a
// feasible motif LP point to the sets the CGW rounding works with. Each check
// returns the failing cases; an empty list means the property holds.

namespace lcc {

struct LemmaFailure {
  int lemma = 0;
  std::string where;
  double lhs = 0.0;
  double rhs = 0.0;
};

/// Near set of u inside W: {i in W \ {u} : x_ui <= gamma}.
inline std::vector<int> near_set(const PairDistances& x, std::span<const int> W, int u,
                                 double gamma) {
  std::vector<int> t;
  for (int i : W)
    if (i != u && x(u, i) <= gamma) t.push_back(i);
  return t;
}

/// For every hyperedge E and node u, with a and z the nodes of E closest to and
/// farthest from u: x_E <= sum_{i in E} x_ui, x_E <= x_ua + (k-1) x_uz and
/// x_E >= x_uz - x_ua.
inline std::vector<LemmaFailure> check_lemma1(const SignedHypergraph& h, const PairDistances& x,
                                              std::span<const double> xE, double tol) {
  if (xE.size() != h.size()) throw InputError("lemma 1: one value per hyperedge expected");
  std::vector<LemmaFailure> out;
  const int k = h.k();
  for (std::size_t e = 0; e < h.size(); ++e) {
    const auto& nodes = h.edges()[e].nodes;
    for (int u = 0; u < h.n(); ++u) {
      double sum = 0.0, lo = 2.0, hi = -1.0;
      for (int i : nodes) {
        const double d = x(u, i);
        sum += d;
        lo = std::min(lo, d);
        hi = std::max(hi, d);
      }
      const auto where = SignedHypergraph::tuple_string(nodes) + " u=" + std::to_string(u);
      if (xE[e] > sum + tol) out.push_back({1, where + " (sum)", xE[e], sum});
      if (xE[e] > lo + (k - 1) * hi + tol) out.push_back({1, where + " (upper)", xE[e], lo + (k - 1) * hi});
      if (xE[e] < hi - lo - tol) out.push_back({1, where + " (lower)", xE[e], hi - lo});
    }
  }
  return out;
}

/// Mean of x_E over T_u^k (u plus each (k-1)-subset of T_u) is at least the
/// mean of x_ui over T_u. Needs every such tuple to be a hyperedge.
inline std::vector<LemmaFailure> check_lemma2(const SignedHypergraph& h, const PairDistances& x,
                                              std::span<const double> xE, std::span<const int> W,
                                              int u, double gamma, double tol) {
  const int k = h.k();
  const auto T = near_set(x, W, u, gamma);
  if (static_cast<int>(T.size()) < k - 1) return {};
  double beta = 0.0;
  for (int i : T) beta += x(u, i);
  beta /= static_cast<double>(T.size());
  double sum = 0.0;
  std::size_t count = 0;
  std::vector<int> tuple(k);
  for_each_subset(std::span<const int>(T), k - 1, [&](std::span<const int> sub) {
    tuple.assign(sub.begin(), sub.end());
    tuple.push_back(u);
    std::sort(tuple.begin(), tuple.end());
    const auto id = h.find(tuple);
    if (!id) throw InputError("lemma 2: tuple " + SignedHypergraph::tuple_string(tuple) +
                              " is not a hyperedge");
    sum += xE[*id];
    ++count;
  });
  const double mean = sum / static_cast<double>(count);
  if (mean < beta - tol) return {{2, "u=" + std::to_string(u), mean, beta}};
  return {};
}

/// P_z for pivot u: k-subsets E of W \ {u} whose farthest node from u is z
/// (ties broken by index) with z outside T_u and closest node inside T_u.
/// The mean over P_z of x_{u,a_E}, a_E the closest node, is at most the mean
/// of x_ui over T_u. Purely combinatorial in x; every k-subset counts.
inline std::vector<LemmaFailure> check_lemma3(int k, const PairDistances& x,
                                              std::span<const int> W, int u, double gamma,
                                              double tol) {
  const auto T = near_set(x, W, u, gamma);
  if (T.empty()) return {};
  double beta = 0.0;
  for (int i : T) beta += x(u, i);
  beta /= static_cast<double>(T.size());

  std::vector<int> pool;
  for (int i : W)
    if (i != u) pool.push_back(i);
  std::vector<char> in_t(x.n(), 0);
  for (int i : T) in_t[i] = 1;
  auto farther = [&](int a, int b) {  // strict order by (x_u., index)
    return x(u, a) != x(u, b) ? x(u, a) > x(u, b) : a > b;
  };

  std::vector<double> sum(x.n(), 0.0);
  std::vector<std::size_t> count(x.n(), 0);
  for_each_subset(std::span<const int>(pool), k, [&](std::span<const int> E) {
    int z = E[0], a = E[0];
    for (int v : E) {
      if (farther(v, z)) z = v;
      if (farther(a, v)) a = v;
    }
    if (in_t[z] || !in_t[a]) return;
    sum[z] += x(u, a);
    ++count[z];
  });
  std::vector<LemmaFailure> out;
  for (int z = 0; z < x.n(); ++z) {
    if (count[z] == 0) continue;
    const double mean = sum[z] / static_cast<double>(count[z]);
    if (mean > beta + tol)
      out.push_back({3, "u=" + std::to_string(u) + " z=" + std::to_string(z), mean, beta});
  }
  return out;
}

/// Lemma 2 and 3 checks at every pivot state of a rounding trace.
inline std::vector<LemmaFailure> check_lemmas_on_trace(const SignedHypergraph& h,
                                                       const PairDistances& x,
                                                       std::span<const double> xE,
                                                       std::span<const CgwStep> trace,
                                                       double gamma, double tol) {
  std::vector<LemmaFailure> out;
  for (const auto& s : trace) {
    for (auto& f : check_lemma2(h, x, xE, s.W, s.pivot, gamma, tol)) out.push_back(std::move(f));
    for (auto& f : check_lemma3(h.k(), x, s.W, s.pivot, gamma, tol)) out.push_back(std::move(f));
  }
  return out;
}

/// Lemma 2 and 3 checks for every pivot choice with W = V.
inline std::vector<LemmaFailure> check_lemmas_all_pivots(const SignedHypergraph& h,
                                                         const PairDistances& x,
                                                         std::span<const double> xE,
                                                         double gamma, double tol) {
  std::vector<int> V(h.n());
  for (int i = 0; i < h.n(); ++i) V[i] = i;
  std::vector<LemmaFailure> out;
  for (int u = 0; u < h.n(); ++u) {
    for (auto& f : check_lemma2(h, x, xE, V, u, gamma, tol)) out.push_back(std::move(f));
    for (auto& f : check_lemma3(h.k(), x, V, u, gamma, tol)) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace lcc

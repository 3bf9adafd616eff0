#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lcc/errors.hpp"
#include "lcc/instances.hpp"

namespace lcc {

inline constexpr int kMaxEnumerateNodes = 13;
inline constexpr int kMaxExactCcNodes = 12;
inline constexpr int kMaxExactMotifNodes = 10;

/// Bell numbers via the Bell triangle.
inline std::uint64_t bell_number(int n) {
  std::vector<std::uint64_t> row{1};
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint64_t> next{row.back()};
    for (auto v : row) next.push_back(next.back() + v);
    row = std::move(next);
  }
  return row.front();
}

/// Set partitions of {0..n-1} as restricted-growth strings in lexicographic
/// order: a[0] = 0 and a[i] <= 1 + max(a[0..i-1]).
class PartitionIterator {
 public:
  explicit PartitionIterator(int n) : labels_(n, 0), prefix_max_(n, 0) {
    if (n > kMaxEnumerateNodes)
      throw SizeCapError("partition enumeration capped at n = " +
                         std::to_string(kMaxEnumerateNodes));
    if (n < 0) throw InputError("partition enumeration: negative n");
  }

  const std::vector<int>& labels() const { return labels_; }
  Clustering current() const { return Clustering(labels_); }

  /// Moves to the next partition; false once the enumeration is exhausted.
  bool advance() {
    const int n = static_cast<int>(labels_.size());
    for (int i = n - 1; i >= 1; --i) {
      if (labels_[i] <= prefix_max_[i - 1]) {
        ++labels_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], labels_[i]);
        for (int j = i + 1; j < n; ++j) {
          labels_[j] = 0;
          prefix_max_[j] = prefix_max_[i];
        }
        return true;
      }
    }
    return false;
  }

 private:
  std::vector<int> labels_;
  std::vector<int> prefix_max_;
};

/// Calls f(const Clustering&) for every set partition of n nodes.
template <class F>
void enumerate_partitions(int n, F&& f) {
  PartitionIterator it(n);
  do {
    f(it.current());
  } while (it.advance());
}

/// Objective expressed as weighted tuples: a tuple pays `split` when the
/// clustering separates it and `intact` otherwise. Pairs are 2-tuples.
class TupleCostModel {
 public:
  explicit TupleCostModel(int n) : n_(n), by_max_node_(n) {}

  void add(std::span<const int> sorted_tuple, double split, double intact) {
    if (split == 0.0 && intact == 0.0) return;
    by_max_node_[sorted_tuple.back()].push_back(
        {std::vector<int>(sorted_tuple.begin(), sorted_tuple.end()), split, intact});
  }

  static TupleCostModel from(const SignedGraph& sg) {
    TupleCostModel m(sg.n());
    for (int i = 0; i < sg.n(); ++i)
      for (int j = i + 1; j < sg.n(); ++j) {
        const int t[2] = {i, j};
        m.add(t, sg.plus(i, j), sg.minus(i, j));
      }
    return m;
  }
  static TupleCostModel from(const SignedHypergraph& h, double scale = 1.0) {
    TupleCostModel m(h.n());
    m.add_level(h, scale);
    return m;
  }
  static TupleCostModel from(const MixedMotifInstance& mm) {
    TupleCostModel m(mm.n());
    for (const auto& [t, h] : mm.levels())
      if (mm.rho(t) > 0.0) m.add_level(h, mm.rho(t));
    return m;
  }

  int n() const { return n_; }

  /// Depth-first walk over all partitions in restricted-growth order,
  /// accumulating tuple costs as each tuple's largest node is placed.
  /// f(labels, cost) sees each complete partition once.
  template <class F>
  void for_each_partition_cost(F&& f) const {
    std::vector<int> labels(n_, 0);
    if (n_ == 0) {
      f(labels, 0.0);
      return;
    }
    walk(0, 0, 0.0, labels, f);
  }

 private:
  struct Tuple {
    std::vector<int> nodes;
    double split;
    double intact;
  };

  void add_level(const SignedHypergraph& h, double scale) {
    for (const auto& e : h.edges()) add(e.nodes, scale * e.w_plus, scale * e.w_minus);
  }

  template <class F>
  void walk(int i, int max_label, double cost, std::vector<int>& labels, F& f) const {
    const int limit = i == 0 ? 0 : max_label + 1;
    for (int l = 0; l <= limit; ++l) {
      labels[i] = l;
      double c = cost;
      for (const auto& t : by_max_node_[i]) {
        bool intact = true;
        for (int v : t.nodes)
          if (labels[v] != l) {
            intact = false;
            break;
          }
        c += intact ? t.intact : t.split;
      }
      if (i + 1 == n_)
        f(static_cast<const std::vector<int>&>(labels), c);
      else
        walk(i + 1, std::max(max_label, l), c, labels, f);
    }
  }

  int n_;
  std::vector<std::vector<Tuple>> by_max_node_;
};

struct ExactResult {
  Clustering clustering;
  double cost = 0.0;
  std::uint64_t partitions_evaluated = 0;
};

namespace detail {

inline ExactResult exact_minimum(const TupleCostModel& model) {
  ExactResult best;
  best.cost = std::numeric_limits<double>::infinity();
  std::vector<int> best_labels;
  model.for_each_partition_cost([&](const std::vector<int>& labels, double cost) {
    ++best.partitions_evaluated;
    if (cost < best.cost) {
      best.cost = cost;
      best_labels = labels;
    }
  });
  best.clustering = Clustering(best_labels);
  return best;
}

}  // namespace detail

/// Streams (labels, cost) for every partition; costs match cc_objective /
/// motif_objective on the same labels.
template <class Instance, class F>
void incremental_cost_eval(const Instance& instance, F&& f) {
  if (instance.n() > kMaxEnumerateNodes)
    throw SizeCapError("incremental_cost_eval capped at n = " + std::to_string(kMaxEnumerateNodes));
  TupleCostModel::from(instance).for_each_partition_cost(f);
}

/// Optimal correlation clustering by exhaustive partition enumeration.
/// Ties resolve to the first optimum in enumeration order.
inline ExactResult exact_cc(const SignedGraph& sg) {
  if (sg.n() > kMaxExactCcNodes)
    throw SizeCapError("exact_cc capped at n = " + std::to_string(kMaxExactCcNodes) + ", got " +
                       std::to_string(sg.n()));
  return detail::exact_minimum(TupleCostModel::from(sg));
}

inline ExactResult exact_motif(const SignedHypergraph& h) {
  const int cap = h.k() == 2 ? kMaxExactCcNodes : kMaxExactMotifNodes;
  if (h.n() > cap)
    throw SizeCapError("exact_motif capped at n = " + std::to_string(cap) + ", got " +
                       std::to_string(h.n()));
  return detail::exact_minimum(TupleCostModel::from(h));
}

inline ExactResult exact_motif(const MixedMotifInstance& m) {
  if (m.n() > kMaxExactMotifNodes)
    throw SizeCapError("exact_motif capped at n = " + std::to_string(kMaxExactMotifNodes) +
                       ", got " + std::to_string(m.n()));
  return detail::exact_minimum(TupleCostModel::from(m));
}

}  // namespace lcc

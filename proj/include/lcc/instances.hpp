#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lcc/combinatorics.hpp"
#include "lcc/errors.hpp"

namespace lcc {

using Edge = std::pair<int, int>;

// ---------------------------------------------------------------------------
// Graph
// ---------------------------------------------------------------------------

/// Simple undirected graph on nodes 0..n-1. Edges are stored as (u, v) with
/// u < v, sorted.
class Graph {
 public:
  Graph() = default;

  Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n < 0) throw InputError("graph: negative node count");
    adjacency_.assign(static_cast<std::size_t>(n) * n, 0);
    neighbors_.assign(n, {});
    for (auto& [u, v] : edges_) {
      if (u < 0 || v < 0 || u >= n || v >= n)
        throw InputError("graph: edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") out of range");
      if (u == v) throw InputError("graph: self-loop at node " + std::to_string(u));
      if (u > v) std::swap(u, v);
      auto& cell = adjacency_[static_cast<std::size_t>(u) * n + v];
      if (cell)
        throw InputError("graph: duplicate edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ")");
      cell = 1;
      adjacency_[static_cast<std::size_t>(v) * n + u] = 1;
      neighbors_[u].push_back(v);
      neighbors_[v].push_back(u);
    }
    std::sort(edges_.begin(), edges_.end());
    for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
  }

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::size_t num_non_edges() const { return num_pairs(n_) - edges_.size(); }

  bool has_edge(int u, int v) const {
    return adjacency_[static_cast<std::size_t>(u) * n_ + v] != 0;
  }
  const std::vector<int>& neighbors(int u) const { return neighbors_[u]; }
  int degree(int u) const { return static_cast<int>(neighbors_[u].size()); }

  /// Common degree when every node has the same degree.
  std::optional<int> regular_degree() const {
    if (n_ == 0) return std::nullopt;
    for (int u = 1; u < n_; ++u)
      if (degree(u) != degree(0)) return std::nullopt;
    return degree(0);
  }

  /// Component id per node, numbered in order of smallest member.
  std::vector<int> component_labels() const {
    std::vector<int> label(n_, -1);
    int next = 0;
    for (int s = 0; s < n_; ++s) {
      if (label[s] >= 0) continue;
      std::queue<int> q;
      q.push(s);
      label[s] = next;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : neighbors_[u])
          if (label[v] < 0) {
            label[v] = next;
            q.push(v);
          }
      }
      ++next;
    }
    return label;
  }

  bool is_connected() const {
    if (n_ <= 1) return true;
    auto lab = component_labels();
    return std::all_of(lab.begin(), lab.end(), [](int c) { return c == 0; });
  }

  bool is_bipartite() const {
    std::vector<int> color(n_, -1);
    for (int s = 0; s < n_; ++s) {
      if (color[s] >= 0) continue;
      std::queue<int> q;
      q.push(s);
      color[s] = 0;
      while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int v : neighbors_[u]) {
          if (color[v] < 0) {
            color[v] = 1 - color[u];
            q.push(v);
          } else if (color[v] == color[u]) {
            return false;
          }
        }
      }
    }
    return true;
  }

  /// Unit-length shortest-path distances; -1 when unreachable.
  std::vector<int> bfs_distances(int source) const {
    std::vector<int> dist(n_, -1);
    std::queue<int> q;
    dist[source] = 0;
    q.push(source);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : neighbors_[u])
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }
    return dist;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

  static Graph empty(int n) { return Graph(n, {}); }
  static Graph complete(int n) {
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
  }
  static Graph path(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
  }
  static Graph cycle(int n) {
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    if (n >= 3) e.emplace_back(0, n - 1);
    return Graph(n, std::move(e));
  }
  /// Star with center 0.
  static Graph star(int n) {
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(0, i);
    return Graph(n, std::move(e));
  }
  static Graph petersen() {
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
      e.emplace_back(i, (i + 1) % 5);
      e.emplace_back(i, i + 5);
      e.emplace_back(5 + i, 5 + (i + 2) % 5);
    }
    return Graph(10, std::move(e));
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<char> adjacency_;
  std::vector<std::vector<int>> neighbors_;
};

// ---------------------------------------------------------------------------
// SignedGraph
// ---------------------------------------------------------------------------

/// Dense pairwise weights (w+, w-) for weighted correlation clustering.
/// Pairs that were never set carry (0, 0).
class SignedGraph {
 public:
  explicit SignedGraph(int n = 0)
      : n_(n), plus_(num_pairs(n), 0.0), minus_(num_pairs(n), 0.0) {
    if (n < 0) throw InputError("signed graph: negative node count");
  }

  int n() const { return n_; }

  double plus(int i, int j) const { return plus_[pair_index(n_, i, j)]; }
  double minus(int i, int j) const { return minus_[pair_index(n_, i, j)]; }

  void set(int i, int j, double w_plus, double w_minus) {
    check_pair(i, j);
    check_weight(w_plus);
    check_weight(w_minus);
    const auto p = pair_index(n_, i, j);
    plus_[p] = w_plus;
    minus_[p] = w_minus;
  }
  void set_plus(int i, int j, double w) {
    check_pair(i, j);
    set(i, j, w, minus(i, j));
  }
  void set_minus(int i, int j, double w) {
    check_pair(i, j);
    set(i, j, plus(i, j), w);
  }

  /// Weights indexed by pair_index().
  std::span<const double> plus_weights() const { return plus_; }
  std::span<const double> minus_weights() const { return minus_; }

  double total_minus() const { return std::accumulate(minus_.begin(), minus_.end(), 0.0); }

  bool operator==(const SignedGraph& o) const {
    return n_ == o.n_ && plus_ == o.plus_ && minus_ == o.minus_;
  }

 private:
  void check_pair(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_ || i == j)
      throw InputError("signed graph: invalid pair (" + std::to_string(i) + "," +
                       std::to_string(j) + ")");
  }
  static void check_weight(double w) {
    if (!std::isfinite(w) || w < 0.0)
      throw InputError("signed graph: weights must be finite and nonnegative");
  }

  int n_;
  std::vector<double> plus_;
  std::vector<double> minus_;
};

// ---------------------------------------------------------------------------
// Parameters
// ---------------------------------------------------------------------------

struct LambdaParams {
  double lambda = 0.5;
  double epsilon_perturb = 0.0;

  void validate() const {
    if (!(lambda > 0.0 && lambda < 1.0))
      throw ParameterError("lambda must lie in the open interval (0,1), got " +
                           std::to_string(lambda));
    if (!(epsilon_perturb >= 0.0) || !std::isfinite(epsilon_perturb))
      throw ParameterError("epsilon must be finite and nonnegative");
  }
};

// ---------------------------------------------------------------------------
// Clustering
// ---------------------------------------------------------------------------

/// Node-to-cluster assignment. Labels are arbitrary nonnegative ids;
/// normalized() relabels clusters in first-occurrence order.
class Clustering {
 public:
  Clustering() = default;
  explicit Clustering(std::vector<int> labels) : labels_(std::move(labels)) {
    for (int l : labels_)
      if (l < 0) throw InputError("clustering: negative cluster label");
  }

  static Clustering singletons(int n) {
    std::vector<int> l(n);
    std::iota(l.begin(), l.end(), 0);
    return Clustering(std::move(l));
  }
  static Clustering one_cluster(int n) { return Clustering(std::vector<int>(n, 0)); }

  int n() const { return static_cast<int>(labels_.size()); }
  int label(int u) const { return labels_[u]; }
  const std::vector<int>& labels() const { return labels_; }

  bool separated(int u, int v) const { return labels_[u] != labels_[v]; }

  /// True when some pair of the tuple lies in different clusters.
  bool splits(std::span<const int> tuple) const {
    for (int v : tuple)
      if (labels_[v] != labels_[tuple.front()]) return true;
    return false;
  }

  Clustering normalized() const {
    std::map<int, int> remap;
    std::vector<int> out(labels_.size());
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      auto [it, inserted] = remap.try_emplace(labels_[i], static_cast<int>(remap.size()));
      out[i] = it->second;
    }
    Clustering c;
    c.labels_ = std::move(out);
    return c;
  }

  int num_clusters() const {
    std::vector<int> l = labels_;
    std::sort(l.begin(), l.end());
    return static_cast<int>(std::unique(l.begin(), l.end()) - l.begin());
  }

  /// Member lists in normalized cluster order.
  std::vector<std::vector<int>> clusters() const {
    const auto norm = normalized();
    std::vector<std::vector<int>> out(norm.num_clusters());
    for (int u = 0; u < n(); ++u) out[norm.labels_[u]].push_back(u);
    return out;
  }

  /// Separation indicators x_uv indexed by pair_index().
  std::vector<double> pair_indicators() const {
    const int n = this->n();
    std::vector<double> x(num_pairs(n));
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) x[pair_index(n, i, j)] = separated(i, j) ? 1.0 : 0.0;
    return x;
  }

  bool same_partition(const Clustering& o) const {
    return normalized().labels_ == o.normalized().labels_;
  }

  bool operator==(const Clustering& o) const = default;

 private:
  std::vector<int> labels_;
};

// ---------------------------------------------------------------------------
// SignedHypergraph
// ---------------------------------------------------------------------------

struct Hyperedge {
  std::vector<int> nodes;  // sorted ascending
  double w_plus = 0.0;
  double w_minus = 0.0;

  bool operator==(const Hyperedge&) const = default;
};

/// k-uniform hypergraph with a (w+, w-) weight pair per hyperedge.
class SignedHypergraph {
 public:
  static constexpr double kProbabilityTol = 1e-9;

  SignedHypergraph() = default;

  SignedHypergraph(int k, int n, std::vector<Hyperedge> edges)
      : k_(k), n_(n), edges_(std::move(edges)) {
    if (k < 2) throw InputError("hypergraph: tuple size k must be at least 2");
    if (n < 0) throw InputError("hypergraph: negative node count");
    probability_ = true;
    unweighted_ = true;
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto& he = edges_[e];
      if (static_cast<int>(he.nodes.size()) != k)
        throw InputError("hypergraph: hyperedge " + std::to_string(e) + " has " +
                         std::to_string(he.nodes.size()) + " nodes, expected " +
                         std::to_string(k));
      std::sort(he.nodes.begin(), he.nodes.end());
      for (std::size_t i = 0; i < he.nodes.size(); ++i) {
        if (he.nodes[i] < 0 || he.nodes[i] >= n)
          throw InputError("hypergraph: node " + std::to_string(he.nodes[i]) +
                           " out of range");
        if (i > 0 && he.nodes[i] == he.nodes[i - 1])
          throw InputError("hypergraph: repeated node in hyperedge " + std::to_string(e));
      }
      if (!std::isfinite(he.w_plus) || !std::isfinite(he.w_minus) || he.w_plus < 0 ||
          he.w_minus < 0)
        throw InputError("hypergraph: weights must be finite and nonnegative");
      if (!index_.try_emplace(he.nodes, e).second)
        throw InputError("hypergraph: duplicate hyperedge " + tuple_string(he.nodes));
      if (std::abs(he.w_plus + he.w_minus - 1.0) > kProbabilityTol) probability_ = false;
      const bool pos = he.w_plus == 1.0 && he.w_minus == 0.0;
      const bool neg = he.w_plus == 0.0 && he.w_minus == 1.0;
      if (!pos && !neg) unweighted_ = false;
    }
  }

  int k() const { return k_; }
  int n() const { return n_; }
  const std::vector<Hyperedge>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }

  bool probability_constrained() const { return probability_; }
  bool unweighted() const { return unweighted_; }
  /// Every k-subset of the node set is a hyperedge.
  bool is_complete() const { return edges_.size() == binomial(n_, k_); }

  /// Edge id of a sorted tuple.
  std::optional<std::size_t> find(std::span<const int> sorted_tuple) const {
    auto it = index_.find(std::vector<int>(sorted_tuple.begin(), sorted_tuple.end()));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool operator==(const SignedHypergraph& o) const {
    return k_ == o.k_ && n_ == o.n_ && edges_ == o.edges_;
  }

  static std::string tuple_string(std::span<const int> t) {
    std::string s = "{";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + "}";
  }

 private:
  int k_ = 2;
  int n_ = 0;
  std::vector<Hyperedge> edges_;
  std::map<std::vector<int>, std::size_t> index_;
  bool probability_ = true;
  bool unweighted_ = true;
};

// ---------------------------------------------------------------------------
// MixedMotifInstance
// ---------------------------------------------------------------------------

/// Hyperedge levels of several tuple sizes combined with weights rho_t.
class MixedMotifInstance {
 public:
  MixedMotifInstance(std::map<int, SignedHypergraph> levels, std::map<int, double> rho)
      : levels_(std::move(levels)), rho_(std::move(rho)) {
    if (levels_.empty()) throw InputError("mixed motif: no levels");
    n_ = levels_.begin()->second.n();
    for (const auto& [t, h] : levels_) {
      if (t != h.k())
        throw InputError("mixed motif: level key " + std::to_string(t) +
                         " does not match hyperedge size " + std::to_string(h.k()));
      if (h.n() != n_) throw InputError("mixed motif: levels disagree on node count");
    }
    bool any_positive = false;
    for (const auto& [t, r] : rho_) {
      if (t < 2) throw InputError("mixed motif: tuple size must be at least 2");
      if (!(r >= 0.0) || !std::isfinite(r))
        throw ParameterError("mixed motif: rho must be finite and nonnegative");
      if (r > 0.0) {
        any_positive = true;
        if (!levels_.count(t))
          throw InputError("mixed motif: rho_" + std::to_string(t) +
                           " > 0 but level is missing");
      }
    }
    if (!any_positive) throw ParameterError("mixed motif: at least one rho_t must be positive");
  }

  int n() const { return n_; }
  double rho(int t) const {
    auto it = rho_.find(t);
    return it == rho_.end() ? 0.0 : it->second;
  }
  const std::map<int, SignedHypergraph>& levels() const { return levels_; }
  const SignedHypergraph& level(int t) const { return levels_.at(t); }

  /// Largest tuple size with positive weight.
  int max_active_k() const {
    int k = 0;
    for (const auto& [t, r] : rho_)
      if (r > 0.0) k = std::max(k, t);
    return k;
  }

 private:
  std::map<int, SignedHypergraph> levels_;
  std::map<int, double> rho_;
  int n_ = 0;
};

// ---------------------------------------------------------------------------
// Objectives
// ---------------------------------------------------------------------------

inline double cc_objective(const SignedGraph& sg, const Clustering& c) {
  if (sg.n() != c.n())
    throw InputError("cc_objective: clustering has " + std::to_string(c.n()) +
                     " labels for " + std::to_string(sg.n()) + " nodes");
  const int n = sg.n();
  const auto wp = sg.plus_weights();
  const auto wm = sg.minus_weights();
  double cost = 0.0;
  std::size_t p = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++p) cost += c.separated(i, j) ? wp[p] : wm[p];
  return cost;
}

inline double motif_objective(const SignedHypergraph& h, const Clustering& c) {
  if (h.n() != c.n())
    throw InputError("motif_objective: clustering has " + std::to_string(c.n()) +
                     " labels for " + std::to_string(h.n()) + " nodes");
  double cost = 0.0;
  for (const auto& e : h.edges()) cost += c.splits(e.nodes) ? e.w_plus : e.w_minus;
  return cost;
}

inline double mixed_motif_objective(const MixedMotifInstance& m, const Clustering& c) {
  double cost = 0.0;
  for (const auto& [t, h] : m.levels()) {
    const double r = m.rho(t);
    if (r > 0.0) cost += r * motif_objective(h, c);
  }
  return cost;
}

// ---------------------------------------------------------------------------
// Builders
// ---------------------------------------------------------------------------

/// Edges become positive pairs of weight 1-lambda, non-edges negative pairs
/// of weight lambda.
inline SignedGraph build_lambdacc_instance(const Graph& g, const LambdaParams& p) {
  p.validate();
  SignedGraph sg(g.n());
  for (int i = 0; i < g.n(); ++i)
    for (int j = i + 1; j < g.n(); ++j) {
      if (g.has_edge(i, j))
        sg.set(i, j, 1.0 - p.lambda, 0.0);
      else
        sg.set(i, j, 0.0, p.lambda);
    }
  return sg;
}

/// True when every pair carries exactly (1-lambda, 0) or (0, lambda).
inline bool is_lambda_weighting(const SignedGraph& sg, double lambda, double tol = 1e-12) {
  const auto wp = sg.plus_weights();
  const auto wm = sg.minus_weights();
  for (std::size_t p = 0; p < wp.size(); ++p) {
    const bool pos = std::abs(wp[p] - (1.0 - lambda)) <= tol && wm[p] == 0.0;
    const bool neg = wp[p] == 0.0 && std::abs(wm[p] - lambda) <= tol;
    if (!pos && !neg) return false;
  }
  return true;
}

/// Recovers the unsigned graph whose LambdaCC weighting is `sg`.
inline Graph positive_graph(const SignedGraph& sg) {
  std::vector<Edge> e;
  for (int i = 0; i < sg.n(); ++i)
    for (int j = i + 1; j < sg.n(); ++j)
      if (sg.plus(i, j) > 0.0) e.emplace_back(i, j);
  return Graph(sg.n(), std::move(e));
}

struct SignedTuple {
  std::vector<int> nodes;
  bool positive = true;
};

struct LambdaHypergraph {
  SignedHypergraph hypergraph;
  double lambda = 0.5;
  /// The 4(k-1) rounding analysis covers lambda >= 1/2 only.
  bool guarantee_proven = true;
};

/// Positive tuples get (1-lambda, 0), negative tuples (0, lambda).
inline LambdaHypergraph build_lambda_hypergraph(std::span<const SignedTuple> signs, int n,
                                                int k, const LambdaParams& p) {
  p.validate();
  std::vector<Hyperedge> edges;
  edges.reserve(signs.size());
  for (const auto& s : signs) {
    Hyperedge e;
    e.nodes = s.nodes;
    e.w_plus = s.positive ? 1.0 - p.lambda : 0.0;
    e.w_minus = s.positive ? 0.0 : p.lambda;
    edges.push_back(std::move(e));
  }
  LambdaHypergraph out{SignedHypergraph(k, n, std::move(edges)), p.lambda, p.lambda >= 0.5};
  return out;
}

/// The k = 2 hypergraph view of a signed graph: one hyperedge per pair with a
/// nonzero weight.
inline SignedHypergraph pair_hypergraph(const SignedGraph& sg) {
  std::vector<Hyperedge> edges;
  for (int i = 0; i < sg.n(); ++i)
    for (int j = i + 1; j < sg.n(); ++j) {
      const double wp = sg.plus(i, j), wm = sg.minus(i, j);
      if (wp > 0.0 || wm > 0.0) edges.push_back({{i, j}, wp, wm});
    }
  return SignedHypergraph(2, sg.n(), std::move(edges));
}

}  // namespace lcc

#pragma once

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcc/errors.hpp"
#include "lcc/instances.hpp"

// Whitespace-separated text formats with explicit counts.
//
//   graph:          "n m", then m lines "u v"
//   signed graph:   "n p q", then p lines "u v w+", then q lines "u v w-"
//   hypergraph:     "k n m", then m lines "v1 ... vk w+ w-"
//
// Blank lines and lines starting with '#' are ignored.

namespace lcc::io {

namespace detail {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

/// Content lines split into tokens; views point into `text`.
inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    Line l{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) l.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!l.tokens.empty() && l.tokens.front().front() != '#') out.push_back(std::move(l));
    if (end == text.size()) break;
  }
  return out;
}

inline long parse_int(std::string_view s, int line) {
  long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size())
    throw ParseError("expected an integer, got '" + std::string(s) + "'", line);
  return v;
}

inline double parse_real(std::string_view s, int line) {
  double v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v))
    throw ParseError("expected a finite number, got '" + std::string(s) + "'", line);
  return v;
}

inline double parse_weight(std::string_view s, int line) {
  const double w = parse_real(s, line);
  if (w < 0.0) throw ParseError("negative weight " + std::string(s), line);
  return w;
}

inline int parse_node(std::string_view s, int n, int line) {
  const long v = parse_int(s, line);
  if (v < 0 || v >= n)
    throw ParseError("node " + std::string(s) + " out of range [0," + std::to_string(n) + ")",
                     line);
  return static_cast<int>(v);
}

inline void expect_tokens(const Line& l, std::size_t count, const char* what) {
  if (l.tokens.size() != count)
    throw ParseError(std::string("expected ") + what + " (" + std::to_string(count) +
                         " fields), got " + std::to_string(l.tokens.size()) + " fields",
                     l.number);
}

inline long parse_count(std::string_view s, int line, const char* what) {
  const long v = parse_int(s, line);
  if (v < 0) throw ParseError(std::string("negative ") + what, line);
  return v;
}

/// Body lines after the header, checking the declared count exactly.
inline const Line* body(const std::vector<Line>& lines, std::size_t expected) {
  if (lines.size() - 1 != expected) {
    const int at = lines.size() - 1 > expected ? lines[expected + 1].number : lines.back().number;
    throw ParseError("header declares " + std::to_string(expected) + " entries, found " +
                         std::to_string(lines.size() - 1),
                     at);
  }
  return lines.data() + 1;
}

inline std::string format_real(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

}  // namespace detail

inline Graph parse_graph(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input");
  detail::expect_tokens(lines[0], 2, "header 'n m'");
  const long n = detail::parse_count(lines[0].tokens[0], lines[0].number, "node count");
  const long m = detail::parse_count(lines[0].tokens[1], lines[0].number, "edge count");
  const auto* rows = detail::body(lines, static_cast<std::size_t>(m));
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (long e = 0; e < m; ++e) {
    const auto& l = rows[e];
    detail::expect_tokens(l, 2, "edge 'u v'");
    int u = detail::parse_node(l.tokens[0], n, l.number);
    int v = detail::parse_node(l.tokens[1], n, l.number);
    if (u == v) throw ParseError("self-loop at node " + std::to_string(u), l.number);
    if (u > v) std::swap(u, v);
    if (!seen.insert({u, v}).second)
      throw ParseError("duplicate edge " + std::to_string(u) + " " + std::to_string(v), l.number);
    edges.emplace_back(u, v);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline SignedGraph parse_signed_graph(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input");
  detail::expect_tokens(lines[0], 3, "header 'n p q'");
  const long n = detail::parse_count(lines[0].tokens[0], lines[0].number, "node count");
  const long p = detail::parse_count(lines[0].tokens[1], lines[0].number, "positive count");
  const long q = detail::parse_count(lines[0].tokens[2], lines[0].number, "negative count");
  const auto* rows = detail::body(lines, static_cast<std::size_t>(p + q));
  SignedGraph sg(static_cast<int>(n));
  std::set<Edge> seen_plus, seen_minus;
  for (long e = 0; e < p + q; ++e) {
    const auto& l = rows[e];
    const bool positive = e < p;
    detail::expect_tokens(l, 3, positive ? "positive pair 'u v w+'" : "negative pair 'u v w-'");
    int u = detail::parse_node(l.tokens[0], n, l.number);
    int v = detail::parse_node(l.tokens[1], n, l.number);
    if (u == v) throw ParseError("self-pair at node " + std::to_string(u), l.number);
    if (u > v) std::swap(u, v);
    const double w = detail::parse_weight(l.tokens[2], l.number);
    if (!(positive ? seen_plus : seen_minus).insert({u, v}).second)
      throw ParseError("pair listed twice in the same section", l.number);
    if (positive) sg.set_plus(u, v, w);
    else sg.set_minus(u, v, w);
  }
  return sg;
}

inline SignedHypergraph parse_hypergraph(std::string_view text) {
  const auto lines = detail::tokenize(text);
  if (lines.empty()) throw ParseError("empty input");
  detail::expect_tokens(lines[0], 3, "header 'k n m'");
  const long k = detail::parse_count(lines[0].tokens[0], lines[0].number, "tuple size");
  const long n = detail::parse_count(lines[0].tokens[1], lines[0].number, "node count");
  const long m = detail::parse_count(lines[0].tokens[2], lines[0].number, "hyperedge count");
  if (k < 2) throw ParseError("tuple size must be at least 2", lines[0].number);
  const auto* rows = detail::body(lines, static_cast<std::size_t>(m));
  std::set<std::vector<int>> seen;
  std::vector<Hyperedge> edges;
  for (long e = 0; e < m; ++e) {
    const auto& l = rows[e];
    if (l.tokens.size() != static_cast<std::size_t>(k + 2))
      throw ParseError("expected " + std::to_string(k) + " nodes and two weights, got " +
                           std::to_string(l.tokens.size()) + " fields",
                       l.number);
    Hyperedge he;
    for (long i = 0; i < k; ++i) he.nodes.push_back(detail::parse_node(l.tokens[i], n, l.number));
    std::sort(he.nodes.begin(), he.nodes.end());
    if (std::adjacent_find(he.nodes.begin(), he.nodes.end()) != he.nodes.end())
      throw ParseError("repeated node in hyperedge", l.number);
    if (!seen.insert(he.nodes).second)
      throw ParseError("duplicate hyperedge " + SignedHypergraph::tuple_string(he.nodes), l.number);
    he.w_plus = detail::parse_weight(l.tokens[k], l.number);
    he.w_minus = detail::parse_weight(l.tokens[k + 1], l.number);
    edges.push_back(std::move(he));
  }
  return SignedHypergraph(static_cast<int>(k), static_cast<int>(n), std::move(edges));
}

inline std::string serialize(const Graph& g) {
  std::ostringstream os;
  os << g.n() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

inline std::string serialize(const SignedGraph& sg) {
  std::vector<std::string> plus, minus;
  for (int i = 0; i < sg.n(); ++i)
    for (int j = i + 1; j < sg.n(); ++j) {
      const auto pair = std::to_string(i) + ' ' + std::to_string(j) + ' ';
      if (sg.plus(i, j) != 0.0) plus.push_back(pair + detail::format_real(sg.plus(i, j)));
      if (sg.minus(i, j) != 0.0) minus.push_back(pair + detail::format_real(sg.minus(i, j)));
    }
  std::ostringstream os;
  os << sg.n() << ' ' << plus.size() << ' ' << minus.size() << '\n';
  for (const auto& l : plus) os << l << '\n';
  for (const auto& l : minus) os << l << '\n';
  return os.str();
}

inline std::string serialize(const SignedHypergraph& h) {
  std::ostringstream os;
  os << h.k() << ' ' << h.n() << ' ' << h.size() << '\n';
  for (const auto& e : h.edges()) {
    for (int v : e.nodes) os << v << ' ';
    os << detail::format_real(e.w_plus) << ' ' << detail::format_real(e.w_minus) << '\n';
  }
  return os.str();
}

}  // namespace lcc::io

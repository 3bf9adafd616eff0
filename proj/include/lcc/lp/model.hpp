#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>
#include <vector>

#include "lcc/errors.hpp"

namespace lcc::lp {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct Term {
  int var = 0;
  double coef = 0.0;
};

struct Row {
  std::vector<Term> terms;
  Relation relation = Relation::kLessEqual;
  double rhs = 0.0;
};

/// Minimization LP: min c'x + constant subject to sparse rows and per-variable
/// bounds lo <= x <= hi (either side may be infinite).
class LPModel {
 public:
  int add_variable(std::string name, double lo, double hi, double cost) {
    names_.push_back(std::move(name));
    lo_.push_back(lo);
    hi_.push_back(hi);
    cost_.push_back(cost);
    return static_cast<int>(names_.size()) - 1;
  }

  void add_row(std::vector<Term> terms, Relation rel, double rhs) {
    rows_.push_back({std::move(terms), rel, rhs});
  }

  void add_objective_constant(double c) { constant_ += c; }
  void add_cost(int var, double c) { cost_.at(var) += c; }
  void set_bounds(int var, double lo, double hi) {
    lo_.at(var) = lo;
    hi_.at(var) = hi;
  }

  int num_vars() const { return static_cast<int>(names_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<Row>& rows() const { return rows_; }
  const std::vector<double>& costs() const { return cost_; }
  const std::vector<double>& lower() const { return lo_; }
  const std::vector<double>& upper() const { return hi_; }
  const std::vector<std::string>& names() const { return names_; }
  double objective_constant() const { return constant_; }

  /// Throws InputError on non-finite coefficients, lo > hi, or bad indices.
  void validate() const {
    for (int j = 0; j < num_vars(); ++j) {
      if (!std::isfinite(cost_[j])) throw InputError("lp: non-finite cost on " + names_[j]);
      if (std::isnan(lo_[j]) || std::isnan(hi_[j]) || lo_[j] > hi_[j] || lo_[j] == kInf ||
          hi_[j] == -kInf)
        throw InputError("lp: invalid bounds on " + names_[j]);
    }
    if (!std::isfinite(constant_)) throw InputError("lp: non-finite objective constant");
    for (const auto& r : rows_) {
      if (!std::isfinite(r.rhs)) throw InputError("lp: non-finite right-hand side");
      for (const auto& t : r.terms) {
        if (t.var < 0 || t.var >= num_vars()) throw InputError("lp: row references unknown variable");
        if (!std::isfinite(t.coef)) throw InputError("lp: non-finite row coefficient");
      }
    }
  }

  double objective_at(const std::vector<double>& x) const {
    double v = constant_;
    for (int j = 0; j < num_vars(); ++j) v += cost_[j] * x[j];
    return v;
  }

  /// Largest violation of any row or bound at x (0 when feasible).
  double max_violation(const std::vector<double>& x) const {
    double worst = 0.0;
    for (int j = 0; j < num_vars(); ++j) {
      worst = std::max(worst, lo_[j] - x[j]);
      worst = std::max(worst, x[j] - hi_[j]);
    }
    for (const auto& r : rows_) {
      double lhs = 0.0;
      for (const auto& t : r.terms) lhs += t.coef * x[t.var];
      switch (r.relation) {
        case Relation::kLessEqual: worst = std::max(worst, lhs - r.rhs); break;
        case Relation::kGreaterEqual: worst = std::max(worst, r.rhs - lhs); break;
        case Relation::kEqual: worst = std::max(worst, std::abs(lhs - r.rhs)); break;
      }
    }
    return worst;
  }

 private:
  std::vector<std::string> names_;
  std::vector<double> lo_, hi_, cost_;
  std::vector<Row> rows_;
  double constant_ = 0.0;
};

enum class LPStatus { kOptimal, kInfeasible, kUnbounded, kIterationLimit };

inline const char* to_string(LPStatus s) {
  switch (s) {
    case LPStatus::kOptimal: return "optimal";
    case LPStatus::kInfeasible: return "infeasible";
    case LPStatus::kUnbounded: return "unbounded";
    case LPStatus::kIterationLimit: return "iteration_limit";
  }
  return "unknown";
}

struct LPSolution {
  std::vector<double> x;
  double objective_value = 0.0;
  LPStatus status = LPStatus::kInfeasible;
  long iterations = 0;

  bool optimal() const { return status == LPStatus::kOptimal; }
};

namespace detail {

inline void write_number(std::ostream& os, double v) {
  if (v == kInf)
    os << "inf";
  else if (v == -kInf)
    os << "-inf";
  else
    os << v;
}

inline void write_terms(std::ostream& os, const LPModel& m, const std::vector<Term>& terms) {
  bool first = true;
  for (const auto& t : terms) {
    if (t.coef == 0.0) continue;
    os << (t.coef < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    const double a = std::abs(t.coef);
    if (a != 1.0) os << a << ' ';
    os << m.names()[t.var];
    first = false;
  }
  if (first) os << "0";
}

}  // namespace detail

/// Writes the model in CPLEX LP text format, one row per line.
inline void write_lp_format(std::ostream& os, const LPModel& m) {
  os.precision(17);
  os << "\\ " << m.num_vars() << " variables, " << m.num_rows() << " rows\n";
  os << "Minimize\n obj: ";
  std::vector<Term> obj;
  for (int j = 0; j < m.num_vars(); ++j)
    if (m.costs()[j] != 0.0) obj.push_back({j, m.costs()[j]});
  detail::write_terms(os, m, obj);
  if (m.objective_constant() != 0.0)
    os << (m.objective_constant() < 0 ? " - " : " + ") << std::abs(m.objective_constant());
  os << "\nSubject To\n";
  for (int i = 0; i < m.num_rows(); ++i) {
    const auto& r = m.rows()[i];
    os << " c" << i << ": ";
    detail::write_terms(os, m, r.terms);
    os << (r.relation == Relation::kLessEqual ? " <= "
           : r.relation == Relation::kGreaterEqual ? " >= "
                                                   : " = ");
    os << r.rhs << '\n';
  }
  os << "Bounds\n";
  for (int j = 0; j < m.num_vars(); ++j) {
    const double lo = m.lower()[j], hi = m.upper()[j];
    os << ' ';
    if (lo == -kInf && hi == kInf) {
      os << m.names()[j] << " free\n";
      continue;
    }
    detail::write_number(os, lo);
    os << " <= " << m.names()[j] << " <= ";
    detail::write_number(os, hi);
    os << '\n';
  }
  os << "End\n";
}

}  // namespace lcc::lp

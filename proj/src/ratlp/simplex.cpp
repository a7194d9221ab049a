#include <algorithm>
#include <limits>

#include "hgemb/errors.hpp"
#include "hgemb/ratlp.hpp"

namespace hgemb::lp {

std::string_view status_name(Status s) {
  switch (s) {
    case Status::optimal: return "optimal";
    case Status::infeasible: return "infeasible";
    case Status::unbounded: return "unbounded";
  }
  return "unknown";
}

Constraint& LinearProgram::add(Relation rel, Rational rhs) {
  constraints.push_back(Constraint{std::vector<Rational>(num_vars()), rel, std::move(rhs)});
  return constraints.back();
}

void LinearProgram::validate() const {
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    if (constraints[i].coeffs.size() != num_vars()) {
      throw InputError("constraint " + std::to_string(i) + " has " + std::to_string(constraints[i].coeffs.size()) +
                       " coefficients, expected " + std::to_string(num_vars()));
    }
  }
}

bool is_feasible(const LinearProgram& p, std::span<const Rational> x) {
  if (x.size() != p.num_vars()) return false;
  for (const auto& v : x) {
    if (sgn(v) < 0) return false;
  }
  for (const auto& c : p.constraints) {
    Rational lhs = 0;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (sgn(c.coeffs[j]) != 0) lhs += c.coeffs[j] * x[j];
    }
    switch (c.relation) {
      case Relation::less_equal:
        if (lhs > c.rhs) return false;
        break;
      case Relation::equal:
        if (lhs != c.rhs) return false;
        break;
      case Relation::greater_equal:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

Rational objective_value(const LinearProgram& p, std::span<const Rational> x) {
  Rational v = 0;
  for (std::size_t j = 0; j < x.size(); ++j) v += p.objective[j] * x[j];
  return v;
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Dense tableau. Rows 0..m-1 are constraints, row m is the reduced-cost row;
// the last column holds right-hand sides (in the cost row: minus the current
// objective value).
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), cells_(rows + 1, std::vector<Rational>(cols + 1)), basis_(rows, kNone) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r][c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return cells_[r][c]; }
  Rational& rhs(std::size_t r) { return cells_[r][cols_]; }
  const Rational& rhs(std::size_t r) const { return cells_[r][cols_]; }
  std::vector<Rational>& cost_row() { return cells_[rows_]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t basic(std::size_t r) const { return basis_[r]; }
  void set_basic(std::size_t r, std::size_t c) { basis_[r] = c; }

  // Value of the objective being minimised by the cost row.
  Rational objective() const { return -cells_[rows_][cols_]; }

  void pivot(std::size_t r, std::size_t c) {
    auto& prow = cells_[r];
    nonzero_.clear();
    for (std::size_t j = 0; j <= cols_; ++j) {
      if (sgn(prow[j]) != 0) nonzero_.push_back(j);
    }
    if (prow[c] != 1) {
      scale_ = 1 / prow[c];
      for (std::size_t j : nonzero_) mpq_mul(prow[j].get_mpq_t(), prow[j].get_mpq_t(), scale_.get_mpq_t());
    }
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      auto& row = cells_[i];
      if (sgn(row[c]) == 0) continue;
      factor_ = row[c];
      for (std::size_t j : nonzero_) {
        mpq_mul(product_.get_mpq_t(), factor_.get_mpq_t(), prow[j].get_mpq_t());
        mpq_sub(row[j].get_mpq_t(), row[j].get_mpq_t(), product_.get_mpq_t());
      }
    }
    basis_[r] = c;
  }

  void drop_row(std::size_t r) {
    cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(r));
    basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(r));
    --rows_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
  std::vector<std::size_t> nonzero_;
  Rational scale_, factor_, product_;
};

enum class Phase { optimal, unbounded };

// Minimises the cost row over columns [0, active_cols).
Phase run_simplex(Tableau& t, std::size_t active_cols, PivotRule rule) {
  bool use_bland = rule == PivotRule::bland;
  for (;;) {
    const auto& cost = t.cost_row();
    std::size_t enter = kNone;
    for (std::size_t j = 0; j < active_cols; ++j) {
      if (sgn(cost[j]) >= 0) continue;
      if (use_bland) {
        enter = j;
        break;
      }
      if (enter == kNone || cost[j] < cost[enter]) enter = j;
    }
    if (enter == kNone) return Phase::optimal;

    std::size_t leave = kNone;
    Rational best_ratio, ratio;
    for (std::size_t i = 0; i < t.rows(); ++i) {
      const auto& a = t.at(i, enter);
      if (sgn(a) <= 0) continue;
      ratio = t.rhs(i) / a;
      if (leave == kNone || ratio < best_ratio || (ratio == best_ratio && t.basic(i) < t.basic(leave))) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == kNone) return Phase::unbounded;

    if (rule == PivotRule::dantzig_with_bland_fallback) use_bland = sgn(best_ratio) == 0;
    t.pivot(leave, enter);
  }
}

void load_costs(Tableau& t, const std::vector<Rational>& costs) {
  auto& cost = t.cost_row();
  for (auto& c : cost) c = 0;
  for (std::size_t j = 0; j < costs.size(); ++j) cost[j] = costs[j];
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const std::size_t b = t.basic(i);
    if (b >= costs.size() || sgn(costs[b]) == 0) continue;
    const Rational cb = costs[b];
    for (std::size_t j = 0; j <= t.cols(); ++j) {
      if (sgn(t.at(i, j)) != 0) cost[j] -= cb * t.at(i, j);
    }
  }
}

}  // namespace

LpOutcome solve_lp(const LinearProgram& p, const LpOptions& options) {
  p.validate();
  const std::size_t n = p.num_vars();
  const std::size_t m = p.constraints.size();

  // Normalise to nonnegative right-hand sides.
  std::vector<int> flip(m, 1);
  std::vector<Relation> rel(m);
  std::size_t n_slack = 0, n_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    rel[i] = p.constraints[i].relation;
    if (sgn(p.constraints[i].rhs) < 0) {
      flip[i] = -1;
      if (rel[i] == Relation::less_equal) rel[i] = Relation::greater_equal;
      else if (rel[i] == Relation::greater_equal) rel[i] = Relation::less_equal;
    }
    if (rel[i] != Relation::equal) ++n_slack;
    if (rel[i] != Relation::less_equal) ++n_art;
  }

  const std::size_t first_slack = n;
  const std::size_t first_art = n + n_slack;
  Tableau t(m, n + n_slack + n_art);
  std::size_t next_slack = first_slack, next_art = first_art;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& c = p.constraints[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(c.coeffs[j]) != 0) t.at(i, j) = flip[i] > 0 ? c.coeffs[j] : Rational(-c.coeffs[j]);
    }
    t.rhs(i) = flip[i] > 0 ? c.rhs : Rational(-c.rhs);
    switch (rel[i]) {
      case Relation::less_equal:
        t.at(i, next_slack) = 1;
        t.set_basic(i, next_slack++);
        break;
      case Relation::greater_equal:
        t.at(i, next_slack++) = -1;
        t.at(i, next_art) = 1;
        t.set_basic(i, next_art++);
        break;
      case Relation::equal:
        t.at(i, next_art) = 1;
        t.set_basic(i, next_art++);
        break;
    }
  }

  LpOutcome out;
  if (n_art > 0) {
    std::vector<Rational> phase1(t.cols());
    for (std::size_t j = first_art; j < t.cols(); ++j) phase1[j] = 1;
    load_costs(t, phase1);
    run_simplex(t, t.cols(), options.rule);
    if (sgn(t.objective()) != 0) {
      out.status = Status::infeasible;
      return out;
    }
    // Drive remaining (zero-valued) artificials out of the basis; rows where
    // that is impossible are linearly dependent and dropped.
    for (std::size_t i = 0; i < t.rows();) {
      if (t.basic(i) < first_art) {
        ++i;
        continue;
      }
      std::size_t col = kNone;
      for (std::size_t j = 0; j < first_art; ++j) {
        if (sgn(t.at(i, j)) != 0) {
          col = j;
          break;
        }
      }
      if (col == kNone) {
        t.drop_row(i);
      } else {
        t.pivot(i, col);
        ++i;
      }
    }
  }

  std::vector<Rational> costs(t.cols());
  for (std::size_t j = 0; j < n; ++j) costs[j] = p.sense == Sense::minimize ? p.objective[j] : Rational(-p.objective[j]);
  load_costs(t, costs);
  if (run_simplex(t, first_art, options.rule) == Phase::unbounded) {
    out.status = Status::unbounded;
    return out;
  }

  out.status = Status::optimal;
  out.solution.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows(); ++i) {
    if (t.basic(i) < n) out.solution[t.basic(i)] = t.rhs(i);
  }
  out.value = objective_value(p, out.solution);
  return out;
}

}  // namespace hgemb::lp

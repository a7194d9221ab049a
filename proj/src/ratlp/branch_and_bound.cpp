#include <algorithm>
#include <memory>
#include <optional>

#include "hgemb/errors.hpp"
#include "hgemb/ratlp.hpp"

namespace hgemb::lp {

void MilpModel::validate() const {
  lp.validate();
  std::vector<bool> seen(lp.num_vars(), false);
  for (const auto& v : integers) {
    if (v.index >= lp.num_vars()) throw InputError("integer variable index " + std::to_string(v.index) + " out of range");
    if (seen[v.index]) throw InputError("integer variable " + std::to_string(v.index) + " listed twice");
    if (v.lower < 0 || v.lower > v.upper) {
      throw InputError("bad bounds for integer variable " + std::to_string(v.index));
    }
    seen[v.index] = true;
  }
}

namespace {

struct Bounds {
  std::int64_t lower;
  std::int64_t upper;
};

struct Node {
  std::size_t id = 0;
  std::vector<Bounds> bounds;  // parallel to MilpModel::integers
  LpOutcome relaxation;        // in minimisation form
};

// Lower bound first, then lower id.
bool better_bound(const Node* a, const Node* b) {
  if (a->relaxation.value != b->relaxation.value) return a->relaxation.value < b->relaxation.value;
  return a->id < b->id;
}

// Solves the relaxation of `base` (already in minimisation form) under the
// given integer bounds. Variables whose bounds coincide are substituted out
// before the simplex runs.
LpOutcome solve_node(const LinearProgram& base, const std::vector<IntegerVariable>& integers,
                     const std::vector<Bounds>& bounds, const LpOptions& options) {
  const std::size_t n = base.num_vars();
  std::vector<std::optional<Rational>> fixed(n);
  for (std::size_t i = 0; i < integers.size(); ++i) {
    if (bounds[i].lower == bounds[i].upper) fixed[integers[i].index] = Rational(static_cast<long>(bounds[i].lower));
  }
  std::vector<std::size_t> column(n, 0);
  std::size_t free_count = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (!fixed[j]) column[j] = free_count++;
  }

  LinearProgram p(Sense::minimize, free_count);
  Rational constant = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (fixed[j]) constant += base.objective[j] * *fixed[j];
    else p.objective[column[j]] = base.objective[j];
  }

  LpOutcome infeasible;
  for (const auto& c : base.constraints) {
    Rational rhs = c.rhs;
    bool any = false;
    std::vector<Rational> coeffs(free_count);
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(c.coeffs[j]) == 0) continue;
      if (fixed[j]) {
        rhs -= c.coeffs[j] * *fixed[j];
      } else {
        coeffs[column[j]] = c.coeffs[j];
        any = true;
      }
    }
    if (!any) {
      const int s = sgn(rhs);
      const bool ok = c.relation == Relation::less_equal ? s >= 0 : c.relation == Relation::equal ? s == 0 : s <= 0;
      if (!ok) return infeasible;
      continue;
    }
    p.constraints.push_back(Constraint{std::move(coeffs), c.relation, std::move(rhs)});
  }
  for (std::size_t i = 0; i < integers.size(); ++i) {
    const std::size_t j = integers[i].index;
    if (fixed[j]) continue;
    if (!integers[i].implied_upper || bounds[i].upper < integers[i].upper) {
      p.add(Relation::less_equal, Rational(static_cast<long>(bounds[i].upper))).coeffs[column[j]] = 1;
    }
    if (bounds[i].lower > 0) {
      p.add(Relation::greater_equal, Rational(static_cast<long>(bounds[i].lower))).coeffs[column[j]] = 1;
    }
  }

  LpOutcome reduced = solve_lp(p, options);
  if (reduced.status != Status::optimal) return reduced;
  LpOutcome out;
  out.status = Status::optimal;
  out.value = reduced.value + constant;
  out.solution.resize(n);
  for (std::size_t j = 0; j < n; ++j) out.solution[j] = fixed[j] ? *fixed[j] : reduced.solution[column[j]];
  return out;
}

// Index into `integers` of the most fractional variable, 0/1 variables
// first, or npos when the solution is integral on all of them.
std::size_t branching_variable(const std::vector<IntegerVariable>& integers, const std::vector<Rational>& x) {
  std::size_t best = std::string::npos;
  Rational best_distance;
  const Rational half(1, 2);
  for (std::size_t i = 0; i < integers.size(); ++i) {
    const Rational& v = x[integers[i].index];
    if (is_integral(v)) continue;
    Rational frac = v - Rational(floor_of(v));
    Rational distance = abs(frac - half);
    const bool binary = integers[i].upper - integers[i].lower == 1;
    const bool best_binary = best != std::string::npos && integers[best].upper - integers[best].lower == 1;
    if (best == std::string::npos || (binary && !best_binary) || (binary == best_binary && distance < best_distance)) {
      best = i;
      best_distance = std::move(distance);
    }
  }
  return best;
}

}  // namespace

MilpOutcome solve_milp(const MilpModel& m, const MilpOptions& options) {
  m.validate();
  LinearProgram base = m.lp;
  const bool maximize = base.sense == Sense::maximize;
  if (maximize) {
    base.sense = Sense::minimize;
    for (auto& c : base.objective) c = -c;
  }
  auto external = [&](const Rational& v) { return maximize ? Rational(-v) : v; };

  // With integer coefficients on integer variables only, every feasible
  // objective value is an integer, so relaxation bounds may be rounded up.
  std::vector<bool> is_int(base.num_vars(), false);
  for (const auto& v : m.integers) is_int[v.index] = true;
  bool integral_objective = true;
  for (std::size_t j = 0; j < base.num_vars(); ++j) {
    if (sgn(base.objective[j]) != 0 && (!is_int[j] || !is_integral(base.objective[j]))) integral_objective = false;
  }

  MilpOutcome out;
  std::vector<std::unique_ptr<Node>> storage;
  std::vector<Node*> open;
  std::optional<LpOutcome> incumbent;
  auto dominated = [&](const Rational& bound) {
    if (!incumbent) return false;
    return integral_objective ? Rational(ceil_of(bound)) >= incumbent->value : bound >= incumbent->value;
  };

  auto spawn = [&](std::vector<Bounds> bounds) -> Node* {
    if (out.nodes >= options.max_nodes) {
      throw ResourceError("branch-and-bound node limit (" + std::to_string(options.max_nodes) + ") reached");
    }
    auto node = std::make_unique<Node>();
    node->id = storage.size();
    node->bounds = std::move(bounds);
    node->relaxation = solve_node(base, m.integers, node->bounds, options.lp);
    ++out.nodes;
    storage.push_back(std::move(node));
    return storage.back().get();
  };

  std::vector<Bounds> root_bounds;
  for (const auto& v : m.integers) root_bounds.push_back({v.lower, v.upper});
  Node* root = spawn(std::move(root_bounds));
  out.relaxation_status = root->relaxation.status;
  if (root->relaxation.status != Status::optimal) {
    out.status = root->relaxation.status;
    return out;
  }
  out.relaxation_value = external(root->relaxation.value);
  open.push_back(root);

  while (!open.empty()) {
    // Dive depth-first until a first integral solution exists, then switch
    // to best-bound.
    auto pick = open.end() - 1;
    if (incumbent) pick = std::min_element(open.begin(), open.end(), better_bound);
    Node* node = *pick;
    open.erase(pick);
    if (dominated(node->relaxation.value)) continue;
    const std::size_t branch = branching_variable(m.integers, node->relaxation.solution);
    if (branch == std::string::npos) {
      incumbent = std::move(node->relaxation);
      continue;
    }
    const Rational& v = node->relaxation.solution[m.integers[branch].index];
    const auto down = floor_of(v).get_si();
    auto low = node->bounds;
    low[branch].upper = down;
    auto high = node->bounds;
    high[branch].lower = down + 1;
    node->relaxation.solution.clear();
    Node* a = spawn(std::move(low));
    Node* b = spawn(std::move(high));
    // The child with the weaker bound goes in first so the dive takes the
    // stronger one.
    if (b->relaxation.status == Status::optimal &&
        (a->relaxation.status != Status::optimal || !better_bound(a, b))) {
      std::swap(a, b);
    }
    for (auto* child : {b, a}) {
      if (child->relaxation.status != Status::optimal) continue;
      if (dominated(child->relaxation.value)) continue;
      open.push_back(child);
    }
  }

  if (!incumbent) {
    out.status = Status::infeasible;
    return out;
  }
  out.status = Status::optimal;
  out.value = external(incumbent->value);
  out.solution = std::move(incumbent->solution);
  return out;
}

}  // namespace hgemb::lp

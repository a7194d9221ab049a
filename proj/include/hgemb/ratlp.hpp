#pragma once

// Exact linear and mixed-integer programming over the rationals.
//
// solve_lp runs a two-phase dense-tableau simplex. No floating point is
// involved anywhere, so reported optima are exact and the returned vertex
// satisfies every constraint with equality/inequality holding exactly.
// solve_milp is a best-bound branch-and-bound on top of it.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hgemb/rational.hpp"

namespace hgemb::lp {

enum class Sense { minimize, maximize };
enum class Relation { less_equal, equal, greater_equal };
enum class Status { optimal, infeasible, unbounded };

std::string_view status_name(Status s);

struct Constraint {
  std::vector<Rational> coeffs;
  Relation relation = Relation::less_equal;
  Rational rhs;
};

// Every variable is implicitly nonnegative.
struct LinearProgram {
  Sense sense = Sense::minimize;
  std::vector<Rational> objective;
  std::vector<Constraint> constraints;

  LinearProgram() = default;
  LinearProgram(Sense s, std::size_t num_vars) : sense(s), objective(num_vars) {}

  std::size_t num_vars() const { return objective.size(); }
  Constraint& add(Relation rel, Rational rhs);
  // Throws InputError on coefficient vectors of the wrong length.
  void validate() const;
};

struct LpOutcome {
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> solution;
};

// Dantzig pricing (most negative reduced cost) falls back to Bland's rule
// whenever a pivot fails to improve the objective, so the method terminates
// on degenerate programs; pure Bland is available for comparison.
enum class PivotRule { bland, dantzig_with_bland_fallback };

struct LpOptions {
  PivotRule rule = PivotRule::dantzig_with_bland_fallback;
};

LpOutcome solve_lp(const LinearProgram& p, const LpOptions& options = {});

// Exact check that x is nonnegative and satisfies every constraint.
bool is_feasible(const LinearProgram& p, std::span<const Rational> x);
Rational objective_value(const LinearProgram& p, std::span<const Rational> x);

struct IntegerVariable {
  std::size_t index = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 1;
  // The constraints already force x <= upper, so no explicit bound row is
  // needed until branching tightens it.
  bool implied_upper = false;
};

struct MilpModel {
  LinearProgram lp;
  std::vector<IntegerVariable> integers;

  void validate() const;
};

struct MilpOptions {
  std::size_t max_nodes = 2'000'000;
  LpOptions lp;
};

struct MilpOutcome : LpOutcome {
  Status relaxation_status = Status::infeasible;
  Rational relaxation_value;  // root LP bound
  std::size_t nodes = 0;      // LP relaxations solved
};

// Branch-and-bound: depth-first until the first integral solution, then
// best-bound node selection (ties: lowest node id). Branching takes the most
// fractional 0/1 variable if there is one, else the most fractional integer
// variable (ties: lowest index).
// Throws ResourceError when max_nodes relaxations have been solved without
// closing the tree.
MilpOutcome solve_milp(const MilpModel& m, const MilpOptions& options = {});

}  // namespace hgemb::lp

#pragma once

#include "hpa/core.hpp"

#include <cstdint>
#include <vector>

namespace hpa {

/// Nonzero coefficient of a constraint, tagged with its variable index.
struct SupportEntry {
  std::size_t index;
  BigInt coef;
};

/// A constraint that still involves unfixed variables.
///
/// Its support list is the run `entries[head, tail)` of the solver's arena,
/// ascending by variable index. Popping the front advances `head`.
struct ActiveConstraint {
  std::size_t source;  // position in the input instance
  std::size_t head;
  std::size_t tail;
  BigInt constant;  // a0 after substituting the fixed prefix

  std::size_t support_size() const { return tail - head; }
};

struct SolverState {
  std::size_t n = 0;
  std::size_t step = 0;  // 0-based index of the next variable to fix
  std::vector<SupportEntry> entries;
  std::vector<ActiveConstraint> active;
  IntVector prefix;
  std::size_t candidate_checks = 0;
};

/// What one elimination step saw and chose.
struct StepReport {
  std::vector<std::int64_t> blocked;  // sorted
  std::int64_t value = 0;
  std::size_t probes = 0;
  std::size_t retired = 0;
};

/// Builds the initial state in O(n*m): one support list per constraint.
SolverState init_state(const AvoidanceInstance& inst);

/// Fixes variable `state.step`: collects the values blocked by constraints
/// whose remaining support is that single variable, takes the first free
/// candidate in the order 0, 1, -1, 2, -2, ..., substitutes it into every
/// constraint that starts at this variable and retires the exhausted ones.
/// Throws InternalInvariantViolation if a retired constraint evaluates to
/// zero, and std::logic_error when called past the last variable.
StepReport eliminate_step(SolverState& state);

struct SolveReport {
  SolutionVector solution;
  std::size_t m = 0;
  std::size_t probes = 0;
};

/// Feasible point with l1 norm at most (m+n)/2, lexicographically minimal in
/// absolute values, positive sign preferred on ties. O(n*m).
SolveReport solve_report(const AvoidanceInstance& inst);
SolutionVector solve(const AvoidanceInstance& inst);

/// Scan position of a candidate: 0 -> 0, 1 -> 1, -1 -> 2, 2 -> 3, ...
std::int64_t candidate_at(std::size_t position);

}  // namespace hpa

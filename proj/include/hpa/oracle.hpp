#pragma once

// Exponential-time ground truth for small instances.

#include "hpa/core.hpp"

#include <cstdint>
#include <string>

namespace hpa {

struct NormKind {
  enum class Tag { L1, Lp, Linf };
  Tag tag = Tag::L1;
  // p = num/den for Tag::Lp.
  unsigned num = 1;
  unsigned den = 1;

  static NormKind l1() { return {}; }
  static NormKind linf() { return {Tag::Linf, 1, 1}; }
  /// Throws std::invalid_argument unless num/den >= 1.
  static NormKind lp(unsigned num, unsigned den = 1);
  /// Parses "l1", "linf" or "lp:<num>/<den>" (the "/<den>" part optional).
  static NormKind parse(const std::string& text);

  bool integral_p() const { return tag == Tag::Lp && num % den == 0; }
};

inline constexpr std::uint64_t kDefaultOracleBudget = 100'000'000;

/// Global minimizer of the chosen norm over the feasible integer points.
/// Points are enumerated in shells of growing norm, lexicographically inside
/// a shell; the first optimal point met is returned. Throws BudgetExceeded
/// once `budget` feasibility evaluations have been spent.
SolutionVector exact_solve(const AvoidanceInstance& inst, NormKind norm,
                           std::uint64_t budget = kDefaultOracleBudget);

/// Greedy lexicographic optimum: |y_1| as small as any feasible point
/// allows, then |y_2| given y_1, and so on; nonnegative sign first on ties.
/// Prefix extendability is decided by exhaustive search over completions in
/// the box [-ceil(m/2), ceil(m/2)].
SolutionVector exact_lex_solve(const AvoidanceInstance& inst,
                               std::uint64_t budget = kDefaultOracleBudget);

/// |{x in Z^n : |x|_1 <= r}| = sum_k 2^k C(n,k) C(r,k).
BigInt count_l1_ball(std::size_t n, std::size_t r);

/// Value compared by the Lp oracle: |x|_p^p for integral p, exact.
BigInt lp_power_sum(std::span<const BigInt> x, unsigned p);

}  // namespace hpa

#pragma once

// Exact uniform sampling of lattice points in the cross-polytope r*B_1, and
// the best-of-N sampling baseline built on it.

#include "hpa/core.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace hpa {

/// Checkpointed table of ball counts D(d, rho) = |{x in Z^d : |x|_1 <= rho}|
/// for d <= n, rho <= r, built from
///   D(0, rho) = 1,  D(d, rho) = D(d-1, rho) + D(d, rho-1) + D(d-1, rho-1).
/// Every `stride`-th row is stored; the rows in between are rebuilt on
/// demand by a RowCursor. Immutable once built.
class BallCountCheckpoints {
 public:
  BallCountCheckpoints(std::size_t n, std::size_t r, std::size_t stride = 0);

  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }
  std::size_t stride() const { return stride_; }
  const std::vector<BigInt>& checkpoint(std::size_t d) const { return rows_[d / stride_]; }
  const BigInt& total() const { return total_; }

 private:
  std::size_t n_, r_, stride_;
  std::vector<std::vector<BigInt>> rows_;
  BigInt total_;
};

/// Next row of the recurrence from the previous one.
void advance_ball_row(const std::vector<BigInt>& prev, std::vector<BigInt>& next);

/// Shared checkpoint tables, one per (n, r); keeps the few most recent.
/// Safe to call concurrently.
std::shared_ptr<const BallCountCheckpoints> ball_counts(std::size_t n, std::size_t r);

/// Random access to rows of a checkpoint table. Not thread-safe; cheap to
/// create per worker.
class RowCursor {
 public:
  explicit RowCursor(std::shared_ptr<const BallCountCheckpoints> table);
  const std::vector<BigInt>& row(std::size_t d);

 private:
  std::shared_ptr<const BallCountCheckpoints> table_;
  std::size_t base_ = static_cast<std::size_t>(-1);
  std::vector<std::vector<BigInt>> block_;
};

/// Uniform point of r*B_1 cap Z^n. Coordinates are drawn in order: x_1 = t
/// with probability D(n-1, r-|t|) / D(n, r) (both signs of t != 0 alike),
/// then the rest on the remaining budget. A single uniform draw from
/// [0, D(n, r)) is consumed digit by digit through the buckets, so the
/// distribution is exact. Uses stream 0 of `seed`.
IntVector sample_l1_ball(std::size_t n, std::size_t r, std::uint64_t seed);

/// `count` independent samples; sample i uses stream i of `seed`.
std::vector<IntVector> sample_l1_ball_batch(std::size_t n, std::size_t r, std::uint64_t seed,
                                            std::size_t count);

struct SamplerConfig {
  std::size_t num_samples = 100;
  std::uint64_t seed = 0;
  std::optional<std::size_t> radius_override;
};

struct BaselineReport {
  std::optional<SolutionVector> best;
  std::size_t radius = 0;
  std::size_t feasible = 0;
};

/// Draws cfg.num_samples points of r*B_1 with r = ceil((m+n)/2) unless
/// overridden and keeps the feasible one of least l1 norm (lowest sample
/// index on ties).
BaselineReport sample_baseline_report(const AvoidanceInstance& inst, const SamplerConfig& cfg);
std::optional<SolutionVector> sample_baseline(const AvoidanceInstance& inst, const SamplerConfig& cfg);

}  // namespace hpa

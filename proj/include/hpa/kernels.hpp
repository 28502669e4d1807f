#pragma once

// Data-parallel kernels. Each has a serial reference in `serial` and an
// OpenMP version in `omp`; both produce identical output for any thread
// count. The public API routes through `omp`.

#include "hpa/core.hpp"
#include "hpa/sampler.hpp"

#include <cstdint>
#include <vector>

namespace hpa::kernels {

/// Per-sample state of the coordinate-by-coordinate ball sampler.
struct BallWalker {
  BigInt residual;         // uniform in [0, D(dims_left, budget))
  std::int64_t budget = 0;
  std::vector<std::int64_t> x;
};

/// Draws the starting residual of sample `index` from stream `index`.
BallWalker start_walker(std::size_t n, std::size_t r, const BigInt& total, std::uint64_t seed,
                        std::size_t index);

/// Fixes coordinate `coord` of `w` given row D(dims_after, .), where
/// dims_after is the number of coordinates still free after this one.
void walk_coordinate(BallWalker& w, std::size_t coord, const std::vector<BigInt>& row);

namespace serial {
std::vector<char> feasible_batch(const AvoidanceInstance& inst, const std::vector<IntVector>& points);
std::vector<IntVector> sample_ball_batch(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t count);
}  // namespace serial

namespace omp {
std::vector<char> feasible_batch(const AvoidanceInstance& inst, const std::vector<IntVector>& points);
std::vector<IntVector> sample_ball_batch(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t count);
int max_threads();
}  // namespace omp

}  // namespace hpa::kernels

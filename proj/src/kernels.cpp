#include "hpa/kernels.hpp"

#include "hpa/rng.hpp"

#include <omp.h>

namespace hpa::kernels {

BallWalker start_walker(std::size_t n, std::size_t r, const BigInt& total, std::uint64_t seed,
                        std::size_t index) {
  CounterRng rng(seed, index);
  BallWalker w;
  w.residual = rng.below(total);
  w.budget = static_cast<std::int64_t>(r);
  w.x.assign(n, 0);
  return w;
}

void walk_coordinate(BallWalker& w, std::size_t coord, const std::vector<BigInt>& row) {
  // Buckets in order t = 0 (size D(., R)), then t = 1, 2, ... with size
  // 2 D(., R - t): the lower half of a bucket is +t, the upper half -t.
  const auto R = w.budget;
  const BigInt& stay = row[static_cast<std::size_t>(R)];
  if (w.residual < stay) return;
  w.residual -= stay;
  for (std::int64_t t = 1; t <= R; ++t) {
    const BigInt& c = row[static_cast<std::size_t>(R - t)];
    if (w.residual < c) {
      w.x[coord] = t;
      w.budget -= t;
      return;
    }
    w.residual -= c;
    if (w.residual < c) {
      w.x[coord] = -t;
      w.budget -= t;
      return;
    }
    w.residual -= c;
  }
  throw InternalInvariantViolation("ball sampler: residual outside the bucket range");
}

namespace {

IntVector to_point(const std::vector<std::int64_t>& x) {
  IntVector out;
  out.reserve(x.size());
  for (auto v : x) out.emplace_back(static_cast<long>(v));
  return out;
}

}  // namespace

namespace serial {

std::vector<char> feasible_batch(const AvoidanceInstance& inst, const std::vector<IntVector>& points) {
  std::vector<char> out(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) out[i] = check_feasible(inst, points[i]) ? 1 : 0;
  return out;
}

std::vector<IntVector> sample_ball_batch(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t count) {
  auto table = ball_counts(n, r);
  RowCursor rows(table);
  std::vector<BallWalker> walkers;
  walkers.reserve(count);
  for (std::size_t s = 0; s < count; ++s) walkers.push_back(start_walker(n, r, table->total(), seed, s));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows.row(n - 1 - i);
    for (auto& w : walkers) walk_coordinate(w, i, row);
  }
  std::vector<IntVector> out;
  out.reserve(count);
  for (const auto& w : walkers) out.push_back(to_point(w.x));
  return out;
}

}  // namespace serial

namespace omp {

int max_threads() { return omp_get_max_threads(); }

std::vector<char> feasible_batch(const AvoidanceInstance& inst, const std::vector<IntVector>& points) {
  // Dimension errors are raised here, outside the parallel region.
  for (const auto& p : points) {
    if (p.size() != inst.n()) throw DimensionMismatch("feasible_batch: point length differs from n");
  }
  std::vector<char> out(points.size());
  const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = check_feasible(inst, points[i]) ? 1 : 0;
  return out;
}

std::vector<IntVector> sample_ball_batch(std::size_t n, std::size_t r, std::uint64_t seed, std::size_t count) {
  auto table = ball_counts(n, r);
  RowCursor rows(table);
  std::vector<BallWalker> walkers(count);
  const auto c = static_cast<std::ptrdiff_t>(count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t s = 0; s < c; ++s) walkers[s] = start_walker(n, r, table->total(), seed, static_cast<std::size_t>(s));
  // Rows are shared by all walkers; each coordinate is one parallel sweep.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = rows.row(n - 1 - i);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t s = 0; s < c; ++s) walk_coordinate(walkers[s], i, row);
  }
  std::vector<IntVector> out(count);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t s = 0; s < c; ++s) out[s] = to_point(walkers[s].x);
  return out;
}

}  // namespace omp

}  // namespace hpa::kernels

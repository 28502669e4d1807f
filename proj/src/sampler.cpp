#include "hpa/sampler.hpp"

#include "hpa/kernels.hpp"

#include <cmath>
#include <deque>
#include <mutex>
#include <tuple>

namespace hpa {

void advance_ball_row(const std::vector<BigInt>& prev, std::vector<BigInt>& next) {
  next.resize(prev.size());
  if (prev.empty()) return;
  next[0] = 1;
  for (std::size_t rho = 1; rho < prev.size(); ++rho) {
    next[rho] = prev[rho] + next[rho - 1];
    next[rho] += prev[rho - 1];
  }
}

BallCountCheckpoints::BallCountCheckpoints(std::size_t n, std::size_t r, std::size_t stride)
    : n_(n), r_(r), stride_(stride) {
  if (stride_ == 0) stride_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::sqrt(static_cast<double>(n) + 1)));
  std::vector<BigInt> cur(r + 1, BigInt(1)), nxt;
  rows_.push_back(cur);
  for (std::size_t d = 1; d <= n; ++d) {
    advance_ball_row(cur, nxt);
    cur.swap(nxt);
    if (d % stride_ == 0) rows_.push_back(cur);
  }
  total_ = cur[r];
}

std::shared_ptr<const BallCountCheckpoints> ball_counts(std::size_t n, std::size_t r) {
  static std::mutex mu;
  static std::deque<std::tuple<std::size_t, std::size_t, std::shared_ptr<const BallCountCheckpoints>>> cache;
  constexpr std::size_t kKeep = 4;
  {
    std::lock_guard lock(mu);
    for (const auto& [cn, cr, t] : cache) {
      if (cn == n && cr == r) return t;
    }
  }
  // Built outside the lock; a concurrent duplicate build is harmless.
  auto table = std::make_shared<const BallCountCheckpoints>(n, r);
  std::lock_guard lock(mu);
  for (const auto& [cn, cr, t] : cache) {
    if (cn == n && cr == r) return t;
  }
  cache.emplace_back(n, r, table);
  if (cache.size() > kKeep) cache.pop_front();
  return table;
}

RowCursor::RowCursor(std::shared_ptr<const BallCountCheckpoints> table) : table_(std::move(table)) {}

const std::vector<BigInt>& RowCursor::row(std::size_t d) {
  const std::size_t stride = table_->stride();
  const std::size_t base = d / stride * stride;
  if (base != base_) {
    block_.resize(stride);
    block_[0] = table_->checkpoint(base);
    for (std::size_t i = 1; i < stride && base + i <= table_->n(); ++i) advance_ball_row(block_[i - 1], block_[i]);
    base_ = base;
  }
  return block_[d - base];
}

IntVector sample_l1_ball(std::size_t n, std::size_t r, std::uint64_t seed) {
  return kernels::serial::sample_ball_batch(n, r, seed, 1).front();
}

std::vector<IntVector> sample_l1_ball_batch(std::size_t n, std::size_t r, std::uint64_t seed,
                                            std::size_t count) {
  return kernels::omp::sample_ball_batch(n, r, seed, count);
}

BaselineReport sample_baseline_report(const AvoidanceInstance& inst, const SamplerConfig& cfg) {
  BaselineReport rep;
  rep.radius = cfg.radius_override.value_or((inst.m() + inst.n() + 1) / 2);
  auto points = sample_l1_ball_batch(inst.n(), rep.radius, cfg.seed, cfg.num_samples);
  const auto ok = kernels::omp::feasible_batch(inst, points);
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (!ok[i]) continue;
    ++rep.feasible;
    SolutionVector s(std::move(points[i]));
    if (!rep.best || s.norm1 < rep.best->norm1) rep.best = std::move(s);
  }
  return rep;
}

std::optional<SolutionVector> sample_baseline(const AvoidanceInstance& inst, const SamplerConfig& cfg) {
  return sample_baseline_report(inst, cfg).best;
}

}  // namespace hpa

#pragma once

// Random instance generation and the solver-vs-sampling experiment.

#include "hpa/core.hpp"
#include "hpa/sampler.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace hpa {

/// m homogeneous constraints with entries uniform in [-bound, bound]; an
/// all-zero row is redrawn. Stream i of `seed` generates row i.
AvoidanceInstance random_instance(std::size_t n, std::size_t m, std::int64_t entry_bound, std::uint64_t seed);

/// Random (possibly inhomogeneous) instance with dimension and count drawn
/// from ranges; used by the property suites.
AvoidanceInstance random_instance_in(std::size_t n_lo, std::size_t n_hi, std::size_t m_lo, std::size_t m_hi,
                                     std::int64_t entry_bound, bool homogeneous, std::uint64_t seed);

struct BenchConfig {
  std::vector<std::size_t> n_values;
  std::vector<std::size_t> m_values;
  std::int64_t entry_bound = 10;
  std::size_t instances_per_cell = 5;
  SamplerConfig sampler;
  std::uint64_t seed = 0;
};

struct BenchCell {
  std::size_t n = 0, m = 0, instances = 0;
  double solver_avg_norm = 0;
  std::size_t solver_max_norm = 0;
  double bound = 0;  // (m+n)/2
  double sampler_avg_norm = 0;  // over instances with a feasible sample; NaN if none
  std::size_t sampler_failures = 0;
  double solver_ms_avg = 0;
  double sampler_ms_avg = 0;
  bool solver_within_bound = true;
};

/// Cells in row-major order over (n_values, m_values). Instance i of cell
/// (n, m) is random_instance(n, m, bound, derive_seed(seed, n, m, i)) and
/// its sampler stream seed is derive_seed(sampler.seed ^ seed, n, m, i).
std::vector<BenchCell> run_bench(const BenchConfig& cfg);

void write_bench_csv(std::ostream& os, const std::vector<BenchCell>& cells);

}  // namespace hpa

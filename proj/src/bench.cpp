#include "hpa/bench.hpp"

#include "hpa/rng.hpp"
#include "hpa/solver.hpp"

#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace hpa {

namespace {

Constraint random_row(CounterRng& rng, std::size_t n, std::int64_t bound, bool homogeneous) {
  Constraint c{IntVector(n), 0};
  for (;;) {
    bool nonzero = false;
    for (auto& v : c.a) {
      const auto e = rng.between(-bound, bound);
      v = static_cast<long>(e);
      nonzero = nonzero || e != 0;
    }
    if (nonzero) break;
  }
  if (!homogeneous) c.a0 = static_cast<long>(rng.between(-bound, bound));
  return c;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

AvoidanceInstance random_instance(std::size_t n, std::size_t m, std::int64_t entry_bound, std::uint64_t seed) {
  if (n == 0 || m == 0 || entry_bound < 1) throw std::invalid_argument("random_instance: need n, m, bound >= 1");
  std::vector<Constraint> cs;
  cs.reserve(m);
  for (std::size_t k = 0; k < m; ++k) {
    CounterRng rng(seed, k);
    cs.push_back(random_row(rng, n, entry_bound, true));
  }
  return AvoidanceInstance(n, std::move(cs));
}

AvoidanceInstance random_instance_in(std::size_t n_lo, std::size_t n_hi, std::size_t m_lo, std::size_t m_hi,
                                     std::int64_t entry_bound, bool homogeneous, std::uint64_t seed) {
  CounterRng rng(seed, 0);
  const auto n = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(n_lo), static_cast<std::int64_t>(n_hi)));
  const auto m = static_cast<std::size_t>(rng.between(static_cast<std::int64_t>(m_lo), static_cast<std::int64_t>(m_hi)));
  std::vector<Constraint> cs;
  cs.reserve(m);
  for (std::size_t k = 0; k < m; ++k) cs.push_back(random_row(rng, n, entry_bound, homogeneous));
  return AvoidanceInstance(n, std::move(cs));
}

std::vector<BenchCell> run_bench(const BenchConfig& cfg) {
  if (cfg.n_values.empty() || cfg.m_values.empty()) throw std::invalid_argument("bench: n and m lists must be nonempty");
  if (cfg.entry_bound < 1 || cfg.instances_per_cell < 1) throw std::invalid_argument("bench: bound and instances must be >= 1");
  std::vector<BenchCell> cells;
  for (auto n : cfg.n_values) {
    for (auto m : cfg.m_values) {
      BenchCell cell;
      cell.n = n;
      cell.m = m;
      cell.instances = cfg.instances_per_cell;
      cell.bound = static_cast<double>(m + n) / 2;
      double solver_sum = 0, sampler_sum = 0, solver_ms = 0, sampler_ms = 0;
      std::size_t sampler_hits = 0;
      for (std::size_t i = 0; i < cfg.instances_per_cell; ++i) {
        const auto inst = random_instance(n, m, cfg.entry_bound, derive_seed(cfg.seed, n, m, i));

        auto t0 = std::chrono::steady_clock::now();
        const auto y = solve(inst);
        solver_ms += ms_since(t0);
        const auto norm = static_cast<std::size_t>(y.norm1.get_ui());
        solver_sum += static_cast<double>(norm);
        cell.solver_max_norm = std::max(cell.solver_max_norm, norm);
        if (2 * norm > m + n || !check_feasible(inst, y.y)) cell.solver_within_bound = false;

        SamplerConfig sc = cfg.sampler;
        sc.seed = derive_seed(cfg.sampler.seed ^ cfg.seed, n, m, i);
        t0 = std::chrono::steady_clock::now();
        const auto best = sample_baseline(inst, sc);
        sampler_ms += ms_since(t0);
        if (best) {
          sampler_sum += best->norm1.get_d();
          ++sampler_hits;
        } else {
          ++cell.sampler_failures;
        }
      }
      const auto k = static_cast<double>(cfg.instances_per_cell);
      cell.solver_avg_norm = solver_sum / k;
      cell.sampler_avg_norm = sampler_hits ? sampler_sum / static_cast<double>(sampler_hits)
                                           : std::numeric_limits<double>::quiet_NaN();
      cell.solver_ms_avg = solver_ms / k;
      cell.sampler_ms_avg = sampler_ms / k;
      cells.push_back(cell);
    }
  }
  return cells;
}

void write_bench_csv(std::ostream& os, const std::vector<BenchCell>& cells) {
  os << "n,m,instances,solver_avg_norm,solver_max_norm,bound,sampler_avg_norm,sampler_failures,solver_ms_avg,"
        "sampler_ms_avg\n";
  const auto flags = os.flags();
  const auto prec = os.precision();
  os << std::fixed;
  for (const auto& c : cells) {
    os << c.n << ',' << c.m << ',' << c.instances << ',' << std::setprecision(2) << c.solver_avg_norm << ','
       << c.solver_max_norm << ',' << std::setprecision(1) << c.bound << ',' << std::setprecision(2);
    if (std::isnan(c.sampler_avg_norm)) {
      os << "nan";
    } else {
      os << c.sampler_avg_norm;
    }
    os << ',' << c.sampler_failures << ',' << std::setprecision(3) << c.solver_ms_avg << ',' << c.sampler_ms_avg
       << '\n';
  }
  os.flags(flags);
  os.precision(prec);
}

}  // namespace hpa

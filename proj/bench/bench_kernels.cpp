// Serial vs OpenMP timings for the data-parallel kernels, plus the solver's
// per-size cost. Prints one CSV row per measurement.

#include "hpa/bench.hpp"
#include "hpa/kernels.hpp"
#include "hpa/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <omp.h>

namespace {

template <class F>
double median_ms(int reps, F&& f) {
  std::vector<double> t;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    t.push_back(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  std::sort(t.begin(), t.end());
  return t[t.size() / 2];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hpa kernel benchmark"};
  std::size_t n = 1000, m = 2000, samples = 100;
  int reps = 5;
  std::uint64_t seed = 1;
  app.add_option("--n", n)->capture_default_str();
  app.add_option("--m", m)->capture_default_str();
  app.add_option("--samples", samples)->capture_default_str();
  app.add_option("--reps", reps)->capture_default_str();
  app.add_option("--seed", seed)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  using namespace hpa;
  const auto inst = random_instance(n, m, 10, seed);
  const std::size_t r = (m + n + 1) / 2;
  // Warm the shared count table so both variants time the walk alone.
  (void)ball_counts(n, r);

  std::cout << "kernel,variant,threads,n,m,samples,median_ms\n";
  auto row = [&](const char* kernel, const char* variant, int threads, double ms) {
    std::cout << kernel << ',' << variant << ',' << threads << ',' << n << ',' << m << ',' << samples << ',' << ms
              << '\n';
  };

  std::vector<IntVector> pts;
  row("sample_ball", "serial", 1,
      median_ms(reps, [&] { pts = kernels::serial::sample_ball_batch(n, r, seed, samples); }));
  row("sample_ball", "omp", kernels::omp::max_threads(),
      median_ms(reps, [&] { pts = kernels::omp::sample_ball_batch(n, r, seed, samples); }));
  row("feasible_batch", "serial", 1, median_ms(reps, [&] { (void)kernels::serial::feasible_batch(inst, pts); }));
  row("feasible_batch", "omp", kernels::omp::max_threads(),
      median_ms(reps, [&] { (void)kernels::omp::feasible_batch(inst, pts); }));
  row("solve", "serial", 1, median_ms(reps, [&] { (void)solve(inst); }));
  row("ball_count_table", "serial", 1,
      median_ms(reps, [&] { BallCountCheckpoints table(n, r); }));
  return 0;
}

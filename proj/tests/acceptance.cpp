// Acceptance suite: one line per criterion, nonzero exit if any fails.
//
//   AC1  norm bound and feasibility on 1000 random instances
//   AC2  probe budget m + 2n on the same corpus
//   AC3  tight family met with equality
//   AC4  lexicographic optimum matches the exhaustive oracle
//   AC5  O(n*m) scaling of the solver in m
//   AC6  n = 1000, m = 2000 cell of the solver-vs-sampling experiment
//   AC7  m = 2000 row, n = 500 .. 1000
//   AC8  generating-function counts equal enumeration
//   AC9  counts independent of the avoidance vector
//   AC10 coloring / vertex-cover reductions on tiny graphs
//   AC11 sampler uniformity and ball counts

#include "hpa/bench.hpp"
#include "hpa/genfun.hpp"
#include "hpa/oracle.hpp"
#include "hpa/reductions.hpp"
#include "hpa/rng.hpp"
#include "hpa/sampler.hpp"
#include "hpa/solver.hpp"
#include "test_support.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

using namespace hpa;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failures = 0;

void report(const std::string& id, bool pass, const std::string& what, const std::string& detail) {
  std::cout << (pass ? "[PASS] " : "[FAIL] ") << id << "  " << what << "  (" << detail << ")" << std::endl;
  if (!pass) ++failures;
}

std::vector<AvoidanceInstance> norm_bound_corpus() {
  std::vector<AvoidanceInstance> out;
  out.reserve(1000);
  for (std::uint64_t s = 0; s < 1000; ++s) out.push_back(random_instance_in(1, 50, 1, 200, 10, s % 2 == 0, 0xac1'0000 + s));
  return out;
}

void ac1_ac2() {
  const auto t0 = Clock::now();
  const auto corpus = norm_bound_corpus();
  std::size_t bound_ok = 0, probe_ok = 0;
  for (const auto& inst : corpus) {
    const auto rep = solve_report(inst);
    const bool feasible = test::feasible_wide(inst, rep.solution.y);
    if (feasible && rep.solution.norm1 * 2 <= static_cast<long>(inst.m() + inst.n())) ++bound_ok;
    if (rep.probes <= inst.m() + 2 * inst.n()) ++probe_ok;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d1, d2;
  d1 << bound_ok << "/1000 feasible within (m+n)/2, " << std::fixed << std::setprecision(2) << secs << " s";
  d2 << probe_ok << "/1000 within m+2n probes";
  report("AC1", bound_ok == 1000 && secs < 10.0, "norm bound |y|_1 <= (m+n)/2", d1.str());
  report("AC2", probe_ok == 1000, "probe budget <= m + 2n", d2.str());
}

void ac3() {
  const auto t0 = Clock::now();
  std::size_t ok = 0;
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t k = 1; k <= 5; ++k)
      if (solve(tight_family(n, k)).norm1 == static_cast<long>((k + 1) * n)) ++ok;
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/50 exact, " << std::fixed << std::setprecision(3) << secs << " s";
  report("AC3", ok == 50 && secs < 1.0, "tight family norm = (k+1)n", d.str());
}

void ac4() {
  const auto t0 = Clock::now();
  std::size_t ok = 0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto inst = random_instance_in(1, 3, 0, 10, 3, s % 2 == 1, 0xac4'0000 + s);
    const auto got = solve(inst).y;
    const auto want = exact_lex_solve(inst).y;
    bool same = got.size() == want.size();
    for (std::size_t i = 0; same && i < got.size(); ++i) same = abs(got[i]) == abs(want[i]);
    ok += same ? 1 : 0;
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << ok << "/200 identical |y_i| sequences, " << std::fixed << std::setprecision(2) << secs << " s";
  report("AC4", ok == 200 && secs < 30.0, "lexicographic optimum vs exhaustive oracle", d.str());
}

void ac5() {
  const std::size_t n = 500;
  std::vector<double> medians;
  for (std::size_t m : {1000, 2000, 4000}) {
    const auto inst = random_instance(n, m, 10, 0xac5 + m);
    (void)solve(inst);  // warm-up
    std::vector<double> t;
    for (int rep = 0; rep < 10; ++rep) {
      const auto t0 = Clock::now();
      const auto y = solve(inst);
      t.push_back(seconds_since(t0));
      if (y.size() != n) t.back() = -1;
    }
    std::sort(t.begin(), t.end());
    medians.push_back((t[4] + t[5]) / 2);
  }
  const double r1 = medians[1] / medians[0], r2 = medians[2] / medians[1];
  std::ostringstream d;
  d << std::fixed << std::setprecision(1) << "median ms " << medians[0] * 1e3 << " / " << medians[1] * 1e3 << " / "
    << medians[2] * 1e3 << std::setprecision(2) << ", ratios " << r1 << ", " << r2 << " (need [1.5, 3.0])";
  report("AC5", r1 >= 1.5 && r1 <= 3.0 && r2 >= 1.5 && r2 <= 3.0, "solver time doubles with m at n = 500", d.str());
}

BenchCell one_cell(std::size_t n, std::size_t m, std::uint64_t seed) {
  BenchConfig cfg;
  cfg.n_values = {n};
  cfg.m_values = {m};
  cfg.entry_bound = 10;
  cfg.instances_per_cell = 5;
  cfg.sampler.num_samples = 100;
  cfg.seed = seed;
  return run_bench(cfg).front();
}

void ac6() {
  const auto t0 = Clock::now();
  const auto c = one_cell(1000, 2000, 2024);
  std::ostringstream d;
  d << std::fixed << std::setprecision(1) << "solver " << c.solver_avg_norm << " in [15, 60], sampler "
    << c.sampler_avg_norm << " in [1400, 1600], failures " << c.sampler_failures << ", " << seconds_since(t0)
    << " s";
  const bool pass = c.solver_within_bound && c.solver_avg_norm >= 15 && c.solver_avg_norm <= 60 &&
                    c.sampler_avg_norm >= 1400 && c.sampler_avg_norm <= 1600;
  report("AC6", pass, "n = 1000, m = 2000 cell", d.str());
}

void ac7() {
  const auto t0 = Clock::now();
  std::vector<BenchCell> row;
  for (std::size_t n = 500; n <= 1000; n += 50) row.push_back(one_cell(n, 2000, 2025));
  std::size_t inversions = 0;
  double solver_max = 0;
  bool bounds = true;
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i > 0 && !(row[i].sampler_avg_norm > row[i - 1].sampler_avg_norm)) ++inversions;
    solver_max = std::max(solver_max, row[i].solver_avg_norm);
    bounds = bounds && row[i].solver_within_bound;
  }
  const double lo = row.front().sampler_avg_norm, hi = row.back().sampler_avg_norm;
  std::ostringstream d;
  d << std::fixed << std::setprecision(1) << "sampler " << lo << " -> " << hi << ", " << inversions
    << " inversions, solver max avg " << solver_max << ", " << seconds_since(t0) << " s";
  const bool pass = inversions <= 1 && lo >= 1150 && lo <= 1320 && hi >= 1400 && hi <= 1600 && solver_max < 60 && bounds;
  report("AC7", pass, "m = 2000 row trend", d.str());
}

struct Fixture {
  std::string name;
  GenFun f;
  Polytope p;
  std::int64_t lo, hi;
};

std::vector<Fixture> fixtures() {
  std::vector<Fixture> out;
  for (std::int64_t N : {0, 1, 3, 100})
    out.push_back({"interval:" + std::to_string(N), fixture_interval(static_cast<std::uint64_t>(N)),
                   polytope_interval(N), -1, N + 1});
  for (std::size_t n = 1; n <= 6; ++n)
    out.push_back({"cube:" + std::to_string(n), fixture_cube(n), polytope_cube(n), -1, 2});
  for (auto [n, N] : {std::pair<std::size_t, std::int64_t>{2, 10}, {3, 4}, {4, 3}})
    out.push_back({"simplex:" + std::to_string(n) + ":" + std::to_string(N),
                   fixture_simplex(n, static_cast<std::uint64_t>(N)), polytope_simplex(n, N), -1, N + 1});
  return out;
}

void ac8_ac9() {
  const auto t0 = Clock::now();
  const auto fx = fixtures();
  std::size_t ok8 = 0, ok9 = 0;
  std::string bad8, bad9;
  CounterRng rng(0xac9, 0);
  for (const auto& f : fx) {
    const auto want = brute_count(f.p, f.lo, f.hi);
    const auto got = count_via_genfun(f.f);
    if (got == static_cast<unsigned long>(want)) {
      ++ok8;
    } else {
      bad8 += " " + f.name;
    }
    bool stable = true;
    for (int i = 0; i < 20; ++i) {
      IntVector c;
      for (;;) {
        c.assign(f.f.n(), 0);
        for (auto& v : c) v = static_cast<long>(rng.between(-9, 9));
        bool valid = true;
        for (const auto& t : f.f.terms())
          for (const auto& u : t.us) valid = valid && sgn(dot(u, c)) != 0;
        if (valid) break;
      }
      stable = stable && count_via_genfun(f.f, c) == got;
    }
    if (stable) {
      ++ok9;
    } else {
      bad9 += " " + f.name;
    }
  }
  const double secs = seconds_since(t0);
  std::ostringstream d8, d9;
  d8 << ok8 << "/" << fx.size() << " fixtures equal enumeration" << bad8 << ", " << std::fixed << std::setprecision(2)
     << secs << " s";
  d9 << ok9 << "/" << fx.size() << " fixtures stable over 20 vectors each" << bad9;
  report("AC8", ok8 == fx.size() && secs < 10.0, "generating-function counts", d8.str());
  report("AC9", ok9 == fx.size(), "avoidance-vector invariance", d9.str());
}

void ac10() {
  const auto t0 = Clock::now();
  struct Case {
    const char* name;
    Graph g;
  };
  const std::vector<Case> corpus{{"K2", Graph::complete(2)},
                                 {"P3", Graph::path(3)},
                                 {"K3", Graph::complete(3)},
                                 {"C5", Graph::cycle(5)},
                                 {"K4", Graph::complete(4)}};
  std::ostringstream chi, tau;
  bool pass = true;
  for (const auto& [name, g] : corpus) {
    const auto col = decode_coloring(g, exact_solve(encode_coloring(g), NormKind::linf()).y);
    const auto cover = decode_vertex_cover(g, exact_solve(encode_vertex_cover(g), NormKind::l1()).y);
    pass = pass && col.num_colors == chromatic_number_brute(g) && is_proper_coloring(g, col.color);
    pass = pass && cover.size() == min_vertex_cover_brute(g) && is_vertex_cover(g, cover);
    chi << (chi.tellp() ? "," : "") << col.num_colors;
    tau << (tau.tellp() ? "," : "") << cover.size();
  }
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << "chromatic (" << chi.str() << "), cover (" << tau.str() << "), " << std::fixed << std::setprecision(2) << secs
    << " s";
  report("AC10", pass && chi.str() == "2,2,3,3,4" && tau.str() == "1,1,2,3,3" && secs < 60.0,
         "reductions on K2, P3, K3, C5, K4", d.str());
}

void ac11() {
  bool pass = true;
  std::ostringstream d;
  d << std::setprecision(4);
  for (auto [n, r] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 2}}) {
    const std::size_t draws = 100000;
    const auto cells = test::enumerate_ball(n, static_cast<long>(r));
    std::map<std::vector<long>, std::size_t> h;
    for (const auto& x : sample_l1_ball_batch(n, r, 0xac11 + n, draws)) {
      std::vector<long> key;
      for (const auto& v : x) key.push_back(v.get_si());
      ++h[key];
    }
    const double expect = static_cast<double>(draws) / static_cast<double>(cells);
    double stat = static_cast<double>(cells - h.size()) * expect;
    for (const auto& [k, c] : h) {
      if (test::l1(k) > static_cast<long>(r)) pass = false;
      stat += (static_cast<double>(c) - expect) * (static_cast<double>(c) - expect) / expect;
    }
    boost::math::chi_squared dist(static_cast<double>(cells - 1));
    const double critical = boost::math::quantile(boost::math::complement(dist, 1e-6));
    pass = pass && stat < critical;
    d << "chi2(" << n << "," << r << ") = " << stat << " < " << critical << "; ";
  }
  std::size_t ok = 0, total = 0;
  for (std::size_t n = 1; n <= 4; ++n)
    for (long r = 0; r <= 6; ++r, ++total)
      if (count_l1_ball(n, static_cast<std::size_t>(r)) == static_cast<unsigned long>(test::enumerate_ball(n, r))) ++ok;
  d << ok << "/" << total << " ball counts exact";
  report("AC11", pass && ok == total, "sampler uniformity and ball counts", d.str());
}

}  // namespace

int main() {
  std::cout << "acceptance suite\n";
  ac1_ac2();
  ac3();
  ac4();
  ac5();
  ac6();
  ac7();
  ac8_ac9();
  ac10();
  ac11();
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}

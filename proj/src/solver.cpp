#include "hpa/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace hpa {

std::int64_t candidate_at(std::size_t position) {
  const auto half = static_cast<std::int64_t>((position + 1) / 2);
  return (position % 2 == 1) ? half : -half;
}

SolverState init_state(const AvoidanceInstance& inst) {
  SolverState st;
  st.n = inst.n();
  st.active.reserve(inst.m());
  std::size_t nnz = 0;
  for (const auto& c : inst.constraints())
    nnz += static_cast<std::size_t>(std::count_if(c.a.begin(), c.a.end(), [](const BigInt& v) { return sgn(v) != 0; }));
  st.entries.reserve(nnz);
  for (std::size_t k = 0; k < inst.m(); ++k) {
    const auto& c = inst[k];
    const std::size_t head = st.entries.size();
    for (std::size_t i = 0; i < c.a.size(); ++i) {
      if (sgn(c.a[i]) != 0) st.entries.push_back({i, c.a[i]});
    }
    st.active.push_back({k, head, st.entries.size(), c.a0});
  }
  st.prefix.reserve(st.n);
  return st;
}

StepReport eliminate_step(SolverState& st) {
  if (st.step >= st.n) throw std::logic_error("eliminate_step: all variables already fixed");
  const std::size_t k = st.step;

  // Integral roots of the linear factors a_k x_k - a0 left in x_k alone. The
  // scan below stops within active_count + 1 candidates, so a root too large
  // for 64 bits can never be hit.
  std::unordered_set<std::int64_t> blocked;
  blocked.reserve(st.active.size());
  BigInt root;
  for (const auto& c : st.active) {
    if (c.support_size() != 1) continue;
    const auto& e = st.entries[c.head];
    if (e.index != k) continue;
    if (!mpz_divisible_p(c.constant.get_mpz_t(), e.coef.get_mpz_t())) continue;
    mpz_divexact(root.get_mpz_t(), c.constant.get_mpz_t(), e.coef.get_mpz_t());
    if (root.fits_slong_p()) blocked.insert(root.get_si());
  }

  StepReport rep;
  std::size_t pos = 0;
  while (blocked.contains(candidate_at(pos))) ++pos;
  rep.value = candidate_at(pos);
  rep.probes = pos + 1;
  st.candidate_checks += rep.probes;
  rep.blocked.assign(blocked.begin(), blocked.end());
  std::sort(rep.blocked.begin(), rep.blocked.end());

  const BigInt y(static_cast<long>(rep.value));
  std::size_t keep = 0;
  for (std::size_t j = 0; j < st.active.size(); ++j) {
    auto& c = st.active[j];
    if (c.head < c.tail && st.entries[c.head].index == k) {
      if (rep.value != 0) mpz_submul(c.constant.get_mpz_t(), st.entries[c.head].coef.get_mpz_t(), y.get_mpz_t());
      ++c.head;
      if (c.head == c.tail) {
        if (sgn(c.constant) == 0) {
          throw InternalInvariantViolation("constraint " + std::to_string(c.source) +
                                           " retired with zero residual at variable " + std::to_string(k));
        }
        ++rep.retired;
        continue;
      }
    }
    if (keep != j) st.active[keep] = std::move(c);
    ++keep;
  }
  st.active.resize(keep);

  st.prefix.push_back(y);
  ++st.step;
  return rep;
}

SolveReport solve_report(const AvoidanceInstance& inst) {
  SolverState st = init_state(inst);
  while (st.step < st.n) eliminate_step(st);
  SolveReport out;
  out.solution = SolutionVector(std::move(st.prefix));
  out.m = inst.m();
  out.probes = st.candidate_checks;
  return out;
}

SolutionVector solve(const AvoidanceInstance& inst) { return solve_report(inst).solution; }

}  // namespace hpa

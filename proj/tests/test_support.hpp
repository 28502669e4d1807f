#pragma once

// Test-only oracles. Nothing here calls into the code paths under test:
// arithmetic goes through boost::multiprecision, enumeration is plain loops.

#include "hpa/core.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace hpa::test {

using Wide = boost::multiprecision::cpp_int;

inline Wide wide(const BigInt& v) { return Wide(v.get_str()); }

/// Feasibility re-evaluated with cpp_int.
inline bool feasible_wide(const AvoidanceInstance& inst, const IntVector& x) {
  for (const auto& c : inst.constraints()) {
    Wide s = 0;
    for (std::size_t i = 0; i < x.size(); ++i) s += wide(c.a[i]) * wide(x[i]);
    if (s == wide(c.a0)) return false;
  }
  return true;
}

inline IntVector iv(std::initializer_list<long> values) {
  IntVector out;
  for (long v : values) out.emplace_back(v);
  return out;
}

inline AvoidanceInstance make_instance(std::size_t n, std::initializer_list<std::pair<std::initializer_list<long>, long>> rows) {
  std::vector<Constraint> cs;
  for (const auto& [a, a0] : rows) cs.push_back(Constraint{iv(a), BigInt(a0)});
  return AvoidanceInstance(n, std::move(cs));
}

/// Calls f on every point of the box [-s, s]^n.
inline void for_each_box(std::size_t n, long s, const std::function<void(const std::vector<long>&)>& f) {
  std::vector<long> x(n, -s);
  for (;;) {
    f(x);
    std::size_t i = 0;
    while (i < n && x[i] == s) x[i++] = -s;
    if (i == n) return;
    ++x[i];
  }
}

inline IntVector to_iv(const std::vector<long>& x) {
  IntVector out;
  for (long v : x) out.emplace_back(v);
  return out;
}

inline long l1(const std::vector<long>& x) {
  long s = 0;
  for (long v : x) s += v < 0 ? -v : v;
  return s;
}

/// Minimum l1 norm of a feasible point, by scanning the box [-s, s]^n.
inline long brute_min_l1(const AvoidanceInstance& inst, long s) {
  long best = -1;
  for_each_box(inst.n(), s, [&](const std::vector<long>& x) {
    const long v = l1(x);
    if ((best < 0 || v < best) && feasible_wide(inst, to_iv(x))) best = v;
  });
  return best;
}

/// |{x : |x|_1 <= r}| by enumeration.
inline std::uint64_t enumerate_ball(std::size_t n, long r) {
  std::uint64_t count = 0;
  for_each_box(n, r, [&](const std::vector<long>& x) { count += l1(x) <= r ? 1 : 0; });
  return count;
}

}  // namespace hpa::test

#include "hpa/oracle.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>

namespace hpa {

NormKind NormKind::lp(unsigned num, unsigned den) {
  if (den == 0 || num < den) throw std::invalid_argument("Lp norm needs p = num/den >= 1");
  return {Tag::Lp, num, den};
}

NormKind NormKind::parse(const std::string& text) {
  if (text == "l1") return l1();
  if (text == "linf") return linf();
  if (text.rfind("lp:", 0) == 0) {
    const std::string body = text.substr(3);
    const auto slash = body.find('/');
    try {
      std::size_t used = 0;
      const unsigned long num = std::stoul(body.substr(0, slash), &used);
      if (used != body.substr(0, slash).size()) throw std::invalid_argument("");
      unsigned long den = 1;
      if (slash != std::string::npos) {
        den = std::stoul(body.substr(slash + 1), &used);
        if (used != body.size() - slash - 1) throw std::invalid_argument("");
      }
      return lp(static_cast<unsigned>(num), static_cast<unsigned>(den));
    } catch (const std::logic_error&) {
      throw std::invalid_argument("bad norm '" + text + "': expected lp:<num>/<den> with p >= 1");
    }
  }
  throw std::invalid_argument("bad norm '" + text + "': expected l1, linf or lp:<num>/<den>");
}

BigInt lp_power_sum(std::span<const BigInt> x, unsigned p) {
  BigInt s = 0, t;
  for (const auto& v : x) {
    mpz_pow_ui(t.get_mpz_t(), v.get_mpz_t(), p);
    s += abs(t);
  }
  return s;
}

namespace {

class Budget {
 public:
  explicit Budget(std::uint64_t cap) : cap_(cap) {}
  void spend() {
    if (++used_ > cap_) throw BudgetExceeded("oracle work budget of " + std::to_string(cap_) + " evaluations exhausted");
  }

 private:
  std::uint64_t cap_;
  std::uint64_t used_ = 0;
};

using Visit = std::function<bool(const IntVector&)>;  // return true to stop

// Points of {x : |x|_1 = r} with x[0..from) fixed, lexicographic order.
bool l1_sphere(IntVector& x, std::size_t from, long rem, const Visit& visit) {
  const std::size_t n = x.size();
  if (from + 1 == n) {
    for (long v : {-rem, rem}) {
      x[from] = v;
      if (visit(x)) return true;
      if (rem == 0) break;
    }
    return false;
  }
  for (long v = -rem; v <= rem; ++v) {
    x[from] = v;
    if (l1_sphere(x, from + 1, rem - std::labs(v), visit)) return true;
  }
  return false;
}

// Points of {x : max |x_i| = s}, lexicographic; `hit` records whether an
// earlier coordinate already reached s.
bool linf_sphere(IntVector& x, std::size_t from, long s, bool hit, const Visit& visit) {
  const std::size_t n = x.size();
  if (from == n) return hit && visit(x);
  for (long v = -s; v <= s; ++v) {
    // The last coordinate must reach s if nothing did before.
    if (from + 1 == n && !hit && std::labs(v) != s) continue;
    x[from] = v;
    if (linf_sphere(x, from + 1, s, hit || std::labs(v) == s, visit)) return true;
  }
  return false;
}

// All points of the box [-s, s]^(n - from) for the tail of x.
bool box(IntVector& x, std::size_t from, long s, const Visit& visit) {
  if (from == x.size()) return visit(x);
  for (long v = -s; v <= s; ++v) {
    x[from] = v;
    if (box(x, from + 1, s, visit)) return true;
  }
  return false;
}

long l1_cap(const AvoidanceInstance& inst) { return static_cast<long>((inst.m() + inst.n()) / 2); }

}  // namespace

SolutionVector exact_solve(const AvoidanceInstance& inst, NormKind norm, std::uint64_t budget) {
  Budget work(budget);
  const long cap = l1_cap(inst);
  IntVector x(inst.n(), 0);
  std::optional<IntVector> best;
  auto first_feasible = [&](const IntVector& p) {
    work.spend();
    if (!check_feasible(inst, p)) return false;
    best = p;
    return true;
  };

  switch (norm.tag) {
    case NormKind::Tag::L1:
      for (long r = 0; r <= cap; ++r) {
        if (l1_sphere(x, 0, r, first_feasible)) return SolutionVector(*best);
      }
      break;
    case NormKind::Tag::Linf:
      for (long s = 0; s <= cap; ++s) {
        if (linf_sphere(x, 0, s, s == 0, first_feasible)) return SolutionVector(*best);
      }
      break;
    case NormKind::Tag::Lp: {
      // Walk l-infinity shells; a point in shell s has |x|_p^p >= s^p, so
      // stop once s^p exceeds the best value seen.
      const bool integral = norm.integral_p();
      const unsigned ip = integral ? norm.num / norm.den : 0;
      const long double p = static_cast<long double>(norm.num) / norm.den;
      std::optional<BigInt> best_exact;
      long double best_real = 0;
      auto keep_min = [&](const IntVector& pt) {
        work.spend();
        if (!check_feasible(inst, pt)) return false;
        if (integral) {
          BigInt v = lp_power_sum(pt, ip);
          if (!best_exact || v < *best_exact) {
            best_exact = v;
            best = pt;
          }
        } else {
          long double v = 0;
          for (const auto& c : pt) v += std::pow(std::fabs(static_cast<long double>(c.get_si())), p);
          // Relative tie tolerance: the earlier point wins on (near) ties.
          if (!best || v < best_real * (1 - 1e-15L)) {
            best_real = v;
            best = pt;
          }
        }
        return false;
      };
      for (long s = 0; s <= cap; ++s) {
        linf_sphere(x, 0, s, s == 0, keep_min);
        if (!best) continue;
        const long next = s + 1;
        if (integral) {
          BigInt bound;
          mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(next), ip);
          if (bound > *best_exact) return SolutionVector(*best);
        } else if (std::pow(static_cast<long double>(next), p) > best_real) {
          return SolutionVector(*best);
        }
      }
      if (best) return SolutionVector(*best);
      break;
    }
  }
  throw InternalInvariantViolation("exact_solve: no feasible point within l1 radius (m+n)/2");
}

SolutionVector exact_lex_solve(const AvoidanceInstance& inst, std::uint64_t budget) {
  Budget work(budget);
  const std::size_t n = inst.n();
  const long radius = static_cast<long>((inst.m() + 1) / 2);
  IntVector x(n, 0);
  auto feasible = [&](const IntVector& p) {
    work.spend();
    return check_feasible(inst, p);
  };
  for (std::size_t k = 0; k < n; ++k) {
    bool fixed = false;
    for (long t = 0; t <= radius && !fixed; ++t) {
      for (long cand : {t, -t}) {
        x[k] = cand;
        if (box(x, k + 1, radius, feasible)) {
          fixed = true;
          break;
        }
        if (t == 0) break;
      }
    }
    if (!fixed) throw InternalInvariantViolation("exact_lex_solve: no extendable value within the grid");
    for (std::size_t i = k + 1; i < n; ++i) x[i] = 0;
  }
  return SolutionVector(std::move(x));
}

BigInt count_l1_ball(std::size_t n, std::size_t r) {
  BigInt total = 0, cn, cr, term;
  const std::size_t top = std::min(n, r);
  for (std::size_t k = 0; k <= top; ++k) {
    mpz_bin_uiui(cn.get_mpz_t(), n, k);
    mpz_bin_uiui(cr.get_mpz_t(), r, k);
    term = cn * cr;
    mpz_mul_2exp(term.get_mpz_t(), term.get_mpz_t(), k);
    total += term;
  }
  return total;
}

}  // namespace hpa

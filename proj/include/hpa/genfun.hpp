#pragma once

// Short rational generating functions
//
//   f(z) = sum_i eps_i z^{v_i} / prod_j (1 - z^{u_ij})
//
// and exact lattice-point counting through them. The count is the value of
// f at z = 1, reached along z_k = exp(tau c_k) for a vector c orthogonal to
// no u_ij; each term is then a Laurent series in tau with a pole of order d
// and the count is the sum of the tau^0 coefficients.

#include "hpa/core.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace hpa {

using Rational = mpq_class;

struct ZeroDenominatorVector : Error {
  using Error::Error;
};
struct InvalidAvoidanceVector : Error {
  using Error::Error;
};
struct NonIntegerTotal : Error {
  using Error::Error;
};

struct GenFunTerm {
  BigInt epsilon = 1;
  IntVector v;
  std::vector<IntVector> us;
};

class GenFun {
 public:
  GenFun() = default;
  /// Throws DimensionMismatch on inconsistent lengths or denominator counts,
  /// ZeroDenominatorVector on a zero u.
  GenFun(std::size_t n, std::vector<GenFunTerm> terms);

  std::size_t n() const { return n_; }
  const std::vector<GenFunTerm>& terms() const { return terms_; }

 private:
  std::size_t n_ = 0;
  std::vector<GenFunTerm> terms_;
};

/// Power series c_0 + c_1 t + ... + c_N t^N with exact rational coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1) {}
  explicit TruncatedSeries(std::vector<Rational> coeffs);

  /// exp(p t) truncated at `order`.
  static TruncatedSeries exp(const BigInt& p, std::size_t order);
  /// sum_k B_k (q t)^k / k!, the expansion of (q t) / (exp(q t) - 1).
  static TruncatedSeries bernoulli_generating(const BigInt& q, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t k) const { return coeffs_[k]; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Product truncated at min(order(), other.order()).
  TruncatedSeries operator*(const TruncatedSeries& other) const;
  bool operator==(const TruncatedSeries& other) const = default;

 private:
  std::vector<Rational> coeffs_;
};

/// B_0..B_N with B_1 = -1/2, from sum_{j<=k} C(k+1, j) B_j = 0. Memoized;
/// safe to call concurrently.
std::vector<Rational> bernoulli_numbers(std::size_t N);

/// tau^0 coefficient of exp(p tau) * prod_j 1 / (1 - exp(q_j tau)).
Rational evaluate_term(const BigInt& p, std::span<const BigInt> qs);

/// One homogeneous constraint u.x != 0 per denominator vector, in term order,
/// duplicates kept.
AvoidanceInstance avoidance_set(const GenFun& f);

struct CountReport {
  BigInt count;
  IntVector c;
};

/// Number of lattice points encoded by f. With no c given, one is computed
/// by the solver from avoidance_set(f).
CountReport count_via_genfun_report(const GenFun& f, const std::optional<IntVector>& c = std::nullopt);
BigInt count_via_genfun(const GenFun& f, const std::optional<IntVector>& c = std::nullopt);

// Vertex-cone (Brion) forms with unimodular cones.
GenFun fixture_interval(std::uint64_t N);
GenFun fixture_cube(std::size_t n);
GenFun fixture_simplex(std::size_t n, std::uint64_t N);

/// Parses "interval:<N>", "cube:<n>" or "simplex:<n>:<N>".
GenFun fixture_from_spec(const std::string& spec);

GenFun load_genfun(std::istream& in);
GenFun load_genfun_string(const std::string& text);
std::string serialize_genfun(const GenFun& f);

/// {x : a_k . x <= b_k for all k}.
struct Polytope {
  std::size_t n = 0;
  std::vector<std::vector<std::int64_t>> a;
  std::vector<std::int64_t> b;
};

Polytope polytope_interval(std::int64_t N);
Polytope polytope_cube(std::size_t n);
Polytope polytope_simplex(std::size_t n, std::int64_t N);

/// Lattice points of p inside the box [lo, hi]^n, by enumeration. Throws
/// BudgetExceeded if the box holds more than `budget` points.
std::uint64_t brute_count(const Polytope& p, std::int64_t lo, std::int64_t hi,
                          std::uint64_t budget = 100'000'000);

}  // namespace hpa

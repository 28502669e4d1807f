#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hpa {

using BigInt = mpz_class;
using IntVector = std::vector<BigInt>;

// Error hierarchy. The CLI maps these onto exit codes.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParseError : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct InfeasibleConstant : Error {
  using Error::Error;
};
struct InternalInvariantViolation : Error {
  using Error::Error;
};
struct BudgetExceeded : Error {
  using Error::Error;
};
struct NotFeasible : Error {
  using Error::Error;
};

/// One hyperplane to avoid: the point x is admissible iff a.x != a0.
struct Constraint {
  IntVector a;
  BigInt a0;

  bool is_zero() const;
};

/// A finite system a_k.x != a0_k over Z^n.
///
/// Immutable after construction. Alongside the exact big-integer data the
/// instance keeps a dense int32 copy of the coefficient matrix when every
/// entry fits, which the feasibility kernels use with 128-bit accumulation.
class AvoidanceInstance {
 public:
  AvoidanceInstance() = default;

  /// Validates and builds. Throws DimensionMismatch if some vector has the
  /// wrong length, InfeasibleConstant for a = 0, a0 = 0. Constraints with
  /// a = 0, a0 != 0 are dropped; `dropped()` reports how many.
  AvoidanceInstance(std::size_t n, std::vector<Constraint> constraints);

  std::size_t n() const { return n_; }
  std::size_t m() const { return constraints_.size(); }
  const std::vector<Constraint>& constraints() const { return constraints_; }
  const Constraint& operator[](std::size_t k) const { return constraints_[k]; }
  bool homogeneous() const { return homogeneous_; }
  std::size_t dropped() const { return dropped_; }

  // Dense small-coefficient view. Empty when some coefficient needs more
  // than 32 bits or some constant more than 64.
  bool has_small_form() const { return small_; }
  std::span<const std::int32_t> small_row(std::size_t k) const {
    return {small_a_.data() + k * n_, n_};
  }
  std::int64_t small_constant(std::size_t k) const { return small_a0_[k]; }

 private:
  std::size_t n_ = 0;
  std::vector<Constraint> constraints_;
  bool homogeneous_ = true;
  std::size_t dropped_ = 0;
  bool small_ = false;
  std::vector<std::int32_t> small_a_;
  std::vector<std::int64_t> small_a0_;
};

/// An integer vector with its cached l1 norm.
struct SolutionVector {
  IntVector y;
  BigInt norm1;

  SolutionVector() = default;
  explicit SolutionVector(IntVector values);

  std::size_t size() const { return y.size(); }
};

BigInt l1_norm(std::span<const BigInt> x);
BigInt linf_norm(std::span<const BigInt> x);
BigInt dot(std::span<const BigInt> a, std::span<const BigInt> x);

/// True iff a.x != a0 for every constraint. Exact.
bool check_feasible(const AvoidanceInstance& inst, std::span<const BigInt> x);

/// Index of the first constraint hit by x, if any.
std::optional<std::size_t> first_violated(const AvoidanceInstance& inst,
                                          std::span<const BigInt> x);

/// The family x_i != j for i in [1..n], j in [-k..k]: every feasible point has
/// l1 norm at least (k+1)n, which equals (m+n)/2.
AvoidanceInstance tight_family(std::size_t n, std::size_t k);

/// Simple undirected graph, 0-indexed, edges stored with u < v and sorted.
class Graph {
 public:
  Graph() = default;
  /// Drops duplicate edges; throws ParseError on loops or out-of-range ends.
  Graph(std::size_t num_vertices, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }

  static Graph complete(std::size_t n);
  static Graph path(std::size_t n);
  static Graph cycle(std::size_t n);

 private:
  std::size_t num_vertices_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

// Serialization.
AvoidanceInstance load_instance(std::istream& in);
AvoidanceInstance load_instance_string(const std::string& text);
std::string serialize_instance(const AvoidanceInstance& inst);

Graph load_graph(std::istream& in);
std::string serialize_graph(const Graph& g);

/// Parses a JSON integer array, accepting numbers and decimal strings.
IntVector parse_int_vector(const std::string& json_text);
std::string to_json_array(std::span<const BigInt> x);

IntVector to_big(std::span<const long long> values);

}  // namespace hpa

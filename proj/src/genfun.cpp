#include "hpa/genfun.hpp"

#include "hpa/json_int.hpp"
#include "hpa/solver.hpp"

#include <cmath>
#include <istream>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace hpa {

GenFun::GenFun(std::size_t n, std::vector<GenFunTerm> terms) : n_(n), terms_(std::move(terms)) {
  if (n == 0) throw DimensionMismatch("generating function dimension must be positive");
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    if (t.v.size() != n) throw DimensionMismatch("term " + std::to_string(i) + ": numerator length differs from n");
    if (t.us.size() != terms_.front().us.size()) {
      throw DimensionMismatch("term " + std::to_string(i) + ": denominator count differs from term 0");
    }
    for (const auto& u : t.us) {
      if (u.size() != n) throw DimensionMismatch("term " + std::to_string(i) + ": denominator length differs from n");
      bool zero = true;
      for (const auto& e : u) zero = zero && sgn(e) == 0;
      if (zero) throw ZeroDenominatorVector("term " + std::to_string(i) + ": zero denominator vector");
    }
  }
}

// ---------------------------------------------------------------------------
// Series

TruncatedSeries::TruncatedSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) coeffs_.resize(1);
  for (auto& c : coeffs_) c.canonicalize();
}

TruncatedSeries TruncatedSeries::exp(const BigInt& p, std::size_t order) {
  TruncatedSeries s(order);
  Rational term = 1;
  for (std::size_t k = 0; k <= order; ++k) {
    s.coeffs_[k] = term;
    term *= Rational(p, k + 1);
    term.canonicalize();
  }
  return s;
}

TruncatedSeries TruncatedSeries::bernoulli_generating(const BigInt& q, std::size_t order) {
  const auto B = bernoulli_numbers(order);
  TruncatedSeries s(order);
  Rational scale = 1;  // q^k / k!
  for (std::size_t k = 0; k <= order; ++k) {
    s.coeffs_[k] = B[k] * scale;
    scale *= Rational(q, k + 1);
    scale.canonicalize();
  }
  return s;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& other) const {
  const std::size_t order = std::min(this->order(), other.order());
  TruncatedSeries out(order);
  for (std::size_t i = 0; i <= order; ++i) {
    if (sgn(coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= order; ++j) out.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return out;
}

std::vector<Rational> bernoulli_numbers(std::size_t N) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};
  std::lock_guard lock(mu);
  BigInt binom;
  for (std::size_t k = cache.size(); k <= N; ++k) {
    Rational s = 0;
    for (std::size_t j = 0; j < k; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), k + 1, j);
      s += Rational(binom) * cache[j];
    }
    Rational bk = -s / Rational(static_cast<unsigned long>(k + 1));
    bk.canonicalize();
    cache.push_back(bk);
  }
  return {cache.begin(), cache.begin() + static_cast<std::ptrdiff_t>(N + 1)};
}

Rational evaluate_term(const BigInt& p, std::span<const BigInt> qs) {
  // 1 / (1 - e^s) = -(1/s) sum_k B_k s^k / k!, so the product has the form
  // (-1)^d / (prod q_j tau^d) * E(tau) prod T_j(tau) and its tau^0
  // coefficient is (-1)^d / prod q_j times the tau^d coefficient.
  const std::size_t d = qs.size();
  BigInt qprod = 1;
  for (const auto& q : qs) {
    if (sgn(q) == 0) throw ZeroDenominatorVector("evaluate_term: zero exponent in denominator");
    qprod *= q;
  }
  TruncatedSeries acc = TruncatedSeries::exp(p, d);
  for (const auto& q : qs) acc = acc * TruncatedSeries::bernoulli_generating(q, d);
  Rational out = acc[d] / Rational(qprod);
  out.canonicalize();
  if (d % 2 == 1) out = -out;
  return out;
}

// ---------------------------------------------------------------------------
// Counting

AvoidanceInstance avoidance_set(const GenFun& f) {
  std::vector<Constraint> cs;
  for (const auto& t : f.terms()) {
    for (const auto& u : t.us) cs.push_back(Constraint{u, 0});
  }
  return AvoidanceInstance(f.n(), std::move(cs));
}

CountReport count_via_genfun_report(const GenFun& f, const std::optional<IntVector>& c) {
  CountReport rep;
  if (c) {
    if (c->size() != f.n()) throw DimensionMismatch("avoidance vector length differs from n");
    rep.c = *c;
    for (std::size_t i = 0; i < f.terms().size(); ++i) {
      for (const auto& u : f.terms()[i].us) {
        if (sgn(dot(u, rep.c)) == 0) {
          throw InvalidAvoidanceVector("c is orthogonal to a denominator vector of term " + std::to_string(i));
        }
      }
    }
  } else {
    rep.c = solve(avoidance_set(f)).y;
  }

  Rational total = 0;
  std::vector<BigInt> qs;
  for (const auto& t : f.terms()) {
    qs.clear();
    for (const auto& u : t.us) qs.push_back(dot(u, rep.c));
    total += Rational(t.epsilon) * evaluate_term(dot(t.v, rep.c), qs);
  }
  total.canonicalize();
  if (total.get_den() != 1) {
    throw NonIntegerTotal("generating function sums to " + total.get_str() + ", not an integer");
  }
  if (sgn(total) < 0) throw NonIntegerTotal("generating function sums to a negative count " + total.get_str());
  rep.count = total.get_num();
  return rep;
}

BigInt count_via_genfun(const GenFun& f, const std::optional<IntVector>& c) {
  return count_via_genfun_report(f, c).count;
}

// ---------------------------------------------------------------------------
// Fixtures

namespace {

IntVector unit(std::size_t n, std::size_t i, long value = 1) {
  IntVector e(n, 0);
  e[i] = value;
  return e;
}

std::uint64_t parse_u64(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::logic_error&) {
    used = 0;
  }
  if (used == 0 || used != s.size() || s[0] == '-') throw ParseError(what + ": expected a nonnegative integer, got '" + s + "'");
  return v;
}

}  // namespace

GenFun fixture_interval(std::uint64_t N) {
  std::vector<GenFunTerm> terms;
  terms.push_back({1, IntVector{0}, {IntVector{1}}});
  terms.push_back({1, IntVector{BigInt(std::to_string(N))}, {IntVector{-1}}});
  return GenFun(1, std::move(terms));
}

GenFun fixture_cube(std::size_t n) {
  if (n == 0 || n > 20) throw std::invalid_argument("fixture_cube: need 1 <= n <= 20");
  std::vector<GenFunTerm> terms;
  for (std::uint64_t w = 0; w < (1ULL << n); ++w) {
    GenFunTerm t{1, IntVector(n, 0), {}};
    for (std::size_t j = 0; j < n; ++j) {
      const bool up = (w >> j) & 1;
      t.v[j] = up ? 1 : 0;
      t.us.push_back(unit(n, j, up ? -1 : 1));
    }
    terms.push_back(std::move(t));
  }
  return GenFun(n, std::move(terms));
}

GenFun fixture_simplex(std::size_t n, std::uint64_t N) {
  if (n == 0) throw std::invalid_argument("fixture_simplex: need n >= 1");
  const BigInt big_n(std::to_string(N));
  std::vector<GenFunTerm> terms;
  GenFunTerm origin{1, IntVector(n, 0), {}};
  for (std::size_t j = 0; j < n; ++j) origin.us.push_back(unit(n, j));
  terms.push_back(std::move(origin));
  for (std::size_t i = 0; i < n; ++i) {
    GenFunTerm t{1, IntVector(n, 0), {unit(n, i, -1)}};
    t.v[i] = big_n;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      IntVector u(n, 0);
      u[j] = 1;
      u[i] = -1;
      t.us.push_back(std::move(u));
    }
    terms.push_back(std::move(t));
  }
  return GenFun(n, std::move(terms));
}

GenFun fixture_from_spec(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() == 2 && parts[0] == "interval") return fixture_interval(parse_u64(parts[1], "interval"));
  if (parts.size() == 2 && parts[0] == "cube") {
    const auto n = parse_u64(parts[1], "cube");
    if (n == 0 || n > 20) throw ParseError("cube: dimension must be in [1, 20]");
    return fixture_cube(static_cast<std::size_t>(n));
  }
  if (parts.size() == 3 && parts[0] == "simplex") {
    const auto n = parse_u64(parts[1], "simplex");
    if (n == 0) throw ParseError("simplex: dimension must be positive");
    return fixture_simplex(static_cast<std::size_t>(n), parse_u64(parts[2], "simplex"));
  }
  throw ParseError("unknown fixture '" + spec + "': expected interval:<N>, cube:<n> or simplex:<n>:<N>");
}

// ---------------------------------------------------------------------------
// JSON

GenFun load_genfun(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  return load_genfun_string(buf.str());
}

GenFun load_genfun_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("genfun: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("terms") || !doc["terms"].is_array()) {
    throw ParseError("genfun: expected object with \"n\" and \"terms\"");
  }
  const BigInt n = json_to_bigint(doc["n"], "n");
  if (sgn(n) <= 0 || !n.fits_ulong_p()) throw ParseError("genfun: n must be positive");
  std::vector<GenFunTerm> terms;
  for (const auto& t : doc["terms"]) {
    if (!t.is_object() || !t.contains("v") || !t.contains("us") || !t["us"].is_array()) {
      throw ParseError("genfun: each term needs \"v\" and \"us\"");
    }
    GenFunTerm term;
    term.epsilon = t.contains("eps") ? json_to_bigint(t["eps"], "eps") : BigInt(1);
    term.v = json_to_intvector(t["v"], "v");
    for (const auto& u : t["us"]) term.us.push_back(json_to_intvector(u, "us"));
    terms.push_back(std::move(term));
  }
  return GenFun(static_cast<std::size_t>(n.get_ui()), std::move(terms));
}

std::string serialize_genfun(const GenFun& f) {
  json doc;
  doc["n"] = f.n();
  json terms = json::array();
  for (const auto& t : f.terms()) {
    json us = json::array();
    for (const auto& u : t.us) us.push_back(intvector_to_json(u));
    terms.push_back({{"eps", bigint_to_json(t.epsilon)}, {"v", intvector_to_json(t.v)}, {"us", std::move(us)}});
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

// ---------------------------------------------------------------------------
// Enumeration oracle

Polytope polytope_interval(std::int64_t N) { return {1, {{-1}, {1}}, {0, N}}; }

Polytope polytope_cube(std::size_t n) {
  Polytope p{n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> lo(n, 0), hi(n, 0);
    lo[i] = -1;
    hi[i] = 1;
    p.a.push_back(lo);
    p.b.push_back(0);
    p.a.push_back(hi);
    p.b.push_back(1);
  }
  return p;
}

Polytope polytope_simplex(std::size_t n, std::int64_t N) {
  Polytope p{n, {}, {}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::int64_t> row(n, 0);
    row[i] = -1;
    p.a.push_back(row);
    p.b.push_back(0);
  }
  p.a.emplace_back(n, 1);
  p.b.push_back(N);
  return p;
}

std::uint64_t brute_count(const Polytope& p, std::int64_t lo, std::int64_t hi, std::uint64_t budget) {
  if (hi < lo) return 0;
  const auto side = static_cast<long double>(hi - lo + 1);
  if (std::pow(side, static_cast<long double>(p.n)) > static_cast<long double>(budget)) {
    throw BudgetExceeded("brute_count: box has more than " + std::to_string(budget) + " points");
  }
  std::vector<std::int64_t> x(p.n, lo);
  std::uint64_t count = 0;
  for (;;) {
    bool inside = true;
    for (std::size_t k = 0; k < p.a.size() && inside; ++k) {
      std::int64_t s = 0;
      for (std::size_t i = 0; i < p.n; ++i) s += p.a[k][i] * x[i];
      inside = s <= p.b[k];
    }
    if (inside) ++count;
    std::size_t i = 0;
    while (i < p.n && x[i] == hi) x[i++] = lo;
    if (i == p.n) break;
    ++x[i];
  }
  return count;
}

}  // namespace hpa

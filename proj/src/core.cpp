#include "hpa/core.hpp"

#include "hpa/json_int.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <sstream>

namespace hpa {

bool Constraint::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const BigInt& v) { return sgn(v) == 0; });
}

AvoidanceInstance::AvoidanceInstance(std::size_t n, std::vector<Constraint> constraints)
    : n_(n) {
  if (n == 0) throw DimensionMismatch("instance dimension must be positive");
  constraints_.reserve(constraints.size());
  for (std::size_t k = 0; k < constraints.size(); ++k) {
    auto& c = constraints[k];
    if (c.a.size() != n) {
      throw DimensionMismatch("constraint " + std::to_string(k) + " has length " +
                              std::to_string(c.a.size()) + ", expected " + std::to_string(n));
    }
    if (c.is_zero()) {
      if (sgn(c.a0) == 0) {
        throw InfeasibleConstant("constraint " + std::to_string(k) + " reads 0 != 0");
      }
      ++dropped_;
      continue;
    }
    if (sgn(c.a0) != 0) homogeneous_ = false;
    constraints_.push_back(std::move(c));
  }

  small_ = true;
  for (const auto& c : constraints_) {
    if (!c.a0.fits_slong_p()) small_ = false;
    for (const auto& v : c.a) {
      if (!small_) break;
      if (cmp(v, std::numeric_limits<std::int32_t>::max()) > 0 ||
          cmp(v, std::numeric_limits<std::int32_t>::min()) < 0) {
        small_ = false;
      }
    }
    if (!small_) break;
  }
  if (small_) {
    small_a_.resize(constraints_.size() * n_);
    small_a0_.resize(constraints_.size());
    for (std::size_t k = 0; k < constraints_.size(); ++k) {
      for (std::size_t i = 0; i < n_; ++i) {
        small_a_[k * n_ + i] = static_cast<std::int32_t>(constraints_[k].a[i].get_si());
      }
      small_a0_[k] = constraints_[k].a0.get_si();
    }
  }
}

SolutionVector::SolutionVector(IntVector values) : y(std::move(values)), norm1(l1_norm(y)) {}

BigInt l1_norm(std::span<const BigInt> x) {
  BigInt s = 0;
  for (const auto& v : x) s += abs(v);
  return s;
}

BigInt linf_norm(std::span<const BigInt> x) {
  BigInt s = 0;
  for (const auto& v : x) {
    if (cmp(abs(v), s) > 0) s = abs(v);
  }
  return s;
}

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> x) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) != 0 && sgn(x[i]) != 0) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), x[i].get_mpz_t());
  }
  return s;
}

namespace {

bool fits_int32(const BigInt& v) {
  return cmp(v, std::numeric_limits<std::int32_t>::max()) <= 0 &&
         cmp(v, std::numeric_limits<std::int32_t>::min()) >= 0;
}

}  // namespace

std::optional<std::size_t> first_violated(const AvoidanceInstance& inst,
                                          std::span<const BigInt> x) {
  if (x.size() != inst.n()) {
    throw DimensionMismatch("point has length " + std::to_string(x.size()) + ", instance has n = " +
                            std::to_string(inst.n()));
  }
  const std::size_t n = inst.n();
  bool small_x = inst.has_small_form() && std::all_of(x.begin(), x.end(), fits_int32);
  if (small_x) {
    std::vector<std::int32_t> xs(n);
    for (std::size_t i = 0; i < n; ++i) xs[i] = static_cast<std::int32_t>(x[i].get_si());
    for (std::size_t k = 0; k < inst.m(); ++k) {
      auto row = inst.small_row(k);
      __int128 s = 0;
      for (std::size_t i = 0; i < n; ++i) s += static_cast<std::int64_t>(row[i]) * xs[i];
      if (s == inst.small_constant(k)) return k;
    }
    return std::nullopt;
  }
  for (std::size_t k = 0; k < inst.m(); ++k) {
    if (dot(inst[k].a, x) == inst[k].a0) return k;
  }
  return std::nullopt;
}

bool check_feasible(const AvoidanceInstance& inst, std::span<const BigInt> x) {
  return !first_violated(inst, x).has_value();
}

AvoidanceInstance tight_family(std::size_t n, std::size_t k) {
  if (n == 0 || k == 0) throw std::invalid_argument("tight_family needs n >= 1 and k >= 1");
  std::vector<Constraint> cs;
  cs.reserve((2 * k + 1) * n);
  const long kk = static_cast<long>(k);
  for (std::size_t i = 0; i < n; ++i) {
    for (long j = -kk; j <= kk; ++j) {
      Constraint c{IntVector(n, 0), j};
      c.a[i] = 1;
      cs.push_back(std::move(c));
    }
  }
  return AvoidanceInstance(n, std::move(cs));
}

// ---------------------------------------------------------------------------
// Graph

Graph::Graph(std::size_t num_vertices, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : num_vertices_(num_vertices) {
  for (auto& [u, v] : edges) {
    if (u >= num_vertices || v >= num_vertices) {
      throw ParseError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                       ") out of range for " + std::to_string(num_vertices) + " vertices");
    }
    if (u == v) throw ParseError("loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

Graph Graph::complete(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph Graph::path(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t u = 0; u < n; ++u) e.emplace_back(u, (u + 1) % n);
  return Graph(n, std::move(e));
}

// ---------------------------------------------------------------------------
// Serialization

AvoidanceInstance load_instance(std::istream& in) {
  std::stringstream buf;
  buf << in.rdbuf();
  return load_instance_string(buf.str());
}

AvoidanceInstance load_instance_string(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("instance: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("constraints")) {
    throw ParseError("instance: expected object with \"n\" and \"constraints\"");
  }
  const BigInt n_big = json_to_bigint(doc["n"], "n");
  if (sgn(n_big) <= 0 || !n_big.fits_ulong_p()) throw ParseError("instance: n must be positive");
  const auto n = static_cast<std::size_t>(n_big.get_ui());
  const auto& arr = doc["constraints"];
  if (!arr.is_array()) throw ParseError("instance: \"constraints\" must be an array");
  std::vector<Constraint> cs;
  cs.reserve(arr.size());
  for (const auto& c : arr) {
    if (!c.is_object() || !c.contains("a") || !c.contains("a0")) {
      throw ParseError("instance: each constraint needs \"a\" and \"a0\"");
    }
    cs.push_back(Constraint{json_to_intvector(c["a"], "a"), json_to_bigint(c["a0"], "a0")});
  }
  return AvoidanceInstance(n, std::move(cs));
}

std::string serialize_instance(const AvoidanceInstance& inst) {
  json doc;
  doc["n"] = inst.n();
  json arr = json::array();
  for (const auto& c : inst.constraints()) {
    arr.push_back({{"a", intvector_to_json(c.a)}, {"a0", bigint_to_json(c.a0)}});
  }
  doc["constraints"] = std::move(arr);
  return doc.dump();
}

Graph load_graph(std::istream& in) {
  std::string line;
  std::optional<std::pair<std::size_t, std::size_t>> header;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c" || tag[0] == '#') continue;
    long long a = 0, b = 0;
    if (!(ls >> a >> b) || a < 0 || b < 0) {
      throw ParseError("graph line " + std::to_string(lineno) + ": expected two nonnegative integers");
    }
    std::string rest;
    if (ls >> rest) throw ParseError("graph line " + std::to_string(lineno) + ": trailing tokens");
    if (tag == "p") {
      if (header) throw ParseError("graph: duplicate header");
      header.emplace(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    } else if (tag == "e") {
      if (!header) throw ParseError("graph: edge before header");
      edges.emplace_back(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
    } else {
      throw ParseError("graph line " + std::to_string(lineno) + ": unknown tag '" + tag + "'");
    }
  }
  if (!header) throw ParseError("graph: missing \"p <vertices> <edges>\" header");
  if (header->first == 0) throw ParseError("graph: need at least one vertex");
  if (edges.size() != header->second) {
    throw ParseError("graph: header declares " + std::to_string(header->second) + " edges, found " +
                     std::to_string(edges.size()));
  }
  return Graph(header->first, std::move(edges));
}

std::string serialize_graph(const Graph& g) {
  std::ostringstream os;
  os << "p " << g.num_vertices() << ' ' << g.edges().size() << '\n';
  for (const auto& [u, v] : g.edges()) os << "e " << u << ' ' << v << '\n';
  return os.str();
}

IntVector parse_int_vector(const std::string& json_text) {
  try {
    return json_to_intvector(json::parse(json_text), "vector");
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("vector: ") + e.what());
  }
}

std::string to_json_array(std::span<const BigInt> x) { return intvector_to_json(x).dump(); }

IntVector to_big(std::span<const long long> values) {
  IntVector out;
  out.reserve(values.size());
  for (long long v : values) out.emplace_back(static_cast<long>(v));
  return out;
}

}  // namespace hpa

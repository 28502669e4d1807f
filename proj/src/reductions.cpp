#include "hpa/reductions.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace hpa {

namespace {

Constraint edge_form(std::size_t n, std::size_t u, std::size_t v, long sign_v) {
  Constraint c{IntVector(n, 0), 0};
  c.a[u] = 1;
  c.a[v] = sign_v;
  return c;
}

void require_feasible(const AvoidanceInstance& inst, std::span<const BigInt> x, const char* what) {
  if (auto k = first_violated(inst, x)) {
    throw NotFeasible(std::string(what) + ": vector hits constraint " + std::to_string(*k));
  }
}

}  // namespace

AvoidanceInstance encode_coloring(const Graph& g) {
  std::vector<Constraint> cs;
  cs.reserve(2 * g.edges().size());
  for (const auto& [u, v] : g.edges()) {
    cs.push_back(edge_form(g.num_vertices(), u, v, -1));
    cs.push_back(edge_form(g.num_vertices(), u, v, 1));
  }
  return AvoidanceInstance(g.num_vertices(), std::move(cs));
}

Coloring decode_coloring(const Graph& g, std::span<const BigInt> x) {
  require_feasible(encode_coloring(g), x, "decode_coloring");
  Coloring out;
  out.color.reserve(x.size());
  for (const auto& v : x) {
    const BigInt a = abs(v);
    if (!a.fits_ulong_p()) throw std::overflow_error("decode_coloring: color index exceeds 64 bits");
    out.color.push_back(static_cast<std::size_t>(a.get_ui()));
  }
  out.num_colors = *std::max_element(out.color.begin(), out.color.end()) + 1;
  return out;
}

AvoidanceInstance encode_vertex_cover(const Graph& g) {
  std::vector<Constraint> cs;
  cs.reserve(g.edges().size());
  for (const auto& [u, v] : g.edges()) cs.push_back(edge_form(g.num_vertices(), u, v, 1));
  return AvoidanceInstance(g.num_vertices(), std::move(cs));
}

std::vector<std::size_t> decode_vertex_cover(const Graph& g, std::span<const BigInt> x) {
  require_feasible(encode_vertex_cover(g), x, "decode_vertex_cover");
  std::vector<std::size_t> cover;
  for (std::size_t v = 0; v < x.size(); ++v) {
    if (sgn(x[v]) != 0) cover.push_back(v);
  }
  return cover;
}

IntVector round_to_support(std::span<const BigInt> x) {
  IntVector y;
  y.reserve(x.size());
  for (const auto& v : x) y.emplace_back(sgn(v) != 0 ? 1 : 0);
  return y;
}

bool is_proper_coloring(const Graph& g, std::span<const std::size_t> color) {
  if (color.size() != g.num_vertices()) return false;
  return std::none_of(g.edges().begin(), g.edges().end(),
                      [&](const auto& e) { return color[e.first] == color[e.second]; });
}

bool is_vertex_cover(const Graph& g, std::span<const std::size_t> cover) {
  std::vector<char> in(g.num_vertices(), 0);
  for (auto v : cover) {
    if (v >= in.size()) return false;
    in[v] = 1;
  }
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const auto& e) { return in[e.first] || in[e.second]; });
}

std::size_t chromatic_number_brute(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::size_t> color(n);
  // Try every assignment with colors < k, smallest k first.
  for (std::size_t k = 1; k <= n; ++k) {
    auto place = [&](auto&& self, std::size_t v) -> bool {
      if (v == n) return true;
      for (std::size_t c = 0; c < k; ++c) {
        bool clash = false;
        for (auto w : adj[v]) {
          if (w < v && color[w] == c) clash = true;
        }
        if (clash) continue;
        color[v] = c;
        if (self(self, v + 1)) return true;
      }
      return false;
    };
    if (place(place, 0)) return k;
  }
  return n;
}

std::size_t min_vertex_cover_brute(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n > 30) throw std::invalid_argument("min_vertex_cover_brute: at most 30 vertices");
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size >= best) continue;
    bool covers = std::all_of(g.edges().begin(), g.edges().end(), [&](const auto& e) {
      return ((mask >> e.first) & 1) || ((mask >> e.second) & 1);
    });
    if (covers) best = size;
  }
  return best;
}

}  // namespace hpa

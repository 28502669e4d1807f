#pragma once

// Graph coloring and vertex cover written as hyperplane-avoiding systems.

#include "hpa/core.hpp"

#include <cstdint>
#include <vector>

namespace hpa {

/// x_u - x_v != 0 and x_u + x_v != 0 for every edge, i.e. |x_u| != |x_v|.
AvoidanceInstance encode_coloring(const Graph& g);

struct Coloring {
  std::size_t num_colors = 0;
  std::vector<std::size_t> color;  // color[v] = |x_v|
};

/// Colors vertex v with |x_v|; uses max |x_v| + 1 colors. Throws NotFeasible
/// if x violates the coloring system.
Coloring decode_coloring(const Graph& g, std::span<const BigInt> x);

/// x_u + x_v != 0 for every edge.
AvoidanceInstance encode_vertex_cover(const Graph& g);

/// Support of x; a vertex cover whenever x is feasible. Throws NotFeasible
/// otherwise.
std::vector<std::size_t> decode_vertex_cover(const Graph& g, std::span<const BigInt> x);

/// 0/1 vector with the support of x.
IntVector round_to_support(std::span<const BigInt> x);

// Exhaustive graph oracles, exponential.
bool is_proper_coloring(const Graph& g, std::span<const std::size_t> color);
bool is_vertex_cover(const Graph& g, std::span<const std::size_t> cover);
std::size_t chromatic_number_brute(const Graph& g);
std::size_t min_vertex_cover_brute(const Graph& g);

}  // namespace hpa

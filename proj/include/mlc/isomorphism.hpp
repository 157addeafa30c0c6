#pragma once

#include "mlc/graph.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mlc {

constexpr std::size_t kIsomorphismVertexBound = 10000;

// Vertex bijection mapping[v of first] = vertex of second, preserving
// adjacency (and arc direction for Hasse graphs). Colour refinement on the
// disjoint union, then individualisation with backtracking. Throws
// std::length_error above kIsomorphismVertexBound vertices.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);
std::optional<std::vector<int>> find_isomorphism(const HasseGraph& a, const HasseGraph& b);

bool is_isomorphic(const Graph& a, const Graph& b);
bool is_isomorphic(const HasseGraph& a, const HasseGraph& b);

enum class Orientation { same, reversed };

// Directed isomorphism allowing one global reversal of every arc of b.
// Reports which orientation matched, preferring the original one.
std::optional<Orientation> isomorphic_up_to_reversal(const HasseGraph& a, const HasseGraph& b);

}  // namespace mlc

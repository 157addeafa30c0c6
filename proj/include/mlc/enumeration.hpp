#pragma once

#include "mlc/bigint.hpp"
#include "mlc/graph.hpp"
#include "mlc/set_packing.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mlc {

constexpr std::size_t kEnumerationVertexBound = 5000;

// An induced hypercube. coords[b] is the vertex at corner b, so corners
// differing in one bit are adjacent; vertices() is the sorted vertex set and
// base() its least vertex.
struct CubeSet {
  int dimension = 0;
  std::vector<int> coords;
  int base() const;
  std::vector<int> vertices() const;
};

// All induced k-cubes, built by recursive doubling, one per vertex set, in
// order of sorted vertex set. Throws std::length_error above
// kEnumerationVertexBound vertices.
std::vector<CubeSet> induced_cubes(const Graph& g, int k);
// Generic count through induced_cubes.
BigInt count_induced_cubes(const Graph& g, int k);
// Lattice count: sum over vertices of C(upper covers, k).
BigInt count_induced_cubes(const HasseGraph& h, int k);
// q_k for k = 0, 1, ... up to the largest k with q_k > 0.
std::vector<BigInt> cube_spectrum(const Graph& g);
std::vector<BigInt> cube_spectrum(const HasseGraph& h);
int max_cube_dimension(const Graph& g);
int max_cube_dimension(const HasseGraph& h);

// h_k: induced k-cubes not contained in an induced (k+1)-cube.
std::vector<BigInt> maximal_cube_spectrum(const Graph& g);

// Maximum matching size (Edmonds).
long max_matching(const Graph& g);
// Exact maximum independent set: Koenig's theorem for bipartite graphs,
// branch and bound otherwise.
long max_independent_set(const Graph& g, const SearchLimits& limits = {});
bool is_bipartite(const Graph& g);

// Maximum number of vertex-disjoint induced k-cubes. k = 0 gives |V| and
// k = 1 a maximum matching; larger k go through exact set packing.
long max_disjoint_cubes(const Graph& g, int k, const SearchLimits& limits = {});
// The same with the full packing record (k >= 1).
PackingResult disjoint_cube_packing(const Graph& g, int k, const SearchLimits& limits = {});

std::vector<BigInt> degree_spectrum(const Graph& g);
std::vector<BigInt> indegree_spectrum(const HasseGraph& h);
// Vertices per rank; throws std::invalid_argument on an ungraded digraph.
std::vector<BigInt> rank_counts(const HasseGraph& h);

struct GraphMetrics {
  long diameter = 0;  // in edges
  long radius = 0;    // in edges
  bool connected = true;
  bool eulerian = false;
  std::optional<bool> hamiltonian_path;  // empty when not searched
};

constexpr std::size_t kHamiltonianVertexBound = 400;

// Distances are in edges. The Hamiltonian path search runs on request for
// graphs up to kHamiltonianVertexBound vertices and throws LimitExceeded past
// the limits.
GraphMetrics graph_metrics(const Graph& g, bool search_hamiltonian = true, const SearchLimits& limits = {});
// A Hamiltonian path as a vertex sequence, if one exists.
std::optional<std::vector<int>> hamiltonian_path(const Graph& g, const SearchLimits& limits = {});

// Trailing zeros removed; an empty spectrum stays empty.
std::vector<BigInt> trimmed(std::vector<BigInt> counts);

}  // namespace mlc

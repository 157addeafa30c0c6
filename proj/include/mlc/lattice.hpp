#pragma once

#include "mlc/graph.hpp"
#include "mlc/poset.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace mlc {

constexpr std::size_t kDefaultLatticeBound = 1000000;

// Hasse graph of the filters of p under anti-inclusion. Vertex 0 is the
// whole ground set (bottom); the empty filter is the top. An arc F -> G
// means G = F minus one minimal element of F. Vertices are ordered by rank,
// then by mask; each carries its filter mask and a "{x1,x4}" label. Throws
// std::length_error when the filter count exceeds bound.
HasseGraph filter_lattice(const Poset& p, std::size_t bound = kDefaultLatticeBound);
// Index of a filter in filter_lattice(p), or -1.
int filter_vertex(const HasseGraph& lattice, ElementMask filter);

// Omega_0 is a single vertex; Omega_n is the filter lattice of the L-fence.
HasseGraph omega(std::size_t n);
// Filter lattice of the fence Z_n.
HasseGraph gamma_lattice(std::size_t n);
// Fibonacci cube on the length-n binary strings without "11".
Graph gamma_strings(std::size_t n);
// Lucas cube on the length-n binary strings without a circular "11".
// Throws std::invalid_argument for n = 0.
Graph lambda(std::size_t n);

// Every vertex lies below top(K) or above bottom(K). Throws
// std::invalid_argument if K is not an interval.
bool is_cutting(const HasseGraph& l, const Interval& k);
// Day doubling L[K]: K is replaced by K x 2. Vertices outside K keep their
// labels; doubled ones are labelled "(label,0)" and "(label,1)". Throws
// std::invalid_argument if K is not an interval or not a cutting.
HasseGraph day_double(const HasseGraph& l, const Interval& k);

// The cutting of filter_lattice(p - x) along which doubling rebuilds
// filter_lattice(p): filters G of p - x with up(x)\{x} inside G and G
// disjoint from down(x). The lattice must be filter_lattice(p - x).
Interval cutting_for_element(const Poset& p, std::size_t x, const HasseGraph& lattice_without_x);

// Join-irreducible vertices (exactly one lower cover) with the induced
// order. For a distributive lattice L, filter_lattice(birkhoff_poset(L)) is
// isomorphic to L as a digraph.
Poset birkhoff_poset(const HasseGraph& l);

bool is_lattice(const HasseGraph& l);
bool is_distributive(const HasseGraph& l);

struct CuttingDecomposition {
  Poset poset;           // birkhoff_poset(L)
  std::size_t element;   // x
  HasseGraph base;       // filter_lattice(P - x)
  Interval cutting;      // inside base, isomorphic to filter_lattice(P * x)
  HasseGraph cut;        // the cutting as its own Hasse graph
};

// Searches the elements of the Birkhoff poset in id order for one whose
// doubling reproduces l up to isomorphism. None if l is not distributive
// or has more than bound vertices.
std::optional<CuttingDecomposition> find_cutting_decomposition(const HasseGraph& l, std::size_t bound = 5000);
// Every successful decomposition, one per element.
std::vector<CuttingDecomposition> all_cutting_decompositions(const HasseGraph& l, std::size_t bound = 5000);

// Filter lattice of the dual fence, Gamma*_n.
HasseGraph gamma_dual_lattice(std::size_t n);

// Image of an interval under a vertex mapping into another Hasse graph.
Interval map_interval(const Interval& k, const std::vector<int>& mapping, const HasseGraph& target);

struct StructureCheck {
  bool pieces_match = false;  // every piece is isomorphic to its named lattice
  bool rebuilt = false;       // the doubled lattice is isomorphic to omega(n)
  bool ok() const { return pieces_match && rebuilt; }
};

// Omega_n rebuilt as omega(n-1) doubled along a cutting isomorphic to
// omega(n-2). Needs n >= 4.
StructureCheck check_omega_recursion(std::size_t n);
// Omega_n rebuilt as (Gamma*_{n-2} doubled along a copy of Gamma_{n-3})
// doubled along another copy of Gamma_{n-3}. Needs n >= 4.
StructureCheck check_gamma_route(std::size_t n);

}  // namespace mlc

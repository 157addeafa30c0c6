#pragma once

#include "mlc/graph.hpp"
#include "mlc/isomorphism.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlc {

// Hexagonal chain with h hexagons. code has h - 2 letters (none for
// h <= 2), one per inner hexagon: 'L' or 'R' for a kink to the left or
// right, 'S' for a straight (linear) attachment.
struct HexChain {
  std::size_t hexagons = 1;
  std::string code;

  // Throws std::invalid_argument on a bad letter or length.
  static HexChain parse(const std::string& code);
  void validate() const;
  // No straight attachment.
  bool is_fibonaccene() const;
  // Exactly one straight attachment, at one end of the code.
  bool is_lucasene() const;
};

// Lucasene with n hexagons: "S" followed by alternating kinks. With
// straight_last the straight attachment sits at the other end.
HexChain lucasene(std::size_t n, bool straight_last = false);
// Fibonaccene with n hexagons: alternating kinks.
HexChain fibonaccene(std::size_t n);

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// A hexagonal face: vertices in cyclic order around the face.
struct Cell {
  std::vector<int> vertices;
  bool clockwise = false;  // orientation of the stored order
};

struct PlaneBipartiteGraph {
  std::vector<Point> coords;
  std::vector<int> color;  // 0 white, 1 black
  std::vector<std::pair<int, int>> edges;  // u < v, sorted
  std::vector<Cell> cells;

  std::size_t size() const { return coords.size(); }
  int edge_index(int u, int v) const;  // -1 if absent
  Graph graph() const;
};

// Planar embedding on unit hexagons; adjacent hexagons share one edge.
PlaneBipartiteGraph build_chain(const HexChain& chain);

// Sorted edge indices, one edge per vertex.
using PerfectMatching = std::vector<int>;

constexpr std::size_t kMatchingVertexBound = 64;

// Every perfect matching, sorted. Throws std::length_error above
// kMatchingVertexBound vertices.
std::vector<PerfectMatching> perfect_matchings(const PlaneBipartiteGraph& g);

// Z-transformation digraph: one vertex per perfect matching (in the order of
// perfect_matchings); M1 -> M2 when M1 xor M2 is a single cell that is
// proper M1-alternating, i.e. its M1 edges run white to black in clockwise
// order.
HasseGraph z_digraph(const PlaneBipartiteGraph& g, const std::vector<PerfectMatching>& matchings);
HasseGraph z_digraph(const PlaneBipartiteGraph& g);

struct ResonanceCheck {
  bool isomorphic = false;
  std::optional<Orientation> orientation;
  std::size_t matchings = 0;
};

// Compares the Z-transformation digraph of the lucasene with n hexagons to
// omega(n), allowing one global arc reversal.
ResonanceCheck verify_ztgfl(std::size_t n, bool straight_last = false);
ResonanceCheck verify_ztgfl(const HexChain& chain, const HasseGraph& expected);

}  // namespace mlc

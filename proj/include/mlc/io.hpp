#pragma once

#include "mlc/bigint.hpp"
#include "mlc/graph.hpp"
#include "mlc/polynomial.hpp"
#include "mlc/poset.hpp"
#include "mlc/resonance.hpp"

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

// Serialization of posets, graphs, polynomials and tables. Big integers are
// always written as decimal strings so no precision is lost in JSON.
namespace mlc {

using Json = nlohmann::ordered_json;

std::vector<std::string> decimal_strings(const std::vector<BigInt>& values);

// {"n", "covers", "labels"}
Json poset_to_json(const Poset& p);
Poset poset_from_json(const Json& j);
// Hasse diagram of the poset, larger elements drawn on top.
std::string poset_to_dot(const Poset& p, const std::string& name = "poset");

// {"n", "arcs", "rank", "labels"}
Json hasse_to_json(const HasseGraph& h);
HasseGraph hasse_from_json(const Json& j);
// One rank per DOT subgraph so the layers line up.
std::string hasse_to_dot(const HasseGraph& h, const std::string& name = "lattice");

// {"n", "edges", "labels"}
Json graph_to_json(const Graph& g);
std::string graph_to_dot(const Graph& g, const std::string& name = "graph");

// {"family", "n", "kind", "counts"}
Json spectrum_to_json(const std::string& family, long n, const std::string& kind,
                      const std::vector<BigInt>& counts);
// {"kind", "n", "method", "coeffs"}
Json polynomial_to_json(const std::string& kind, long n, const std::string& method, const IntPolynomial& p);

// {"hexagons", "code", "n", "coords", "colors", "edges", "cells"}
Json plane_graph_to_json(const HexChain& chain, const PlaneBipartiteGraph& g);
// Each matching as its list of [u, v] edges.
Json matchings_to_json(const PlaneBipartiteGraph& g, const std::vector<PerfectMatching>& matchings);
std::string plane_graph_to_dot(const PlaneBipartiteGraph& g, const std::string& name = "chain");

// A rectangular table: header row plus string cells.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

std::string table_to_csv(const Table& t);
Json table_to_json(const Table& t);
std::string table_to_plain(const Table& t);

// Rows n = 0 .. rows-1 of Y(n, k), k = 0..n.
Table lucas_triangle_table(std::size_t rows);
// Columns n, F_n, L_n, J_n, p'_n for n = 0 .. rows-1.
Table sequences_table(std::size_t rows);
// Row n holds the coefficients of the chosen family for n = 0 .. rows-1,
// computed by the recurrence method; columns k = 0 .. widest row.
Table spectrum_grid_table(std::size_t rows, const std::string& kind);

}  // namespace mlc

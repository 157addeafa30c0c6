#include "mlc/isomorphism.hpp"
#include "mlc/lattice.hpp"
#include "mlc/resonance.hpp"
#include "mlc/sequences.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

using mlc::BigInt;
using mlc::Graph;
using mlc::HasseGraph;
using mlc::HexChain;
using mlc::PlaneBipartiteGraph;

namespace {

// Counts perfect matchings by always matching the lowest free vertex.
long count_matchings(const Graph& g, std::vector<char>& used) {
  std::size_t v = 0;
  while (v < g.size() && used[v]) ++v;
  if (v == g.size()) return 1;
  long total = 0;
  used[v] = 1;
  for (int w : g.neighbors(v)) {
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = 1;
    total += count_matchings(g, used);
    used[static_cast<std::size_t>(w)] = 0;
  }
  used[v] = 0;
  return total;
}

long count_matchings(const Graph& g) {
  std::vector<char> used(g.size(), 0);
  return count_matchings(g, used);
}

std::set<std::pair<int, int>> cell_edges(const mlc::Cell& c) {
  std::set<std::pair<int, int>> out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    int a = c.vertices[i];
    int b = c.vertices[(i + 1) % c.vertices.size()];
    if (a > b) std::swap(a, b);
    out.insert({a, b});
  }
  return out;
}

// Two matchings are adjacent in the resonance graph when their symmetric
// difference is the edge set of one hexagon.
Graph resonance_graph(const PlaneBipartiteGraph& g, const std::vector<mlc::PerfectMatching>& ms) {
  std::vector<std::set<std::pair<int, int>>> cells;
  for (const auto& c : g.cells) cells.push_back(cell_edges(c));
  Graph out(ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      std::vector<int> diff;
      std::set_symmetric_difference(ms[i].begin(), ms[i].end(), ms[j].begin(), ms[j].end(), std::back_inserter(diff));
      std::set<std::pair<int, int>> edges;
      for (int e : diff) edges.insert(g.edges[static_cast<std::size_t>(e)]);
      if (std::find(cells.begin(), cells.end(), edges) != cells.end()) out.add_edge(i, j);
    }
  return out;
}

}  // namespace

TEST_CASE("chain codes") {
  CHECK(HexChain::parse("").hexagons == 2);
  CHECK(HexChain::parse("SLR").hexagons == 5);
  CHECK_THROWS_AS(HexChain::parse("LX"), std::invalid_argument);
  HexChain bad{4, "L"};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  HexChain none{0, ""};
  CHECK_THROWS_AS(none.validate(), std::invalid_argument);

  CHECK(mlc::lucasene(5).code == "SLR");
  CHECK(mlc::lucasene(5, true).code == "LRS");
  CHECK(mlc::fibonaccene(5).code == "LRL");
  CHECK(mlc::lucasene(5).is_lucasene());
  CHECK(mlc::lucasene(5, true).is_lucasene());
  CHECK_FALSE(mlc::lucasene(5).is_fibonaccene());
  CHECK(mlc::fibonaccene(5).is_fibonaccene());
  CHECK_FALSE(HexChain::parse("LSR").is_lucasene());
  CHECK_FALSE(HexChain::parse("SS").is_lucasene());
}

TEST_CASE("plane embedding") {
  for (const std::string code : {"", "S", "L", "SLRL", "LRLR", "SSSS", "RRLL"}) {
    const PlaneBipartiteGraph g = mlc::build_chain(HexChain::parse(code));
    CAPTURE(code);
    const std::size_t h = code.size() + 2;
    CHECK(g.size() == 4 * h + 2);
    CHECK(g.edges.size() == 5 * h + 1);
    CHECK(g.cells.size() == h);
    for (const auto& [u, v] : g.edges) {
      CHECK(u < v);
      CHECK(g.color[static_cast<std::size_t>(u)] != g.color[static_cast<std::size_t>(v)]);
      const double dx = g.coords[static_cast<std::size_t>(u)].x - g.coords[static_cast<std::size_t>(v)].x;
      const double dy = g.coords[static_cast<std::size_t>(u)].y - g.coords[static_cast<std::size_t>(v)].y;
      CHECK(std::hypot(dx, dy) == doctest::Approx(1.0));
      CHECK(g.edge_index(u, v) >= 0);
    }
    for (const auto& c : g.cells) {
      CHECK(c.vertices.size() == 6);
      for (const auto& [a, b] : cell_edges(c)) CHECK(g.edge_index(a, b) >= 0);
    }
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        const double d = std::hypot(g.coords[a].x - g.coords[b].x, g.coords[a].y - g.coords[b].y);
        CHECK(d > 0.5);
      }
  }
}

TEST_CASE("single hexagon") {
  const PlaneBipartiteGraph g = mlc::build_chain(HexChain{1, ""});
  CHECK(g.size() == 6);
  const auto ms = mlc::perfect_matchings(g);
  CHECK(ms.size() == 2);
  const HasseGraph z = mlc::z_digraph(g, ms);
  CHECK(z.size() == 2);
  CHECK(z.arcs().size() == 1);
}

TEST_CASE("matching counts agree with an independent count") {
  for (std::size_t n = 1; n <= 12; ++n) {
    CAPTURE(n);
    const auto luc = mlc::build_chain(mlc::lucasene(n));
    const auto fib = mlc::build_chain(mlc::fibonaccene(n));
    const long luc_count = count_matchings(luc.graph());
    const long fib_count = count_matchings(fib.graph());
    CHECK(static_cast<long>(mlc::perfect_matchings(luc).size()) == luc_count);
    CHECK(static_cast<long>(mlc::perfect_matchings(fib).size()) == fib_count);
    CHECK(BigInt(fib_count) == mlc::fibonacci(static_cast<long>(n) + 2));
    if (n >= 2) CHECK(BigInt(luc_count) == mlc::lucas(static_cast<long>(n)));
  }
  CHECK(count_matchings(mlc::build_chain(mlc::lucasene(1)).graph()) == 2);
  // A linear chain of h hexagons has h + 1 perfect matchings.
  CHECK(mlc::perfect_matchings(mlc::build_chain(HexChain::parse("SSSS"))).size() == 7);
}

TEST_CASE("matchings are perfect and distinct") {
  const PlaneBipartiteGraph g = mlc::build_chain(mlc::lucasene(6));
  const auto ms = mlc::perfect_matchings(g);
  CHECK(std::set<mlc::PerfectMatching>(ms.begin(), ms.end()).size() == ms.size());
  for (const auto& m : ms) {
    CHECK(m.size() * 2 == g.size());
    std::vector<int> seen(g.size(), 0);
    for (int e : m) {
      ++seen[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].first)];
      ++seen[static_cast<std::size_t>(g.edges[static_cast<std::size_t>(e)].second)];
    }
    CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));
  }
}

TEST_CASE("z-digraph underlies the resonance graph") {
  for (const std::string code : {"S", "SL", "LR", "SLR", "LRL", "SLRL", "RLRS", "SSL"}) {
    CAPTURE(code);
    const PlaneBipartiteGraph g = mlc::build_chain(HexChain::parse(code));
    const auto ms = mlc::perfect_matchings(g);
    const HasseGraph z = mlc::z_digraph(g, ms);
    const Graph oracle = resonance_graph(g, ms);
    CHECK(z.undirected().edges() == oracle.edges());
    CHECK(z.unique_minimum().has_value());
    CHECK(z.unique_maximum().has_value());
    CHECK(mlc::is_distributive(z));
  }
}

TEST_CASE("small lucasenes") {
  const HasseGraph z4 = mlc::z_digraph(mlc::build_chain(mlc::lucasene(4)));
  CHECK(z4.size() == 7);
  CHECK(z4.unique_minimum().has_value());
  CHECK(z4.unique_maximum().has_value());
  CHECK(mlc::z_digraph(mlc::build_chain(mlc::lucasene(5))).size() == 11);
  CHECK(mlc::z_digraph(mlc::build_chain(mlc::fibonaccene(4))).size() == 8);
}

TEST_CASE("fibonaccenes give the Fibonacci cube") {
  const HasseGraph z3 = mlc::z_digraph(mlc::build_chain(mlc::fibonaccene(3)));
  CHECK(mlc::build_chain(mlc::fibonaccene(3)).size() == 14);
  CHECK(mlc::isomorphic_up_to_reversal(z3, mlc::gamma_lattice(3)).has_value());
  for (std::size_t n = 1; n <= 8; ++n) {
    CAPTURE(n);
    const HasseGraph z = mlc::z_digraph(mlc::build_chain(mlc::fibonaccene(n)));
    CHECK(mlc::is_isomorphic(z.undirected(), mlc::gamma_strings(n)));
    CHECK(mlc::isomorphic_up_to_reversal(z, mlc::gamma_lattice(n)).has_value());
  }
}

TEST_CASE("lucasenes give the matchable Lucas lattice") {
  for (bool straight_last : {false, true}) {
    for (std::size_t n = 2; n <= 8; ++n) {
      CAPTURE(straight_last);
      CAPTURE(n);
      const auto r = mlc::verify_ztgfl(n, straight_last);
      CHECK(r.isomorphic);
      CHECK(r.orientation.has_value());
      CHECK(BigInt(static_cast<long>(r.matchings)) == mlc::lucas(static_cast<long>(n)));
    }
  }
  CHECK(mlc::verify_ztgfl(8).matchings == 47);
  // The fibonaccene with the same number of hexagons has a different lattice.
  CHECK_FALSE(mlc::verify_ztgfl(mlc::fibonaccene(5), mlc::omega(5)).isomorphic);
}

TEST_CASE("matching bound") {
  CHECK_THROWS_AS(mlc::perfect_matchings(mlc::build_chain(mlc::lucasene(16))), std::length_error);
}

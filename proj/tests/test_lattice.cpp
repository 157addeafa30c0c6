#include "mlc/enumeration.hpp"
#include "mlc/isomorphism.hpp"
#include "mlc/lattice.hpp"
#include "mlc/sequences.hpp"

#include <doctest.h>

#include <queue>

using mlc::BigInt;
using mlc::Graph;
using mlc::HasseGraph;
using mlc::Poset;

namespace {

// Binary strings of length n without "11" (and without a 1 at both ends when
// circular), adjacent when they differ in one position.
Graph string_cube(std::size_t n, bool circular) {
  std::vector<unsigned> words;
  for (unsigned w = 0; w < (1U << n); ++w) {
    bool ok = (w & (w >> 1)) == 0;
    if (circular && n > 1 && (w & 1U) && (w >> (n - 1) & 1U)) ok = false;
    if (ok) words.push_back(w);
  }
  Graph g(words.size(), {});
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j)
      if (__builtin_popcount(words[i] ^ words[j]) == 1) g.add_edge(i, j);
  return g;
}

long eccentricity_max(const Graph& g) {
  long best = 0;
  for (std::size_t s = 0; s < g.size(); ++s) {
    std::vector<long> d(g.size(), -1);
    std::queue<int> q;
    d[s] = 0;
    q.push(static_cast<int>(s));
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w : g.neighbors(static_cast<std::size_t>(v)))
        if (d[static_cast<std::size_t>(w)] < 0) {
          d[static_cast<std::size_t>(w)] = d[static_cast<std::size_t>(v)] + 1;
          q.push(w);
        }
    }
    for (long x : d) best = std::max(best, x);
  }
  return best;
}

}  // namespace

TEST_CASE("filter lattices") {
  const HasseGraph empty = mlc::filter_lattice(Poset(0, {}));
  CHECK(empty.size() == 1);
  const HasseGraph o4 = mlc::filter_lattice(mlc::make_lfence(4));
  CHECK(o4.size() == 7);
  CHECK(o4.arcs().size() == 8);
  CHECK(mlc::rank_counts(mlc::filter_lattice(mlc::make_lfence(5))) == std::vector<BigInt>{1, 2, 2, 3, 2, 1});
  CHECK(o4.labels().front() == "{x1,x2,x3,x4}");
  CHECK(o4.labels().back() == "{}");
  CHECK(mlc::filter_vertex(o4, 0) == 6);
  CHECK(mlc::filter_vertex(o4, 0b100) == -1);
  CHECK_THROWS_AS(mlc::filter_lattice(mlc::make_lfence(20), 100), std::length_error);
}

TEST_CASE("omega") {
  CHECK(mlc::omega(0).size() == 1);
  CHECK(mlc::omega(5).size() == 11);
  CHECK(mlc::omega(5).undirected().edge_count() == 15);
  CHECK(mlc::omega(7).size() == 29);
  for (std::size_t n = 1; n <= 16; ++n) {
    const HasseGraph o = mlc::omega(n);
    CHECK(o.is_graded());
    CHECK(o.height() == static_cast<int>(n));
    CHECK(o.unique_minimum().has_value());
    CHECK(o.unique_maximum().has_value());
    if (n >= 2) CHECK(o.size() == mlc::lucas(static_cast<long>(n)));
  }
}

TEST_CASE("the two Fibonacci cube constructions agree") {
  CHECK(mlc::gamma_lattice(0).size() == 1);
  CHECK(mlc::gamma_lattice(3).size() == 5);
  CHECK(mlc::gamma_lattice(5).size() == 13);
  CHECK(mlc::gamma_lattice(5).arcs().size() == 20);
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(mlc::is_isomorphic(mlc::gamma_strings(n), string_cube(n, false)));
    CHECK(mlc::is_isomorphic(mlc::gamma_lattice(n).undirected(), mlc::gamma_strings(n)));
    CHECK(mlc::gamma_lattice(n).is_graded());
  }
}

TEST_CASE("Lucas cubes") {
  const Graph l2 = mlc::lambda(2);
  CHECK(l2.size() == 3);
  CHECK(l2.labels() == std::vector<std::string>{"00", "01", "10"});
  CHECK(mlc::lambda(4).size() == 7);
  CHECK(mlc::lambda(1).size() == 1);
  CHECK(mlc::cube_spectrum(mlc::lambda(5)) == std::vector<BigInt>{11, 15, 5});
  CHECK_THROWS_AS(mlc::lambda(0), std::invalid_argument);
  for (std::size_t n = 2; n <= 12; ++n) CHECK(mlc::is_isomorphic(mlc::lambda(n), string_cube(n, true)));
}

TEST_CASE("cuttings and doubling") {
  const HasseGraph point(1, {});
  const auto whole = mlc::make_interval(point, 0, 0);
  CHECK(mlc::is_cutting(point, whole));
  const HasseGraph doubled = mlc::day_double(point, whole);
  CHECK(mlc::is_isomorphic(doubled, HasseGraph(2, {{0, 1}})));
  CHECK(doubled.labels() == std::vector<std::string>{"(0,0)", "(0,1)"});

  const HasseGraph chain(2, {{0, 1}});
  CHECK(mlc::is_cutting(chain, mlc::make_interval(chain, 0, 0)));
  CHECK(mlc::is_cutting(chain, mlc::make_interval(chain, 0, 1)));

  const HasseGraph diamond(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  const auto side = mlc::make_interval(diamond, 1, 1);
  CHECK_FALSE(mlc::is_cutting(diamond, side));
  CHECK_THROWS_AS(mlc::day_double(diamond, side), std::invalid_argument);
}

TEST_CASE("doubling omega(3) along the right cutting gives omega(4)") {
  const Poset x4 = mlc::make_lfence(4);
  const HasseGraph o3 = mlc::omega(3);
  const auto k = mlc::cutting_for_element(x4, 3, o3);
  CHECK(mlc::is_cutting(o3, k));
  CHECK(mlc::is_isomorphic(o3.induced(k.members), mlc::omega(2)));
  const HasseGraph o4 = mlc::day_double(o3, k);
  CHECK(o4.size() == 7);
  CHECK(mlc::is_isomorphic(o4, mlc::omega(4)));
}

TEST_CASE("doubling Gamma_4 along Gamma_3 gives Gamma_5, along Gamma_2 it gives omega(5)") {
  const Poset z5 = mlc::make_fence(5);
  const HasseGraph g4 = mlc::filter_lattice(mlc::delete_element(z5, 4));
  const auto k3 = mlc::cutting_for_element(z5, 4, g4);
  CHECK(mlc::is_isomorphic(g4.induced(k3.members), mlc::gamma_lattice(3)));
  CHECK(mlc::is_isomorphic(mlc::day_double(g4, k3).undirected(), string_cube(5, false)));

  const Poset x5 = mlc::make_lfence(5);
  const HasseGraph base = mlc::filter_lattice(mlc::delete_element(x5, 0));
  CHECK(mlc::is_isomorphic(base.undirected(), mlc::gamma_strings(4)));
  const auto k2 = mlc::cutting_for_element(x5, 0, base);
  CHECK(mlc::is_isomorphic(base.induced(k2.members).undirected(), mlc::gamma_strings(2)));
  const HasseGraph doubled = mlc::day_double(base, k2);
  CHECK(doubled.size() == 11);
  CHECK(mlc::is_isomorphic(doubled, mlc::omega(5)));
}

TEST_CASE("cutting decompositions") {
  const auto chain = mlc::find_cutting_decomposition(HasseGraph(2, {{0, 1}}));
  REQUIRE(chain.has_value());
  CHECK(chain->base.size() == 1);
  CHECK(chain->cutting.members.size() == 1);

  const HasseGraph o6 = mlc::omega(6);
  bool found_omega = false;
  for (const auto& d : mlc::all_cutting_decompositions(o6))
    found_omega = found_omega || (mlc::is_isomorphic(d.base, mlc::omega(5)) && mlc::is_isomorphic(d.cut, mlc::omega(4)));
  CHECK(found_omega);

  bool found_gamma = false;
  for (const auto& d : mlc::all_cutting_decompositions(mlc::omega(5)))
    found_gamma = found_gamma || (mlc::is_isomorphic(d.base.undirected(), mlc::gamma_strings(4)) &&
                                  mlc::is_isomorphic(d.cut.undirected(), mlc::gamma_strings(2)));
  CHECK(found_gamma);

  const HasseGraph m3(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}});
  CHECK(mlc::is_lattice(m3));
  CHECK_FALSE(mlc::is_distributive(m3));
  CHECK_FALSE(mlc::find_cutting_decomposition(m3).has_value());
}

TEST_CASE("doubling reconstructions, both routes") {
  for (std::size_t n = 4; n <= 10; ++n) {
    CHECK(mlc::check_omega_recursion(n).ok());
    CHECK(mlc::check_gamma_route(n).ok());
  }
  CHECK_THROWS_AS(mlc::check_omega_recursion(3), std::invalid_argument);
}

TEST_CASE("Birkhoff's representation") {
  for (std::size_t n = 1; n <= 10; ++n) {
    const HasseGraph o = mlc::omega(n);
    const Poset j = mlc::birkhoff_poset(o);
    CHECK(j.size() == n);
    CHECK(mlc::is_isomorphic(mlc::filter_lattice(j), o));
    CHECK(mlc::is_distributive(o));
  }
  CHECK_FALSE(mlc::is_lattice(HasseGraph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}})));
}

TEST_CASE("basic properties of omega") {
  for (std::size_t n = 1; n <= 14; ++n) {
    const HasseGraph o = mlc::omega(n);
    CHECK(o.height() + 1 == static_cast<int>(n) + 1);
    CHECK(eccentricity_max(o.undirected()) == static_cast<long>(n));
  }
  for (std::size_t n = 2; n <= 12; ++n) CHECK_FALSE(mlc::graph_metrics(mlc::omega(n).undirected(), false).eulerian);
}

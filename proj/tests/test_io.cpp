#include "mlc/formulas.hpp"
#include "mlc/io.hpp"
#include "mlc/isomorphism.hpp"
#include "mlc/lattice.hpp"

#include <doctest.h>

#include <iterator>
#include <regex>
#include <sstream>
#include <utility>

using mlc::Json;

namespace {

long count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator());
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("poset round trip") {
  const mlc::Poset p = mlc::make_lfence(4);
  const Json j = mlc::poset_to_json(p);
  CHECK(j.at("n") == 4);
  CHECK(j.at("covers") == Json::parse("[[1,0],[2,1],[2,3]]"));
  CHECK(j.at("labels") == Json::parse(R"(["x1","x2","x3","x4"])"));
  const mlc::Poset back = mlc::poset_from_json(Json::parse(j.dump()));
  CHECK(back.covers() == p.covers());
  CHECK(back.labels() == p.labels());
  CHECK(mlc::poset_to_json(back).dump() == j.dump());
}

TEST_CASE("lattice round trip") {
  for (std::size_t n = 0; n <= 7; ++n) {
    CAPTURE(n);
    const mlc::HasseGraph h = mlc::omega(n);
    const mlc::HasseGraph back = mlc::hasse_from_json(Json::parse(mlc::hasse_to_json(h).dump()));
    CHECK(back.arcs() == h.arcs());
    CHECK(back.ranks() == h.ranks());
    CHECK(back.labels() == h.labels());
    CHECK(mlc::is_isomorphic(back, h));
  }
}

TEST_CASE("DOT output") {
  const std::string omega5 = mlc::hasse_to_dot(mlc::omega(5), "omega5");
  CHECK(omega5.rfind("digraph \"omega5\" {", 0) == 0);
  CHECK(count_matches(omega5, R"(v\d+ \[label=)") == 11);
  CHECK(count_matches(omega5, R"(v\d+ -> v\d+;)") == static_cast<long>(mlc::omega(5).arcs().size()));
  CHECK(count_matches(omega5, R"(rank=same)") == 6);

  const mlc::Graph l4 = mlc::lambda(4);
  const std::string lambda4 = mlc::graph_to_dot(l4);
  CHECK(count_matches(lambda4, R"(v\d+ -- v\d+;)") == static_cast<long>(l4.edge_count()));

  const std::string fence = mlc::poset_to_dot(mlc::make_lfence(4));
  CHECK(count_matches(fence, R"(\[label="x\d"\])") == 4);
  CHECK(count_matches(fence, R"(->)") == 3);

  const auto chain = mlc::build_chain(mlc::lucasene(3));
  CHECK(count_matches(mlc::plane_graph_to_dot(chain), R"(fillcolor=)") == 14);
}

TEST_CASE("labels with quotes are escaped") {
  mlc::Graph g(1);
  g.set_labels({"a\"b"});
  CHECK(mlc::graph_to_dot(g).find(R"(label="a\"b")") != std::string::npos);
}

TEST_CASE("plane graph JSON") {
  const mlc::HexChain chain = mlc::lucasene(6);
  const auto g = mlc::build_chain(chain);
  const Json j = mlc::plane_graph_to_json(chain, g);
  CHECK(j.at("n") == 26);
  CHECK(j.at("hexagons") == 6);
  CHECK(j.at("code") == "SLRL");
  CHECK(j.at("coords").size() == 26);
  CHECK(j.at("edges").size() == 31);
  CHECK(j.at("cells").size() == 6);
  const auto ms = mlc::perfect_matchings(g);
  const Json m = mlc::matchings_to_json(g, ms);
  CHECK(m.size() == 18);
  for (const auto& matching : m) CHECK(matching.size() == 13);
}

TEST_CASE("big integers are written as decimal strings") {
  const mlc::IntPolynomial p = mlc::family_poly(mlc::PolyKind::rank, 90, "recurrence");
  const Json j = mlc::polynomial_to_json("rank", 90, "recurrence", p);
  for (const auto& c : j.at("coeffs")) CHECK(c.is_string());
  CHECK(j.at("coeffs").size() == p.coeffs().size());
  const Json s = mlc::spectrum_to_json("omega", 3, "rank", {mlc::BigInt(1), mlc::BigInt(2)});
  CHECK(s.dump() == R"({"family":"omega","n":3,"kind":"rank","counts":["1","2"]})");
}

TEST_CASE("Lucas triangle table") {
  const mlc::Table t = mlc::lucas_triangle_table(6);
  const std::vector<std::string> expected{
      "n,k0,k1,k2,k3,k4,k5", "0,2", "1,1,2", "2,1,3,2", "3,1,4,5,2", "4,1,5,9,7,2", "5,1,6,14,16,9,2",
  };
  CHECK(lines(mlc::table_to_csv(t)) == expected);
  const Json j = mlc::table_to_json(t);
  CHECK(j.at("rows").size() == 6);
  CHECK(j.at("rows").at(5).at(3) == "14");
  CHECK_THROWS_AS(mlc::lucas_triangle_table(0), std::invalid_argument);
}

TEST_CASE("sequence table") {
  const auto rows = lines(mlc::table_to_csv(mlc::sequences_table(10)));
  REQUIRE(rows.size() == 11);
  CHECK(rows[0] == "n,F,L,J,p'");
  // Recomputed here from the defining recurrences.
  long f0 = 0, f1 = 1, l0 = 2, l1 = 1, j0 = 2, j1 = 1;
  std::vector<long> p{1, 2, 3};
  for (long n = 0; n < 10; ++n) {
    if (n >= 3) p.push_back(p[static_cast<std::size_t>(n) - 2] + p[static_cast<std::size_t>(n) - 3]);
    CHECK(rows[static_cast<std::size_t>(n) + 1] == std::to_string(n) + "," + std::to_string(f0) + "," +
                                                       std::to_string(l0) + "," + std::to_string(j0) + "," +
                                                       std::to_string(p[static_cast<std::size_t>(n)]));
    f0 = std::exchange(f1, f0 + f1);
    l0 = std::exchange(l1, l0 + l1);
    j0 = std::exchange(j1, j1 + 2 * j0);
  }
}

TEST_CASE("spectrum grid") {
  const mlc::Table t = mlc::spectrum_grid_table(8, "cube");
  REQUIRE(t.rows.size() == 8);
  CHECK(t.rows[5][0] == "5");
  CHECK(t.rows[5][1] == "11");
  CHECK(t.rows[5][2] == "15");
  CHECK(t.rows[5][3] == "5");
  CHECK(t.rows[5][4] == "0");
  for (const auto& row : t.rows) CHECK(row.size() == t.header.size());
  CHECK_THROWS_AS(mlc::spectrum_grid_table(3, "nope"), std::invalid_argument);
}

TEST_CASE("plain and CSV formatting") {
  mlc::Table t;
  t.header = {"a", "bb"};
  t.rows = {{"1", "x,y"}, {"22", "q\"r"}};
  CHECK(mlc::table_to_csv(t) == "a,bb\n1,\"x,y\"\n22,\"q\"\"r\"\n");
  CHECK(mlc::table_to_plain(t) == " a   bb\n 1  x,y\n22  q\"r\n");
}

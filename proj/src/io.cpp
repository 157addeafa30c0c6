#include "mlc/io.hpp"

#include "mlc/formulas.hpp"
#include "mlc/sequences.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace mlc {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::vector<std::pair<int, int>> pairs_from_json(const Json& j) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : j) out.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
  return out;
}

Json pairs_to_json(const std::vector<std::pair<int, int>>& pairs) {
  Json out = Json::array();
  for (const auto& [a, b] : pairs) out.push_back({a, b});
  return out;
}

void write_dot_labels(std::ostringstream& os, const std::vector<std::string>& labels) {
  for (std::size_t v = 0; v < labels.size(); ++v) os << "  v" << v << " [label=" << quoted(labels[v]) << "];\n";
}

}  // namespace

std::vector<std::string> decimal_strings(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

Json poset_to_json(const Poset& p) {
  return Json{{"n", p.size()}, {"covers", pairs_to_json(p.covers())}, {"labels", p.labels()}};
}

Poset poset_from_json(const Json& j) {
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return Poset(j.at("n").get<std::size_t>(), pairs_from_json(j.at("covers")), labels);
}

std::string poset_to_dot(const Poset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  write_dot_labels(os, p.labels());
  for (const auto& [a, b] : p.covers()) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

Json hasse_to_json(const HasseGraph& h) {
  return Json{{"n", h.size()}, {"arcs", pairs_to_json(h.arcs())}, {"rank", h.ranks()}, {"labels", h.labels()}};
}

HasseGraph hasse_from_json(const Json& j) {
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return HasseGraph(j.at("n").get<std::size_t>(), pairs_from_json(j.at("arcs")), labels);
}

std::string hasse_to_dot(const HasseGraph& h, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << quoted(name) << " {\n  rankdir=BT;\n";
  write_dot_labels(os, h.labels());
  std::map<int, std::vector<std::size_t>> layers;
  for (std::size_t v = 0; v < h.size(); ++v) layers[h.rank(v)].push_back(v);
  for (const auto& [rank, members] : layers) {
    os << "  { rank=same;";
    for (auto v : members) os << " v" << v << ";";
    os << " }\n";
  }
  for (const auto& [a, b] : h.arcs()) os << "  v" << a << " -> v" << b << ";\n";
  os << "}\n";
  return os.str();
}

Json graph_to_json(const Graph& g) {
  return Json{{"n", g.size()}, {"edges", pairs_to_json(g.edges())}, {"labels", g.labels()}};
}

std::string graph_to_dot(const Graph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n";
  write_dot_labels(os, g.labels());
  for (const auto& [a, b] : g.edges()) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

Json spectrum_to_json(const std::string& family, long n, const std::string& kind,
                      const std::vector<BigInt>& counts) {
  return Json{{"family", family}, {"n", n}, {"kind", kind}, {"counts", decimal_strings(counts)}};
}

Json polynomial_to_json(const std::string& kind, long n, const std::string& method, const IntPolynomial& p) {
  return Json{{"kind", kind}, {"n", n}, {"method", method}, {"coeffs", p.decimal_coeffs()}};
}

Json plane_graph_to_json(const HexChain& chain, const PlaneBipartiteGraph& g) {
  Json coords = Json::array();
  for (const auto& pt : g.coords) coords.push_back({pt.x, pt.y});
  Json cells = Json::array();
  for (const auto& c : g.cells) cells.push_back(c.vertices);
  return Json{{"hexagons", chain.hexagons}, {"code", chain.code},   {"n", g.size()},
              {"coords", coords},           {"colors", g.color},    {"edges", pairs_to_json(g.edges)},
              {"cells", cells}};
}

Json matchings_to_json(const PlaneBipartiteGraph& g, const std::vector<PerfectMatching>& matchings) {
  Json out = Json::array();
  for (const auto& m : matchings) {
    Json edges = Json::array();
    for (int e : m) {
      const auto& [u, v] = g.edges.at(static_cast<std::size_t>(e));
      edges.push_back({u, v});
    }
    out.push_back(edges);
  }
  return out;
}

std::string plane_graph_to_dot(const PlaneBipartiteGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph " << quoted(name) << " {\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    os << "  v" << v << " [pos=\"" << g.coords[v].x << "," << g.coords[v].y << "!\", style=filled, fillcolor="
       << (g.color[v] == 0 ? "white" : "black") << "];\n";
  }
  for (const auto& [a, b] : g.edges) os << "  v" << a << " -- v" << b << ";\n";
  os << "}\n";
  return os.str();
}

std::string table_to_csv(const Table& t) {
  std::ostringstream os;
  auto write_row = [&os](const std::vector<std::string>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_cell(row[i]);
    os << "\n";
  };
  write_row(t.header);
  for (const auto& row : t.rows) write_row(row);
  return os.str();
}

Json table_to_json(const Table& t) { return Json{{"header", t.header}, {"rows", t.rows}}; }

std::string table_to_plain(const Table& t) {
  std::vector<std::size_t> width(t.header.size(), 0);
  auto widen = [&width](const std::vector<std::string>& row) {
    if (row.size() > width.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  };
  widen(t.header);
  for (const auto& row : t.rows) widen(row);
  std::ostringstream os;
  auto write_row = [&](const std::vector<std::string>& row) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) line += "  ";
      line += std::string(width[i] - row[i].size(), ' ') + row[i];
    }
    os << line << "\n";
  };
  write_row(t.header);
  for (const auto& row : t.rows) write_row(row);
  return os.str();
}

Table lucas_triangle_table(std::size_t rows) {
  if (rows == 0) throw std::invalid_argument("lucas_triangle_table: rows must be positive");
  Table t;
  t.header.push_back("n");
  for (std::size_t k = 0; k < rows; ++k) t.header.push_back("k" + std::to_string(k));
  for (std::size_t n = 0; n < rows; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (std::size_t k = 0; k <= n; ++k)
      row.push_back(to_decimal(lucas_triangle(static_cast<long>(n), static_cast<long>(k))));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table sequences_table(std::size_t rows) {
  if (rows == 0) throw std::invalid_argument("sequences_table: rows must be positive");
  Table t;
  t.header = {"n", "F", "L", "J", "p'"};
  for (std::size_t i = 0; i < rows; ++i) {
    const long n = static_cast<long>(i);
    t.rows.push_back({std::to_string(n), to_decimal(fibonacci(n)), to_decimal(lucas(n)),
                      to_decimal(jacobsthal_lucas(n)), to_decimal(padovan123(n))});
  }
  return t;
}

Table spectrum_grid_table(std::size_t rows, const std::string& kind) {
  if (rows == 0) throw std::invalid_argument("spectrum_grid_table: rows must be positive");
  const auto parsed = parse_poly_kind(kind);
  if (!parsed) throw std::invalid_argument("spectrum_grid_table: unknown kind " + kind);
  const std::string method = methods_for(*parsed).front();
  std::vector<IntPolynomial> polys;
  std::size_t widest = 0;
  for (std::size_t n = 0; n < rows; ++n) {
    polys.push_back(family_poly(*parsed, static_cast<long>(n), method));
    widest = std::max(widest, polys.back().coeffs().size());
  }
  Table t;
  t.header.push_back("n");
  for (std::size_t k = 0; k < widest; ++k) t.header.push_back("k" + std::to_string(k));
  for (std::size_t n = 0; n < rows; ++n) {
    std::vector<std::string> row{std::to_string(n)};
    for (std::size_t k = 0; k < widest; ++k) row.push_back(to_decimal(polys[n][static_cast<long>(k)]));
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace mlc

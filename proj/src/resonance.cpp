#include "mlc/resonance.hpp"

#include "mlc/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mlc {

HexChain HexChain::parse(const std::string& code) {
  HexChain c{code.size() + 2, code};
  c.validate();
  return c;
}

void HexChain::validate() const {
  if (hexagons == 0) throw std::invalid_argument("hex chain needs at least one hexagon");
  const std::size_t inner = hexagons >= 2 ? hexagons - 2 : 0;
  if (code.size() != inner)
    throw std::invalid_argument("hex chain code must have " + std::to_string(inner) + " letters");
  for (char ch : code)
    if (ch != 'L' && ch != 'R' && ch != 'S') throw std::invalid_argument("hex chain code letters are L, R, S");
}

bool HexChain::is_fibonaccene() const { return code.find('S') == std::string::npos; }

bool HexChain::is_lucasene() const {
  if (std::count(code.begin(), code.end(), 'S') != 1) return false;
  return code.front() == 'S' || code.back() == 'S';
}

namespace {
std::string kinks(std::size_t count) {
  std::string s;
  for (std::size_t i = 0; i < count; ++i) s += i % 2 ? 'R' : 'L';
  return s;
}
}  // namespace

HexChain lucasene(std::size_t n, bool straight_last) {
  if (n < 3) return HexChain{std::max<std::size_t>(n, 1), ""};
  const std::string rest = kinks(n - 3);
  return HexChain{n, straight_last ? rest + "S" : "S" + rest};
}

HexChain fibonaccene(std::size_t n) {
  if (n == 0) throw std::invalid_argument("fibonaccene needs at least one hexagon");
  return HexChain{n, kinks(n >= 2 ? n - 2 : 0)};
}

int PlaneBipartiteGraph::edge_index(int u, int v) const {
  const std::pair<int, int> e{std::min(u, v), std::max(u, v)};
  const auto it = std::lower_bound(edges.begin(), edges.end(), e);
  return it != edges.end() && *it == e ? static_cast<int>(it - edges.begin()) : -1;
}

Graph PlaneBipartiteGraph::graph() const { return Graph(size(), edges); }

PlaneBipartiteGraph build_chain(const HexChain& chain) {
  chain.validate();
  PlaneBipartiteGraph g;
  // Flat-topped unit hexagons; corner j sits at angle 60j degrees around the
  // centre, so corners are listed counterclockwise. The neighbour in
  // direction d lies at angle 30 + 60d, and its corners d+3, d+4 are this
  // hexagon's corners d+1, d.
  auto unit = [](double degrees) {
    const double r = degrees * std::numbers::pi / 180.0;
    return Point{std::cos(r), std::sin(r)};
  };
  Point centre{0.0, 0.0};
  std::vector<int> corner(6, -1);
  int direction = 0;
  for (std::size_t h = 0; h < chain.hexagons; ++h) {
    if (h > 0) {
      const Point step = unit(30.0 + 60.0 * direction);
      centre = {centre.x + std::sqrt(3.0) * step.x, centre.y + std::sqrt(3.0) * step.y};
      std::vector<int> next(6, -1);
      next[(direction + 3) % 6] = corner[(direction + 1) % 6];
      next[(direction + 4) % 6] = corner[direction % 6];
      corner = std::move(next);
    }
    for (int j = 0; j < 6; ++j) {
      if (corner[j] >= 0) continue;
      const Point p = unit(60.0 * j);
      corner[j] = static_cast<int>(g.coords.size());
      g.coords.push_back({centre.x + p.x, centre.y + p.y});
      g.color.push_back(j % 2);
    }
    Cell cell{corner, false};
    double area = 0.0;
    for (int j = 0; j < 6; ++j) {
      const Point& a = g.coords[corner[j]];
      const Point& b = g.coords[corner[(j + 1) % 6]];
      area += a.x * b.y - b.x * a.y;
    }
    cell.clockwise = area < 0.0;
    g.cells.push_back(std::move(cell));
    for (int j = 0; j < 6; ++j) {
      const int u = corner[j], v = corner[(j + 1) % 6];
      g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    if (h + 1 < chain.hexagons && h >= 1) {
      const char letter = chain.code[h - 1];
      direction = (direction + (letter == 'L' ? 1 : letter == 'R' ? 5 : 0)) % 6;
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
  return g;
}

std::vector<PerfectMatching> perfect_matchings(const PlaneBipartiteGraph& g) {
  const std::size_t n = g.size();
  if (n > kMatchingVertexBound) throw std::length_error("perfect_matchings: graph too large");
  std::vector<std::vector<std::pair<int, int>>> incident(n);  // (neighbour, edge)
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    incident[u].emplace_back(v, static_cast<int>(e));
    incident[v].emplace_back(u, static_cast<int>(e));
  }
  std::vector<char> covered(n, 0);
  std::vector<int> chosen;
  std::vector<PerfectMatching> out;
  // Always branch on the uncovered vertex with the fewest options; a vertex
  // with none ends the branch and a single option is forced.
  auto dfs = [&](auto&& self) -> void {
    int pick = -1;
    std::size_t options = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (covered[v]) continue;
      std::size_t c = 0;
      for (auto [w, e] : incident[v]) c += !covered[w];
      if (pick < 0 || c < options) {
        pick = static_cast<int>(v);
        options = c;
      }
      if (options == 0) return;
    }
    if (pick < 0) {
      PerfectMatching m = chosen;
      std::sort(m.begin(), m.end());
      out.push_back(std::move(m));
      return;
    }
    for (auto [w, e] : incident[pick]) {
      if (covered[w]) continue;
      covered[pick] = covered[w] = 1;
      chosen.push_back(e);
      self(self);
      chosen.pop_back();
      covered[pick] = covered[w] = 0;
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end());
  return out;
}

HasseGraph z_digraph(const PlaneBipartiteGraph& g, const std::vector<PerfectMatching>& matchings) {
  // Cell edge sets and their clockwise vertex order.
  std::vector<std::vector<int>> cell_edges;
  std::vector<std::vector<int>> clockwise;
  for (const Cell& c : g.cells) {
    std::vector<int> order = c.vertices;
    if (!c.clockwise) std::reverse(order.begin(), order.end());
    std::vector<int> es;
    for (std::size_t j = 0; j < order.size(); ++j) es.push_back(g.edge_index(order[j], order[(j + 1) % order.size()]));
    clockwise.push_back(order);
    std::sort(es.begin(), es.end());
    cell_edges.push_back(std::move(es));
  }
  auto proper = [&](std::size_t cell, const PerfectMatching& m) {
    const auto& order = clockwise[cell];
    for (std::size_t j = 0; j < order.size(); ++j) {
      const int u = order[j], v = order[(j + 1) % order.size()];
      if (!std::binary_search(m.begin(), m.end(), g.edge_index(u, v))) continue;
      if (!(g.color[u] == 0 && g.color[v] == 1)) return false;
    }
    return true;
  };
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < matchings.size(); ++i)
    for (std::size_t j = i + 1; j < matchings.size(); ++j) {
      std::vector<int> diff;
      std::set_symmetric_difference(matchings[i].begin(), matchings[i].end(), matchings[j].begin(),
                                    matchings[j].end(), std::back_inserter(diff));
      if (diff.size() != 6) continue;
      for (std::size_t c = 0; c < cell_edges.size(); ++c) {
        if (diff != cell_edges[c]) continue;
        if (proper(c, matchings[i])) arcs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        else if (proper(c, matchings[j])) arcs.emplace_back(static_cast<int>(j), static_cast<int>(i));
        else throw std::logic_error("z_digraph: alternating cell is proper for neither matching");
      }
    }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < matchings.size(); ++i) labels.push_back("M" + std::to_string(i));
  return HasseGraph(matchings.size(), std::move(arcs), std::move(labels));
}

HasseGraph z_digraph(const PlaneBipartiteGraph& g) { return z_digraph(g, perfect_matchings(g)); }

ResonanceCheck verify_ztgfl(const HexChain& chain, const HasseGraph& expected) {
  const PlaneBipartiteGraph g = build_chain(chain);
  const auto matchings = perfect_matchings(g);
  ResonanceCheck out;
  out.matchings = matchings.size();
  out.orientation = isomorphic_up_to_reversal(expected, z_digraph(g, matchings));
  out.isomorphic = out.orientation.has_value();
  return out;
}

ResonanceCheck verify_ztgfl(std::size_t n, bool straight_last) {
  if (n == 0 || n > 12) throw std::length_error("verify_ztgfl: n must be in 1..12");
  return verify_ztgfl(lucasene(n, straight_last), omega(n));
}

}  // namespace mlc

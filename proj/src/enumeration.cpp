#include "mlc/enumeration.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/max_cardinality_matching.hpp>

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace mlc {

namespace {

void check_size(const Graph& g) {
  if (g.size() > kEnumerationVertexBound)
    throw std::length_error("graph has " + std::to_string(g.size()) + " vertices, enumeration bound is " +
                            std::to_string(kEnumerationVertexBound));
}

std::size_t edges_inside(const Graph& g, const std::vector<int>& vs) {
  std::size_t count = 0;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) count += g.has_edge(vs[i], vs[j]);
  return count;
}

std::vector<int> sorted_copy(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// All (k+1)-cubes obtained from the k-cubes in level by attaching a
// translated copy along a new coordinate.
std::vector<CubeSet> next_level(const Graph& g, const std::vector<CubeSet>& level) {
  std::map<std::vector<int>, CubeSet> found;
  for (const CubeSet& cube : level) {
    const std::size_t corners = cube.coords.size();
    const std::vector<int> inside = sorted_copy(cube.coords);
    std::vector<int> image(corners, -1);
    auto used = [&](int v, std::size_t upto) {
      if (std::binary_search(inside.begin(), inside.end(), v)) return true;
      for (std::size_t b = 0; b < upto; ++b)
        if (image[b] == v) return true;
      return false;
    };
    auto extend = [&](auto&& self, std::size_t b) -> void {
      if (b == corners) {
        CubeSet bigger{cube.dimension + 1, cube.coords};
        bigger.coords.insert(bigger.coords.end(), image.begin(), image.end());
        std::vector<int> key = bigger.vertices();
        const std::size_t expected = static_cast<std::size_t>(bigger.dimension) << (bigger.dimension - 1);
        if (!found.count(key) && edges_inside(g, key) == expected) found.emplace(std::move(key), std::move(bigger));
        return;
      }
      for (int w : g.neighbors(cube.coords[b])) {
        if (used(w, b)) continue;
        bool fits = true;
        for (std::size_t rest = b; rest && fits; rest &= rest - 1) {
          const std::size_t low = rest & (~rest + 1);
          fits = g.has_edge(w, image[b ^ low]);
        }
        if (!fits) continue;
        image[b] = w;
        self(self, b + 1);
      }
      image[b] = -1;
    };
    extend(extend, 0);
  }
  std::vector<CubeSet> out;
  out.reserve(found.size());
  for (auto& [key, cube] : found) out.push_back(std::move(cube));
  return out;
}

std::vector<CubeSet> level_zero(const Graph& g) {
  std::vector<CubeSet> out;
  for (std::size_t v = 0; v < g.size(); ++v) out.push_back({0, {static_cast<int>(v)}});
  return out;
}

std::vector<BigInt> to_big(const std::vector<long>& counts) {
  std::vector<BigInt> out;
  for (long c : counts) out.emplace_back(c);
  return trimmed(std::move(out));
}

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;

std::vector<long> matching_mates(const Graph& g) {
  BoostGraph bg(g.size());
  for (auto [u, v] : g.edges()) boost::add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v), bg);
  std::vector<boost::graph_traits<BoostGraph>::vertex_descriptor> mate(g.size());
  boost::edmonds_maximum_cardinality_matching(bg, &mate[0]);
  std::vector<long> out(g.size(), -1);
  const auto none = boost::graph_traits<BoostGraph>::null_vertex();
  for (std::size_t v = 0; v < g.size(); ++v)
    if (mate[v] != none) out[v] = static_cast<long>(mate[v]);
  return out;
}

class Deadline {
 public:
  explicit Deadline(const SearchLimits& limits) : limits_(limits), start_(std::chrono::steady_clock::now()) {}
  void tick(const char* what) {
    if (++nodes_ > limits_.node_limit) throw LimitExceeded(std::string(what) + ": node limit reached");
    if ((nodes_ & 0x3FF) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > limits_.time_limit_seconds)
        throw LimitExceeded(std::string(what) + ": time limit reached");
    }
  }

 private:
  SearchLimits limits_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

int CubeSet::base() const { return *std::min_element(coords.begin(), coords.end()); }

std::vector<int> CubeSet::vertices() const { return sorted_copy(coords); }

std::vector<BigInt> trimmed(std::vector<BigInt> counts) {
  while (!counts.empty() && counts.back() == 0) counts.pop_back();
  return counts;
}

std::vector<CubeSet> induced_cubes(const Graph& g, int k) {
  check_size(g);
  if (k < 0) return {};
  std::vector<CubeSet> level = level_zero(g);
  for (int d = 0; d < k && !level.empty(); ++d) level = next_level(g, level);
  return level;
}

BigInt count_induced_cubes(const Graph& g, int k) { return static_cast<unsigned long>(induced_cubes(g, k).size()); }

BigInt count_induced_cubes(const HasseGraph& h, int k) {
  BigInt total = 0;
  for (std::size_t v = 0; v < h.size(); ++v) total += binomial(static_cast<long>(h.outdegree(v)), k);
  return total;
}

std::vector<BigInt> cube_spectrum(const Graph& g) {
  check_size(g);
  std::vector<long> counts;
  for (std::vector<CubeSet> level = level_zero(g); !level.empty(); level = next_level(g, level))
    counts.push_back(static_cast<long>(level.size()));
  return to_big(counts);
}

std::vector<BigInt> cube_spectrum(const HasseGraph& h) {
  std::vector<BigInt> out;
  for (int k = 0;; ++k) {
    BigInt c = count_induced_cubes(h, k);
    if (c == 0) break;
    out.push_back(c);
  }
  return out;
}

int max_cube_dimension(const Graph& g) { return static_cast<int>(cube_spectrum(g).size()) - 1; }

int max_cube_dimension(const HasseGraph& h) { return static_cast<int>(cube_spectrum(h).size()) - 1; }

std::vector<BigInt> maximal_cube_spectrum(const Graph& g) {
  check_size(g);
  std::vector<long> counts;
  std::vector<CubeSet> level = level_zero(g);
  while (!level.empty()) {
    std::vector<CubeSet> above = next_level(g, level);
    std::set<std::vector<int>> covered;
    for (const CubeSet& c : above) {
      const std::size_t corners = c.coords.size();
      for (std::size_t bit = 1; bit < corners; bit <<= 1)
        for (std::size_t side : {std::size_t{0}, bit}) {
          std::vector<int> facet;
          for (std::size_t b = 0; b < corners; ++b)
            if ((b & bit) == side) facet.push_back(c.coords[b]);
          covered.insert(sorted_copy(std::move(facet)));
        }
    }
    long maximal = 0;
    for (const CubeSet& c : level) maximal += !covered.count(c.vertices());
    counts.push_back(maximal);
    level = std::move(above);
  }
  return to_big(counts);
}

long max_matching(const Graph& g) {
  const auto mates = matching_mates(g);
  return static_cast<long>(std::count_if(mates.begin(), mates.end(), [](long m) { return m >= 0; })) / 2;
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.size(), -1);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

long max_independent_set(const Graph& g, const SearchLimits& limits) {
  if (is_bipartite(g)) return static_cast<long>(g.size()) - max_matching(g);
  const std::size_t n = g.size();
  Deadline deadline(limits);
  long best = 0;
  std::vector<char> alive(n, 1);
  auto dfs = [&](auto&& self, long chosen, long remaining) -> void {
    deadline.tick("independent set");
    if (chosen + remaining <= best) return;
    int pick = -1;
    long pick_degree = -1;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      long d = 0;
      for (int w : g.neighbors(v)) d += alive[w];
      if (d > pick_degree) {
        pick_degree = d;
        pick = static_cast<int>(v);
      }
    }
    if (pick < 0 || pick_degree == 0) {
      best = std::max(best, chosen + remaining);
      return;
    }
    // Take pick: it and its live neighbours leave the graph.
    std::vector<int> removed{pick};
    for (int w : g.neighbors(pick))
      if (alive[w]) removed.push_back(w);
    for (int v : removed) alive[v] = 0;
    self(self, chosen + 1, remaining - static_cast<long>(removed.size()));
    for (int v : removed) alive[v] = 1;
    // Skip pick.
    alive[pick] = 0;
    self(self, chosen, remaining - 1);
    alive[pick] = 1;
  };
  dfs(dfs, 0, static_cast<long>(n));
  return best;
}

PackingResult disjoint_cube_packing(const Graph& g, int k, const SearchLimits& limits) {
  if (k < 1) throw std::invalid_argument("disjoint_cube_packing: k must be at least 1");
  const std::vector<CubeSet> cubes = induced_cubes(g, k);
  if (k == 1) {
    const auto mates = matching_mates(g);
    PackingResult out;
    for (std::size_t i = 0; i < cubes.size(); ++i) {
      const auto vs = cubes[i].vertices();
      if (mates[vs[0]] == vs[1]) out.chosen.push_back(static_cast<int>(i));
    }
    out.size = out.lower_bound = out.upper_bound = static_cast<long>(out.chosen.size());
    return out;
  }
  std::vector<std::vector<int>> sets;
  for (const auto& c : cubes) sets.push_back(c.vertices());
  return max_set_packing(g.size(), sets, limits);
}

long max_disjoint_cubes(const Graph& g, int k, const SearchLimits& limits) {
  if (k < 0) throw std::invalid_argument("max_disjoint_cubes: negative dimension");
  if (k == 0) return static_cast<long>(g.size());
  if (k == 1) return max_matching(g);
  return disjoint_cube_packing(g, k, limits).size;
}

std::vector<BigInt> degree_spectrum(const Graph& g) {
  std::vector<long> counts;
  for (std::size_t v = 0; v < g.size(); ++v) {
    const std::size_t d = g.degree(v);
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return to_big(counts);
}

std::vector<BigInt> indegree_spectrum(const HasseGraph& h) {
  std::vector<long> counts;
  for (std::size_t v = 0; v < h.size(); ++v) {
    const std::size_t d = h.indegree(v);
    if (counts.size() <= d) counts.resize(d + 1, 0);
    ++counts[d];
  }
  return to_big(counts);
}

std::vector<BigInt> rank_counts(const HasseGraph& h) {
  if (!h.is_graded()) throw std::invalid_argument("rank_counts: digraph is not graded");
  std::vector<long> counts;
  for (std::size_t v = 0; v < h.size(); ++v) {
    const auto r = static_cast<std::size_t>(h.rank(v));
    if (counts.size() <= r) counts.resize(r + 1, 0);
    ++counts[r];
  }
  return to_big(counts);
}

std::optional<std::vector<int>> hamiltonian_path(const Graph& g, const SearchLimits& limits) {
  const std::size_t n = g.size();
  if (n == 0) return std::vector<int>{};
  if (n > kHamiltonianVertexBound) throw std::length_error("hamiltonian_path: graph too large");
  std::vector<int> leaves;
  for (std::size_t v = 0; v < n; ++v)
    if (g.degree(v) == 0 && n > 1) return std::nullopt;
    else if (g.degree(v) == 1) leaves.push_back(static_cast<int>(v));
  if (leaves.size() > 2) return std::nullopt;

  // In a bipartite graph the path alternates sides, which fixes how many
  // unvisited vertices each side may still hold.
  std::vector<int> side(n, -1);
  bool bipartite = true;
  for (std::size_t s = 0; s < n && bipartite; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{static_cast<int>(s)};
    while (!queue.empty() && bipartite) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u)) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          bipartite = false;
        }
      }
    }
  }
  long side_count[2] = {0, 0};
  if (bipartite) {
    for (std::size_t v = 0; v < n; ++v) ++side_count[side[v]];
    if (std::abs(side_count[0] - side_count[1]) > 1) return std::nullopt;
  }

  Deadline deadline(limits);
  std::vector<char> visited(n, 0);
  std::vector<int> free_degree(n), path;
  for (std::size_t v = 0; v < n; ++v) free_degree[v] = static_cast<int>(g.degree(v));

  long unvisited_side[2] = {side_count[0], side_count[1]};
  auto visit = [&](int v) {
    visited[v] = 1;
    path.push_back(v);
    if (bipartite) --unvisited_side[side[v]];
    for (int w : g.neighbors(v)) --free_degree[w];
  };
  auto unvisit = [&](int v) {
    for (int w : g.neighbors(v)) ++free_degree[w];
    path.pop_back();
    visited[v] = 0;
    if (bipartite) ++unvisited_side[side[v]];
  };
  // The unvisited vertices must stay reachable from the path end and at
  // most one of them may be forced to end the path.
  auto hopeless = [&](int end) {
    const long left = static_cast<long>(n - path.size());
    if (left == 0) return false;
    if (bipartite) {
      const long surplus = unvisited_side[1 - side[end]] - unvisited_side[side[end]];
      if (surplus < 0 || surplus > 1) return true;
    }
    long forced_ends = 0;
    for (std::size_t u = 0; u < n; ++u) {
      if (visited[u]) continue;
      const bool next_to_end = g.has_edge(end, u);
      if (free_degree[u] == 0 && (left > 1 || !next_to_end)) return true;
      if (free_degree[u] == 1 && !next_to_end) ++forced_ends;
    }
    if (forced_ends > 1) return true;
    std::vector<char> seen(n, 0);
    std::deque<int> queue{end};
    seen[end] = 1;
    long reached = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u))
        if (!visited[w] && !seen[w]) {
          seen[w] = 1;
          ++reached;
          queue.push_back(w);
        }
    }
    return reached < left;
  };
  auto dfs = [&](auto&& self, int end) -> bool {
    deadline.tick("hamiltonian path");
    if (path.size() == n) return true;
    if (hopeless(end)) return false;
    std::vector<int> next;
    for (int w : g.neighbors(end))
      if (!visited[w]) next.push_back(w);
    std::stable_sort(next.begin(), next.end(), [&](int a, int b) { return free_degree[a] < free_degree[b]; });
    for (int w : next) {
      visit(w);
      if (self(self, w)) return true;
      unvisit(w);
    }
    return false;
  };

  std::vector<int> starts = leaves;
  if (starts.empty()) {
    for (std::size_t v = 0; v < n; ++v) starts.push_back(static_cast<int>(v));
    std::stable_sort(starts.begin(), starts.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  }
  for (int s : starts) {
    if (bipartite && side_count[side[s]] < side_count[1 - side[s]]) continue;
    visit(s);
    if (dfs(dfs, s)) return path;
    unvisit(s);
  }
  return std::nullopt;
}

GraphMetrics graph_metrics(const Graph& g, bool search_hamiltonian, const SearchLimits& limits) {
  GraphMetrics m;
  const std::size_t n = g.size();
  m.radius = n ? -1 : 0;
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<long> dist(n, -1);
    dist[s] = 0;
    std::deque<int> queue{static_cast<int>(s)};
    long ecc = 0;
    std::size_t reached = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int w : g.neighbors(u))
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          ecc = std::max(ecc, dist[w]);
          ++reached;
          queue.push_back(w);
        }
    }
    if (reached < n) m.connected = false;
    m.diameter = std::max(m.diameter, ecc);
    m.radius = m.radius < 0 ? ecc : std::min(m.radius, ecc);
  }
  if (!m.connected) m.diameter = m.radius = -1;
  m.eulerian = m.connected;
  for (std::size_t v = 0; v < n && m.eulerian; ++v) m.eulerian = g.degree(v) % 2 == 0;
  if (search_hamiltonian && n <= kHamiltonianVertexBound) m.hamiltonian_path = hamiltonian_path(g, limits).has_value();
  return m;
}

}  // namespace mlc

#include "mlc/isomorphism.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace mlc {

namespace {

// Union of both graphs: vertices 0..n-1 come from the first graph and
// n..2n-1 from the second.
struct Digraph {
  std::vector<std::vector<int>> out, in;
  bool directed = false;
};

Digraph disjoint_union(const std::vector<std::vector<int>>& out_a, const std::vector<std::vector<int>>& in_a,
                       const std::vector<std::vector<int>>& out_b, const std::vector<std::vector<int>>& in_b,
                       bool directed) {
  const int n = static_cast<int>(out_a.size());
  Digraph d;
  d.directed = directed;
  d.out = out_a;
  d.in = in_a;
  for (std::size_t v = 0; v < out_b.size(); ++v) {
    std::vector<int> o, i;
    for (int w : out_b[v]) o.push_back(w + n);
    for (int w : in_b[v]) i.push_back(w + n);
    d.out.push_back(std::move(o));
    d.in.push_back(std::move(i));
  }
  return d;
}

// Refines colours until stable. Colours are renumbered canonically from
// the sorted signatures, so equal inputs give equal outputs on both sides.
std::vector<int> refine(const Digraph& d, std::vector<int> colour) {
  const std::size_t n = d.out.size();
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      auto& s = sig[v];
      s.push_back(colour[v]);
      std::vector<int> o, i;
      for (int w : d.out[v]) o.push_back(colour[w]);
      std::sort(o.begin(), o.end());
      s.push_back(static_cast<int>(o.size()));
      s.insert(s.end(), o.begin(), o.end());
      if (d.directed) {
        for (int w : d.in[v]) i.push_back(colour[w]);
        std::sort(i.begin(), i.end());
        s.push_back(-1);
        s.insert(s.end(), i.begin(), i.end());
      }
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& s : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (std::size_t v = 0; v < n; ++v) colour[v] = ids[sig[v]];
    if (ids.size() == classes) return colour;
    classes = ids.size();
  }
}

bool balanced(const std::vector<int>& colour, std::size_t half) {
  std::map<int, long> diff;
  for (std::size_t v = 0; v < colour.size(); ++v) diff[colour[v]] += v < half ? 1 : -1;
  return std::all_of(diff.begin(), diff.end(), [](auto e) { return e.second == 0; });
}

bool verify(const Digraph& d, std::size_t half, const std::vector<int>& map) {
  for (std::size_t v = 0; v < half; ++v) {
    std::vector<int> image;
    for (int w : d.out[v]) image.push_back(map[w] + static_cast<int>(half));
    std::sort(image.begin(), image.end());
    std::vector<int> target = d.out[map[v] + half];
    std::sort(target.begin(), target.end());
    if (image != target) return false;
  }
  return true;
}

std::optional<std::vector<int>> search(const Digraph& d, std::size_t half, const std::vector<int>& colour) {
  if (!balanced(colour, half)) return std::nullopt;
  // Smallest non-singleton class on the first side.
  std::map<int, std::vector<int>> cls;
  for (std::size_t v = 0; v < colour.size(); ++v) cls[colour[v]].push_back(static_cast<int>(v));
  const std::vector<int>* pick = nullptr;
  for (const auto& [c, members] : cls)
    if (members.size() > 2 && (!pick || members.size() < pick->size())) pick = &members;
  if (!pick) {
    std::vector<int> map(half);
    for (const auto& [c, members] : cls) map[members[0]] = members[1] - static_cast<int>(half);
    if (verify(d, half, map)) return map;
    return std::nullopt;
  }
  const int v = pick->front();
  const int fresh = static_cast<int>(colour.size());
  for (int w : *pick) {
    if (static_cast<std::size_t>(w) < half) continue;
    std::vector<int> next = colour;
    next[v] = fresh;
    next[w] = fresh;
    if (auto found = search(d, half, refine(d, std::move(next)))) return found;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> solve(const Digraph& d, std::size_t na, std::size_t nb, std::size_t ea,
                                      std::size_t eb) {
  if (na > kIsomorphismVertexBound || nb > kIsomorphismVertexBound)
    throw std::length_error("isomorphism: graph exceeds the vertex bound");
  if (na != nb || ea != eb) return std::nullopt;
  if (na == 0) return std::vector<int>{};
  return search(d, na, refine(d, std::vector<int>(2 * na, 0)));
}

std::vector<std::vector<int>> adjacency(const Graph& g) {
  std::vector<std::vector<int>> adj(g.size());
  for (std::size_t v = 0; v < g.size(); ++v) adj[v] = g.neighbors(v);
  return adj;
}

std::vector<std::vector<int>> ups(const HasseGraph& h) {
  std::vector<std::vector<int>> adj(h.size());
  for (std::size_t v = 0; v < h.size(); ++v) adj[v] = h.upper_covers(v);
  return adj;
}

std::vector<std::vector<int>> downs(const HasseGraph& h) {
  std::vector<std::vector<int>> adj(h.size());
  for (std::size_t v = 0; v < h.size(); ++v) adj[v] = h.lower_covers(v);
  return adj;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b) {
  const auto adj_a = adjacency(a), adj_b = adjacency(b);
  return solve(disjoint_union(adj_a, adj_a, adj_b, adj_b, false), a.size(), b.size(), a.edge_count(),
               b.edge_count());
}

std::optional<std::vector<int>> find_isomorphism(const HasseGraph& a, const HasseGraph& b) {
  return solve(disjoint_union(ups(a), downs(a), ups(b), downs(b), true), a.size(), b.size(), a.arcs().size(),
               b.arcs().size());
}

bool is_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }
bool is_isomorphic(const HasseGraph& a, const HasseGraph& b) { return find_isomorphism(a, b).has_value(); }

std::optional<Orientation> isomorphic_up_to_reversal(const HasseGraph& a, const HasseGraph& b) {
  if (is_isomorphic(a, b)) return Orientation::same;
  if (is_isomorphic(a, b.reversed())) return Orientation::reversed;
  return std::nullopt;
}

}  // namespace mlc

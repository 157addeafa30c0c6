#include "mlc/graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace mlc {

Graph::Graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
  for (auto [u, v] : edges) add_edge(static_cast<std::size_t>(u), static_cast<std::size_t>(v));
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
  const auto& a = adj_.at(u);
  return std::binary_search(a.begin(), a.end(), static_cast<int>(v));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t u = 0; u < adj_.size(); ++u)
    for (int v : adj_[u])
      if (static_cast<std::size_t>(v) > u) out.emplace_back(static_cast<int>(u), v);
  return out;
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw std::invalid_argument("add_edge: vertex out of range");
  if (u == v) throw std::invalid_argument("add_edge: self loop");
  if (has_edge(u, v)) return;
  auto insert = [](std::vector<int>& a, int x) { a.insert(std::lower_bound(a.begin(), a.end(), x), x); };
  insert(adj_[u], static_cast<int>(v));
  insert(adj_[v], static_cast<int>(u));
  ++edges_;
}

void Graph::set_labels(std::vector<std::string> labels) {
  if (labels.size() != size()) throw std::invalid_argument("label count does not match vertex count");
  labels_ = std::move(labels);
}

HasseGraph::HasseGraph(std::size_t n, std::vector<std::pair<int, int>> arcs, std::vector<std::string> labels)
    : arcs_(std::move(arcs)), up_(n), down_(n), labels_(std::move(labels)) {
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  if (labels_.size() != n) throw std::invalid_argument("label count does not match vertex count");
  std::sort(arcs_.begin(), arcs_.end());
  arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
  for (auto [u, v] : arcs_) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n || u == v)
      throw std::invalid_argument("HasseGraph: bad arc");
    up_[u].push_back(v);
    down_[v].push_back(u);
  }
  std::vector<std::size_t> order;
  std::vector<std::size_t> indeg(n);
  for (std::size_t v = 0; v < n; ++v) {
    indeg[v] = down_[v].size();
    if (indeg[v] == 0) order.push_back(v);
  }
  rank_.assign(n, 0);
  for (std::size_t i = 0; i < order.size(); ++i) {
    const std::size_t u = order[i];
    for (int v : up_[u]) {
      rank_[v] = std::max(rank_[v], rank_[u] + 1);
      if (--indeg[v] == 0) order.push_back(static_cast<std::size_t>(v));
    }
  }
  if (order.size() != n) throw std::invalid_argument("HasseGraph: arcs contain a cycle");
}

int HasseGraph::height() const {
  int h = 0;
  for (int r : rank_) h = std::max(h, r);
  return h;
}

void HasseGraph::set_filter_masks(std::vector<ElementMask> masks) {
  if (masks.size() != size()) throw std::invalid_argument("mask count does not match vertex count");
  masks_ = std::move(masks);
}

bool HasseGraph::is_graded() const {
  return std::all_of(arcs_.begin(), arcs_.end(), [&](auto a) { return rank_[a.second] == rank_[a.first] + 1; });
}

std::optional<int> HasseGraph::unique_minimum() const {
  std::optional<int> found;
  for (std::size_t v = 0; v < size(); ++v)
    if (down_[v].empty()) {
      if (found) return std::nullopt;
      found = static_cast<int>(v);
    }
  return found;
}

std::optional<int> HasseGraph::unique_maximum() const {
  std::optional<int> found;
  for (std::size_t v = 0; v < size(); ++v)
    if (up_[v].empty()) {
      if (found) return std::nullopt;
      found = static_cast<int>(v);
    }
  return found;
}

const HasseGraph::Reachability& HasseGraph::reachability() const {
  std::call_once(reach_->once, [this] {
  const std::size_t n = size();
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return rank_[a] > rank_[b]; });
  std::vector<boost::dynamic_bitset<>> above(n, boost::dynamic_bitset<>(n));
  for (std::size_t u : order) {
    above[u].set(u);
    for (int v : up_[u]) above[u] |= above[v];
  }
  std::vector<boost::dynamic_bitset<>> below(n, boost::dynamic_bitset<>(n));
  for (std::size_t u = 0; u < n; ++u)
    for (auto v = above[u].find_first(); v != boost::dynamic_bitset<>::npos; v = above[u].find_next(v))
      below[v].set(u);
  reach_->below = std::move(below);
  reach_->above = std::move(above);
  });
  return *reach_;
}

bool HasseGraph::less_equal(std::size_t u, std::size_t v) const {
  return reachability().above.at(u).test(v);
}

const boost::dynamic_bitset<>& HasseGraph::up_set(std::size_t v) const {
  return reachability().above.at(v);
}

const boost::dynamic_bitset<>& HasseGraph::down_set(std::size_t v) const {
  return reachability().below.at(v);
}

Graph HasseGraph::undirected() const {
  Graph g(size(), arcs_);
  g.set_labels(labels_);
  return g;
}

HasseGraph HasseGraph::reversed() const {
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : arcs_) arcs.emplace_back(v, u);
  return HasseGraph(size(), std::move(arcs), labels_);
}

HasseGraph HasseGraph::induced(const std::vector<int>& vertices) const {
  std::vector<int> new_id(size(), -1);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    new_id.at(static_cast<std::size_t>(vertices[i])) = static_cast<int>(i);
    labels.push_back(labels_[vertices[i]]);
  }
  std::vector<std::pair<int, int>> arcs;
  for (auto [u, v] : arcs_)
    if (new_id[u] >= 0 && new_id[v] >= 0) arcs.emplace_back(new_id[u], new_id[v]);
  HasseGraph h(vertices.size(), std::move(arcs), std::move(labels));
  if (!masks_.empty()) {
    std::vector<ElementMask> masks;
    for (int v : vertices) masks.push_back(masks_[v]);
    h.set_filter_masks(std::move(masks));
  }
  return h;
}

bool Interval::contains(int v) const { return std::binary_search(members.begin(), members.end(), v); }

Interval make_interval(const HasseGraph& h, int bottom, int top) {
  if (bottom < 0 || top < 0 || static_cast<std::size_t>(bottom) >= h.size() ||
      static_cast<std::size_t>(top) >= h.size())
    throw std::invalid_argument("make_interval: vertex out of range");
  if (!h.less_equal(bottom, top)) throw std::invalid_argument("make_interval: bottom is not below top");
  Interval k{bottom, top, {}};
  const auto span = h.up_set(bottom) & h.down_set(top);
  for (auto v = span.find_first(); v != boost::dynamic_bitset<>::npos; v = span.find_next(v))
    k.members.push_back(static_cast<int>(v));
  return k;
}

bool is_interval(const HasseGraph& h, const Interval& k) {
  try {
    return make_interval(h, k.bottom, k.top).members == k.members;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<std::pair<int, int>> cover_pairs(const std::vector<boost::dynamic_bitset<>>& strictly_above) {
  std::vector<std::pair<int, int>> covers;
  const std::size_t n = strictly_above.size();
  for (std::size_t u = 0; u < n; ++u) {
    boost::dynamic_bitset<> implied(n);
    const auto& row = strictly_above[u];
    for (auto w = row.find_first(); w != boost::dynamic_bitset<>::npos; w = row.find_next(w))
      implied |= strictly_above[w];
    const auto direct = row - implied;
    for (auto v = direct.find_first(); v != boost::dynamic_bitset<>::npos; v = direct.find_next(v))
      covers.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  return covers;
}

}  // namespace mlc

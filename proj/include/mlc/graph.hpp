#pragma once

#include "mlc/poset.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlc {

// Simple undirected graph with sorted adjacency lists.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n), labels_(n) {}
  Graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

  std::size_t size() const { return adj_.size(); }
  std::size_t edge_count() const { return edges_; }
  const std::vector<int>& neighbors(std::size_t v) const { return adj_.at(v); }
  std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
  bool has_edge(std::size_t u, std::size_t v) const;
  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<int, int>> edges() const;

  // Adds an edge; ignores duplicates. Throws on self loops or bad ids.
  void add_edge(std::size_t u, std::size_t v);
  const std::vector<std::string>& labels() const { return labels_; }
  void set_labels(std::vector<std::string> labels);

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::string> labels_;
  std::size_t edges_ = 0;
};

// Cover digraph of a finite poset (in practice a distributive lattice),
// arcs pointing from lower to upper. rank(v) is the length of the longest
// chain from a minimal vertex to v.
class HasseGraph {
 public:
  HasseGraph() = default;
  // Throws std::invalid_argument on bad ids or a cycle. Arcs are used as
  // given; they are not transitively reduced.
  HasseGraph(std::size_t n, std::vector<std::pair<int, int>> arcs, std::vector<std::string> labels = {});

  std::size_t size() const { return up_.size(); }
  const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
  const std::vector<int>& upper_covers(std::size_t v) const { return up_.at(v); }
  const std::vector<int>& lower_covers(std::size_t v) const { return down_.at(v); }
  std::size_t indegree(std::size_t v) const { return down_.at(v).size(); }
  std::size_t outdegree(std::size_t v) const { return up_.at(v).size(); }
  int rank(std::size_t v) const { return rank_.at(v); }
  const std::vector<int>& ranks() const { return rank_; }
  int height() const;
  const std::vector<std::string>& labels() const { return labels_; }

  // Filter masks when the graph was built as a filter lattice.
  const std::vector<ElementMask>& filter_masks() const { return masks_; }
  void set_filter_masks(std::vector<ElementMask> masks);

  // Every arc raises rank by exactly one.
  bool is_graded() const;
  std::optional<int> unique_minimum() const;
  std::optional<int> unique_maximum() const;

  // Order relation u <= v, from a lazily built reachability table.
  bool less_equal(std::size_t u, std::size_t v) const;
  const boost::dynamic_bitset<>& up_set(std::size_t v) const;
  const boost::dynamic_bitset<>& down_set(std::size_t v) const;

  Graph undirected() const;
  HasseGraph reversed() const;
  // Sub-digraph induced by the given vertices (kept in the given order).
  HasseGraph induced(const std::vector<int>& vertices) const;

 private:
  struct Reachability {
    std::once_flag once;
    std::vector<boost::dynamic_bitset<>> above, below;
  };
  const Reachability& reachability() const;

  std::vector<std::pair<int, int>> arcs_;
  std::vector<std::vector<int>> up_, down_;
  std::vector<int> rank_;
  std::vector<std::string> labels_;
  std::vector<ElementMask> masks_;
  // Built on first use and shared between copies; the graph itself never
  // changes after construction.
  std::shared_ptr<Reachability> reach_ = std::make_shared<Reachability>();
};

// Convex set {v : bottom <= v <= top}.
struct Interval {
  int bottom = 0;
  int top = 0;
  std::vector<int> members;  // sorted
  bool contains(int v) const;
};

// Throws std::invalid_argument unless bottom <= top.
Interval make_interval(const HasseGraph& h, int bottom, int top);
// True when members is exactly the interval spanned by bottom and top.
bool is_interval(const HasseGraph& h, const Interval& k);

// Transitive reduction of an order given by reachability rows
// (rows[u][v] set iff u < v strictly).
std::vector<std::pair<int, int>> cover_pairs(const std::vector<boost::dynamic_bitset<>>& strictly_above);

}  // namespace mlc

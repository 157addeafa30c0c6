#include "mlc/lattice.hpp"

#include "mlc/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace mlc {

namespace {

using Bits = boost::dynamic_bitset<>;

std::vector<std::string> binary_strings(std::size_t n, bool circular) {
  std::vector<std::string> out;
  for (unsigned long long m = 0; m < (1ULL << n); ++m) {
    if (m & (m >> 1)) continue;
    if (circular && n >= 1 && (m & 1ULL) && (m >> (n - 1) & 1ULL)) continue;
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
      if (m >> (n - 1 - i) & 1ULL) s[i] = '1';
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Graph hamming_graph(const std::vector<std::string>& words) {
  Graph g(words.size());
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = i + 1; j < words.size(); ++j) {
      std::size_t diff = 0;
      for (std::size_t t = 0; t < words[i].size(); ++t) diff += words[i][t] != words[j][t];
      if (diff == 1) g.add_edge(i, j);
    }
  g.set_labels(words);
  return g;
}

}  // namespace

HasseGraph filter_lattice(const Poset& p, std::size_t bound) {
  const auto fs = filters(p, std::max<std::size_t>(p.size(), kDefaultFilterBound));
  if (fs.size() > bound)
    throw std::length_error("filter lattice has " + std::to_string(fs.size()) + " vertices, bound is " +
                            std::to_string(bound));
  std::unordered_map<ElementMask, int> index;
  std::vector<ElementMask> masks;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    index.emplace(fs[i].members, static_cast<int>(i));
    masks.push_back(fs[i].members);
    labels.push_back(mask_to_string(p, fs[i].members));
  }
  std::vector<std::pair<int, int>> arcs;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    ElementMask mins = p.minimal_elements(fs[i].members);
    while (mins) {
      const ElementMask low = mins & (~mins + 1);
      arcs.emplace_back(static_cast<int>(i), index.at(fs[i].members & ~low));
      mins &= mins - 1;
    }
  }
  HasseGraph h(fs.size(), std::move(arcs), std::move(labels));
  h.set_filter_masks(std::move(masks));
  return h;
}

int filter_vertex(const HasseGraph& lattice, ElementMask filter) {
  const auto& masks = lattice.filter_masks();
  for (std::size_t i = 0; i < masks.size(); ++i)
    if (masks[i] == filter) return static_cast<int>(i);
  return -1;
}

HasseGraph omega(std::size_t n) {
  if (n == 0) return HasseGraph(1, {}, {"{}"});
  return filter_lattice(make_lfence(n));
}

HasseGraph gamma_lattice(std::size_t n) { return filter_lattice(make_fence(n)); }

Graph gamma_strings(std::size_t n) {
  if (n > 40) throw std::length_error("gamma_strings: n too large");
  if (n == 0) {
    Graph g(1);
    g.set_labels({""});
    return g;
  }
  return hamming_graph(binary_strings(n, false));
}

Graph lambda(std::size_t n) {
  if (n == 0) throw std::invalid_argument("lambda: n must be at least 1");
  if (n > 40) throw std::length_error("lambda: n too large");
  return hamming_graph(binary_strings(n, true));
}

bool is_cutting(const HasseGraph& l, const Interval& k) {
  if (!is_interval(l, k)) throw std::invalid_argument("is_cutting: not an interval");
  const auto covered = l.down_set(k.top) | l.up_set(k.bottom);
  return covered.all();
}

HasseGraph day_double(const HasseGraph& l, const Interval& k) {
  if (!is_interval(l, k)) throw std::invalid_argument("day_double: not an interval");
  if (!is_cutting(l, k)) throw std::invalid_argument("day_double: interval is not a cutting");
  // New vertex list: every old vertex v in order, followed by (v, 1) for v in K.
  const std::size_t n = l.size();
  std::vector<int> twin(n, -1);
  std::vector<int> origin;
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < n; ++v) {
    origin.push_back(static_cast<int>(v));
    labels.push_back(k.contains(static_cast<int>(v)) ? "(" + l.labels()[v] + ",0)" : l.labels()[v]);
  }
  for (int v : k.members) {
    twin[v] = static_cast<int>(origin.size());
    origin.push_back(v);
    labels.push_back("(" + l.labels()[v] + ",1)");
  }
  const std::size_t m = origin.size();
  auto in_k = [&](std::size_t id) { return k.contains(origin[id]); };
  auto layer = [&](std::size_t id) { return id >= n ? 1 : 0; };
  // Order of L[K]: (a,i) <= (b,j) iff a <= b and i <= j; x <= (b,j) iff
  // x <= b; (a,i) <= y iff a <= y.
  auto leq = [&](std::size_t s, std::size_t t) {
    if (!l.less_equal(origin[s], origin[t])) return false;
    if (in_k(s) && in_k(t)) return layer(s) <= layer(t);
    return true;
  };
  std::vector<Bits> above(m, Bits(m));
  for (std::size_t s = 0; s < m; ++s)
    for (std::size_t t = 0; t < m; ++t)
      if (s != t && leq(s, t)) above[s].set(t);
  return HasseGraph(m, cover_pairs(above), std::move(labels));
}

Interval cutting_for_element(const Poset& p, std::size_t x, const HasseGraph& lattice_without_x) {
  if (x >= p.size()) throw std::out_of_range("cutting_for_element: invalid element");
  // Element ids of p - x are those of p with x removed and the rest shifted.
  auto squeeze = [x](ElementMask m) {
    const ElementMask low = m & ((ElementMask{1} << x) - 1);
    return low | ((m >> (x + 1)) << x);
  };
  const ElementMask strict_up = p.up_set(x) & ~(ElementMask{1} << x);
  const ElementMask others = p.all() & ~(ElementMask{1} << x);
  const ElementMask largest = others & ~p.down_set(x);
  const int bottom = filter_vertex(lattice_without_x, squeeze(largest));
  const int top = filter_vertex(lattice_without_x, squeeze(strict_up));
  if (bottom < 0 || top < 0) throw std::invalid_argument("cutting_for_element: lattice does not match P - x");
  return make_interval(lattice_without_x, bottom, top);
}

Poset birkhoff_poset(const HasseGraph& l) {
  std::vector<int> join_irreducible;
  for (std::size_t v = 0; v < l.size(); ++v)
    if (l.lower_covers(v).size() == 1) join_irreducible.push_back(static_cast<int>(v));
  std::vector<std::pair<int, int>> order;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < join_irreducible.size(); ++i) {
    labels.push_back(l.labels()[join_irreducible[i]]);
    for (std::size_t j = 0; j < join_irreducible.size(); ++j)
      if (i != j && l.less_equal(join_irreducible[i], join_irreducible[j]))
        order.emplace_back(static_cast<int>(i), static_cast<int>(j));
  }
  return Poset(join_irreducible.size(), std::move(order), std::move(labels));
}

bool is_lattice(const HasseGraph& l) {
  const std::size_t n = l.size();
  if (n == 0 || !l.unique_minimum() || !l.unique_maximum()) return false;
  // Every pair needs a least upper bound: the common upper bounds must have
  // a member below all of them.
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const Bits common = l.up_set(a) & l.up_set(b);
      bool found = false;
      for (auto c = common.find_first(); c != Bits::npos && !found; c = common.find_next(c))
        found = common.is_subset_of(l.up_set(c));
      if (!found) return false;
    }
  return true;
}

bool is_distributive(const HasseGraph& l) {
  if (!is_lattice(l)) return false;
  // A finite lattice is distributive iff it has as many elements as its
  // poset of join-irreducibles has down-sets.
  const Poset j = birkhoff_poset(l);
  if (j.size() > kDefaultFilterBound) return false;
  return antichains(j) == l.size();
}

std::vector<CuttingDecomposition> all_cutting_decompositions(const HasseGraph& l, std::size_t bound) {
  std::vector<CuttingDecomposition> out;
  if (l.size() > bound || l.size() < 2 || !is_distributive(l)) return out;
  const Poset p = birkhoff_poset(l);
  for (std::size_t x = 0; x < p.size(); ++x) {
    HasseGraph base = filter_lattice(delete_element(p, x));
    Interval k = cutting_for_element(p, x, base);
    if (!is_cutting(base, k)) continue;
    if (!is_isomorphic(day_double(base, k), l)) continue;
    HasseGraph cut = base.induced(k.members);
    out.push_back({p, x, std::move(base), std::move(k), std::move(cut)});
  }
  return out;
}

std::optional<CuttingDecomposition> find_cutting_decomposition(const HasseGraph& l, std::size_t bound) {
  if (l.size() > bound || l.size() < 2 || !is_distributive(l)) return std::nullopt;
  const Poset p = birkhoff_poset(l);
  for (std::size_t x = 0; x < p.size(); ++x) {
    HasseGraph base = filter_lattice(delete_element(p, x));
    Interval k = cutting_for_element(p, x, base);
    if (!is_cutting(base, k) || !is_isomorphic(day_double(base, k), l)) continue;
    HasseGraph cut = base.induced(k.members);
    return CuttingDecomposition{p, x, std::move(base), std::move(k), std::move(cut)};
  }
  return std::nullopt;
}

HasseGraph gamma_dual_lattice(std::size_t n) { return filter_lattice(dual(make_fence(n))); }

Interval map_interval(const Interval& k, const std::vector<int>& mapping, const HasseGraph& target) {
  return make_interval(target, mapping.at(static_cast<std::size_t>(k.bottom)),
                       mapping.at(static_cast<std::size_t>(k.top)));
}

StructureCheck check_omega_recursion(std::size_t n) {
  if (n < 4) throw std::invalid_argument("check_omega_recursion: n must be at least 4");
  StructureCheck out;
  const Poset p = make_lfence(n);
  const std::size_t last = n - 1;
  // The L-fence minus its last element is the next smaller L-fence with the
  // same element ids, so the cutting can be located in omega(n - 1) directly.
  if (!(delete_element(p, last) == make_lfence(n - 1))) return out;
  const HasseGraph base = omega(n - 1);
  const Interval k = cutting_for_element(p, last, base);
  out.pieces_match = is_cutting(base, k) && is_isomorphic(base.induced(k.members), omega(n - 2));
  out.rebuilt = is_isomorphic(day_double(base, k), omega(n));
  return out;
}

StructureCheck check_gamma_route(std::size_t n) {
  if (n < 4) throw std::invalid_argument("check_gamma_route: n must be at least 4");
  StructureCheck out;
  const Poset p = make_lfence(n);
  const Poset q = delete_element(p, 0);  // fence on x2..xn
  const Poset r = delete_element(q, 0);  // dual fence on x3..xn

  // First doubling inside the dual fence lattice.
  const HasseGraph base = gamma_dual_lattice(n - 2);
  const HasseGraph r_lattice = filter_lattice(r);
  const auto to_base = find_isomorphism(r_lattice, base);
  if (!to_base) return out;
  const Interval k1 = map_interval(cutting_for_element(q, 0, r_lattice), *to_base, base);
  const bool first_piece = is_cutting(base, k1) && is_isomorphic(base.induced(k1.members), gamma_lattice(n - 3));
  const HasseGraph middle = day_double(base, k1);

  // The middle lattice must be the fence lattice of Xi_n - x1; the second
  // cutting is carried over through that isomorphism.
  const HasseGraph q_lattice = filter_lattice(q);
  const auto to_middle = find_isomorphism(q_lattice, middle);
  if (!to_middle || !is_isomorphic(middle.undirected(), gamma_strings(n - 1))) return out;
  const Interval k2 = map_interval(cutting_for_element(p, 0, q_lattice), *to_middle, middle);
  const bool second_piece =
      is_cutting(middle, k2) && is_isomorphic(middle.induced(k2.members), gamma_lattice(n - 3));
  out.pieces_match = first_piece && second_piece;
  out.rebuilt = is_isomorphic(day_double(middle, k2), omega(n));
  return out;
}

}  // namespace mlc

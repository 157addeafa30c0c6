#include "mlc/poset.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mlc {

namespace {

ElementMask bit(std::size_t i) { return ElementMask{1} << i; }

template <typename Visit>
void for_each_bit(ElementMask m, Visit visit) {
  while (m) {
    visit(static_cast<std::size_t>(std::countr_zero(m)));
    m &= m - 1;
  }
}

void check_bound(const Poset& p, std::size_t bound) {
  if (p.size() > bound)
    throw std::length_error("poset has " + std::to_string(p.size()) + " elements, bound is " +
                            std::to_string(bound));
}

// Calls visit(antichain) for every antichain, built by adding elements in
// increasing id order.
template <typename Visit>
void for_each_antichain(const Poset& p, Visit visit) {
  const std::size_t n = p.size();
  std::vector<ElementMask> comparable(n);
  for (std::size_t x = 0; x < n; ++x) comparable[x] = p.up_set(x) | p.down_set(x);
  auto dfs = [&](auto&& self, std::size_t next, ElementMask chosen, ElementMask blocked) -> void {
    visit(chosen);
    for (std::size_t x = next; x < n; ++x)
      if (!(blocked & bit(x))) self(self, x + 1, chosen | bit(x), blocked | comparable[x]);
  };
  dfs(dfs, 0, 0, 0);
}

}  // namespace

std::size_t Filter::size() const { return static_cast<std::size_t>(std::popcount(members)); }

Poset::Poset(std::size_t n, std::vector<std::pair<int, int>> covers, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n > kMaxPosetElements) throw std::length_error("poset larger than 64 elements");
  if (labels_.empty())
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i + 1));
  if (labels_.size() != n) throw std::invalid_argument("label count does not match element count");

  std::vector<ElementMask> succ(n, 0);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || hi < 0 || static_cast<std::size_t>(lo) >= n || static_cast<std::size_t>(hi) >= n)
      throw std::invalid_argument("cover pair refers to a missing element");
    if (lo == hi) throw std::invalid_argument("cover pair is a self loop");
    succ[lo] |= bit(hi);
  }

  // Topological order by repeatedly taking elements with no remaining predecessor.
  std::vector<std::size_t> order;
  std::vector<int> indeg(n, 0);
  for (std::size_t x = 0; x < n; ++x) for_each_bit(succ[x], [&](std::size_t y) { ++indeg[y]; });
  for (std::size_t x = 0; x < n; ++x)
    if (indeg[x] == 0) order.push_back(x);
  for (std::size_t i = 0; i < order.size(); ++i)
    for_each_bit(succ[order[i]], [&](std::size_t y) {
      if (--indeg[y] == 0) order.push_back(y);
    });
  if (order.size() != n) throw std::invalid_argument("cover relation has a cycle");

  up_.assign(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t x = *it;
    up_[x] = bit(x);
    for_each_bit(succ[x], [&](std::size_t y) { up_[x] |= up_[y]; });
  }
  down_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) for_each_bit(up_[x], [&](std::size_t y) { down_[y] |= bit(x); });

  upper_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    ElementMask strict = up_[x] & ~bit(x);
    ElementMask covers_x = strict;
    for_each_bit(strict, [&](std::size_t y) { covers_x &= ~(up_[y] & ~bit(y)); });
    upper_[x] = covers_x;
    for_each_bit(covers_x, [&](std::size_t y) { covers_.emplace_back(static_cast<int>(x), static_cast<int>(y)); });
  }
  std::sort(covers_.begin(), covers_.end());
}

ElementMask Poset::all() const { return n_ == 64 ? ~ElementMask{0} : bit(n_) - 1; }

bool Poset::is_filter(ElementMask set) const {
  if (set & ~all()) return false;
  bool closed = true;
  for_each_bit(set, [&](std::size_t x) { closed = closed && (up_[x] & ~set) == 0; });
  return closed;
}

ElementMask Poset::minimal_elements(ElementMask set) const {
  ElementMask out = 0;
  for_each_bit(set, [&](std::size_t x) {
    if ((down_[x] & set) == bit(x)) out |= bit(x);
  });
  return out;
}

ElementMask Poset::maximal_elements(ElementMask set) const {
  ElementMask out = 0;
  for_each_bit(set, [&](std::size_t x) {
    if ((up_[x] & set) == bit(x)) out |= bit(x);
  });
  return out;
}

ElementMask Poset::up_closure(ElementMask set) const {
  ElementMask out = 0;
  for_each_bit(set, [&](std::size_t x) { out |= up_[x]; });
  return out;
}

Poset Poset::induced(ElementMask keep) const {
  keep &= all();
  std::vector<int> new_id(n_, -1);
  std::vector<std::string> labels;
  int next = 0;
  for_each_bit(keep, [&](std::size_t x) {
    new_id[x] = next++;
    labels.push_back(labels_[x]);
  });
  // The restricted order, given through all comparable pairs; the
  // constructor reduces it to covers again.
  std::vector<std::pair<int, int>> pairs;
  for_each_bit(keep, [&](std::size_t x) {
    for_each_bit(up_[x] & keep & ~bit(x), [&](std::size_t y) { pairs.emplace_back(new_id[x], new_id[y]); });
  });
  return Poset(static_cast<std::size_t>(next), std::move(pairs), std::move(labels));
}

std::string mask_to_string(const Poset& p, ElementMask set) {
  std::string s = "{";
  bool first = true;
  for_each_bit(set, [&](std::size_t x) {
    if (!first) s += ',';
    s += p.label(x);
    first = false;
  });
  return s + "}";
}

Poset make_fence(std::size_t n) {
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("z" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    const int a = static_cast<int>(i - 1), b = static_cast<int>(i);
    if (i % 2) covers.emplace_back(b, a);
    else covers.emplace_back(a, b);
  }
  return Poset(n, std::move(covers), std::move(labels));
}

Poset make_lfence(std::size_t n) {
  if (n == 0) throw std::invalid_argument("make_lfence: n must be at least 1");
  std::vector<std::pair<int, int>> covers;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i < n; ++i) {
    const int a = static_cast<int>(i - 1), b = static_cast<int>(i);
    const bool down = i <= 2 || i % 2 == 0;
    if (down) covers.emplace_back(b, a);
    else covers.emplace_back(a, b);
  }
  return Poset(n, std::move(covers), std::move(labels));
}

Poset make_lfence_alt(std::size_t n) {
  const Poset p = make_lfence(n);
  std::vector<std::pair<int, int>> covers;
  const int last = static_cast<int>(n) - 1;
  for (auto [lo, hi] : p.covers()) covers.emplace_back(last - lo, last - hi);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return Poset(n, std::move(covers), std::move(labels));
}

Poset dual(const Poset& p) {
  std::vector<std::pair<int, int>> covers;
  for (auto [lo, hi] : p.covers()) covers.emplace_back(hi, lo);
  return Poset(p.size(), std::move(covers), p.labels());
}

Poset delete_element(const Poset& p, std::size_t x) {
  if (x >= p.size()) throw std::out_of_range("delete_element: invalid element");
  return p.induced(p.all() & ~bit(x));
}

Poset star_delete(const Poset& p, std::size_t x) {
  if (x >= p.size()) throw std::out_of_range("star_delete: invalid element");
  return p.induced(p.all() & ~(p.up_set(x) | p.down_set(x)));
}

std::vector<Filter> filters(const Poset& p, std::size_t bound) {
  check_bound(p, bound);
  std::vector<Filter> out;
  for_each_antichain(p, [&](ElementMask a) { out.push_back({p.up_closure(a)}); });
  std::sort(out.begin(), out.end(), [](const Filter& a, const Filter& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.members < b.members;
  });
  return out;
}

std::vector<unsigned long long> antichain_size_counts(const Poset& p, std::size_t bound) {
  check_bound(p, bound);
  std::vector<unsigned long long> counts(1, 0);
  for_each_antichain(p, [&](ElementMask a) {
    const auto k = static_cast<std::size_t>(std::popcount(a));
    if (counts.size() <= k) counts.resize(k + 1, 0);
    ++counts[k];
  });
  return counts;
}

unsigned long long antichains(const Poset& p, std::optional<std::size_t> k, std::size_t bound) {
  const auto counts = antichain_size_counts(p, bound);
  if (!k) {
    unsigned long long total = 0;
    for (auto c : counts) total += c;
    return total;
  }
  return *k < counts.size() ? counts[*k] : 0;
}

}  // namespace mlc

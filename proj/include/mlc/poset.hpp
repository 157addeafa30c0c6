#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mlc {

// Subset of poset elements; bit i stands for element i.
using ElementMask = std::uint64_t;
constexpr std::size_t kMaxPosetElements = 64;

// An upward-closed set of poset elements.
struct Filter {
  ElementMask members = 0;
  bool contains(std::size_t x) const { return (members >> x) & 1U; }
  std::size_t size() const;
  friend bool operator==(const Filter&, const Filter&) = default;
};

// Finite poset on elements 0..n-1 given by its cover relation. The
// constructor checks acyclicity and drops every cover pair implied by
// transitivity, so covers() is always the Hasse diagram. Immutable.
class Poset {
 public:
  Poset() = default;
  // covers holds (lower, upper) pairs. Throws std::invalid_argument on an
  // out-of-range id, a self loop or a cycle, and std::length_error when
  // n exceeds kMaxPosetElements.
  Poset(std::size_t n, std::vector<std::pair<int, int>> covers, std::vector<std::string> labels = {});

  std::size_t size() const { return n_; }
  const std::vector<std::pair<int, int>>& covers() const { return covers_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t x) const { return labels_.at(x); }

  bool less_equal(std::size_t a, std::size_t b) const { return (up_[a] >> b) & 1U; }
  bool comparable(std::size_t a, std::size_t b) const { return less_equal(a, b) || less_equal(b, a); }
  ElementMask up_set(std::size_t x) const { return up_.at(x); }      // includes x
  ElementMask down_set(std::size_t x) const { return down_.at(x); }  // includes x
  ElementMask all() const;
  ElementMask upper_covers(std::size_t x) const { return upper_.at(x); }

  bool is_filter(ElementMask set) const;
  ElementMask minimal_elements(ElementMask set) const;
  ElementMask maximal_elements(ElementMask set) const;
  // Smallest filter containing set.
  ElementMask up_closure(ElementMask set) const;

  // Induced subposet on the elements of keep, renumbered in increasing id
  // order; labels are carried over.
  Poset induced(ElementMask keep) const;

  friend bool operator==(const Poset& a, const Poset& b) {
    return a.n_ == b.n_ && a.covers_ == b.covers_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<int, int>> covers_;
  std::vector<std::string> labels_;
  std::vector<ElementMask> up_, down_, upper_;
};

std::string mask_to_string(const Poset& p, ElementMask set);

// Zigzag fence z_1 > z_2 < z_3 > z_4 ... with z_1 maximal.
Poset make_fence(std::size_t n);
// L-fence x_1 > x_2 > x_3 < x_4 > x_5 < ... Throws std::invalid_argument for n = 0.
Poset make_lfence(std::size_t n);
// The same poset labelled from the other end, so the 3-chain is
// x_{n-2} < x_{n-1} < x_n.
Poset make_lfence_alt(std::size_t n);

Poset dual(const Poset& p);
// P - x. Throws std::out_of_range on an invalid id.
Poset delete_element(const Poset& p, std::size_t x);
// P * x: the elements incomparable with x.
Poset star_delete(const Poset& p, std::size_t x);

constexpr std::size_t kDefaultFilterBound = 40;

// All filters, ordered by decreasing size and then by mask. Throws
// std::length_error when |P| exceeds bound.
std::vector<Filter> filters(const Poset& p, std::size_t bound = kDefaultFilterBound);
// Number of antichains, or of antichains with exactly k elements.
unsigned long long antichains(const Poset& p, std::optional<std::size_t> k = std::nullopt,
                              std::size_t bound = kDefaultFilterBound);
// counts[k] = number of antichains with k elements.
std::vector<unsigned long long> antichain_size_counts(const Poset& p, std::size_t bound = kDefaultFilterBound);

}  // namespace mlc

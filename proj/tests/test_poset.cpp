#include "mlc/isomorphism.hpp"
#include "mlc/lattice.hpp"
#include "mlc/poset.hpp"
#include "mlc/sequences.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

using mlc::ElementMask;
using mlc::Poset;

namespace {

// Order closure by Warshall's algorithm, independent of the Poset internals.
std::vector<std::vector<bool>> closure(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::vector<bool>> le(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = true;
  for (const auto& [a, b] : p.covers()) le[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = true;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (le[i][k] && le[k][j]) le[i][j] = true;
  return le;
}

std::set<ElementMask> brute_force_filters(const Poset& p) {
  const auto le = closure(p);
  const std::size_t n = p.size();
  std::set<ElementMask> out;
  for (ElementMask s = 0; s < (ElementMask{1} << n); ++s) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if ((s >> a & 1U) && le[a][b] && !(s >> b & 1U)) ok = false;
    if (ok) out.insert(s);
  }
  return out;
}

std::size_t brute_force_antichains(const Poset& p, std::optional<std::size_t> k) {
  const auto le = closure(p);
  const std::size_t n = p.size();
  std::size_t count = 0;
  for (ElementMask s = 0; s < (ElementMask{1} << n); ++s) {
    if (k && static_cast<std::size_t>(__builtin_popcountll(s)) != *k) continue;
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a)
      for (std::size_t b = 0; b < n && ok; ++b)
        if (a != b && (s >> a & 1U) && (s >> b & 1U) && le[a][b]) ok = false;
    if (ok) ++count;
  }
  return count;
}

ElementMask mask_of(const Poset& p, std::initializer_list<const char*> labels) {
  ElementMask m = 0;
  for (const char* l : labels)
    for (std::size_t x = 0; x < p.size(); ++x)
      if (p.label(x) == l) m |= ElementMask{1} << x;
  return m;
}

bool same_lattice(const Poset& a, const Poset& b) {
  return mlc::is_isomorphic(mlc::filter_lattice(a), mlc::filter_lattice(b));
}

}  // namespace

TEST_CASE("construction validates and reduces covers") {
  const Poset chain(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(chain.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(chain.less_equal(0, 2));
  CHECK_FALSE(chain.less_equal(2, 0));
  CHECK(chain.label(1) == "2");
  CHECK_THROWS_AS(Poset(2, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Poset(2, {}, {"a"}), std::invalid_argument);
}

TEST_CASE("fences") {
  CHECK(mlc::filters(mlc::make_fence(0)).size() == 1);
  const Poset z2 = mlc::make_fence(2);
  CHECK(z2.covers().size() == 1);
  CHECK(mlc::filters(z2).size() == 3);
  CHECK(mlc::filters(mlc::make_fence(5)).size() == 13);
  CHECK(mlc::filters(mlc::make_fence(4)).size() == 8);
  const Poset z5 = mlc::make_fence(5);
  CHECK(z5.maximal_elements(z5.all()) == mask_of(z5, {"z1", "z3", "z5"}));
  for (std::size_t n = 0; n <= 20; ++n)
    CHECK(mlc::filters(mlc::make_fence(n)).size() == mlc::fibonacci(static_cast<long>(n) + 2));
}

TEST_CASE("L-fences") {
  CHECK(mlc::filters(mlc::make_lfence(2)).size() == 3);
  CHECK(mlc::filters(mlc::make_lfence(7)).size() == 29);
  CHECK_THROWS_AS(mlc::make_lfence(0), std::invalid_argument);
  const Poset x4 = mlc::make_lfence(4);
  std::set<ElementMask> expected;
  for (auto labels : std::vector<std::initializer_list<const char*>>{
           {}, {"x1"}, {"x4"}, {"x1", "x4"}, {"x1", "x2"}, {"x1", "x2", "x4"}, {"x1", "x2", "x3", "x4"}})
    expected.insert(mask_of(x4, labels));
  std::set<ElementMask> got;
  for (const auto& f : mlc::filters(x4)) got.insert(f.members);
  CHECK(got == expected);
  for (std::size_t n = 2; n <= 20; ++n)
    CHECK(mlc::filters(mlc::make_lfence(n)).size() == mlc::lucas(static_cast<long>(n)));
}

TEST_CASE("filter enumeration agrees with brute force") {
  std::vector<Poset> samples{Poset(0, {}), Poset(4, {}), Poset(4, {{0, 2}, {1, 2}, {2, 3}})};
  for (std::size_t n = 1; n <= 10; ++n) {
    samples.push_back(mlc::make_fence(n));
    samples.push_back(mlc::make_lfence(n));
    samples.push_back(mlc::make_lfence_alt(n));
  }
  for (const auto& p : samples) {
    std::set<ElementMask> got;
    for (const auto& f : mlc::filters(p)) got.insert(f.members);
    CHECK(got == brute_force_filters(p));
    CHECK(mlc::antichains(p) == brute_force_antichains(p, std::nullopt));
    CHECK(mlc::antichains(p) == mlc::filters(p).size());
    const auto counts = mlc::antichain_size_counts(p);
    for (std::size_t k = 0; k < counts.size(); ++k) CHECK(counts[k] == brute_force_antichains(p, k));
  }
}

TEST_CASE("filters are sorted by size then mask") {
  const auto fs = mlc::filters(mlc::make_lfence(6));
  for (std::size_t i = 1; i < fs.size(); ++i) {
    const bool ordered = fs[i - 1].size() > fs[i].size() ||
                         (fs[i - 1].size() == fs[i].size() && fs[i - 1].members < fs[i].members);
    CHECK(ordered);
  }
  CHECK(mlc::filters(Poset(0, {})).front().members == 0);
  CHECK_THROWS_AS(mlc::filters(mlc::make_fence(41)), std::length_error);
}

TEST_CASE("antichains of the L-fence") {
  CHECK(mlc::antichains(mlc::make_lfence(5), 2) == 5);
  CHECK(mlc::antichains(mlc::make_lfence(9), 0) == 1);
  CHECK(mlc::antichains(mlc::make_lfence(6)) == 18);
}

TEST_CASE("duals") {
  const Poset chain2 = mlc::make_lfence(2);
  CHECK(same_lattice(mlc::dual(chain2), chain2));
  const Poset x5 = mlc::make_lfence(5);
  CHECK(mlc::dual(mlc::dual(x5)) == x5);
  const Poset z3 = mlc::make_fence(3);
  const Poset d = mlc::dual(z3);
  CHECK(d.maximal_elements(d.all()) == z3.minimal_elements(z3.all()));
  CHECK(mlc::filters(d).size() == 5);
}

TEST_CASE("deleting elements") {
  CHECK(mlc::delete_element(Poset(1, {}), 0).size() == 0);
  CHECK_THROWS_AS(mlc::delete_element(Poset(1, {}), 1), std::out_of_range);
  for (std::size_t n = 4; n <= 12; ++n) {
    const Poset x = mlc::make_lfence(n);
    CHECK(same_lattice(mlc::delete_element(x, 0), mlc::make_fence(n - 1)));
    CHECK(same_lattice(mlc::delete_element(x, 1), mlc::make_fence(n - 1)));
    CHECK(same_lattice(mlc::star_delete(x, n - 1), mlc::make_lfence(n - 2)));
    CHECK(same_lattice(mlc::star_delete(x, 0), mlc::make_fence(n - 3)));
  }
  CHECK(mlc::star_delete(mlc::make_lfence(3), 0).size() == 0);
  CHECK(mlc::star_delete(mlc::make_lfence(3), 2).size() == 0);
}

TEST_CASE("the mirrored L-fence has the same filter lattice") {
  for (std::size_t n = 1; n <= 12; ++n) CHECK(same_lattice(mlc::make_lfence_alt(n), mlc::make_lfence(n)));
}

TEST_CASE("closures and induced subposets") {
  const Poset x5 = mlc::make_lfence(5);
  const ElementMask x3 = mask_of(x5, {"x3"});
  CHECK(x5.up_closure(x3) == x5.up_set(2));
  CHECK(x5.is_filter(x5.up_set(2)));
  CHECK_FALSE(x5.is_filter(x3));
  CHECK(mlc::mask_to_string(x5, mask_of(x5, {"x1", "x4"})) == "{x1,x4}");
  const Poset sub = x5.induced(mask_of(x5, {"x1", "x2", "x3"}));
  CHECK(sub.size() == 3);
  CHECK(sub.covers().size() == 2);
  for (std::size_t n = 1; n <= 12; ++n) {
    const Poset p = mlc::make_lfence(n);
    const auto le = closure(p);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) CHECK(p.less_equal(a, b) == le[a][b]);
  }
}

#include "mlc/set_packing.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <unordered_set>

namespace mlc {

SearchLimits limits_from_environment() {
  SearchLimits limits;
  if (const char* v = std::getenv("MLC_TIME_LIMIT")) {
    char* end = nullptr;
    const double seconds = std::strtod(v, &end);
    if (end != v && seconds > 0) limits.time_limit_seconds = seconds;
  }
  return limits;
}

namespace {

constexpr double kEps = 1e-9;

// Dense tableau simplex for max c.x, A x <= 1, x >= 0 with every c_j = 1.
// Column j < cols are structural; cols + i is the slack of row i.
class PackingSimplex {
 public:
  PackingSimplex(std::size_t rows, std::size_t cols, const std::vector<std::vector<int>>& row_sets)
      : rows_(rows), cols_(cols), width_(cols + rows + 1), t_((rows + 1) * width_, 0.0), basis_(rows) {
    for (std::size_t j = 0; j < row_sets.size(); ++j)
      for (int r : row_sets[j]) at(static_cast<std::size_t>(r), j) = 1.0;
    // Distinct small right-hand side perturbations break the heavy
    // degeneracy of packing LPs. The reported bound comes from the dual
    // solution, which does not depend on the right-hand side.
    std::mt19937_64 rng(rows * 7919 + cols);
    std::uniform_real_distribution<double> jitter(0.0, 1e-6);
    for (std::size_t i = 0; i < rows; ++i) {
      at(i, cols + i) = 1.0;
      at(i, width_ - 1) = 1.0 + jitter(rng);
      basis_[i] = cols + i;
    }
    for (std::size_t j = 0; j < cols; ++j) at(rows, j) = -1.0;
  }

  void solve() {
    // Dantzig pricing until the first long run of degenerate pivots, Bland's
    // rule from then on so the method cannot cycle.
    std::size_t degenerate = 0;
    bool bland = false;
    while (true) {
      if (pivots_ > kPivotLimit) throw std::runtime_error("packing LP: pivot limit reached");
      bland = bland || degenerate > 50;
      std::size_t enter = width_;
      double best = -kEps;
      for (std::size_t j = 0; j + 1 < width_; ++j) {
        const double c = at(rows_, j);
        if (c < -kEps && (bland ? enter == width_ : c < best)) {
          best = c;
          enter = j;
        }
      }
      if (enter == width_) return;
      std::size_t leave = rows_;
      double ratio = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < rows_; ++i) {
        const double a = at(i, enter);
        if (a > kEps) {
          const double q = at(i, width_ - 1) / a;
          if (q < ratio - kEps || (q < ratio + kEps && leave < rows_ && basis_[i] < basis_[leave])) {
            ratio = q;
            leave = i;
          }
        }
      }
      if (leave == rows_) throw std::logic_error("packing LP is unbounded");
      degenerate = ratio < kEps ? degenerate + 1 : 0;
      pivot(leave, enter);
      ++pivots_;
    }
  }

  double objective() const { return t_[rows_ * width_ + width_ - 1]; }
  double dual(std::size_t row) const { return t_[rows_ * width_ + cols_ + row]; }
  std::size_t pivots() const { return pivots_; }

 private:
  double& at(std::size_t i, std::size_t j) { return t_[i * width_ + j]; }
  double at(std::size_t i, std::size_t j) const { return t_[i * width_ + j]; }

  void pivot(std::size_t r, std::size_t c) {
    double* pr = &t_[r * width_];
    const double inv = 1.0 / pr[c];
    for (std::size_t j = 0; j < width_; ++j) pr[j] *= inv;
    pr[c] = 1.0;
    for (std::size_t i = 0; i <= rows_; ++i) {
      if (i == r) continue;
      double* pi = &t_[i * width_];
      const double f = pi[c];
      if (std::fabs(f) < 1e-15) continue;
      for (std::size_t j = 0; j < width_; ++j) pi[j] -= f * pr[j];
      pi[c] = 0.0;
    }
    basis_[r] = c;
  }

  static constexpr std::size_t kPivotLimit = 1'000'000;

  std::size_t rows_, cols_, width_;
  std::vector<double> t_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

class PackingSearch {
 public:
  PackingSearch(std::size_t universe, const std::vector<std::vector<int>>& sets, const SearchLimits& limits)
      : sets_(sets), limits_(limits), members_(universe), start_(std::chrono::steady_clock::now()) {
    for (std::size_t s = 0; s < sets.size(); ++s)
      for (int v : sets[s]) members_[v].push_back(static_cast<int>(s));
  }

  // Looks for target disjoint sets; fills chosen on success.
  bool feasible(long target, std::vector<int>& chosen) {
    const std::size_t n = members_.size();
    const std::size_t piece = sets_.empty() ? 1 : sets_[0].size();
    free_.assign(n, 1);
    blocked_.assign(sets_.size(), 0);
    live_.assign(n, 0);
    for (std::size_t v = 0; v < n; ++v) live_[v] = static_cast<int>(members_[v].size());
    stack_.clear();
    failed_.clear();
    free_count_ = static_cast<long>(n);
    target_ = target;
    piece_ = static_cast<long>(piece);
    if (!dfs(0)) return false;
    chosen = stack_;
    return true;
  }

  std::uint64_t nodes() const { return nodes_; }

 private:
  // Marks v as unavailable, killing every set through it.
  void occupy(int v) {
    free_[v] = 0;
    --free_count_;
    for (int s : members_[v])
      if (blocked_[s]++ == 0)
        for (int u : sets_[s]) --live_[u];
  }

  void release(int v) {
    for (int s : members_[v])
      if (--blocked_[s] == 0)
        for (int u : sets_[s]) ++live_[u];
    free_[v] = 1;
    ++free_count_;
  }

  std::string state_key(long chosen) const {
    std::string key(free_.begin(), free_.end());
    key += std::to_string(chosen);
    return key;
  }

  bool dfs(long chosen) {
    if (chosen == target_) return true;
    if (++nodes_ > limits_.node_limit) throw LimitExceeded("set packing: node limit reached");
    if ((nodes_ & 0xFFF) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > limits_.time_limit_seconds) throw LimitExceeded("set packing: time limit reached");
    }
    // Free vertices that no live set can cover are wasted for good.
    long usable = 0;
    int branch = -1;
    for (std::size_t v = 0; v < free_.size(); ++v) {
      if (!free_[v] || live_[v] == 0) continue;
      ++usable;
      if (branch < 0 || live_[v] < live_[branch]) branch = static_cast<int>(v);
    }
    const long needed = target_ - chosen;
    if (usable < needed * piece_) return false;
    std::string key;
    if (failed_.size() < kMemoLimit) {
      key = state_key(chosen);
      if (failed_.count(key)) return false;
    }

    std::vector<int> options;
    for (int s : members_[branch])
      if (blocked_[s] == 0) options.push_back(s);
    for (int s : options) {
      if (blocked_[s] != 0) continue;
      for (int u : sets_[s]) occupy(u);
      stack_.push_back(s);
      if (dfs(chosen + 1)) return true;
      stack_.pop_back();
      for (auto it = sets_[s].rbegin(); it != sets_[s].rend(); ++it) release(*it);
    }
    // Leave the branching vertex uncovered.
    if (usable - 1 >= needed * piece_) {
      occupy(branch);
      const bool ok = dfs(chosen);
      release(branch);
      if (ok) return true;
    }
    if (!key.empty()) failed_.insert(std::move(key));
    return false;
  }

  static constexpr std::size_t kMemoLimit = 200'000;

  const std::vector<std::vector<int>>& sets_;
  SearchLimits limits_;
  std::vector<std::vector<int>> members_;
  std::vector<char> free_;
  std::vector<int> blocked_, live_, stack_;
  std::unordered_set<std::string> failed_;
  long free_count_ = 0, target_ = 0, piece_ = 1;
  std::uint64_t nodes_ = 0;
  std::chrono::steady_clock::time_point start_;
};

std::vector<int> greedy_packing(std::size_t universe, const std::vector<std::vector<int>>& sets) {
  std::vector<std::vector<int>> members(universe);
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int v : sets[s]) members[v].push_back(static_cast<int>(s));
  std::vector<char> used(universe, 0), dead(sets.size(), 0);
  std::vector<int> live(universe, 0);
  for (std::size_t v = 0; v < universe; ++v) live[v] = static_cast<int>(members[v].size());
  std::vector<int> chosen;
  while (true) {
    int v = -1;
    for (std::size_t u = 0; u < universe; ++u)
      if (!used[u] && live[u] > 0 && (v < 0 || live[u] < live[v])) v = static_cast<int>(u);
    if (v < 0) return chosen;
    // Among the sets through the most constrained vertex, take the one
    // that destroys the fewest other sets.
    int best = -1;
    long best_damage = 0;
    for (int s : members[v]) {
      if (dead[s]) continue;
      long damage = 0;
      for (int u : sets[s]) damage += live[u];
      if (best < 0 || damage < best_damage) {
        best = s;
        best_damage = damage;
      }
    }
    chosen.push_back(best);
    for (int u : sets[best]) {
      used[u] = 1;
      for (int s : members[u])
        if (!dead[s]) {
          dead[s] = 1;
          for (int w : sets[s]) --live[w];
        }
    }
  }
}

constexpr std::uint64_t kLocalSearchSteps = 20'000;

// Iterated local search on the conflict graph of the sets (two sets
// conflict when they meet), with (1,2)-swaps and random forced insertions.
// Deterministic for a fixed seed. Returns the best packing found.
std::vector<int> local_search_packing(std::size_t universe, const std::vector<std::vector<int>>& sets, long target,
                                      std::vector<int> start, const SearchLimits& limits, std::uint64_t& steps) {
  const std::size_t m = sets.size();
  std::vector<std::vector<int>> members(universe);
  for (std::size_t s = 0; s < m; ++s)
    for (int v : sets[s]) members[v].push_back(static_cast<int>(s));
  std::vector<std::vector<int>> conflicts(m);
  for (std::size_t s = 0; s < m; ++s) {
    for (int v : sets[s])
      for (int t : members[v])
        if (t != static_cast<int>(s)) conflicts[s].push_back(t);
    std::sort(conflicts[s].begin(), conflicts[s].end());
    conflicts[s].erase(std::unique(conflicts[s].begin(), conflicts[s].end()), conflicts[s].end());
  }
  auto adjacent = [&](int a, int b) { return std::binary_search(conflicts[a].begin(), conflicts[a].end(), b); };

  std::vector<char> in(m, 0);
  std::vector<int> tight(m, 0);
  long size = 0;
  auto insert = [&](int s) {
    in[s] = 1;
    ++size;
    for (int t : conflicts[s]) ++tight[t];
  };
  auto remove = [&](int s) {
    in[s] = 0;
    --size;
    for (int t : conflicts[s]) --tight[t];
  };
  for (int s : start) insert(s);

  std::mt19937_64 rng(0x5eed);
  auto fill_free = [&] {
    for (std::size_t s = 0; s < m; ++s)
      if (!in[s] && tight[s] == 0) insert(static_cast<int>(s));
  };
  auto improve = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      fill_free();
      for (std::size_t x = 0; x < m && !changed; ++x) {
        if (!in[x]) continue;
        std::vector<int> one_tight;
        for (int t : conflicts[x])
          if (!in[t] && tight[t] == 1) one_tight.push_back(t);
        for (std::size_t i = 0; i < one_tight.size() && !changed; ++i)
          for (std::size_t j = i + 1; j < one_tight.size() && !changed; ++j)
            if (!adjacent(one_tight[i], one_tight[j])) {
              remove(static_cast<int>(x));
              insert(one_tight[i]);
              insert(one_tight[j]);
              changed = true;
            }
      }
    }
  };

  const auto begin = std::chrono::steady_clock::now();
  improve();
  std::vector<char> best = in;
  long best_size = size;
  std::vector<char> current = in;
  long current_size = size;
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const std::uint64_t budget = std::min<std::uint64_t>(limits.node_limit, kLocalSearchSteps);
  while (best_size < target && steps < budget) {
    ++steps;
    if ((steps & 0x3F) == 0) {
      const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - begin;
      if (elapsed.count() > limits.time_limit_seconds / 2) break;
    }
    const int forced = coin(rng) < 0.5 ? 1 : 2;
    for (int f = 0; f < forced; ++f) {
      int s = static_cast<int>(pick(rng));
      for (int tries = 0; tries < 8 && in[s]; ++tries) s = static_cast<int>(pick(rng));
      if (in[s]) continue;
      for (int t : conflicts[s])
        if (in[t]) remove(t);
      insert(s);
    }
    improve();
    if (size > best_size) {
      best = in;
      best_size = size;
    }
    const long drop = current_size - size;
    if (drop <= 0 || coin(rng) < 1.0 / (1.0 + static_cast<double>(drop * (best_size - size + 1)))) {
      current = in;
      current_size = size;
    } else {
      for (std::size_t s = 0; s < m; ++s)
        if (in[s] && !current[s]) remove(static_cast<int>(s));
      for (std::size_t s = 0; s < m; ++s)
        if (!in[s] && current[s]) insert(static_cast<int>(s));
    }
  }
  std::vector<int> out;
  for (std::size_t s = 0; s < m; ++s)
    if (best[s]) out.push_back(static_cast<int>(s));
  return out;
}

// Size of a greedy hitting set: every set must meet it, and disjoint sets
// need distinct hitters.
long hitting_set_bound(std::size_t universe, const std::vector<std::vector<int>>& sets) {
  std::vector<std::vector<int>> members(universe);
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int v : sets[s]) members[v].push_back(static_cast<int>(s));
  std::vector<char> hit(sets.size(), 0);
  std::size_t remaining = sets.size();
  long size = 0;
  while (remaining > 0) {
    std::size_t best = 0;
    long best_gain = -1;
    for (std::size_t v = 0; v < universe; ++v) {
      long gain = 0;
      for (int s : members[v]) gain += !hit[s];
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    for (int s : members[best])
      if (!hit[s]) {
        hit[s] = 1;
        --remaining;
      }
    ++size;
  }
  return size;
}

}  // namespace

LpBound packing_lp_bound(std::size_t universe, const std::vector<std::vector<int>>& sets) {
  // Only vertices that lie in some set give constraints.
  std::vector<int> row_of(universe, -1);
  std::size_t rows = 0;
  std::vector<std::vector<int>> row_sets;
  for (const auto& s : sets) {
    std::vector<int> r;
    for (int v : s) {
      if (row_of.at(static_cast<std::size_t>(v)) < 0) row_of[v] = static_cast<int>(rows++);
      r.push_back(row_of[v]);
    }
    row_sets.push_back(std::move(r));
  }
  LpBound out;
  if (sets.empty()) return out;
  PackingSimplex lp(rows, sets.size(), row_sets);
  lp.solve();
  out.pivots = lp.pivots();

  std::vector<double> y(rows);
  for (std::size_t i = 0; i < rows; ++i) y[i] = std::max(0.0, lp.dual(i));
  double worst = std::numeric_limits<double>::infinity();
  for (const auto& r : row_sets) {
    double sum = 0.0;
    for (int i : r) sum += y[i];
    worst = std::min(worst, sum);
  }
  double total = 0.0;
  for (double v : y) total += v;
  out.objective = total;
  if (worst <= 0.0) {
    out.certified = static_cast<double>(rows);
  } else {
    out.certified = worst < 1.0 ? total / worst : total;
  }
  return out;
}

PackingResult max_set_packing(std::size_t universe, const std::vector<std::vector<int>>& sets,
                              const SearchLimits& limits) {
  PackingResult out;
  if (sets.empty()) return out;
  const std::size_t piece = sets[0].size();
  for (const auto& s : sets) {
    if (s.size() != piece || piece == 0) throw std::invalid_argument("max_set_packing: sets must share one size");
    for (int v : s)
      if (v < 0 || static_cast<std::size_t>(v) >= universe)
        throw std::invalid_argument("max_set_packing: element out of range");
  }

  std::vector<char> coverable(universe, 0);
  for (const auto& s : sets)
    for (int v : s) coverable[v] = 1;
  const long volume = static_cast<long>(std::count(coverable.begin(), coverable.end(), 1)) /
                      static_cast<long>(piece);
  const LpBound lp = packing_lp_bound(universe, sets);
  const long lp_floor = static_cast<long>(std::floor(lp.certified * (1.0 + 1e-12) + 1e-7));
  out.lp_objective = lp.objective;
  out.upper_bound = std::min({volume, lp_floor, hitting_set_bound(universe, sets)});

  const std::vector<int> greedy = greedy_packing(universe, sets);
  out.lower_bound = static_cast<long>(greedy.size());
  out.size = out.lower_bound;
  out.chosen = greedy;

  if (out.size < out.upper_bound) {
    std::uint64_t steps = 0;
    std::vector<int> found = local_search_packing(universe, sets, out.upper_bound, greedy, limits, steps);
    out.nodes += steps;
    if (static_cast<long>(found.size()) > out.size) {
      out.size = static_cast<long>(found.size());
      out.chosen = std::move(found);
    }
  }

  PackingSearch search(universe, sets, limits);
  for (long target = out.upper_bound; target > out.size; --target) {
    std::vector<int> chosen;
    if (search.feasible(target, chosen)) {
      out.size = target;
      out.chosen = std::move(chosen);
      break;
    }
  }
  out.nodes += search.nodes();
  std::sort(out.chosen.begin(), out.chosen.end());
  return out;
}

}  // namespace mlc

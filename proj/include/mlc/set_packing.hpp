#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlc {

// Raised when a search exceeds an explicit node or time budget.
class LimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SearchLimits {
  std::uint64_t node_limit = 200'000'000;
  double time_limit_seconds = 300.0;
};

// Default limits with the time limit taken from MLC_TIME_LIMIT (seconds)
// when that variable is set.
SearchLimits limits_from_environment();

struct LpBound {
  double objective = 0.0;    // simplex optimum of the relaxation
  double certified = 0.0;    // sum of a feasible dual solution
  std::size_t pivots = 0;
};

// Relaxation of maximum set packing: maximise sum x_s subject to
// sum_{s containing v} x_s <= 1 and x >= 0. The certified value comes from a
// dual solution rescaled to be feasible, so it bounds the integer optimum
// regardless of rounding inside the simplex.
LpBound packing_lp_bound(std::size_t universe, const std::vector<std::vector<int>>& sets);

struct PackingResult {
  long size = 0;
  long lower_bound = 0;  // greedy
  long upper_bound = 0;  // best of the LP, volume and hitting-set bounds
  double lp_objective = 0.0;
  std::vector<int> chosen;  // indices into the input sets
  std::uint64_t nodes = 0;
};

// Maximum number of pairwise disjoint sets. All sets must have the same
// size. Throws LimitExceeded when the search runs past the limits.
PackingResult max_set_packing(std::size_t universe, const std::vector<std::vector<int>>& sets,
                              const SearchLimits& limits = {});

}  // namespace mlc

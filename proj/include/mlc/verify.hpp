#pragma once

#include "mlc/io.hpp"
#include "mlc/set_packing.hpp"

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Verification suites: each check runs over a range of n and compares an
// expected value with an independently computed one.
namespace mlc {

enum class CheckStatus { pass, fail, discrepancy_logged };
const char* to_string(CheckStatus status);

struct CheckRecord {
  std::string name;
  std::string range;  // such as "n=0..12"
  CheckStatus status = CheckStatus::pass;
  std::string expected;
  std::string actual;
  std::string note;
};

struct RunReport {
  std::string suite;
  std::vector<CheckRecord> checks;  // sorted by name
  double wall_seconds = 0.0;

  std::size_t count(CheckStatus status) const;
  // 1 if any check failed, else 0.
  int exit_code() const;
  const CheckRecord* find(std::string_view name) const;
  Json to_json() const;
  std::string to_plain() const;
};

enum class Suite { identities, oracle_crosscheck, resonance, structure, all };
const char* to_string(Suite suite);
std::optional<Suite> parse_suite(std::string_view name);
// Default max_n when none is given.
long default_max_n(Suite suite);
// Largest max_n accepted; beyond it the brute-force parts become impractical.
long max_n_guard(Suite suite);

// One comparison inside a check.
struct Comparison {
  bool ok = false;
  std::string expected;
  std::string actual;
};

Comparison compare_values(const std::vector<BigInt>& expected, const std::vector<BigInt>& actual);
Comparison compare_values(const BigInt& expected, const BigInt& actual);
Comparison compare_flag(bool ok, const std::string& what);

// Runs body for every n in [lo, hi]. The record passes when every comparison
// does; otherwise it shows the first mismatch and lists the failing n.
// LimitExceeded and other exceptions count as failures of that n.
CheckRecord range_check(const std::string& name, long lo, long hi, const std::function<Comparison(long)>& body);

// Throws std::invalid_argument when max_n is negative or above the guard.
RunReport run_suite(Suite suite, long max_n, const SearchLimits& limits = limits_from_environment());

// Individual suites, also used by the acceptance runner.
std::vector<CheckRecord> identity_checks(long max_n);
std::vector<CheckRecord> generating_function_checks(long order);
std::vector<CheckRecord> analytic_checks();
std::vector<CheckRecord> oracle_checks(long max_n, const SearchLimits& limits);
std::vector<CheckRecord> discrepancy_checks(long max_n);
std::vector<CheckRecord> resonance_checks(long max_n);
std::vector<CheckRecord> structure_checks(long max_n);

}  // namespace mlc

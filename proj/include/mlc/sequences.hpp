#pragma once

#include "mlc/bigint.hpp"

#include <cstddef>
#include <mutex>
#include <shared_mutex>
#include <vector>

namespace mlc {

enum class SequenceKind { fibonacci, lucas, jacobsthal_lucas, padovan123 };

const char* to_string(SequenceKind kind);

// Memoized integer sequence. Reads take a shared lock; extension takes the
// exclusive lock, so one table can be shared between threads.
class SequenceTable {
 public:
  explicit SequenceTable(SequenceKind kind);

  SequenceKind kind() const { return kind_; }
  BigInt at(std::size_t n) const;
  // Checks the defining recurrence on every cached index.
  bool recurrence_holds() const;
  std::size_t cached() const;

 private:
  void extend_to(std::size_t n) const;

  SequenceKind kind_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<BigInt> values_;
};

// F_0 = 0, F_1 = 1. Negative indices follow F_{-n} = (-1)^{n+1} F_n.
BigInt fibonacci(long n);
// L_0 = 2, L_1 = 1.
BigInt lucas(long n);
// J_0 = 2, J_1 = 1, J_n = J_{n-1} + 2 J_{n-2}.
BigInt jacobsthal_lucas(long n);
// p'_0 = 1, p'_1 = 2, p'_2 = 3, p'_n = p'_{n-2} + p'_{n-3}.
BigInt padovan123(long n);

}  // namespace mlc

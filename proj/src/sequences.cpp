#include "mlc/sequences.hpp"

#include <stdexcept>

namespace mlc {

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

const char* to_string(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::fibonacci: return "fibonacci";
    case SequenceKind::lucas: return "lucas";
    case SequenceKind::jacobsthal_lucas: return "jacobsthal_lucas";
    case SequenceKind::padovan123: return "padovan123";
  }
  return "?";
}

namespace {

std::vector<BigInt> seed(SequenceKind kind) {
  switch (kind) {
    case SequenceKind::fibonacci: return {0, 1};
    case SequenceKind::lucas: return {2, 1};
    case SequenceKind::jacobsthal_lucas: return {2, 1};
    case SequenceKind::padovan123: return {1, 2, 3};
  }
  return {};
}

BigInt step(SequenceKind kind, const std::vector<BigInt>& v, std::size_t n) {
  switch (kind) {
    case SequenceKind::fibonacci:
    case SequenceKind::lucas: return v[n - 1] + v[n - 2];
    case SequenceKind::jacobsthal_lucas: return v[n - 1] + 2 * v[n - 2];
    case SequenceKind::padovan123: return v[n - 2] + v[n - 3];
  }
  return 0;
}

}  // namespace

SequenceTable::SequenceTable(SequenceKind kind) : kind_(kind), values_(seed(kind)) {}

void SequenceTable::extend_to(std::size_t n) const {
  std::unique_lock lock(mutex_);
  while (values_.size() <= n) values_.push_back(step(kind_, values_, values_.size()));
}

BigInt SequenceTable::at(std::size_t n) const {
  {
    std::shared_lock lock(mutex_);
    if (n < values_.size()) return values_[n];
  }
  extend_to(n);
  std::shared_lock lock(mutex_);
  return values_[n];
}

std::size_t SequenceTable::cached() const {
  std::shared_lock lock(mutex_);
  return values_.size();
}

bool SequenceTable::recurrence_holds() const {
  std::shared_lock lock(mutex_);
  const auto base = seed(kind_);
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i < base.size()) {
      if (values_[i] != base[i]) return false;
    } else if (values_[i] != step(kind_, values_, i)) {
      return false;
    }
  }
  return true;
}

namespace {
const SequenceTable& table(SequenceKind kind) {
  static const SequenceTable fib(SequenceKind::fibonacci);
  static const SequenceTable luc(SequenceKind::lucas);
  static const SequenceTable jac(SequenceKind::jacobsthal_lucas);
  static const SequenceTable pad(SequenceKind::padovan123);
  switch (kind) {
    case SequenceKind::fibonacci: return fib;
    case SequenceKind::lucas: return luc;
    case SequenceKind::jacobsthal_lucas: return jac;
    case SequenceKind::padovan123: return pad;
  }
  throw std::logic_error("unknown sequence");
}
}  // namespace

BigInt fibonacci(long n) {
  if (n >= 0) return table(SequenceKind::fibonacci).at(static_cast<std::size_t>(n));
  BigInt f = table(SequenceKind::fibonacci).at(static_cast<std::size_t>(-n));
  return (-n) % 2 == 0 ? BigInt(-f) : f;
}

BigInt lucas(long n) {
  if (n < 0) throw std::out_of_range("lucas: negative index");
  return table(SequenceKind::lucas).at(static_cast<std::size_t>(n));
}

BigInt jacobsthal_lucas(long n) {
  if (n < 0) throw std::out_of_range("jacobsthal_lucas: negative index");
  return table(SequenceKind::jacobsthal_lucas).at(static_cast<std::size_t>(n));
}

BigInt padovan123(long n) {
  if (n < 0) throw std::out_of_range("padovan123: negative index");
  return table(SequenceKind::padovan123).at(static_cast<std::size_t>(n));
}

}  // namespace mlc

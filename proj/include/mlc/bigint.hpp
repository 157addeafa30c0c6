#pragma once

#include <gmpxx.h>

#include <string>

namespace mlc {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

/// C(n, k) with C(n, k) = 0 whenever k < 0, n < 0 or k > n.
BigInt binomial(long n, long k);

}  // namespace mlc

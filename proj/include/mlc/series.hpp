#pragma once

#include "mlc/polynomial.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace mlc {

// numerator / (divisor * denominator) + polynomial_part, read as a formal
// power series in y with polynomial-in-x coefficients. The denominator must
// have constant term +-1 so the expansion stays in Z[x][[y]]; the divisor
// (default 1) must divide every expanded coefficient exactly.
struct RationalBivariateSeries {
  std::string name;
  BiPolynomial numerator;
  BiPolynomial denominator;
  BiPolynomial polynomial_part;
  BigInt divisor = 1;

  // Coefficients of y^0 .. y^order.
  std::vector<IntPolynomial> expand(std::size_t order) const;
  // Multiplies the rational part of the expansion back by the denominator
  // and compares with the numerator up to y^order.
  bool verify_expansion(std::size_t order) const;
};

// [y^n] of a series; shorthand for expand(n)[n].
IntPolynomial coefficient(const RationalBivariateSeries& gf, std::size_t n);

}  // namespace mlc

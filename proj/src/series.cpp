#include "mlc/series.hpp"

#include <stdexcept>

namespace mlc {

namespace {

struct Normalized {
  BiPolynomial numerator;
  BiPolynomial denominator;
};

Normalized normalize(const RationalBivariateSeries& gf) {
  const IntPolynomial& c0 = gf.denominator.at_y(0);
  if (c0 == IntPolynomial{1}) return {gf.numerator, gf.denominator};
  if (c0 == IntPolynomial{-1}) {
    BiPolynomial minus_one = BiPolynomial::from_x(IntPolynomial{-1});
    return {gf.numerator * minus_one, gf.denominator * minus_one};
  }
  throw std::domain_error(gf.name + ": denominator constant term is not +-1, series not expandable");
}

std::vector<IntPolynomial> expand_raw(const Normalized& r, std::size_t order) {
  std::vector<IntPolynomial> c(order + 1);
  const auto& den = r.denominator.y_coeffs();
  for (std::size_t n = 0; n <= order; ++n) {
    IntPolynomial acc = r.numerator.at_y(n);
    for (std::size_t i = 1; i < den.size() && i <= n; ++i) {
      if (den[i].is_zero()) continue;
      acc -= den[i] * c[n - i];
    }
    c[n] = std::move(acc);
  }
  return c;
}

}  // namespace

std::vector<IntPolynomial> RationalBivariateSeries::expand(std::size_t order) const {
  if (divisor == 0) throw std::domain_error(name + ": zero divisor");
  auto c = expand_raw(normalize(*this), order);
  for (std::size_t n = 0; n <= order; ++n) {
    if (divisor != 1) c[n] = c[n].divided_exactly(divisor);
    c[n] += polynomial_part.at_y(n);
  }
  return c;
}

bool RationalBivariateSeries::verify_expansion(std::size_t order) const {
  const Normalized r = normalize(*this);
  const auto c = expand_raw(r, order);
  const auto& den = r.denominator.y_coeffs();
  for (std::size_t n = 0; n <= order; ++n) {
    IntPolynomial acc;
    for (std::size_t i = 0; i < den.size() && i <= n; ++i) acc += den[i] * c[n - i];
    if (!(acc == r.numerator.at_y(n))) return false;
  }
  return true;
}

IntPolynomial coefficient(const RationalBivariateSeries& gf, std::size_t n) { return gf.expand(n)[n]; }

}  // namespace mlc

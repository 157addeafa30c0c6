#pragma once

#include "mlc/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace mlc {

// Dense univariate polynomial with arbitrary-precision integer coefficients.
// coeffs()[i] is the coefficient of x^i. Trailing zeros are always trimmed, so
// the zero polynomial has an empty coefficient vector.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<long> coeffs);
  explicit IntPolynomial(std::vector<BigInt> coeffs);

  static IntPolynomial constant(const BigInt& c);
  static IntPolynomial monomial(const BigInt& c, std::size_t power);
  static IntPolynomial x() { return monomial(1, 1); }

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  // Coefficient of x^k; zero outside the stored range (including k < 0).
  BigInt operator[](long k) const;
  std::size_t term_count() const;

  BigInt evaluate(const BigInt& at) const;
  double evaluate(double at) const;
  // Sum of |c_k| |at|^k; the scale used for relative root residuals.
  double magnitude_at(double at) const;

  IntPolynomial derivative() const;
  // p(x + shift), computed by Horner composition.
  IntPolynomial taylor_shift(const BigInt& shift) const;
  // p(q(x)).
  IntPolynomial compose(const IntPolynomial& q) const;
  IntPolynomial pow(unsigned e) const;
  IntPolynomial shifted(std::size_t power) const;  // x^power * p
  // Exact division of every coefficient; throws std::domain_error otherwise.
  IntPolynomial divided_exactly(const BigInt& d) const;

  IntPolynomial& operator+=(const IntPolynomial& o);
  IntPolynomial& operator-=(const IntPolynomial& o);
  IntPolynomial& operator*=(const IntPolynomial& o);
  IntPolynomial& operator*=(const BigInt& c);

  friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
  friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
  friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
  friend IntPolynomial operator*(IntPolynomial a, const BigInt& c) { return a *= c; }
  friend IntPolynomial operator*(const BigInt& c, IntPolynomial a) { return a *= c; }
  IntPolynomial operator-() const;
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  // Space separated coefficients, lowest degree first ("11 15 5"); "0" for zero.
  std::string to_plain() const;
  // Human readable form such as "7+8x+2x^2".
  std::string to_string() const;
  std::vector<std::string> decimal_coeffs() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

// a_k^2 >= a_{k-1} a_{k+1} for every interior k.
bool is_log_concave(const std::vector<BigInt>& seq);
// Non-decreasing then non-increasing.
bool is_unimodal(const std::vector<BigInt>& seq);

// Polynomial in y whose coefficients are polynomials in x.
class BiPolynomial {
 public:
  BiPolynomial() = default;
  explicit BiPolynomial(std::vector<IntPolynomial> y_coeffs);
  static BiPolynomial from_x(const IntPolynomial& p) { return BiPolynomial({p}); }
  static BiPolynomial y_power(std::size_t power, const IntPolynomial& c = IntPolynomial{1});
  static BiPolynomial y() { return y_power(1); }

  const std::vector<IntPolynomial>& y_coeffs() const { return terms_; }
  const IntPolynomial& at_y(std::size_t k) const;
  long y_degree() const { return static_cast<long>(terms_.size()) - 1; }
  bool is_zero() const { return terms_.empty(); }

  BiPolynomial& operator+=(const BiPolynomial& o);
  BiPolynomial& operator-=(const BiPolynomial& o);
  BiPolynomial& operator*=(const BiPolynomial& o);
  friend BiPolynomial operator+(BiPolynomial a, const BiPolynomial& b) { return a += b; }
  friend BiPolynomial operator-(BiPolynomial a, const BiPolynomial& b) { return a -= b; }
  friend BiPolynomial operator*(BiPolynomial a, const BiPolynomial& b) { return a *= b; }
  BiPolynomial pow(unsigned e) const;
  friend bool operator==(const BiPolynomial& a, const BiPolynomial& b) { return a.terms_ == b.terms_; }

 private:
  void trim();
  std::vector<IntPolynomial> terms_;
};

}  // namespace mlc

#include "mlc/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace mlc {

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t power) {
  std::vector<BigInt> v(power + 1);
  v[power] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::operator[](long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::size_t IntPolynomial::term_count() const {
  std::size_t n = 0;
  for (const auto& c : coeffs_) n += (c != 0);
  return n;
}

BigInt IntPolynomial::evaluate(const BigInt& at) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double IntPolynomial::evaluate(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

double IntPolynomial::magnitude_at(double at) const {
  double acc = 0.0;
  const double a = std::fabs(at);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * a + std::fabs(it->get_d());
  return acc;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(d));
}

IntPolynomial IntPolynomial::taylor_shift(const BigInt& shift) const {
  return compose(IntPolynomial(std::vector<BigInt>{shift, 1}));
}

IntPolynomial IntPolynomial::compose(const IntPolynomial& q) const {
  IntPolynomial acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += constant(*it);
  }
  return acc;
}

IntPolynomial IntPolynomial::pow(unsigned e) const {
  IntPolynomial result{1};
  IntPolynomial base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

IntPolynomial IntPolynomial::shifted(std::size_t power) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(power);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::divided_exactly(const BigInt& d) const {
  if (d == 0) throw std::domain_error("division by zero");
  std::vector<BigInt> v = coeffs_;
  for (auto& c : v) {
    if (!mpz_divisible_p(c.get_mpz_t(), d.get_mpz_t()))
      throw std::domain_error("coefficient " + c.get_str() + " not divisible by " + d.get_str());
    mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
  }
  return IntPolynomial(std::move(v));
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& c) {
  for (auto& v : coeffs_) v *= c;
  trim();
  return *this;
}

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string IntPolynomial::to_plain() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? " " : "") << coeffs_[i].get_str();
  return os.str();
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c > 0 ? "+" : "-");
    else if (c < 0) os << "-";
    BigInt a = abs(c);
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::vector<std::string> IntPolynomial::decimal_coeffs() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) out.push_back(c.get_str());
  if (out.empty()) out.push_back("0");
  return out;
}

bool is_log_concave(const std::vector<BigInt>& seq) {
  for (std::size_t k = 1; k + 1 < seq.size(); ++k)
    if (seq[k] * seq[k] < seq[k - 1] * seq[k + 1]) return false;
  return true;
}

bool is_unimodal(const std::vector<BigInt>& seq) {
  std::size_t i = 1;
  while (i < seq.size() && seq[i] >= seq[i - 1]) ++i;
  while (i < seq.size() && seq[i] <= seq[i - 1]) ++i;
  return i >= seq.size();
}

BiPolynomial::BiPolynomial(std::vector<IntPolynomial> y_coeffs) : terms_(std::move(y_coeffs)) { trim(); }

BiPolynomial BiPolynomial::y_power(std::size_t power, const IntPolynomial& c) {
  std::vector<IntPolynomial> v(power + 1);
  v[power] = c;
  return BiPolynomial(std::move(v));
}

const IntPolynomial& BiPolynomial::at_y(std::size_t k) const {
  static const IntPolynomial zero;
  return k < terms_.size() ? terms_[k] : zero;
}

void BiPolynomial::trim() {
  while (!terms_.empty() && terms_.back().is_zero()) terms_.pop_back();
}

BiPolynomial& BiPolynomial::operator+=(const BiPolynomial& o) {
  if (o.terms_.size() > terms_.size()) terms_.resize(o.terms_.size());
  for (std::size_t i = 0; i < o.terms_.size(); ++i) terms_[i] += o.terms_[i];
  trim();
  return *this;
}

BiPolynomial& BiPolynomial::operator-=(const BiPolynomial& o) {
  if (o.terms_.size() > terms_.size()) terms_.resize(o.terms_.size());
  for (std::size_t i = 0; i < o.terms_.size(); ++i) terms_[i] -= o.terms_[i];
  trim();
  return *this;
}

BiPolynomial& BiPolynomial::operator*=(const BiPolynomial& o) {
  if (is_zero() || o.is_zero()) {
    terms_.clear();
    return *this;
  }
  std::vector<IntPolynomial> r(terms_.size() + o.terms_.size() - 1);
  for (std::size_t i = 0; i < terms_.size(); ++i)
    for (std::size_t j = 0; j < o.terms_.size(); ++j) r[i + j] += terms_[i] * o.terms_[j];
  terms_ = std::move(r);
  trim();
  return *this;
}

BiPolynomial BiPolynomial::pow(unsigned e) const {
  BiPolynomial result = from_x(IntPolynomial{1});
  for (unsigned i = 0; i < e; ++i) result *= *this;
  return result;
}

}  // namespace mlc

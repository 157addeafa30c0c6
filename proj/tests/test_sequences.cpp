#include "mlc/sequences.hpp"

#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

using mlc::BigInt;

namespace {

long long naive_fibonacci(int n) {
  long long a = 0, b = 1;
  for (int i = 0; i < n; ++i) {
    const long long c = a + b;
    a = b;
    b = c;
  }
  return a;
}

}  // namespace

TEST_CASE("fibonacci matches a plain loop and Binet's formula") {
  for (int n = 0; n <= 60; ++n) CHECK(mlc::fibonacci(n) == BigInt(std::to_string(naive_fibonacci(n))));
  const double phi = (1 + std::sqrt(5.0)) / 2;
  for (int n = 0; n <= 40; ++n) CHECK(mlc::fibonacci(n).get_d() == std::round(std::pow(phi, n) / std::sqrt(5.0)));
}

TEST_CASE("fibonacci at negative indices") {
  CHECK(mlc::fibonacci(-1) == 1);
  CHECK(mlc::fibonacci(-2) == -1);
  CHECK(mlc::fibonacci(-5) == 5);
  CHECK(mlc::fibonacci(-6) == -8);
}

TEST_CASE("lucas numbers") {
  const std::vector<long> first{2, 1, 3, 4, 7, 11, 18, 29, 47, 76, 123, 199, 322};
  for (std::size_t n = 0; n < first.size(); ++n) CHECK(mlc::lucas(static_cast<long>(n)) == first[n]);
  for (long n = 1; n <= 80; ++n) CHECK(mlc::lucas(n) == mlc::fibonacci(n - 1) + mlc::fibonacci(n + 1));
  for (long n = 4; n <= 80; ++n) CHECK(mlc::lucas(n) == 3 * mlc::lucas(n - 2) - mlc::lucas(n - 4));
}

TEST_CASE("jacobsthal-lucas numbers equal 2^n + (-1)^n") {
  for (long n = 0; n <= 100; ++n) {
    BigInt expected = BigInt(1) << static_cast<mp_bitcnt_t>(n);
    expected += n % 2 ? -1 : 1;
    CHECK(mlc::jacobsthal_lucas(n) == expected);
  }
}

TEST_CASE("padovan variant") {
  const std::vector<long> first{1, 2, 3, 3, 5, 6, 8, 11, 14, 19, 25, 33, 44};
  for (std::size_t n = 0; n < first.size(); ++n) CHECK(mlc::padovan123(static_cast<long>(n)) == first[n]);
  CHECK_THROWS(mlc::padovan123(-1));
}

TEST_CASE("binomial coefficients vanish outside the triangle") {
  CHECK(mlc::binomial(5, 2) == 10);
  CHECK(mlc::binomial(5, 0) == 1);
  CHECK(mlc::binomial(5, 6) == 0);
  CHECK(mlc::binomial(5, -1) == 0);
  CHECK(mlc::binomial(-1, -1) == 0);
  CHECK(mlc::binomial(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("sequence tables extend lazily and are safe to share") {
  mlc::SequenceTable table(mlc::SequenceKind::lucas);
  std::vector<std::thread> workers;
  std::vector<BigInt> results(8);
  for (int t = 0; t < 8; ++t) workers.emplace_back([&, t] { results[t] = table.at(200 + static_cast<std::size_t>(t)); });
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) CHECK(results[t] == mlc::lucas(200 + t));
  CHECK(table.cached() >= 208);
  CHECK(table.recurrence_holds());
  CHECK(std::string(mlc::to_string(mlc::SequenceKind::fibonacci)) == "fibonacci");
}

#include "mlc/formulas.hpp"

#include "mlc/sequences.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace mlc {

namespace {

using P = IntPolynomial;
using B = BiPolynomial;

const P kX = P::x();

B by(std::initializer_list<P> terms) { return B(std::vector<P>(terms)); }

// Binomial coefficient extended to negative upper index,
// C(n, k) = n (n-1) ... (n-k+1) / k! for k >= 0.
BigInt binomial_ext(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) return binomial(n, k);
  BigInt v = binomial(k - n - 1, k);
  return k % 2 ? BigInt(-v) : v;
}

void require_nonnegative(long n, const char* what) {
  if (n < 0) throw std::out_of_range(std::string(what) + ": negative index");
}

// Seeds n < first_recurrent_n from the base list, then applies step.
template <typename Step>
P run_recurrence(PolyKind kind, long n, long first_recurrent_n, Step step) {
  const auto& base = base_list(kind);
  if (n < first_recurrent_n) return base.at(static_cast<std::size_t>(n));
  std::vector<P> v(base.begin(), base.begin() + first_recurrent_n);
  for (long i = first_recurrent_n; i <= n; ++i) v.push_back(step(v, i));
  return v.back();
}

}  // namespace

const char* to_string(PolyKind kind) {
  switch (kind) {
    case PolyKind::rank: return "rank";
    case PolyKind::cube: return "cube";
    case PolyKind::maximal: return "maximal";
    case PolyKind::disjoint: return "disjoint";
    case PolyKind::degree: return "degree";
    case PolyKind::indegree: return "indegree";
  }
  return "?";
}

std::optional<PolyKind> parse_poly_kind(std::string_view name) {
  for (PolyKind k : {PolyKind::rank, PolyKind::cube, PolyKind::maximal, PolyKind::disjoint, PolyKind::degree,
                     PolyKind::indegree})
    if (name == to_string(k)) return k;
  return std::nullopt;
}

std::vector<std::string> methods_for(PolyKind kind) {
  switch (kind) {
    case PolyKind::rank: return {"recurrence", "via_gamma", "genfunc", "closed_trinomial"};
    case PolyKind::cube: return {"recurrence", "closed_sqrt", "lucas_triangle", "genfunc"};
    case PolyKind::maximal: return {"recurrence", "genfunc", "closed_Y"};
    case PolyKind::disjoint: return {"recurrence", "genfunc", "per_k"};
    case PolyKind::degree: return {"recurrence", "via_gamma", "genfunc", "closed_binomial"};
    case PolyKind::indegree: return {"recurrence", "from_Q", "genfunc", "closed_Y", "telescoped", "closed_sqrt"};
  }
  return {};
}

IntPolynomial family_poly(PolyKind kind, long n, std::string_view method) {
  auto bad = [&]() -> IntPolynomial {
    throw std::invalid_argument("unknown method '" + std::string(method) + "' for kind " + to_string(kind));
  };
  switch (kind) {
    case PolyKind::rank:
      if (method == "recurrence") return rank_poly(n, RankMethod::recurrence);
      if (method == "via_gamma") return rank_poly(n, RankMethod::via_gamma);
      if (method == "genfunc") return rank_poly(n, RankMethod::genfunc);
      if (method == "closed_trinomial") return rank_poly(n, RankMethod::closed_trinomial);
      return bad();
    case PolyKind::cube:
      if (method == "recurrence") return cube_poly(n, CubeMethod::recurrence);
      if (method == "closed_sqrt") return cube_poly(n, CubeMethod::closed_sqrt);
      if (method == "lucas_triangle") return cube_poly(n, CubeMethod::lucas_triangle);
      if (method == "genfunc") return cube_poly(n, CubeMethod::genfunc);
      return bad();
    case PolyKind::maximal:
      if (method == "recurrence") return maximal_cube_poly(n, MaximalMethod::recurrence);
      if (method == "genfunc") return maximal_cube_poly(n, MaximalMethod::genfunc);
      if (method == "closed_Y") return maximal_cube_poly(n, MaximalMethod::closed_Y);
      return bad();
    case PolyKind::disjoint:
      if (method == "recurrence") return disjoint_cube_poly(n, DisjointMethod::recurrence);
      if (method == "genfunc") return disjoint_cube_poly(n, DisjointMethod::genfunc);
      if (method == "per_k") return disjoint_cube_poly(n, DisjointMethod::per_k);
      return bad();
    case PolyKind::degree:
      if (method == "recurrence") return degree_poly(n, DegreeMethod::recurrence);
      if (method == "via_gamma") return degree_poly(n, DegreeMethod::via_gamma);
      if (method == "genfunc") return degree_poly(n, DegreeMethod::genfunc);
      if (method == "closed_binomial") return degree_poly(n, DegreeMethod::closed_binomial);
      return bad();
    case PolyKind::indegree:
      if (method == "recurrence") return indegree_poly(n, IndegreeMethod::recurrence);
      if (method == "from_Q") return indegree_poly(n, IndegreeMethod::from_Q);
      if (method == "genfunc") return indegree_poly(n, IndegreeMethod::genfunc);
      if (method == "closed_Y") return indegree_poly(n, IndegreeMethod::closed_Y);
      if (method == "telescoped") return indegree_poly(n, IndegreeMethod::telescoped);
      if (method == "closed_sqrt") {
        if (n < 2) return base_list(PolyKind::indegree).at(static_cast<std::size_t>(n));
        return binet_sqrt_form(n, P{1, 4});
      }
      return bad();
  }
  return bad();
}

const std::vector<IntPolynomial>& base_list(PolyKind kind) {
  static const std::vector<P> rank = {{1}, {1, 1}, {1, 1, 1}, {1, 1, 1, 1}, {1, 1, 2, 2, 1}, {1, 2, 2, 3, 2, 1}};
  static const std::vector<P> cube = {{1}, {2, 1}, {3, 2}, {4, 3}, {7, 8, 2}, {11, 15, 5}};
  static const std::vector<P> maximal = {{1}, {0, 1}, {0, 2}, {0, 3}, {0, 1, 2}, {0, 0, 5}};
  static const std::vector<P> disjoint = {{1}, {1, 1}, {2, 1}, {2, 2}, {4, 3, 1}, {6, 5, 2}};
  static const std::vector<P> degree = {{1}, {0, 2}, {0, 2, 1}, {0, 2, 2}, {0, 1, 3, 3}, {0, 0, 5, 4, 2}};
  static const std::vector<P> indegree = {{1}, {1, 1}, {1, 2}, {1, 3}, {1, 4, 2}, {1, 5, 5}};
  switch (kind) {
    case PolyKind::rank: return rank;
    case PolyKind::cube: return cube;
    case PolyKind::maximal: return maximal;
    case PolyKind::disjoint: return disjoint;
    case PolyKind::degree: return degree;
    case PolyKind::indegree: return indegree;
  }
  throw std::logic_error("unknown kind");
}

// ---------------------------------------------------------------------------

BigInt lucas_triangle(long n, long k) {
  if (n < 0 || k < 0 || k > n) throw std::out_of_range("lucas_triangle: need 0 <= k <= n");
  return lucas_triangle_or_zero(n, k);
}

BigInt lucas_triangle_or_zero(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (n == 0) return 2;  // C(0,0) + C(-1,-1)
  return binomial(n, k) + binomial(n - 1, k - 1);
}

BigInt trinomial(long n, long k) {
  if (n < 0 || k < 0) return 0;
  BigInt sum = 0;
  for (long j = 0; j <= k / 2; ++j) sum += binomial(n, k - j) * binomial(k - j, j);
  return sum;
}

BigInt trinomial_by_power(long n, long k) {
  if (n < 0) return 0;
  return P{1, 1, 1}.pow(static_cast<unsigned>(n))[k];
}

IntPolynomial chebyshev_u(long m) {
  require_nonnegative(m, "chebyshev_u");
  P prev{1};
  if (m == 0) return prev;
  P cur{0, 2};
  for (long i = 2; i <= m; ++i) {
    P next = P{0, 2} * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial chebyshev_u_scaled(long m) {
  const P u = chebyshev_u(m);
  const P w_num{1, 1, 1};
  P out;
  for (long i = 0; i <= u.degree(); ++i) {
    BigInt c = u[i];
    if (c == 0) continue;
    BigInt two_i = BigInt(1) << static_cast<mp_bitcnt_t>(i);
    if (!mpz_divisible_p(c.get_mpz_t(), two_i.get_mpz_t()))
      throw std::logic_error("chebyshev_u_scaled: coefficient not divisible by 2^i");
    c /= two_i;
    out += (w_num.pow(static_cast<unsigned>(i)) * c).shifted(static_cast<std::size_t>(m - i));
  }
  return out;
}

// --- rank --------------------------------------------------------------------

IntPolynomial fibonacci_lattice_rank_poly(long m) {
  require_nonnegative(m, "fibonacci_lattice_rank_poly");
  // a: fence starting with a maximal element, b: its dual.
  std::vector<P> a{{1}, {1, 1}}, b{{1}, {1, 1}};
  for (long i = 2; i <= m; ++i) {
    a.push_back(b[i - 1] + a[i - 2].shifted(2));
    b.push_back(a[i - 1].shifted(1) + b[i - 2]);
  }
  return a.at(static_cast<std::size_t>(m));
}

BigInt rank_coefficient_closed(long n, long k) {
  require_nonnegative(n, "rank_coefficient_closed");
  const long m = n / 2;
  BigInt sum = 0;
  if (n % 2 == 0) {
    for (long j = 0; j <= m / 2; ++j) {
      BigInt t = binomial(m - j, j) * trinomial(m - 2 * j, k - 2 * j) +
                 binomial(m - j - 1, j - 1) * trinomial(m - 2 * j, k - 2 * j + 1);
      sum += (j % 2 ? BigInt(-t) : t);
    }
  } else {
    if (m == 0 && k == 1) sum += 1;
    for (long j = 0; j <= m / 2; ++j) {
      BigInt t = binomial(m - j, j) * trinomial(m - 2 * j, k - 2 * j) +
                 binomial(m - j - 1, j) * trinomial(m - 2 * j - 1, k - 2 * j - 3);
      sum += (j % 2 ? BigInt(-t) : t);
    }
  }
  return sum;
}

IntPolynomial rank_poly(long n, RankMethod method) {
  require_nonnegative(n, "rank_poly");
  switch (method) {
    case RankMethod::recurrence:
      return run_recurrence(PolyKind::rank, n, 4, [](const std::vector<P>& v, long i) {
        return i % 2 ? v[i - 1].shifted(1) + v[i - 2] : v[i - 1] + v[i - 2].shifted(2);
      });
    case RankMethod::via_gamma:
      if (n < 3) return base_list(PolyKind::rank)[static_cast<std::size_t>(n)];
      return fibonacci_lattice_rank_poly(n - 1) + fibonacci_lattice_rank_poly(n - 3).shifted(3);
    case RankMethod::genfunc: return coefficient(rank_gf(), static_cast<std::size_t>(n));
    case RankMethod::closed_trinomial: {
      std::vector<BigInt> c;
      for (long k = 0; k <= n; ++k) c.push_back(rank_coefficient_closed(n, k));
      return P(std::move(c));
    }
  }
  throw std::invalid_argument("rank_poly: unknown method");
}

EvenOddRank rank_poly_even_odd(long m) {
  require_nonnegative(m, "rank_poly_even_odd");
  const auto& r = base_list(PolyKind::rank);
  std::vector<P> a{r[0], r[2], r[4]}, b{r[1], r[3], r[5]};
  const P t{1, 1, 1};
  for (long i = 3; i <= m; ++i) {
    a.push_back(t * a[i - 1] - a[i - 2].shifted(2));
    b.push_back(t * b[i - 1] - b[i - 2].shifted(2));
  }
  return {a.at(static_cast<std::size_t>(m)), b.at(static_cast<std::size_t>(m))};
}

ClearedIdentity chebyshev_even_identity(long m, bool as_printed) {
  if (m < 1) throw std::out_of_range("chebyshev_even_identity: m >= 1");
  const P vm = chebyshev_u_scaled(m);
  const P vm1 = chebyshev_u_scaled(m - 1);
  const P lead = P{1, 1} * vm;
  P rhs = (as_printed ? lead : lead.shifted(1)) - (P{1, 1, 1} * vm1).shifted(1);
  return {rank_poly_even_odd(m).even.shifted(2), std::move(rhs)};
}

ClearedIdentity chebyshev_odd_identity(long m) {
  if (m < 1) throw std::out_of_range("chebyshev_odd_identity: m >= 1");
  return {rank_poly_even_odd(m).odd, chebyshev_u_scaled(m) + chebyshev_u_scaled(m - 1).shifted(3)};
}

// --- cube --------------------------------------------------------------------

IntPolynomial binet_sqrt_form(long n, const IntPolynomial& t_of_x) {
  require_nonnegative(n, "binet_sqrt_form");
  // (1 + s)^n = rational(t) + s * radical(t) with s^2 = t; likewise for 1 - s.
  std::vector<BigInt> plus_rational, plus_radical, minus_rational, minus_radical;
  for (long j = 0; j <= n; ++j) {
    const BigInt c = binomial(n, j);
    const auto idx = static_cast<std::size_t>(j / 2);
    auto& pr = j % 2 ? plus_radical : plus_rational;
    auto& mr = j % 2 ? minus_radical : minus_rational;
    if (pr.size() <= idx) pr.resize(idx + 1);
    if (mr.size() <= idx) mr.resize(idx + 1);
    pr[idx] += c;
    mr[idx] += (j % 2 ? BigInt(-c) : c);
  }
  const P radical = P(plus_radical) + P(minus_radical);
  if (!radical.is_zero()) throw std::logic_error("binet_sqrt_form: sqrt(t) part does not cancel");
  const P rational = P(plus_rational) + P(minus_rational);
  const BigInt two_n = BigInt(1) << static_cast<mp_bitcnt_t>(n);
  return rational.compose(t_of_x).divided_exactly(two_n);
}

IntPolynomial cube_poly(long n, CubeMethod method) {
  require_nonnegative(n, "cube_poly");
  const auto& base = base_list(PolyKind::cube);
  switch (method) {
    case CubeMethod::recurrence:
      return run_recurrence(PolyKind::cube, n, 4,
                            [](const std::vector<P>& v, long i) { return v[i - 1] + P{1, 1} * v[i - 2]; });
    case CubeMethod::closed_sqrt:
      if (n < 2) return base[static_cast<std::size_t>(n)];
      return binet_sqrt_form(n, P{5, 4});
    case CubeMethod::lucas_triangle: {
      if (n < 2) return base[static_cast<std::size_t>(n)];
      P sum;
      for (long j = 0; j <= n / 2; ++j)
        sum += P{1, 1}.pow(static_cast<unsigned>(j)) * lucas_triangle_or_zero(n - j, j);
      return sum;
    }
    case CubeMethod::genfunc: return coefficient(cube_gf(), static_cast<std::size_t>(n));
  }
  throw std::invalid_argument("cube_poly: unknown method");
}

BigInt cube_count(long n, long k, CubeCountMethod method) {
  require_nonnegative(n, "cube_count");
  if (k < 0) return 0;
  switch (method) {
    case CubeCountMethod::triangle_sum: {
      if (n < 2) return base_list(PolyKind::cube)[static_cast<std::size_t>(n)][k];
      BigInt sum = 0;
      for (long j = k; j <= n / 2; ++j) sum += lucas_triangle_or_zero(n - j, j) * binomial(j, k);
      return sum;
    }
    case CubeCountMethod::first_four: {
      const BigInt N = n;
      if (k == 0 && n >= 2) return lucas(n);
      if (k == 1 && n >= 2) return N * fibonacci(n - 1);
      if (k == 2 && n >= 4) {
        BigInt num = 2 * N * fibonacci(n - 3) + (N - 3) * N * lucas(n - 2);
        if (!mpz_divisible_ui_p(num.get_mpz_t(), 10)) throw std::logic_error("q_{n,2}: inexact");
        return num / 10;
      }
      if (k == 3 && n >= 6) {
        BigInt num = 12 * N * fibonacci(n - 5) + 6 * (N - 5) * N * lucas(n - 4) +
                     5 * (N * N - 9 * N + 20) * N * fibonacci(n - 3);
        if (!mpz_divisible_ui_p(num.get_mpz_t(), 150)) throw std::logic_error("q_{n,3}: inexact");
        return num / 150;
      }
      throw std::out_of_range("cube_count(first_four): (n, k) outside the stated ranges");
    }
    case CubeCountMethod::genfunc_k:
      if (k < 1) throw std::out_of_range("cube_count(genfunc_k): k >= 1");
      return coefficient(cube_fixed_k_gf(k), static_cast<std::size_t>(n))[0];
  }
  throw std::invalid_argument("cube_count: unknown method");
}

BigInt maximum_cube_count(long n) {
  if (n < 2) throw std::out_of_range("maximum_cube_count: n >= 2");
  return n % 2 == 0 ? BigInt(2) : BigInt(n);
}

AlternatingSums cube_alternating_sums(long n) {
  if (n < 2) throw std::out_of_range("cube_alternating_sums: n >= 2");
  AlternatingSums s{0, 0};
  for (long k = 0; k <= n / 2; ++k) {
    for (long j = k; j <= n / 2; ++j) {
      BigInt term = lucas_triangle_or_zero(n - j, j) * binomial(j, k);
      if (k % 2) term = -term;
      s.plain += term;
      s.weighted += term * k;
    }
  }
  return s;
}

std::vector<double> cube_roots(long n) {
  if (n < 2) throw std::out_of_range("cube_roots: n >= 2");
  std::vector<double> r;
  for (long k = 1; k <= n / 2; ++k) {
    const double t = std::tan((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n));
    r.push_back(-(5.0 + t * t) / 4.0);
  }
  return r;
}

// --- maximal -------------------------------------------------------------------

IntPolynomial maximal_cube_poly(long n, MaximalMethod method) {
  require_nonnegative(n, "maximal_cube_poly");
  switch (method) {
    case MaximalMethod::recurrence:
      return run_recurrence(PolyKind::maximal, n, 5, [](const std::vector<P>& v, long i) {
        return (v[i - 2] + v[i - 3]).shifted(1);
      });
    case MaximalMethod::genfunc: return coefficient(maximal_gf(), static_cast<std::size_t>(n));
    case MaximalMethod::closed_Y: {
      if (n < 2) return base_list(PolyKind::maximal)[static_cast<std::size_t>(n)];
      std::vector<BigInt> c;
      for (long k = 0; k <= n; ++k) c.push_back(lucas_triangle_or_zero(k + 1, 3 * k + 1 - n));
      return P(std::move(c));
    }
  }
  throw std::invalid_argument("maximal_cube_poly: unknown method");
}

long maximal_term_count_rule(long n) {
  require_nonnegative(n, "maximal_term_count_rule");
  const long m = n / 6, b = n % 6;
  return b == 4 ? m + 2 : m + 1;
}

// --- disjoint ------------------------------------------------------------------

int theta(long n) { return n % 3 == 0 ? 0 : 1; }

int eta(long n) {
  if (n == 0) return -1;
  if (n == 1) return 1;
  return 0;
}

BigInt disjoint_count(long n, long k) {
  require_nonnegative(n, "disjoint_count");
  if (k < 0) return 0;
  if (k == 0) return (lucas(n) + theta(n)) / 2;
  if (k == 1) return (lucas(n) - theta(n)) / 2 + eta(n);
  if (n < 4) return 0;
  return disjoint_count(n - 2, k - 1) + disjoint_count(n - 3, k);
}

namespace {
P disjoint_recurrence(long n, bool printed_theta) {
  return run_recurrence(PolyKind::disjoint, n, 4, [printed_theta](const std::vector<P>& v, long i) {
    const BigInt lin = lucas(i - 2) - theta(printed_theta ? i : i - 2);
    if (!mpz_divisible_ui_p(lin.get_mpz_t(), 2)) throw std::domain_error("non-integral coefficient");
    const BigInt konst = lucas(i) - lucas(i - 3);
    P step = v[i - 2].shifted(1) + v[i - 3];
    step += P::monomial(lin / 2 - eta(i - 3), 1);
    step += P::constant(konst / 2);
    return step;
  });
}
}  // namespace

std::optional<IntPolynomial> disjoint_poly_printed_recurrence(long n) {
  try {
    return disjoint_recurrence(n, true);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

IntPolynomial disjoint_cube_poly(long n, DisjointMethod method) {
  require_nonnegative(n, "disjoint_cube_poly");
  switch (method) {
    case DisjointMethod::recurrence: return disjoint_recurrence(n, false);
    case DisjointMethod::genfunc: return coefficient(disjoint_gf(), static_cast<std::size_t>(n));
    case DisjointMethod::per_k: {
      std::vector<BigInt> c;
      for (long k = 0; k <= n; ++k) c.push_back(disjoint_count(n, k));
      return P(std::move(c));
    }
  }
  throw std::invalid_argument("disjoint_cube_poly: unknown method");
}

// --- degree --------------------------------------------------------------------

BigInt fibonacci_cube_degree_count(long m, long k) {
  if (m < 0 || k < 0) return 0;
  BigInt sum = 0;
  for (long j = 0; j <= k; ++j) sum += binomial_ext(m - 2 * j, k - j) * binomial_ext(j + 1, m - k - j + 1);
  return sum;
}

BigInt degree_count_recurrence(long n, long k) {
  require_nonnegative(n, "degree_count_recurrence");
  if (k < 0) return 0;
  if (n < 5) return base_list(PolyKind::degree)[static_cast<std::size_t>(n)][k];
  return degree_count_recurrence(n - 2, k - 1) + degree_count_recurrence(n - 1, k - 1) -
         degree_count_recurrence(n - 3, k - 2) + degree_count_recurrence(n - 3, k - 1);
}

IntPolynomial degree_poly(long n, DegreeMethod method) {
  require_nonnegative(n, "degree_poly");
  switch (method) {
    case DegreeMethod::recurrence:
      return run_recurrence(PolyKind::degree, n, 5, [](const std::vector<P>& v, long i) {
        return v[i - 1].shifted(1) + v[i - 2].shifted(1) + P{0, 1, -1} * v[i - 3];
      });
    case DegreeMethod::via_gamma: {
      if (n < 3) return base_list(PolyKind::degree)[static_cast<std::size_t>(n)];
      std::vector<BigInt> c;
      for (long k = 0; k <= n; ++k)
        c.push_back(fibonacci_cube_degree_count(n - 1, k) + fibonacci_cube_degree_count(n - 3, k - 2));
      return P(std::move(c));
    }
    case DegreeMethod::genfunc: return coefficient(degree_gf(), static_cast<std::size_t>(n));
    case DegreeMethod::closed_binomial: {
      if (n < 2) return base_list(PolyKind::degree)[static_cast<std::size_t>(n)];
      std::vector<BigInt> c;
      for (long k = 0; k <= n; ++k) {
        BigInt sum = 0;
        for (long j = 0; j <= k; ++j)
          sum += binomial_ext(j + 1, n - k - j) *
                 (binomial_ext(n - 2 * j - 1, k - j) + binomial_ext(n - 2 * j - 3, k - j - 2));
        c.push_back(sum);
      }
      return P(std::move(c));
    }
  }
  throw std::invalid_argument("degree_poly: unknown method");
}

// --- indegree ------------------------------------------------------------------

namespace {
BigInt indegree_telescoped(long n, long k) {
  if (k < 0 || n < 0) return 0;
  if (k >= 0 && n >= 2 * k + 3) {
    BigInt sum = 0;
    for (long j = 0; j <= k; ++j) sum += indegree_telescoped(n - 2 * j - 1, k - j);
    return sum;
  }
  return indegree_poly(n, IndegreeMethod::recurrence)[k];
}
}  // namespace

IntPolynomial indegree_poly(long n, IndegreeMethod method) {
  require_nonnegative(n, "indegree_poly");
  switch (method) {
    case IndegreeMethod::recurrence:
      return run_recurrence(PolyKind::indegree, n, 4,
                            [](const std::vector<P>& v, long i) { return v[i - 1] + v[i - 2].shifted(1); });
    case IndegreeMethod::from_Q: return cube_poly(n, CubeMethod::recurrence).taylor_shift(-1);
    case IndegreeMethod::genfunc: return coefficient(indegree_gf(), static_cast<std::size_t>(n));
    case IndegreeMethod::closed_Y: {
      if (n < 2) return base_list(PolyKind::indegree)[static_cast<std::size_t>(n)];
      std::vector<BigInt> c;
      for (long k = 0; k <= n / 2; ++k) c.push_back(lucas_triangle_or_zero(n - k, k));
      return P(std::move(c));
    }
    case IndegreeMethod::telescoped: {
      std::vector<BigInt> c;
      for (long k = 0; k <= n / 2 + 1; ++k) c.push_back(indegree_telescoped(n, k));
      return P(std::move(c));
    }
  }
  throw std::invalid_argument("indegree_poly: unknown method");
}

std::vector<double> indegree_roots(long n) {
  if (n < 2) throw std::out_of_range("indegree_roots: n >= 2");
  std::vector<double> r;
  for (long k = 1; k <= n / 2; ++k) {
    const double t = std::tan((2.0 * k - 1.0) * std::numbers::pi / (2.0 * n));
    r.push_back(-(1.0 + t * t) / 4.0);
  }
  return r;
}

// --- generating functions ----------------------------------------------------

RationalBivariateSeries lucas_gf() {
  return {"lucas", by({{2}, {-1}}), by({{1}, {-1}, {-1}}), {}, 1};
}

RationalBivariateSeries chebyshev_gf() {
  return {"chebyshev_u", by({{1}}), by({{1}, {0, -2}, {1}}), {}, 1};
}

RationalBivariateSeries rank_gf() {
  // (1 + y + x^3 y^3 - x y^4) / (1 - (1+x+x^2) y^2 + x^2 y^4) + x y
  return {"rank", by({{1}, {1}, {}, {0, 0, 0, 1}, {0, -1}}), by({{1}, {}, {-1, -1, -1}, {}, {0, 0, 1}}),
          by({{}, {0, 1}}), 1};
}

RationalBivariateSeries rank_even_gf() {
  return {"rank_even", by({{1}, {}, {0, -1}}), by({{1}, {-1, -1, -1}, {0, 0, 1}}), {}, 1};
}

RationalBivariateSeries rank_odd_gf() {
  return {"rank_odd", by({{1}, {0, 0, 0, 1}}), by({{1}, {-1, -1, -1}, {0, 0, 1}}), by({{0, 1}}), 1};
}

RationalBivariateSeries cube_gf() {
  // (2 - y) / (1 - y - (x+1) y^2) + (1+x) y - 1
  return {"cube", by({{2}, {-1}}), by({{1}, {-1}, {-1, -1}}), by({{-1}, {1, 1}}), 1};
}

RationalBivariateSeries cube_fixed_k_gf(long k) {
  if (k < 1) throw std::out_of_range("cube_fixed_k_gf: k >= 1");
  B num = by({{2}, {-1}}) * B::y_power(static_cast<std::size_t>(2 * k));
  B den = by({{1}, {-1}, {-1}}).pow(static_cast<unsigned>(k + 1));
  B extra = k == 1 ? B::y() : B{};
  return {"cube_k" + std::to_string(k), num, den, extra, 1};
}

RationalBivariateSeries maximal_gf() {
  // (2 + y) / (1 - x y^2 (1 + y)) - (1 - x) y - 1
  return {"maximal", by({{2}, {1}}), by({{1}, {}, {0, -1}, {0, -1}}), by({{-1}, {-1, 1}}), 1};
}

RationalBivariateSeries maximal_fixed_k_gf(long k) {
  if (k < 1) throw std::out_of_range("maximal_fixed_k_gf: k >= 1");
  B num = by({{}, {}, {1}, {1}}).pow(static_cast<unsigned>(k)) * by({{2}, {1}});
  B extra = k == 1 ? B::y() : B{};
  return {"maximal_k" + std::to_string(k), num, by({{1}}), extra, 1};
}

RationalBivariateSeries padovan_gf() {
  return {"padovan123", by({{1}, {2}, {2}}), by({{1}, {}, {-1}, {-1}}), {}, 1};
}

RationalBivariateSeries disjoint_gf() {
  // (1 - (3-x) y^3 + (2-x) y^6 + x y^8) / ((1-y-y^2)(1-y^3)(1-x y^2-y^3)) + x y
  B num = by({{1}, {}, {}, {-3, 1}, {}, {}, {2, -1}, {}, {0, 1}});
  B den = by({{1}, {-1}, {-1}}) * by({{1}, {}, {}, {-1}}) * by({{1}, {}, {0, -1}, {-1}});
  return {"disjoint", num, den, by({{}, {0, 1}}), 1};
}

RationalBivariateSeries disjoint_fixed_k_gf(long k) {
  if (k < 1) throw std::out_of_range("disjoint_fixed_k_gf: k >= 1");
  // 1/2 (y^2/(1-y^3))^{k-1} ((y+2y^2)/(1-y-y^2) - (y+y^2)/(1-y^3)) + y delta_{k1}
  const B fib_den = by({{1}, {-1}, {-1}});
  const B cube_den = by({{1}, {}, {}, {-1}});
  B inner = by({{}, {1}, {2}}) * cube_den - by({{}, {1}, {1}}) * fib_den;
  B num = B::y_power(static_cast<std::size_t>(2 * (k - 1))) * inner;
  B den = cube_den.pow(static_cast<unsigned>(k)) * fib_den;
  B extra = k == 1 ? B::y() : B{};
  return {"disjoint_k" + std::to_string(k), num, den, extra, 2};
}

RationalBivariateSeries degree_gf() {
  // (1 - x y + y)(1 + x^2 y^2) / ((1 - x y)(1 - x y^2) - x y^3) + (2x - 1) y
  B num = by({{1}, {1, -1}}) * by({{1}, {}, {0, 0, 1}});
  B den = by({{1}, {0, -1}}) * by({{1}, {}, {0, -1}}) - by({{}, {}, {}, {0, 1}});
  return {"degree", num, den, by({{}, {-1, 2}}), 1};
}

RationalBivariateSeries indegree_gf() {
  // (2 - y) / (1 - y - x y^2) + x y - 1
  return {"indegree", by({{2}, {-1}}), by({{1}, {-1}, {0, -1}}), by({{-1}, {0, 1}}), 1};
}

RationalBivariateSeries indegree_fixed_k_gf(long k) {
  if (k < 1) throw std::out_of_range("indegree_fixed_k_gf: k >= 1");
  B num = by({{2}, {-1}}) * B::y_power(static_cast<std::size_t>(2 * k));
  B den = by({{1}, {-1}}).pow(static_cast<unsigned>(k + 1));
  B extra = k == 1 ? B::y() : B{};
  return {"indegree_k" + std::to_string(k), num, den, extra, 1};
}

}  // namespace mlc

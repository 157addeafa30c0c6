#pragma once

#include "mlc/bigint.hpp"
#include "mlc/polynomial.hpp"
#include "mlc/series.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Closed forms, recurrences and generating functions for the six polynomial
// families of the matchable Lucas cubes:
//   rank R_n, cube Q_n, maximal cube H_n, disjoint cube S_n,
//   degree D_n and indegree D^-_n.
// Every family offers several independent methods; they are expected to
// agree coefficient for coefficient.
namespace mlc {

enum class PolyKind { rank, cube, maximal, disjoint, degree, indegree };

const char* to_string(PolyKind kind);
std::optional<PolyKind> parse_poly_kind(std::string_view name);
// Method names accepted by family_poly for a given kind.
std::vector<std::string> methods_for(PolyKind kind);

// Dispatches to the family specific functions below. Throws
// std::invalid_argument on an unknown method name.
IntPolynomial family_poly(PolyKind kind, long n, std::string_view method);

// The explicitly listed small cases (n = 0..5) used as recurrence seeds.
const std::vector<IntPolynomial>& base_list(PolyKind kind);

// --- Lucas triangle, trinomials, Chebyshev -------------------------------

// Y(n, k) = C(n, k) + C(n-1, k-1) with C(-1, -1) = 1. Throws
// std::out_of_range unless 0 <= k <= n.
BigInt lucas_triangle(long n, long k);
// Same value but zero outside 0 <= k <= n, for use inside sums.
BigInt lucas_triangle_or_zero(long n, long k);

// Coefficient of x^k in (1 + x + x^2)^n via the binomial sum.
BigInt trinomial(long n, long k);
// Same coefficient read off the expanded power.
BigInt trinomial_by_power(long n, long k);

IntPolynomial chebyshev_u(long m);
// x^m U_m((1 + x + x^2) / (2x)), a polynomial in x.
IntPolynomial chebyshev_u_scaled(long m);

// --- rank ---------------------------------------------------------------

enum class RankMethod { recurrence, via_gamma, genfunc, closed_trinomial };
IntPolynomial rank_poly(long n, RankMethod method);
// Rank generating function of the Fibonacci lattice built on the fence Z_m.
IntPolynomial fibonacci_lattice_rank_poly(long m);
// r_{n,k} from the trinomial-coefficient sums.
BigInt rank_coefficient_closed(long n, long k);

struct EvenOddRank {
  IntPolynomial even;  // A_m = R_{2m}
  IntPolynomial odd;   // B_m = R_{2m+1}
};
// A_m and B_m from their own three-term recurrences.
EvenOddRank rank_poly_even_odd(long m);

// An identity between two polynomials after clearing powers of x.
struct ClearedIdentity {
  IntPolynomial lhs;
  IntPolynomial rhs;
  bool holds() const { return lhs == rhs; }
};
// Chebyshev form of A_m multiplied by x^2. With as_printed the leading power
// is x^{m-2}; otherwise the power x^{m-1} obtained from the generating
// function is used.
ClearedIdentity chebyshev_even_identity(long m, bool as_printed);
// B_m = x^m U_m(w) + x^{m+2} U_{m-1}(w).
ClearedIdentity chebyshev_odd_identity(long m);

// --- cube ---------------------------------------------------------------

enum class CubeMethod { recurrence, closed_sqrt, lucas_triangle, genfunc };
IntPolynomial cube_poly(long n, CubeMethod method);

enum class CubeCountMethod { triangle_sum, first_four, genfunc_k };
// q_{n,k}. first_four covers k <= 3 within its stated ranges (k = 0, 1 for
// n >= 2; k = 2 for n >= 4; k = 3 for n >= 6) and throws std::out_of_range
// elsewhere; genfunc_k needs k >= 1.
BigInt cube_count(long n, long k, CubeCountMethod method);
// Number of maximum-dimension cubes: 2 for even n, n for odd n (n >= 2).
BigInt maximum_cube_count(long n);

struct AlternatingSums {
  BigInt plain;     // sum_k q_{n,k} (-1)^k
  BigInt weighted;  // sum_k k q_{n,k} (-1)^k
};
// Evaluated through the double sum over the Lucas triangle.
AlternatingSums cube_alternating_sums(long n);

// Roots -(5 + tan^2((2k-1)pi/2n))/4 for k = 1..floor(n/2).
std::vector<double> cube_roots(long n);

// (1 + sqrt t)^n + (1 - sqrt t)^n over 2^n, expanded in Z[t][sqrt t] and then
// substituted t = t_of_x. Throws std::logic_error if the sqrt t part fails to
// cancel or the division by 2^n is inexact.
IntPolynomial binet_sqrt_form(long n, const IntPolynomial& t_of_x);

// --- maximal cubes --------------------------------------------------------

enum class MaximalMethod { recurrence, genfunc, closed_Y };
IntPolynomial maximal_cube_poly(long n, MaximalMethod method);
// Number of nonzero terms of H_n predicted from n = 6m + b.
long maximal_term_count_rule(long n);

// --- disjoint cubes -------------------------------------------------------

enum class DisjointMethod { recurrence, genfunc, per_k };
int theta(long n);  // 0 if 3 | n, else 1
int eta(long n);    // -1 at 0, 1 at 1, 0 elsewhere
IntPolynomial disjoint_cube_poly(long n, DisjointMethod method);
// s_{n,k} from the per-coefficient recurrence.
BigInt disjoint_count(long n, long k);
// Polynomial recurrence exactly as printed, with theta_n in the linear term.
// Returns nullopt when a coefficient stops being an integer.
std::optional<IntPolynomial> disjoint_poly_printed_recurrence(long n);

// --- degree ----------------------------------------------------------------

enum class DegreeMethod { recurrence, via_gamma, genfunc, closed_binomial };
IntPolynomial degree_poly(long n, DegreeMethod method);
// Number of vertices of degree k in the Fibonacci cube Gamma_m.
BigInt fibonacci_cube_degree_count(long m, long k);
// d_{n,k} from the four-term coefficient recurrence (n >= 5), seeded by the
// base list.
BigInt degree_count_recurrence(long n, long k);

// --- indegree -----------------------------------------------------------------

enum class IndegreeMethod { recurrence, from_Q, genfunc, closed_Y, telescoped };
IntPolynomial indegree_poly(long n, IndegreeMethod method);
// Roots -(1 + tan^2((2k-1)pi/2n))/4 for k = 1..floor(n/2).
std::vector<double> indegree_roots(long n);

// --- generating functions ------------------------------------------------

RationalBivariateSeries lucas_gf();
RationalBivariateSeries chebyshev_gf();
RationalBivariateSeries rank_gf();
RationalBivariateSeries rank_even_gf();  // sum A_m z^m
RationalBivariateSeries rank_odd_gf();   // sum B_m z^m
RationalBivariateSeries cube_gf();
RationalBivariateSeries cube_fixed_k_gf(long k);
RationalBivariateSeries maximal_gf();
RationalBivariateSeries maximal_fixed_k_gf(long k);
RationalBivariateSeries padovan_gf();
RationalBivariateSeries disjoint_gf();
RationalBivariateSeries disjoint_fixed_k_gf(long k);
RationalBivariateSeries degree_gf();
RationalBivariateSeries indegree_gf();
RationalBivariateSeries indegree_fixed_k_gf(long k);

}  // namespace mlc

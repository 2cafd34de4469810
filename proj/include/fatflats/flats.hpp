#pragma once

#include <utility>
#include <vector>

#include "fatflats/bipoly.hpp"
#include "fatflats/polynomial.hpp"
#include "fatflats/rational.hpp"

namespace fatflats {

/// s disjoint r-planes in P^n.
struct FlatConfig {
  long n;
  long r;
  long s;

  /// Throws DomainError unless n >= 1, 0 <= r < n, s >= 1 and (s >= 2 implies n >= 2r+1).
  void validate() const;
};

/// Multiplicities (m_1, ..., m_s) assigned to the flats. Entries of zero are
/// legal and impose nothing.
using MultVector = std::vector<long>;

// ---- condition counts -------------------------------------------------------

/// Number of independent conditions that vanishing to order m along an r-plane
/// imposes on degree-t forms in P^n: sum_{0<=i<m} C(t-i+r, r) C(i+n-r-1, n-r-1).
/// Requires 0 <= r < n, m >= 1, t >= m.
Integer conditions_count(long n, long r, long m, long t);

/// The same number by enumerating degree-t monomials in n+1 variables whose
/// exponents on the last n-r variables sum to less than m.
Integer conditions_count_oracle(long n, long r, long m, long t);

/// Closed form for lines: (t+1) C(m+n-2, n-1) - (n-1) C(m+n-2, n).
Integer conditions_count_lines(long n, long m, long t);

/// c_{n,r,m,t} as a polynomial in t for fixed m; valid for t >= m-r-1.
UniPoly conditions_poly(long n, long r, long m);

/// c_{n,r,m,t} as a polynomial in (t, m); valid at integers m >= 0, t >= m-r-1.
BiPoly conditions_bipoly(long n, long r);

// ---- Hilbert functions and polynomials -------------------------------------

/// First T values of the Hilbert function of an m-fold r-plane in P^n,
/// by r partial-sum passes over min{C(t+n-r, n-r), C(m+n-r-1, n-r)}.
std::vector<Integer> hilbert_function_flat(long n, long r, long m, long length);

/// P_{n,r,s,m}(t) = C(t+n, n) - s c_{n,r,m,t}.
UniPoly hilbert_poly_uniform(long n, long r, long s, long m);

/// P_{n,r,v}(t) = C(t+n, n) - sum_i c_{n,r,m_i,t}.
UniPoly hilbert_poly_mixed(long n, long r, const MultVector& v);

/// P_{n,r,s,m}(t) with m kept symbolic.
BiPoly hilbert_poly_bivariate(long n, long r, long s);

/// C(t+n, n) - s c_{n,r,m,t} by direct integer arithmetic (t >= m).
Integer hilbert_value(long n, long r, long s, long m, long t);

/// Smallest t >= max(v) with P_{n,r,v}(t) > 0: a certified upper bound for the
/// initial degree of the fat-flat ideal.
long expected_alpha_upper(long n, long r, const MultVector& v);

/// min{t : C(n+t, n) - s(t+1) > 0}, initial degree of s general lines (n >= 3).
long alpha_lines_general(long n, long s);
/// min{t : C(t+n, n) - s > 0}.
long alpha_points_general(long n, long s);
/// min{t : C(t+n, n) - s(n+1) > 0}. Expected value only: finitely many
/// exceptional (n, s) are known and not tabulated here.
long alpha2_points_expected(long n, long s);

// ---- binomial summation identities -----------------------------------------

/// (sum_{0<=i<m} C(i+a, a), C(m+a, a+1))
std::pair<Integer, Integer> identity_sum_binom(long a, long m);
/// (sum_{0<=i<m} i C(i+a, a), (a+1) C(m+a, a+2))
std::pair<Integer, Integer> identity_sum_i_binom(long a, long m);

}  // namespace fatflats

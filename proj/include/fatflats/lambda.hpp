#pragma once

#include <vector>

#include "fatflats/polynomial.hpp"
#include "fatflats/roots.hpp"

namespace fatflats {

/// Leading m-coefficient of P_{n,r,s,m}(m*tau), in closed form:
/// (tau^n - s * sum_{j<=r} C(n,j) (tau-1)^j) / n!. The 1/n! is included.
UniPoly lambda_poly(long n, long r, long s);

/// The same polynomial read off the symbolic bi-expansion of the Hilbert
/// polynomial (independent route through the condition-count sums).
UniPoly lambda_poly_via_leading(long n, long r, long s);

/// d/dtau Lambda_{n,r,s} == Lambda_{n-1,r-1,s} and Lambda_{n,r,s}(1) == (1-s)/n!.
/// Requires r >= 1 and n >= 2r+1.
bool tower_check(long n, long r, long s);

/// g_{n,r,s}: the unique real root >= 1 of Lambda_{n,r,s}. The uniqueness is
/// re-verified by root counting on every call; a failure throws InternalError.
AlgebraicNumber g_value(long n, long r, long s, const Rational& precision = default_precision());

/// Lambda < 0 at `samples` points of [1, g) and > 0 at `samples` points of (g, g+2].
bool sign_profile_check(long n, long r, long s, long samples);

/// Exact test of x < g_{n,r,s} through the sign of Lambda (x >= 1 uses the
/// sign profile; x < 1 is always below g).
bool below_g(long n, long r, long s, const Rational& x);

struct GSpecialRow {
  long n;
  Integer s;  // (n-1)^(n-2)
  Rational lambda_at_root;  // Lambda_{n,1,s}(n-1)
  bool largest_root_is_n_minus_1;
};

/// For n = 3..n_max checks that tau = n-1 is the largest root of Lambda_{n,1,(n-1)^(n-2)}.
std::vector<GSpecialRow> g_specials(long n_max = 8);

}  // namespace fatflats

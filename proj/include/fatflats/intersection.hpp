#pragma once

#include "fatflats/polynomial.hpp"

namespace fatflats {

/// A sum together with whether its arguments lie where the closed value is claimed.
struct IdentityValue {
  Integer value;
  bool in_domain = true;
};

/// sum_i (-1)^i C(t+j, j-i) C(t+i, i); zero for t >= 0, j >= 1. At j = 0 the
/// single term is 1 and in_domain is false.
IdentityValue alt_sum_zero(long t, long j);

/// sum_i (-1)^i C(t+j, j-i) C(t+i-1, i); one for t >= 1, j >= 0.
IdentityValue alt_sum_one(long t, long j);

/// H^j E^(n-j) on the blow-up of P^n along one r-plane: 1 for j = n,
/// (-1)^(n+1-r) C(n-j-1, r-j) for j <= r, and 0 for r < j < n.
Integer intersection_number(long n, long r, long j);

/// (tau H - E)^n for s disjoint r-planes (E_i E_j = 0), assembled from the
/// intersection numbers.
UniPoly expand_self_intersection(long n, long r, long s);

/// expand_self_intersection(n, r, s) == n! Lambda_{n,r,s}.
bool identity_check(long n, long r, long s);

/// sum_{j<=r} (-1)^(r-j) C(n,j) C(n-j-1, r-j), which should be 1.
Integer unit_sum(long n, long r);

}  // namespace fatflats

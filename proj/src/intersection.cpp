#include "fatflats/intersection.hpp"

#include "fatflats/binomial.hpp"
#include "fatflats/flats.hpp"
#include "fatflats/lambda.hpp"

namespace fatflats {

namespace {

Integer sign(long k) { return k % 2 == 0 ? 1 : -1; }

}  // namespace

IdentityValue alt_sum_zero(long t, long j) {
  if (t < 0 || j < 0) throw DomainError("alt_sum_zero needs t, j >= 0");
  IdentityValue out{0, j >= 1};
  for (long i = 0; i <= j; ++i) out.value += sign(i) * binom(t + j, j - i) * binom(t + i, i);
  return out;
}

IdentityValue alt_sum_one(long t, long j) {
  if (t < 1 || j < 0) throw DomainError("alt_sum_one needs t >= 1, j >= 0");
  IdentityValue out{0, true};
  for (long i = 0; i <= j; ++i) out.value += sign(i) * binom(t + j, j - i) * binom(t + i - 1, i);
  return out;
}

Integer intersection_number(long n, long r, long j) {
  if (n < 1 || r < 0 || r >= n || j < 0 || j > n) throw DomainError("intersection_number needs 0 <= r < n, 0 <= j <= n");
  if (j == n) return 1;
  if (j > r) return 0;
  return sign(n + 1 - r) * binom(n - j - 1, r - j);
}

UniPoly expand_self_intersection(long n, long r, long s) {
  FlatConfig{n, r, s}.validate();
  // (tau H - E)^n = sum_j C(n,j) tau^j (-1)^(n-j) H^j E^(n-j), with E = E_1 + ... + E_s
  UniPoly p = UniPoly::monomial(Rational(1), static_cast<std::size_t>(n));
  for (long j = 0; j < n; ++j) {
    const Integer c = binom(n, j) * sign(n - j) * Integer(s) * intersection_number(n, r, j);
    if (c != 0) p += UniPoly::monomial(Rational(c), static_cast<std::size_t>(j));
  }
  return p;
}

bool identity_check(long n, long r, long s) {
  Integer fact;
  mpz_fac_ui(fact.get_mpz_t(), static_cast<unsigned long>(n));
  return expand_self_intersection(n, r, s) == lambda_poly(n, r, s) * Rational(fact);
}

Integer unit_sum(long n, long r) {
  if (n < 1 || r < 0 || r >= n) throw DomainError("unit_sum needs 0 <= r < n");
  Integer sum = 0;
  for (long j = 0; j <= r; ++j) sum += sign(r - j) * binom(n, j) * binom(n - j - 1, r - j);
  return sum;
}

}  // namespace fatflats

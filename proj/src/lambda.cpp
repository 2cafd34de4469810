#include "fatflats/lambda.hpp"

#include <string>

#include "fatflats/binomial.hpp"
#include "fatflats/flats.hpp"

namespace fatflats {

namespace {

Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

void check_domain(long n, long r, long s) {
  if (n < 1 || r < 0 || r >= n || s < 1)
    throw DomainError("Lambda needs n >= 1, 0 <= r < n, s >= 1");
  if (s >= 2 && n < 2 * r + 1) throw DomainError("Lambda needs n >= 2r+1 when s >= 2");
}

}  // namespace

UniPoly lambda_poly(long n, long r, long s) {
  check_domain(n, r, s);
  UniPoly sum;
  const UniPoly tau_minus_one{-1, 1};
  UniPoly power = UniPoly::constant(Rational(1));
  for (long j = 0; j <= r; ++j) {
    sum += power * Rational(binom(n, j));
    power = power * tau_minus_one;
  }
  UniPoly p = UniPoly::monomial(Rational(1), static_cast<std::size_t>(n)) - sum * Rational(s);
  return p * Rational(Integer(1), factorial(n));
}

UniPoly lambda_poly_via_leading(long n, long r, long s) {
  check_domain(n, r, s);
  const BiExpansion ex = expand_scaled(hilbert_poly_bivariate(n, r, s));
  return ex.coefficient(static_cast<std::size_t>(n));
}

bool tower_check(long n, long r, long s) {
  if (r < 1 || n < 2 * r + 1) throw DomainError("tower_check needs r >= 1, n >= 2r+1");
  const UniPoly top = lambda_poly(n, r, s);
  const bool derivative_ok = top.derivative() == lambda_poly(n - 1, r - 1, s);
  const bool value_ok = top(Rational(1)) == make_rational(Integer(1 - s), factorial(n));
  return derivative_ok && value_ok;
}

AlgebraicNumber g_value(long n, long r, long s, const Rational& precision) {
  const UniPoly lam = lambda_poly(n, r, s);
  const Rational one(1);
  const Rational bound = root_bound(lam) + 1;
  // exactly one distinct root in [1, inf)
  const std::size_t above = count_roots_in(lam, one, bound) + (lam(one) == 0 ? 1 : 0);
  if (above != 1)
    throw InternalError("Lambda_{" + std::to_string(n) + "," + std::to_string(r) + "," + std::to_string(s) +
                        "} has " + std::to_string(above) + " roots >= 1");
  if (s == 1) {
    if (lam(one) != 0) throw InternalError("g_{n,r,1} != 1");
    auto g = isolate_largest_root(lam, one, precision);
    return *g;
  }
  auto g = isolate_largest_root(lam, one, precision);
  if (!g) throw InternalError("Lambda has no root >= 1");
  return *g;
}

bool below_g(long n, long r, long s, const Rational& x) {
  if (x < 1) return true;
  return lambda_poly(n, r, s)(x) < 0;
}

bool sign_profile_check(long n, long r, long s, long samples) {
  if (s < 2) throw DomainError("sign_profile_check needs s >= 2");
  if (samples < 1) throw DomainError("samples must be >= 1");
  const UniPoly lam = lambda_poly(n, r, s);
  const AlgebraicNumber g = g_value(n, r, s);
  const Rational left = g.exact ? *g.exact : g.lo;   // every point of [1, left) is below g
  const Rational right = g.exact ? *g.exact : g.hi;  // every point of (right, g+2] is above g
  for (long k = 0; k < samples; ++k) {
    const Rational x = Rational(1) + (left - 1) * make_rational(k, samples);
    if (!(x < left) || lam(x) >= 0) return false;
  }
  for (long k = 1; k <= samples; ++k) {
    const Rational x = right + make_rational(k, samples);
    if (lam(x) <= 0) return false;
  }
  return true;
}

std::vector<GSpecialRow> g_specials(long n_max) {
  std::vector<GSpecialRow> rows;
  for (long n = 3; n <= n_max; ++n) {
    Integer s;
    mpz_ui_pow_ui(s.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(n - 2));
    const long s_long = s.get_si();
    const UniPoly lam = lambda_poly(n, 1, s_long);
    const Rational root(n - 1);
    const AlgebraicNumber g = g_value(n, 1, s_long);
    rows.push_back({n, s, lam(root), g.exact.has_value() && *g.exact == root});
  }
  return rows;
}

}  // namespace fatflats

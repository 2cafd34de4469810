#include "doctest.h"
#include "fatflats/binomial.hpp"
#include "fatflats/lambda.hpp"

using namespace fatflats;

namespace {

Rational inv_fact(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return make_rational(Integer(1), f);
}

Rational lambda_at(long n, long r, long s, const Rational& x) {
  Rational sum = 0, pw = 1;
  for (long j = 0; j <= r; ++j, pw *= x - 1) sum += Rational(binom(n, j)) * pw;
  Rational xn = 1;
  for (long i = 0; i < n; ++i) xn *= x;
  return (xn - s * sum) * inv_fact(n);
}

}  // namespace

TEST_SUITE("lambda_roots") {

TEST_CASE("closed forms") {
  CHECK(lambda_poly(3, 1, 6) == UniPoly{12, -18, 0, 1} * inv_fact(3));
  CHECK(lambda_poly(4, 0, 7) == UniPoly{-7, 0, 0, 0, 1} * inv_fact(4));
  for (long n = 3; n <= 7; ++n) {
    UniPoly expect = UniPoly::monomial(Rational(1), n) + UniPoly::linear_root(Rational(0)) * Rational(-5 * n) +
                     UniPoly::constant(Rational((n - 1) * 5));
    CHECK(lambda_poly(n, 1, 5) == expect * inv_fact(n));
  }
  CHECK(lambda_poly_via_leading(3, 0, 4) == UniPoly{-4, 0, 0, 1} * inv_fact(3));
  CHECK(lambda_poly_via_leading(3, 1, 6) == UniPoly{12, -18, 0, 1} * inv_fact(3));
  CHECK(lambda_poly_via_leading(5, 2, 3) == lambda_poly(5, 2, 3));
}

TEST_CASE("closed form and leading-coefficient route agree") {
  for (long n = 1; n <= 8; ++n)
    for (long r = 0; 2 * r + 1 <= n; ++r)
      for (long s : {1L, 2L, 5L, 10L, 100L}) {
        CHECK(lambda_poly(n, r, s) == lambda_poly_via_leading(n, r, s));
        for (long k = 0; k < 5; ++k) CHECK(lambda_poly(n, r, s)(make_rational(k * 3 + 1, 2)) == lambda_at(n, r, s, make_rational(k * 3 + 1, 2)));
        if (r >= 1) CHECK(tower_check(n, r, s));
      }
}

TEST_CASE("tower") {
  CHECK(tower_check(3, 1, 6));
  CHECK(lambda_poly(3, 1, 6).derivative() == lambda_poly(2, 0, 6));
  CHECK(tower_check(5, 2, 2));
  CHECK(lambda_poly(5, 2, 2)(Rational(1)) == make_rational(-1, 120));
  CHECK(lambda_poly(7, 3, 1)(Rational(1)) == 0);
  CHECK(lambda_poly(4, 0, 9).derivative() == UniPoly::monomial(inv_fact(3), 3));
}

TEST_CASE("g values") {
  const auto g315 = g_value(3, 1, 5);
  CHECK(to_double(g315.approx()) == doctest::Approx(3.482).epsilon(1e-3));
  const auto g209 = g_value(2, 0, 9);
  REQUIRE(g209.exact);
  CHECK(*g209.exact == 3);
  const auto g11 = g_value(11, 2, 729);
  REQUIRE(g11.exact);
  CHECK(*g11.exact == 3);
  for (long r = 1; r <= 10; ++r) {
    const auto g = g_value(2 * r + 1, r, 2);
    REQUIRE(g.exact);
    CHECK(*g.exact == 2);
  }
  const auto one = g_value(6, 2, 1);
  REQUIRE(one.exact);
  CHECK(*one.exact == 1);
  const auto g316 = g_value(3, 1, 6, make_rational(1, 100000));
  CHECK(to_double(g316.approx()) == doctest::Approx(3.8587).epsilon(1e-4));
  CHECK_THROWS_AS(g_value(3, 2, 2), DomainError);
}

TEST_CASE("g of points is the n-th root of s") {
  for (long n = 1; n <= 6; ++n)
    for (long s = 2; s <= 12; ++s) {
      const auto g = g_value(n, 0, s);
      Rational lo = 1, hi = 1;
      for (long i = 0; i < n; ++i) lo *= g.lo, hi *= g.hi;
      CHECK(lo <= s);
      CHECK(hi >= s);
      CHECK(g.hi - g.lo <= default_precision());
    }
}

TEST_CASE("g increases up the tower") {
  for (long n = 3; n <= 8; ++n)
    for (long r = 1; 2 * r + 1 <= n; ++r)
      for (long s : {2L, 5L, 10L, 100L}) CHECK(compare(g_value(n, r, s), g_value(n - 1, r - 1, s)) > 0);
}

TEST_CASE("sign profile") {
  CHECK(lambda_poly(3, 1, 6)(Rational(1)) == make_rational(-5, 6));
  CHECK(lambda_poly(3, 1, 6)(Rational(4)) == make_rational(4, 6));
  CHECK(below_g(3, 0, 8, make_rational(199, 100)));
  CHECK_FALSE(below_g(3, 0, 8, make_rational(201, 100)));
  CHECK_FALSE(below_g(3, 0, 8, Rational(2)));
  CHECK(below_g(3, 1, 6, make_rational(27, 7)));
  CHECK(below_g(3, 1, 6, make_rational(1, 2)));
  for (long n = 2; n <= 6; ++n)
    for (long r = 0; 2 * r + 1 <= n; ++r) CHECK(sign_profile_check(n, r, 7, 25));
}

TEST_CASE("special line counts") {
  const auto rows = g_specials(8);
  CHECK(rows.size() == 6);
  for (const auto& row : rows) {
    CHECK(row.lambda_at_root == 0);
    CHECK(row.largest_root_is_n_minus_1);
  }
  CHECK(rows[0].s == 2);
  CHECK(rows[1].s == 9);
  CHECK(rows[2].s == 64);
  CHECK(lambda_poly(4, 1, 9)(Rational(3)) == 0);
  CHECK(lambda_poly(5, 1, 64)(Rational(4)) == 0);
}

}

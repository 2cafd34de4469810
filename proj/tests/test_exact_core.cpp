#include <random>

#include "doctest.h"
#include "fatflats/binomial.hpp"
#include "fatflats/bipoly.hpp"
#include "fatflats/flats.hpp"
#include "fatflats/roots.hpp"

using namespace fatflats;

TEST_SUITE("exact_core") {

TEST_CASE("rationals stay canonical and print without /1") {
  CHECK(to_string(make_rational(54, 14)) == "27/7");
  CHECK(to_string(make_rational(-6, -3)) == "2");
  CHECK(to_string(make_rational(3, -9)) == "-1/3");
  CHECK(parse_rational("27/7") == make_rational(27, 7));
  CHECK(parse_rational("1e-6") == make_rational(1, 1000000));
  CHECK(parse_rational("-0.25") == make_rational(-1, 4));
  CHECK_THROWS_AS(parse_rational("x"), DomainError);
  CHECK_THROWS_AS(make_rational(1, 0), DomainError);
  CHECK(floor(make_rational(-7, 2)) == -4);
  CHECK(ceil(make_rational(7, 2)) == 4);
}

TEST_CASE("binom") {
  CHECK(binom(6, 3) == 20);
  CHECK(binom(30, 3) == 4060);
  CHECK(binom(5, -1) == 0);
  CHECK(binom(5, 6) == 0);
  CHECK_THROWS_AS(binom(-1, 0), DomainError);
  for (long a = 1; a <= 40; ++a)
    for (long b = 1; b < a; ++b) CHECK(binom(a, b) == binom(a - 1, b - 1) + binom(a - 1, b));
}

TEST_CASE("derivative") {
  CHECK(UniPoly{12, -18, 0, 1}.derivative() == UniPoly{-18, 0, 3});
  CHECK(UniPoly::constant(Rational(5)).derivative().is_zero());
  for (long n = 1; n <= 8; ++n) {
    Integer f, g;
    mpz_fac_ui(f.get_mpz_t(), n);
    mpz_fac_ui(g.get_mpz_t(), n - 1);
    const UniPoly p = (UniPoly::monomial(Rational(1), n) - UniPoly::constant(Rational(7))) * make_rational(Integer(1), f);
    CHECK(p.derivative() == UniPoly::monomial(make_rational(Integer(1), g), n - 1));
  }
}

TEST_CASE("expand_scaled of 6 P_{3,0,4} and 6 P_{3,1,6}") {
  const BiExpansion a = expand_scaled(hilbert_poly_bivariate(3, 0, 4) * Rational(6));
  CHECK(a.coefficient(3) == UniPoly{-4, 0, 0, 1});
  CHECK(a.coefficient(2) == UniPoly{-12, 0, 6});
  CHECK(a.coefficient(1) == UniPoly{-8, 11});
  CHECK(a.coefficient(0) == UniPoly{6});
  const BiExpansion b = expand_scaled(hilbert_poly_bivariate(3, 1, 6) * Rational(6));
  CHECK(b.coefficient(3) == UniPoly{12, -18, 0, 1});
  CHECK(b.coefficient(2) == UniPoly{-18, -18, 6});
  CHECK(b.coefficient(1) == UniPoly{-30, 11});
  CHECK(b.coefficient(0) == UniPoly{6});
  const BiExpansion t = expand_scaled(UniPoly{0, 1});
  CHECK(t.coefficient(1) == UniPoly{0, 1});
  CHECK(t.coefficient(0).is_zero());
}

TEST_CASE("expand_scaled reassembles at random integer points") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> mdist(1, 30), tdist(0, 60);
  const BiPoly p = hilbert_poly_bivariate(5, 2, 3);
  const BiExpansion ex = expand_scaled(p);
  for (int k = 0; k < 200; ++k) {
    const long m = mdist(rng), t = m + tdist(rng);
    const Rational x = make_rational(t, m);
    CHECK(ex(x, Rational(m)) == p(Rational(t), Rational(m)));
    CHECK(p(Rational(t), Rational(m)) == Rational(hilbert_value(5, 2, 3, m, t)));
  }
}

TEST_CASE("isolate_largest_root") {
  const auto g = isolate_largest_root(UniPoly{12, -18, 0, 1}, Rational(1), make_rational(1, 10000));
  REQUIRE(g);
  CHECK(g->hi - g->lo <= make_rational(1, 10000));
  CHECK(to_double(g->approx()) == doctest::Approx(3.8587).epsilon(1e-4));
  const auto c = isolate_largest_root(UniPoly{-4, 0, 0, 1}, Rational(1));
  REQUIRE(c);
  CHECK(to_double(c->approx()) == doctest::Approx(1.587401).epsilon(1e-6));
  CHECK(c->lo * c->lo * c->lo < 4);
  CHECK(c->hi * c->hi * c->hi >= 4);
  const auto one = isolate_largest_root(UniPoly{-1, 1}, Rational(1));
  REQUIRE(one);
  REQUIRE(one->exact);
  CHECK(*one->exact == 1);
  CHECK_FALSE(isolate_largest_root(UniPoly{1, 0, 1}, Rational(-5)));
  CHECK_THROWS_AS(isolate_largest_root(UniPoly{}, Rational(0)), DomainError);
}

TEST_CASE("count_roots_in") {
  CHECK(count_roots_in(UniPoly{4, -6, 0, 1}, Rational(1), Rational(10)) == 1);
  CHECK(count_roots_in(UniPoly{1, 0, 1}, Rational(-10), Rational(10)) == 0);
  CHECK(count_roots_in(UniPoly{12, -18, 0, 1}, Rational(1), Rational(10)) == 1);
  CHECK(count_roots_in(UniPoly{-1, 1}, Rational(0), Rational(1)) == 1);  // (lo, hi]
  CHECK(count_roots_in(UniPoly{-1, 1}, Rational(1), Rational(2)) == 0);
  CHECK_THROWS_AS(count_roots_in(UniPoly{}, Rational(0), Rational(1)), DomainError);
}

TEST_CASE("root isolation agrees with a sign scan on well-separated roots") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    // distinct roots a/2 with odd multiplicity, times x^2 + c with no real roots
    std::vector<long> pool;
    for (long a = -12; a <= 12; ++a) pool.push_back(a);
    std::shuffle(pool.begin(), pool.end(), rng);
    const long k = std::uniform_int_distribution<long>(0, 4)(rng);
    UniPoly p = UniPoly::constant(Rational(1));
    for (long i = 0; i < k; ++i) {
      const UniPoly f = UniPoly::linear_root(make_rational(pool[i], 2));
      p = p * f;
      if (i == 0 && k <= 2) p = p * f * f;
    }
    if (trial % 2) p = p * UniPoly{std::uniform_int_distribution<long>(1, 5)(rng), 0, 1};
    if (p.degree() > 8) continue;

    long changes = 0;
    const Rational step = make_rational(1, 1000);
    Rational x = Rational(-7) + make_rational(1, 7000);
    int prev = sgn(p(x));
    for (long i = 0; i < 14000; ++i) {
      x += step;
      const int cur = sgn(p(x));
      if (cur != 0 && prev != 0 && cur != prev) ++changes;
      if (cur != 0) prev = cur;
    }
    CHECK(changes == k);
    CHECK(static_cast<long>(isolate_roots(p, Rational(-7), Rational(7), default_precision()).size()) == k);
    CHECK(static_cast<long>(count_roots_in(p, Rational(-7), Rational(7))) == k);
  }
}

TEST_CASE("algebraic comparisons") {
  const auto a = *isolate_largest_root(UniPoly{-2, 0, 1}, Rational(0));
  CHECK(compare(a, make_rational(141, 100)) > 0);
  CHECK(compare(a, make_rational(142, 100)) < 0);
  const auto b = *isolate_largest_root(UniPoly{-8, 0, 0, 0, 0, 0, 1}, Rational(0));  // 8^(1/6) = sqrt 2
  CHECK(compare(a, b) == 0);
  const auto c = *isolate_largest_root(UniPoly{-3, 0, 1}, Rational(0));
  CHECK(compare(a, c) < 0);
  CHECK(compare(c, a) > 0);
}

}

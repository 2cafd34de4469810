#include "doctest.h"
#include "fatflats/binomial.hpp"
#include "fatflats/flats.hpp"

using namespace fatflats;

namespace {

// degree-t monomials in n+1 variables whose last n-r exponents sum to < m
long brute_conditions(long n, long r, long m, long t) {
  long count = 0;
  std::vector<long> e(n + 1, 0);
  const auto rec = [&](auto&& self, long idx, long left) -> void {
    if (idx == n) {
      e[n] = left;
      long tail = 0;
      for (long k = r + 1; k <= n; ++k) tail += e[k];
      if (tail < m) ++count;
      return;
    }
    for (long v = 0; v <= left; ++v) {
      e[idx] = v;
      self(self, idx + 1, left - v);
    }
  };
  rec(rec, 0, t);
  return count;
}

}  // namespace

TEST_SUITE("fatflats") {

TEST_CASE("conditions_count examples") {
  CHECK(conditions_count(3, 1, 4, 5) == 40);
  CHECK(conditions_count(4, 2, 4, 4) == 65);
  CHECK(conditions_count(5, 2, 1, 3) == 10);
  CHECK(conditions_count(3, 1, 4, 4) == 30);
  CHECK(conditions_count_oracle(3, 1, 4, 5) == 40);
  CHECK(conditions_count_oracle(2, 0, 2, 2) == 3);
  CHECK(conditions_count_oracle(4, 2, 4, 4) == 65);
  CHECK(conditions_count_lines(3, 4, 5) == 40);
  CHECK(conditions_count_lines(3, 7, 27) == 672);
  CHECK(conditions_count_lines(4, 1, 3) == 4);
  CHECK_THROWS_AS(conditions_count(3, 1, 4, 3), DomainError);
  CHECK_THROWS_AS(conditions_count(3, 3, 1, 3), DomainError);
}

TEST_CASE("closed form, library oracle and brute force agree") {
  for (long n = 1; n <= 5; ++n)
    for (long r = 0; r < n; ++r)
      for (long m = 1; m <= 5; ++m)
        for (long t = m; t <= m + 6; ++t) {
          const Integer c = conditions_count(n, r, m, t);
          CHECK(c == conditions_count_oracle(n, r, m, t));
          if (n <= 4) CHECK(c == brute_conditions(n, r, m, t));
        }
}

TEST_CASE("line formula") {
  for (long n = 2; n <= 8; ++n)
    for (long m = 1; m <= 8; ++m)
      for (long t = m; t <= 16; ++t) CHECK(conditions_count_lines(n, m, t) == conditions_count(n, 1, m, t));
}

TEST_CASE("condition polynomials") {
  CHECK(conditions_poly(3, 1, 4) == UniPoly{-10, 10});
  CHECK(conditions_poly(4, 2, 4) == UniPoly{5, -5, 5});
  const BiPoly b = conditions_bipoly(3, 1);
  for (long m = 1; m <= 6; ++m)
    for (long t = m; t <= m + 5; ++t) CHECK(b(Rational(t), Rational(m)) == Rational(conditions_count(3, 1, m, t)));
}

TEST_CASE("hilbert_function_flat") {
  const auto seq = [](std::initializer_list<long> xs) {
    std::vector<Integer> v;
    for (long x : xs) v.emplace_back(x);
    return v;
  };
  CHECK(hilbert_function_flat(2, 0, 4, 6) == seq({1, 3, 6, 10, 10, 10}));
  CHECK(hilbert_function_flat(3, 1, 4, 6) == seq({1, 4, 10, 20, 30, 40}));
  CHECK(hilbert_function_flat(4, 2, 4, 6) == seq({1, 5, 15, 35, 65, 105}));

  for (long n = 2; n <= 6; ++n)
    for (long r = 0; r < n; ++r)
      for (long m = 1; m <= 4; ++m) {
        std::vector<Integer> h = hilbert_function_flat(n, r, m, 12);
        for (long k = 0; k < r; ++k)
          for (std::size_t i = h.size() - 1; i > 0; --i) h[i] -= h[i - 1];
        for (long t = 0; t < 12; ++t) {
          const Integer a = binom(t + n - r, n - r), b = binom(m + n - r - 1, n - r);
          CHECK(h[t] == (a < b ? a : b));
        }
        // past the regularity range it matches the condition count
        const std::vector<Integer> full = hilbert_function_flat(n, r, m, 12);
        for (long t = m; t < 12; ++t) CHECK(full[t] == conditions_count(n, r, m, t));
      }
}

TEST_CASE("uniform and mixed Hilbert polynomials") {
  CHECK(hilbert_poly_uniform(3, 1, 6, 7)(Rational(27)) == 28);
  CHECK(hilbert_poly_uniform(3, 1, 6, 7)(Rational(26)) <= 0);
  CHECK(hilbert_poly_uniform(3, 0, 4, 2)(Rational(3)) == 4);
  CHECK(hilbert_poly_uniform(3, 1, 1, 4)(Rational(4)) == 5);
  CHECK(hilbert_poly_mixed(3, 1, {4, 3, 3, 3, 3, 3})(Rational(12)) == -5);
  CHECK(hilbert_poly_mixed(3, 1, {1, 1, 1, 0, 0})(Rational(2)) == 1);  // 10 - 3*3: the quadric through three lines
  CHECK(hilbert_poly_mixed(3, 1, {0, 0, 0})(Rational(5)) == binom(8, 3));
  CHECK(hilbert_poly_mixed(4, 1, {3, 3})(Rational(7)) == Rational(binom(11, 4) - 2 * conditions_count(4, 1, 3, 7)));
  CHECK_THROWS_AS(hilbert_poly_uniform(3, 1, 2, 0), DomainError);
}

TEST_CASE("difference property") {
  for (long n = 3; n <= 8; ++n)
    for (long r = 1; 2 * r + 1 <= n; ++r)
      for (long s = 1; s <= 10; ++s)
        for (long m = 1; m <= 6; ++m) {
          const UniPoly p = hilbert_poly_uniform(n, r, s, m);
          const UniPoly q = hilbert_poly_uniform(n - 1, r - 1, s, m);
          // both sides have degree <= 8, so agreement at 12 points is identity
          for (long t = -3; t < 9; ++t) CHECK(p(Rational(t)) - p(Rational(t - 1)) == q(Rational(t)));
        }
}

TEST_CASE("value at t = m") {
  for (long n = 1; n <= 7; ++n)
    for (long r = 0; r < n; ++r)
      for (long s = 1; s <= 4; ++s)
        for (long m = 1; m <= 5; ++m) {
          if (s >= 2 && n < 2 * r + 1) continue;
          const Integer top = binom(m + n, n);
          const Integer expect = top - s * (top - binom(m + n - r - 1, n - r - 1));
          CHECK(hilbert_poly_uniform(n, r, s, m)(Rational(m)) == Rational(expect));
          CHECK(hilbert_value(n, r, s, m, m) == expect);
        }
}

TEST_CASE("initial degrees") {
  CHECK(expected_alpha_upper(3, 1, {1, 1, 1}) == 2);
  CHECK(expected_alpha_upper(3, 1, {7, 7, 7, 7, 7, 7}) == 27);
  CHECK(expected_alpha_upper(3, 0, {1}) == 1);
  CHECK(expected_alpha_upper(5, 0, {1}) == 1);
  CHECK(alpha_lines_general(3, 3) == 2);
  CHECK(alpha_lines_general(3, 6) == 4);
  CHECK(alpha_lines_general(3, 1) == 1);
  CHECK(alpha_points_general(2, 5) == 2);
  CHECK(alpha_points_general(4, 1) == 1);
  CHECK(alpha2_points_expected(2, 2) == 3);
}

TEST_CASE("summation identities") {
  CHECK(identity_sum_binom(2, 4) == std::pair<Integer, Integer>(20, 20));
  CHECK(identity_sum_binom(0, 5) == std::pair<Integer, Integer>(5, 5));
  CHECK(identity_sum_i_binom(1, 3) == std::pair<Integer, Integer>(8, 8));
  for (long a = 0; a <= 10; ++a)
    for (long m = 1; m <= 12; ++m) {
      const auto [l1, r1] = identity_sum_binom(a, m);
      CHECK(l1 == r1);
      const auto [l2, r2] = identity_sum_i_binom(a, m);
      CHECK(l2 == r2);
    }
}

}

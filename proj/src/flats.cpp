#include "fatflats/flats.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "fatflats/binomial.hpp"

namespace fatflats {

namespace {

void check_plane(long n, long r) {
  if (n < 1 || r < 0 || r >= n)
    throw DomainError("need 0 <= r < n, got n=" + std::to_string(n) + " r=" + std::to_string(r));
}

void check_count_args(long n, long r, long m, long t) {
  check_plane(n, r);
  if (m < 1) throw DomainError("multiplicity must be >= 1");
  if (t < m) throw DomainError("condition count only holds for t >= m");
}

long max_entry(const MultVector& v) {
  long m = 0;
  for (long x : v) {
    if (x < 0) throw DomainError("negative multiplicity in a Hilbert polynomial");
    m = std::max(m, x);
  }
  return m;
}

}  // namespace

void FlatConfig::validate() const {
  check_plane(n, r);
  if (s < 1) throw DomainError("need s >= 1");
  if (s >= 2 && n < 2 * r + 1)
    throw DomainError("disjoint r-planes need n >= 2r+1 (n=" + std::to_string(n) + ", r=" + std::to_string(r) + ")");
}

Integer conditions_count(long n, long r, long m, long t) {
  check_count_args(n, r, m, t);
  Integer sum = 0;
  for (long i = 0; i < m; ++i) sum += binom(t - i + r, r) * binom(i + n - r - 1, n - r - 1);
  return sum;
}

Integer conditions_count_oracle(long n, long r, long m, long t) {
  check_count_args(n, r, m, t);
  if (binom(t + n, n) > 10'000'000) throw DomainError("monomial enumeration guard exceeded");
  // exponent vectors of total degree t over n+1 variables, odometer style
  const std::size_t vars = static_cast<std::size_t>(n + 1);
  std::vector<long> e(vars, 0);
  Integer count = 0;
  std::function<void(std::size_t, long, long)> walk = [&](std::size_t k, long remaining, long tail) {
    if (k + 1 == vars) {
      e[k] = remaining;
      const long tail_sum = tail + (static_cast<long>(k) > r ? remaining : 0);
      if (tail_sum < m) ++count;
      return;
    }
    for (long x = 0; x <= remaining; ++x) {
      e[k] = x;
      walk(k + 1, remaining - x, tail + (static_cast<long>(k) > r ? x : 0));
    }
  };
  walk(0, t, 0);
  return count;
}

Integer conditions_count_lines(long n, long m, long t) {
  if (n < 2) throw DomainError("lines need n >= 2");
  check_count_args(n, 1, m, t);
  return Integer(t + 1) * binom(m + n - 2, n - 1) - Integer(n - 1) * binom(m + n - 2, n);
}

UniPoly conditions_poly(long n, long r, long m) {
  check_plane(n, r);
  if (m < 0) throw DomainError("multiplicity must be >= 0");
  UniPoly sum;
  for (long i = 0; i < m; ++i) {
    sum += UniPoly::binomial(r - i, r) * Rational(binom(i + n - r - 1, n - r - 1));
  }
  return sum;
}

BiPoly conditions_bipoly(long n, long r) {
  check_plane(n, r);
  // f(t, i) = C(t - i + r, r) * C(i + n-r-1, n-r-1), then sum over 0 <= i < m
  const UniPoly binom_t = UniPoly::binomial(r, r);  // C(t + r, r) as a polynomial in t
  // C(t - i + r, r): substitute t -> t - i. Expand as polynomial in t with coefficients in i.
  std::vector<UniPoly> coeffs;  // coefficient of t^a, polynomial in i
  {
    // (t - i)^k = sum_a C(k, a) t^a (-i)^(k-a)
    const auto& bc = binom_t.coeffs();
    coeffs.resize(bc.size());
    for (std::size_t k = 0; k < bc.size(); ++k) {
      for (std::size_t a = 0; a <= k; ++a) {
        Rational c = bc[k] * Rational(binom(static_cast<long>(k), static_cast<long>(a)));
        if ((k - a) % 2 == 1) c = -c;
        coeffs[a] += UniPoly::monomial(c, k - a);
      }
    }
  }
  const UniPoly second = UniPoly::binomial(n - r - 1, n - r - 1);  // C(i + n-r-1, n-r-1) in i
  for (auto& c : coeffs) c = c * second;
  return sum_over_second(BiPoly(std::move(coeffs)));
}

std::vector<Integer> hilbert_function_flat(long n, long r, long m, long length) {
  check_plane(n, r);
  if (m < 1) throw DomainError("multiplicity must be >= 1");
  if (length < 1) throw DomainError("length must be >= 1");
  const long k = n - r;
  const Integer cap = binom(m + k - 1, k);
  std::vector<Integer> seq;
  seq.reserve(static_cast<std::size_t>(length));
  for (long t = 0; t < length; ++t) seq.push_back(std::min(binom(t + k, k), cap));
  for (long pass = 0; pass < r; ++pass) {
    for (std::size_t i = 1; i < seq.size(); ++i) seq[i] += seq[i - 1];
  }
  return seq;
}

UniPoly hilbert_poly_uniform(long n, long r, long s, long m) {
  FlatConfig{n, r, s}.validate();
  if (m < 1) throw DomainError("multiplicity must be >= 1");
  return UniPoly::binomial(n, n) - conditions_poly(n, r, m) * Rational(s);
}

UniPoly hilbert_poly_mixed(long n, long r, const MultVector& v) {
  check_plane(n, r);
  max_entry(v);
  long support = 0;
  for (long x : v) support += x > 0 ? 1 : 0;
  if (support >= 2 && n < 2 * r + 1) throw DomainError("disjoint r-planes need n >= 2r+1");
  UniPoly p = UniPoly::binomial(n, n);
  for (long x : v) {
    if (x > 0) p -= conditions_poly(n, r, x);
  }
  return p;
}

BiPoly hilbert_poly_bivariate(long n, long r, long s) {
  FlatConfig{n, r, s}.validate();
  return BiPoly::from_t(UniPoly::binomial(n, n)) - conditions_bipoly(n, r) * Rational(s);
}

Integer hilbert_value(long n, long r, long s, long m, long t) {
  return binom(t + n, n) - Integer(s) * conditions_count(n, r, m, t);
}

long expected_alpha_upper(long n, long r, const MultVector& v) {
  const long m = max_entry(v);
  if (m < 1) throw DomainError("expected_alpha_upper needs a positive multiplicity");
  const UniPoly p = hilbert_poly_mixed(n, r, v);
  for (long t = m;; ++t) {
    if (p(Rational(t)) > 0) return t;
  }
}

long alpha_lines_general(long n, long s) {
  if (n < 3 || s < 1) throw DomainError("alpha_lines_general needs n >= 3, s >= 1");
  for (long t = 0;; ++t) {
    if (binom(n + t, n) - Integer(s) * (t + 1) > 0) return t;
  }
}

long alpha_points_general(long n, long s) {
  if (n < 1 || s < 1) throw DomainError("alpha_points_general needs n, s >= 1");
  for (long t = 0;; ++t) {
    if (binom(t + n, n) - s > 0) return t;
  }
}

long alpha2_points_expected(long n, long s) {
  if (n < 1 || s < 1) throw DomainError("alpha2_points_expected needs n, s >= 1");
  for (long t = 0;; ++t) {
    if (binom(t + n, n) - Integer(s) * (n + 1) > 0) return t;
  }
}

std::pair<Integer, Integer> identity_sum_binom(long a, long m) {
  if (a < 0 || m < 1) throw DomainError("identity_sum_binom needs a >= 0, m >= 1");
  Integer lhs = 0;
  for (long i = 0; i < m; ++i) lhs += binom(i + a, a);
  return {lhs, binom(m + a, a + 1)};
}

std::pair<Integer, Integer> identity_sum_i_binom(long a, long m) {
  if (a < 0 || m < 1) throw DomainError("identity_sum_i_binom needs a >= 0, m >= 1");
  Integer lhs = 0;
  for (long i = 0; i < m; ++i) lhs += Integer(i) * binom(i + a, a);
  return {lhs, Integer(a + 1) * binom(m + a, a + 2)};
}

}  // namespace fatflats

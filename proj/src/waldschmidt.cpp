#include "fatflats/waldschmidt.hpp"

#include <sstream>

#include "fatflats/flats.hpp"
#include "fatflats/lambda.hpp"

namespace fatflats {

namespace {

Integer factorial(long n) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f;
}

// p <= 0 on [a, b]
bool nonpositive_on(const UniPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) return true;
  if (p(a) > 0 || p(b) > 0) return false;
  if (a == b) return true;
  std::size_t inner = count_roots_in(p, a, b) - (p(b) == 0 ? 1 : 0);
  if (inner > 0) return false;
  return p((a + b) / 2) <= 0;
}

bool nonnegative_on(const UniPoly& p, const Rational& a, const Rational& b) {
  return nonpositive_on(-p, a, b);
}

// Largest a in [1, hi] (rational, possibly short of the true root) with p <= 0 on [1, a].
Rational nonpositive_reach(const UniPoly& p, const Rational& hi) {
  const Rational one(1);
  if (p.is_zero()) return hi;
  if (p(one) > 0) return one;
  if (hi == one) return one;
  const auto roots = isolate_roots(p, one, hi, default_precision());
  if (roots.empty()) return nonpositive_on(p, one, hi) ? hi : one;
  const Rational first = roots.front().exact ? *roots.front().exact : roots.front().lo;
  return nonpositive_on(p, one, first) ? first : one;
}

}  // namespace

RatioWitness e_empirical(long n, long r, long s, long m_max) {
  FlatConfig{n, r, s}.validate();
  if (m_max < 1) throw DomainError("m_max must be >= 1");
  std::optional<RatioWitness> best;
  for (long m = 1; m <= m_max; ++m) {
    // only t with t/m strictly below the current best can improve it
    const long t_stop = best ? ceil(best->ratio * m).get_si() - 1 : -1;
    for (long t = m; !best || t <= t_stop; ++t) {
      Integer v = hilbert_value(n, r, s, m, t);
      if (v > 0) {
        best = RatioWitness{t, m, make_rational(t, m), v};
        break;
      }
    }
  }
  return *best;
}

ECertifyResult e_certify(long n, long r, long s, const Rational& candidate) {
  FlatConfig{n, r, s}.validate();
  if (candidate < 1) throw DomainError("candidate ratio must be >= 1");

  ECertificate cert;
  cert.n = n;
  cert.r = r;
  cert.s = s;
  cert.ratio = candidate;

  // the candidate must be realized
  {
    const long p = candidate.get_num().get_si();
    const long q = candidate.get_den().get_si();
    bool found = false;
    for (long k = 1; k <= 64 && !found; ++k) {
      Integer v = hilbert_value(n, r, s, k * q, k * p);
      if (v > 0) {
        cert.witness = {k * p, k * q, candidate, v};
        found = true;
      }
    }
    if (!found) throw DomainError("candidate " + to_string(candidate) + " is not realized by any t/m with m <= 64q");
  }

  ECertifyResult out;
  auto fail = [&](std::string step, std::string detail) {
    out.certified = false;
    out.failed_step = std::move(step);
    out.detail = std::move(detail);
    return out;
  };

  // (i) expansion of n! P(m x)
  const BiExpansion ex = expand_scaled(hilbert_poly_bivariate(n, r, s) * Rational(factorial(n)));
  cert.expansion = ex.coeffs_in_m;
  cert.expansion.resize(static_cast<std::size_t>(n + 1));
  if (!(cert.expansion[0] == UniPoly::constant(Rational(factorial(n)))))
    return fail("i", "constant coefficient is not n!");
  if (!(cert.expansion[static_cast<std::size_t>(n)] == lambda_poly(n, r, s) * Rational(factorial(n))))
    return fail("i", "leading coefficient differs from n! Lambda");

  if (candidate == 1) {
    // t >= m leaves nothing below ratio 1
    cert.x_lo = 1;
    cert.m_threshold = 1;
    cert.finite_scan_range = "empty: t >= m forces t/m >= 1";
    out.certified = true;
    out.certificate = cert;
    return out;
  }
  if (!(lambda_poly(n, r, s)(candidate) <= 0)) return fail("ii", "candidate lies above g");

  // (ii) nonpositive region [1, x_lo)
  Rational x_lo = candidate;
  for (long i = 1; i <= n; ++i) x_lo = std::min(x_lo, nonpositive_reach(cert.expansion[static_cast<std::size_t>(i)], candidate));
  cert.x_lo = x_lo;
  for (long i = 1; i <= n && x_lo > 1; ++i) {
    const UniPoly& c = cert.expansion[static_cast<std::size_t>(i)];
    if (!nonpositive_on(c, Rational(1), x_lo))
      return fail("ii", "c_" + std::to_string(i) + " is not nonpositive on [1, " + to_string(x_lo) + "]");
    cert.coefficient_monotonicity.push_back({i, Rational(1), x_lo, "nonpositive"});
  }

  // (iii) monotone region [x_lo, candidate]
  for (long i = 1; i <= n; ++i) {
    const UniPoly& c = cert.expansion[static_cast<std::size_t>(i)];
    if (!nonnegative_on(c.derivative(), x_lo, candidate))
      return fail("iii", "c_" + std::to_string(i) + " is not nondecreasing on [" + to_string(x_lo) + ", " +
                             to_string(candidate) + "]");
    cert.coefficient_monotonicity.push_back({i, x_lo, candidate, "nondecreasing"});
  }

  // (iv) sum_{i>=1} c_i(candidate) m^(i-1) <= 0 for all m >= threshold; below the candidate
  // the sum is then strictly negative because c_n = n! Lambda is strictly increasing there
  std::vector<Rational> at_candidate;
  for (long i = 1; i <= n; ++i) at_candidate.push_back(cert.expansion[static_cast<std::size_t>(i)](candidate));
  const UniPoly tail(at_candidate);
  if (!tail.is_zero() && tail.leading() > 0)
    return fail("iv", "truncated expansion at the candidate is not eventually nonpositive in m");
  long threshold = 1;
  if (tail.degree() >= 1) {
    const Rational bound = root_bound(tail) + 1;
    if (auto root = isolate_largest_root(tail, -bound)) {
      const Integer above = root->exact ? ceil(*root->exact) : floor(root->hi) + 1;
      if (above > threshold) threshold = above.get_si();
    }
    while (threshold > 1 && tail(Rational(threshold - 1)) <= 0 &&
           count_roots_in(tail, Rational(threshold - 1), bound) == 0) {
      --threshold;
    }
    if (tail(Rational(threshold)) > 0 || count_roots_in(tail, Rational(threshold), bound) != 0)
      return fail("iv", "no valid threshold in m");
  } else if (tail.degree() == 0 && tail.leading() > 0) {
    return fail("iv", "truncated expansion at the candidate is positive");
  }
  cert.m_threshold = threshold;

  // (v) finite scan below the threshold
  long scanned = 0;
  for (long m = 1; m < threshold; ++m) {
    const long t_lo = std::max<long>(m, ceil(x_lo * m).get_si());
    for (long t = t_lo; Rational(t) < candidate * m; ++t) {
      ++scanned;
      if (hilbert_value(n, r, s, m, t) > 0)
        return fail("v", "P_{m=" + std::to_string(m) + "}(" + std::to_string(t) + ") > 0 beats the candidate");
    }
  }
  cert.scanned_pairs = scanned;
  std::ostringstream range;
  range << "ceil(" << to_string(x_lo) << "*m) <= t < " << to_string(candidate) << "*m for 1 <= m < " << threshold;
  cert.finite_scan_range = range.str();

  out.certified = true;
  out.certificate = std::move(cert);
  return out;
}

Rational gamma_points_closed(long n, long s) {
  if (n < 1 || s < 1 || s > n + 3) throw DomainError("gamma_points_closed needs n >= 1 and 1 <= s <= n+3");
  if (s <= n) return 1;
  if (s == n + 1) return 1 + make_rational(1, n);
  if (s == n + 2 || n % 2 == 0) return 1 + make_rational(2, n);
  return 1 + make_rational(2, n) + make_rational(2, n * n * n + 2 * n * n - n);
}

const char* to_string(GammaSource src) {
  switch (src) {
    case GammaSource::ClosedForm: return "closed-form";
    case GammaSource::Table: return "table";
    case GammaSource::BoundOnly: return "bound-only";
  }
  return "?";
}

std::optional<GammaValue> gamma_known_lookup(long n, long r, long s) {
  if (n < 1 || r < 0 || r >= n || s < 1) return std::nullopt;
  if (s == 1) return GammaValue{1, GammaSource::ClosedForm, "single flat: symbolic powers are ordinary powers"};
  if (r == 0 && s <= n + 3)
    return GammaValue{gamma_points_closed(n, s), GammaSource::ClosedForm, "s <= n+3 general points"};
  if (n == 3 && r == 1) {
    switch (s) {
      case 2: return GammaValue{2, GammaSource::Table, "general lines in P^3"};
      case 3: return GammaValue{2, GammaSource::Table, "general lines in P^3"};
      case 4: return GammaValue{make_rational(8, 3), GammaSource::Table, "general lines in P^3"};
      case 5: return GammaValue{make_rational(10, 3), GammaSource::Table, "general lines in P^3"};
      case 6: return GammaValue{make_rational(42, 11), GammaSource::BoundOnly, "six degree-7 forms"};
      default: break;
    }
  }
  if (r == 1 && n >= 3) {
    Integer special;
    mpz_ui_pow_ui(special.get_mpz_t(), static_cast<unsigned long>(n - 1), static_cast<unsigned long>(n - 2));
    if (special == s) return GammaValue{n - 1, GammaSource::Table, "(n-1)^(n-2) general lines in P^n"};
  }
  if (n == 2 * r + 1 && s == 2) return GammaValue{2, GammaSource::Table, "two general r-planes in P^(2r+1)"};
  return std::nullopt;
}

BoundsReport bounds_report(long n, long r, long s, long m_max, const Rational& precision) {
  FlatConfig{n, r, s}.validate();
  BoundsReport rep;
  rep.n = n;
  rep.r = r;
  rep.s = s;
  rep.gamma = gamma_known_lookup(n, r, s);
  rep.g = g_value(n, r, s, precision);
  rep.e_witness = e_empirical(n, r, s, m_max);
  rep.e = rep.e_witness.ratio;
  const int e_vs_g = compare(rep.g, rep.e);  // sign of g - e
  if (e_vs_g < 0) {
    rep.e_exceeds_g = true;
    rep.notes.push_back("empirical e above g: infimum not attained for m <= " + std::to_string(m_max));
  } else {
    ECertifyResult cert = e_certify(n, r, s, rep.e);
    rep.e_certified = cert.certified;
    if (cert.certified) {
      rep.e_certificate = std::move(cert.certificate);
    } else {
      rep.notes.push_back("e not certified (step " + cert.failed_step + "): " + cert.detail);
    }
  }
  if (rep.e_certified && e_vs_g < 0) throw InternalError("certified e exceeds g");
  if (rep.gamma) {
    if (rep.gamma->source == GammaSource::BoundOnly) {
      rep.notes.push_back("gamma <= " + to_string(rep.gamma->value) + " (upper bound only)");
    } else {
      if (compare(rep.g, rep.gamma->value) < 0) throw InternalError("gamma exceeds g");
      if (rep.e_certified && rep.gamma->value > rep.e) throw InternalError("gamma exceeds certified e");
    }
  }
  return rep;
}

}  // namespace fatflats

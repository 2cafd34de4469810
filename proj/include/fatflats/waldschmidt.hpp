#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatflats/polynomial.hpp"
#include "fatflats/roots.hpp"

namespace fatflats {

/// A pair t >= m >= 1 with P_{n,r,s,m}(t) > 0; ratio = t/m.
struct RatioWitness {
  long t = 0;
  long m = 0;
  Rational ratio;
  Integer value;
};

/// Smallest t/m over 1 <= m <= m_max with P_{n,r,s,m}(t) > 0 (ties: smallest m).
RatioWitness e_empirical(long n, long r, long s, long m_max = 60);

struct CoefficientVerdict {
  long index;  // power of m
  Rational lo;
  Rational hi;
  std::string verdict;  // "nonpositive" or "nondecreasing"
};

/// Proof that no t/m below `ratio` has P_{n,r,s,m}(t) > 0.
///
/// With n! P(m x) = sum_{i=0}^n c_i(x) m^i and c_0 = n!, integrality of P gives
/// P(t) <= 0 iff sum_{i>=1} c_i(t/m) m^i < 0. The certificate splits x = t/m:
///  - [1, x_lo): every c_i (i >= 1) is nonpositive and c_n = n! Lambda < 0;
///  - [x_lo, ratio), m >= m_threshold: every c_i is nondecreasing, so the sum is
///    below sum_i c_i(ratio) m^i, which is nonpositive for m >= m_threshold;
///  - [x_lo, ratio), m < m_threshold: every pair is checked directly.
struct ECertificate {
  long n = 0;
  long r = 0;
  long s = 0;
  Rational ratio;
  RatioWitness witness;
  std::vector<UniPoly> expansion;  // c_0 .. c_n
  Rational x_lo;
  long m_threshold = 1;
  std::vector<CoefficientVerdict> coefficient_monotonicity;
  std::string finite_scan_range;
  long scanned_pairs = 0;
};

struct ECertifyResult {
  bool certified = false;
  std::optional<ECertificate> certificate;
  std::string failed_step;  // "i" .. "v" when not certified
  std::string detail;
};

/// Throws DomainError when `candidate` is not realized by a witness.
ECertifyResult e_certify(long n, long r, long s, const Rational& candidate);

/// Waldschmidt constant of s <= n+3 general points in P^n.
Rational gamma_points_closed(long n, long s);

enum class GammaSource { ClosedForm, Table, BoundOnly };
const char* to_string(GammaSource src);

struct GammaValue {
  Rational value;
  GammaSource source;
  std::string reference;
};

/// Known gamma for s generic r-planes in P^n, or an upper bound tagged BoundOnly.
std::optional<GammaValue> gamma_known_lookup(long n, long r, long s);

struct BoundsReport {
  long n = 0;
  long r = 0;
  long s = 0;
  std::optional<GammaValue> gamma;
  Rational e;
  bool e_certified = false;
  RatioWitness e_witness;
  std::optional<ECertificate> e_certificate;
  AlgebraicNumber g;
  /// Empirical e above g: the infimum is not attained for m <= m_max.
  bool e_exceeds_g = false;
  std::vector<std::string> notes;
};

/// gamma <= e <= g. A violation among exact or certified values throws InternalError.
BoundsReport bounds_report(long n, long r, long s, long m_max = 60,
                           const Rational& precision = default_precision());

}  // namespace fatflats

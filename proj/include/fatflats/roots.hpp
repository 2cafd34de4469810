#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fatflats/polynomial.hpp"

namespace fatflats {

/// Default width of isolating intervals.
Rational default_precision();  // 10^-12

/// A real root of `defining` isolated in the half-open interval (lo, hi], or
/// known exactly when `exact` is set (then lo == hi == *exact).
struct RootInterval {
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
};

/// Real algebraic number: the unique root of a squarefree polynomial inside
/// an isolating interval. Rational values are carried exactly.
struct AlgebraicNumber {
  UniPoly defining;
  Rational lo;
  Rational hi;
  std::optional<Rational> exact;
  /// 10 significant digits (truncated) and the width of the enclosure.
  std::string decimal;
  Rational error_bound;

  [[nodiscard]] bool is_rational() const { return exact.has_value(); }
  /// Midpoint of the enclosure (the value itself when rational).
  [[nodiscard]] Rational approx() const;
};

/// Sturm sequence of the squarefree part of p.
std::vector<UniPoly> sturm_chain(const UniPoly& p);
/// Sign variations of a Sturm chain at x (zeros skipped).
std::size_t sign_variations(const std::vector<UniPoly>& chain, const Rational& x);

/// Number of distinct real roots of p in (lo, hi].
std::size_t count_roots_in(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Every real root of p has absolute value below this bound.
Rational root_bound(const UniPoly& p);

/// Isolating intervals (sorted ascending) for all distinct real roots of p in
/// (lo, hi], each narrowed to width <= precision; rational roots reported
/// exactly when found.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                        const Rational& precision);

/// Largest real root >= lower, or nullopt when there is none.
std::optional<AlgebraicNumber> isolate_largest_root(const UniPoly& p, const Rational& lower,
                                                    const Rational& precision = default_precision());

/// Narrows the enclosure of `a` to width <= precision.
AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& precision);

/// Exact three-way comparison (-1, 0, 1) of a against a rational.
int compare(const AlgebraicNumber& a, const Rational& q);
/// Exact three-way comparison of two algebraic numbers.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);

/// Closed rational interval with exact endpoint arithmetic.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& q) { return {q, q}; }
  static Interval of(const AlgebraicNumber& a) {
    return a.exact ? point(*a.exact) : Interval{a.lo, a.hi};
  }
  [[nodiscard]] bool contains_zero() const { return lo <= 0 && hi >= 0; }
  [[nodiscard]] Rational width() const { return hi - lo; }

  friend Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
  friend Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
  friend Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator/(const Interval& a, const Interval& b);
};

}  // namespace fatflats

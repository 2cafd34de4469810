#pragma once

#include <vector>

#include "fatflats/polynomial.hpp"

namespace fatflats {

/// Polynomial in two variables (t, m) over Q: sum_a t^a * coeff_in_m(a)(m).
/// Only as much structure as the m/x bi-expansion needs.
class BiPoly {
 public:
  BiPoly() = default;
  /// t_coeffs[a] is the coefficient of t^a, itself a polynomial in m.
  explicit BiPoly(std::vector<UniPoly> t_coeffs);

  static BiPoly from_t(const UniPoly& p);
  static BiPoly from_m(const UniPoly& p);

  [[nodiscard]] const std::vector<UniPoly>& t_coeffs() const { return t_coeffs_; }
  [[nodiscard]] Rational operator()(const Rational& t, const Rational& m) const;
  /// Fix m, leaving a polynomial in t.
  [[nodiscard]] UniPoly at_m(const Rational& m) const;

  BiPoly& operator+=(const BiPoly& o);
  BiPoly& operator-=(const BiPoly& o);
  BiPoly& operator*=(const Rational& c);
  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const Rational& c) { return a *= c; }
  friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
  friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_coeffs_ == b.t_coeffs_; }

 private:
  void normalize();
  std::vector<UniPoly> t_coeffs_;
};

/// Given f(t, i) (stored with i in the second slot), returns the polynomial
/// F(t, m) = sum_{0 <= i < m} f(t, i), exact for every integer m >= 0.
BiPoly sum_over_second(const BiPoly& f);

/// Coefficients of p(t = m*x, m) collected by powers of m:
/// p(m x, m) = sum_i coeffs_in_m[i](x) * m^i.
struct BiExpansion {
  std::vector<UniPoly> coeffs_in_m;

  [[nodiscard]] UniPoly coefficient(std::size_t i) const {
    return i < coeffs_in_m.size() ? coeffs_in_m[i] : UniPoly{};
  }
  [[nodiscard]] Rational operator()(const Rational& x, const Rational& m) const;
  /// sum_i coeffs_in_m[i](x) m^i as a polynomial in m with x fixed.
  [[nodiscard]] UniPoly at_x(const Rational& x) const;
};

BiExpansion expand_scaled(const BiPoly& p);
/// Single-variable case: p(t) with t = m*x.
BiExpansion expand_scaled(const UniPoly& p);

}  // namespace fatflats

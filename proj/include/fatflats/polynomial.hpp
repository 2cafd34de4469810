#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "fatflats/rational.hpp"

namespace fatflats {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
/// the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> integer_coeffs);

  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, std::size_t degree);
  /// x - root
  static UniPoly linear_root(const Rational& root);
  /// C(x + offset, k) as a polynomial in x; agrees with the binomial
  /// coefficient for every integer x >= -offset.
  static UniPoly binomial(long offset, long k);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Rational>& coeffs() const { return coeffs_; }
  [[nodiscard]] Rational coeff(std::size_t i) const;
  [[nodiscard]] const Rational& leading() const;

  [[nodiscard]] Rational operator()(const Rational& x) const;
  [[nodiscard]] UniPoly derivative() const;
  /// p(a*x)
  [[nodiscard]] UniPoly scale_argument(const Rational& a) const;
  /// p(x + b)
  [[nodiscard]] UniPoly shift_argument(const Rational& b) const;
  [[nodiscard]] UniPoly monic() const;
  /// Integer polynomial with coprime coefficients and positive leading coefficient.
  [[nodiscard]] std::vector<Integer> primitive_integer() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator-(UniPoly a) { return a *= Rational(-1); }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  [[nodiscard]] std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> coeffs_;
};

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(UniPoly a, UniPoly b);
/// p / gcd(p, p'), made monic.
UniPoly squarefree_part(const UniPoly& p);

/// Polynomial through the points (xs[i], ys[i]); xs distinct.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

/// Coefficients of the polynomial S_k(m) = sum_{0 <= i < m} i^k.
UniPoly power_sum(long k);

}  // namespace fatflats

#include "fatflats/polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fatflats {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<long> integer_coeffs) {
  coeffs_.reserve(integer_coeffs.size());
  for (long c : integer_coeffs) coeffs_.emplace_back(c);
  normalize();
}

void UniPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
  std::vector<Rational> v(degree + 1);
  v[degree] = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::linear_root(const Rational& root) {
  return UniPoly(std::vector<Rational>{-root, Rational(1)});
}

UniPoly UniPoly::binomial(long offset, long k) {
  if (k < 0) return {};
  // (x+offset)(x+offset-1)...(x+offset-k+1) / k!
  UniPoly p = constant(Rational(1));
  Integer fact = 1;
  for (long j = 0; j < k; ++j) {
    p = p * linear_root(Rational(j - offset));
    fact *= (j + 1);
  }
  return p * Rational(Integer(1), fact);
}

Rational UniPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : Rational(0);
}

const Rational& UniPoly::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return UniPoly(std::move(d));
}

UniPoly UniPoly::scale_argument(const Rational& a) const {
  std::vector<Rational> out(coeffs_);
  Rational pw = 1;
  for (auto& c : out) {
    c *= pw;
    pw *= a;
  }
  return UniPoly(std::move(out));
}

UniPoly UniPoly::shift_argument(const Rational& b) const {
  // Horner in the polynomial ring: p(x+b) = (...(a_n (x+b) + a_{n-1})(x+b) ...)
  UniPoly acc;
  const UniPoly xb(std::vector<Rational>{b, Rational(1)});
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * xb + constant(*it);
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

std::vector<Integer> UniPoly::primitive_integer() const {
  if (is_zero()) return {};
  Integer lcm_den = 1;
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> out;
  out.reserve(coeffs_.size());
  Integer g = 0;
  for (const auto& c : coeffs_) {
    Rational scaled = c * lcm_den;
    out.push_back(scaled.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (out.back() < 0) g = -g;
  for (auto& z : out) z /= g;
  return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& x : coeffs_) x *= c;
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1) && i > 0;
    if (!unit) os << fatflats::to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem = a.coeffs();
  const auto& bc = b.coeffs();
  const long db = b.degree();
  std::vector<Rational> quot(static_cast<std::size_t>(std::max(0L, a.degree() - db + 1)));
  for (long i = a.degree(); i >= db; --i) {
    const Rational f = rem[static_cast<std::size_t>(i)] / b.leading();
    if (f == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = f;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= f * bc[static_cast<std::size_t>(j)];
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UniPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.monic();
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw DomainError("interpolate: size mismatch");
  // Newton divided differences
  std::vector<Rational> dd(ys);
  const std::size_t n = xs.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Rational den = xs[i] - xs[i - level];
      if (den == 0) throw DomainError("interpolate: repeated node");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  UniPoly acc;
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * UniPoly::linear_root(xs[i]) + UniPoly::constant(dd[i]);
  }
  return acc;
}

UniPoly power_sum(long k) {
  if (k < 0) throw DomainError("power_sum: negative exponent");
  std::vector<Rational> xs, ys;
  Integer running = 0;
  for (long m = 0; m <= k + 1; ++m) {
    xs.emplace_back(m);
    ys.emplace_back(running);
    Integer term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(m), static_cast<unsigned long>(k));
    if (k == 0) term = 1;
    running += term;
  }
  return interpolate(xs, ys);
}

}  // namespace fatflats

#include "fatflats/bipoly.hpp"

#include <algorithm>

namespace fatflats {

BiPoly::BiPoly(std::vector<UniPoly> t_coeffs) : t_coeffs_(std::move(t_coeffs)) { normalize(); }

void BiPoly::normalize() {
  while (!t_coeffs_.empty() && t_coeffs_.back().is_zero()) t_coeffs_.pop_back();
}

BiPoly BiPoly::from_t(const UniPoly& p) {
  std::vector<UniPoly> v;
  for (const auto& c : p.coeffs()) v.push_back(UniPoly::constant(c));
  return BiPoly(std::move(v));
}

BiPoly BiPoly::from_m(const UniPoly& p) { return BiPoly(std::vector<UniPoly>{p}); }

Rational BiPoly::operator()(const Rational& t, const Rational& m) const {
  Rational acc = 0;
  for (auto it = t_coeffs_.rbegin(); it != t_coeffs_.rend(); ++it) {
    acc *= t;
    acc += (*it)(m);
  }
  return acc;
}

UniPoly BiPoly::at_m(const Rational& m) const {
  std::vector<Rational> v;
  v.reserve(t_coeffs_.size());
  for (const auto& c : t_coeffs_) v.push_back(c(m));
  return UniPoly(std::move(v));
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  if (o.t_coeffs_.size() > t_coeffs_.size()) t_coeffs_.resize(o.t_coeffs_.size());
  for (std::size_t i = 0; i < o.t_coeffs_.size(); ++i) t_coeffs_[i] += o.t_coeffs_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  if (o.t_coeffs_.size() > t_coeffs_.size()) t_coeffs_.resize(o.t_coeffs_.size());
  for (std::size_t i = 0; i < o.t_coeffs_.size(); ++i) t_coeffs_[i] -= o.t_coeffs_[i];
  normalize();
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  for (auto& p : t_coeffs_) p *= c;
  normalize();
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  if (a.t_coeffs_.empty() || b.t_coeffs_.empty()) return {};
  std::vector<UniPoly> out(a.t_coeffs_.size() + b.t_coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.t_coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.t_coeffs_.size(); ++j) out[i + j] += a.t_coeffs_[i] * b.t_coeffs_[j];
  return BiPoly(std::move(out));
}

BiPoly sum_over_second(const BiPoly& f) {
  // each t^a coefficient is a polynomial g_a(i) = sum_k g_ak i^k; replace i^k by S_k(m)
  std::vector<UniPoly> out;
  std::vector<UniPoly> sums;
  for (const auto& g : f.t_coeffs()) {
    UniPoly acc;
    for (std::size_t k = 0; k < g.coeffs().size(); ++k) {
      if (g.coeffs()[k] == 0) continue;
      while (sums.size() <= k) sums.push_back(power_sum(static_cast<long>(sums.size())));
      acc += sums[k] * g.coeffs()[k];
    }
    out.push_back(std::move(acc));
  }
  return BiPoly(std::move(out));
}

Rational BiExpansion::operator()(const Rational& x, const Rational& m) const {
  Rational acc = 0;
  for (auto it = coeffs_in_m.rbegin(); it != coeffs_in_m.rend(); ++it) {
    acc *= m;
    acc += (*it)(x);
  }
  return acc;
}

UniPoly BiExpansion::at_x(const Rational& x) const {
  std::vector<Rational> v;
  v.reserve(coeffs_in_m.size());
  for (const auto& c : coeffs_in_m) v.push_back(c(x));
  return UniPoly(std::move(v));
}

BiExpansion expand_scaled(const BiPoly& p) {
  // t^a * m^b -> x^a * m^(a+b)
  std::vector<std::vector<Rational>> grid;
  const auto& tc = p.t_coeffs();
  for (std::size_t a = 0; a < tc.size(); ++a) {
    const auto& mc = tc[a].coeffs();
    for (std::size_t b = 0; b < mc.size(); ++b) {
      if (mc[b] == 0) continue;
      const std::size_t i = a + b;
      if (grid.size() <= i) grid.resize(i + 1);
      if (grid[i].size() <= a) grid[i].resize(a + 1);
      grid[i][a] += mc[b];
    }
  }
  BiExpansion out;
  out.coeffs_in_m.reserve(grid.size());
  for (auto& row : grid) out.coeffs_in_m.emplace_back(std::move(row));
  while (!out.coeffs_in_m.empty() && out.coeffs_in_m.back().is_zero()) out.coeffs_in_m.pop_back();
  return out;
}

BiExpansion expand_scaled(const UniPoly& p) { return expand_scaled(BiPoly::from_t(p)); }

}  // namespace fatflats

#include "fatflats/roots.hpp"

#include <algorithm>
#include <functional>

namespace fatflats {

Rational default_precision() { return make_rational(Integer(1), Integer("1000000000000")); }

Rational AlgebraicNumber::approx() const {
  if (exact) return *exact;
  return (lo + hi) / 2;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("Sturm chain of the zero polynomial");
  std::vector<UniPoly> chain{squarefree_part(p)};
  if (chain[0].degree() <= 0) return chain;
  chain.push_back(chain[0].derivative());
  while (chain.back().degree() > 0) {
    UniPoly r = -divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(std::move(r));
  }
  return chain;
}

std::size_t sign_variations(const std::vector<UniPoly>& chain, const Rational& x) {
  std::size_t changes = 0;
  int prev = 0;
  for (const auto& s : chain) {
    const int sg = sgn(s(x));
    if (sg == 0) continue;
    if (prev != 0 && sg != prev) ++changes;
    prev = sg;
  }
  return changes;
}

std::size_t count_roots_in(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw DomainError("count_roots_in: zero polynomial");
  if (!(lo < hi)) throw DomainError("count_roots_in: requires lo < hi");
  const auto chain = sturm_chain(p);
  const std::size_t va = sign_variations(chain, lo);
  const std::size_t vb = sign_variations(chain, hi);
  return va >= vb ? va - vb : 0;
}

Rational root_bound(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("root_bound: zero polynomial");
  Rational m = 0;
  const Rational lead = abs(p.leading());
  for (long i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeffs()[static_cast<std::size_t>(i)]) / lead));
  return m + 1;
}

namespace {

std::vector<Integer> positive_divisors(const Integer& n) {
  std::vector<Integer> out;
  Integer a = abs(n);
  if (a == 0) return out;
  if (a > Integer("1000000000000")) {
    out.push_back(1);
    return out;
  }
  unsigned long v = a.get_ui();
  std::vector<unsigned long> big;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    out.emplace_back(d);
    if (d != v / d) big.push_back(v / d);
  }
  for (auto it = big.rbegin(); it != big.rend(); ++it) out.emplace_back(*it);
  return out;
}

// Rational root p/q of the squarefree polynomial inside [lo, hi], if any; by
// the rational root theorem q divides the leading coefficient of the
// primitive integer form.
std::optional<Rational> rational_root_in(const UniPoly& q, const Rational& lo, const Rational& hi) {
  const auto prim = q.primitive_integer();
  if (prim.empty()) return std::nullopt;
  const Rational mid = (lo + hi) / 2;
  for (const auto& den : positive_divisors(prim.back())) {
    const Integer centre = floor(mid * den);
    for (int delta = -1; delta <= 2; ++delta) {
      Rational cand = make_rational(centre + delta, den);
      if (cand < lo || cand > hi) continue;
      if (q(cand) == 0) return cand;
    }
  }
  return std::nullopt;
}

// Narrows (a, b] containing exactly one root of the squarefree q.
RootInterval refine_single(const UniPoly& q, const std::vector<UniPoly>& chain, Rational a, Rational b,
                           const Rational& precision) {
  if (q(b) == 0) return {b, b, b};
  std::size_t va = sign_variations(chain, a);
  while (b - a > precision) {
    Rational mid = (a + b) / 2;
    if (q(mid) == 0) {
      // the root in (a, b] is mid only if (a, mid] holds it
      if (va - sign_variations(chain, mid) == 1) return {mid, mid, mid};
      a = mid;
      va = sign_variations(chain, a);
      continue;
    }
    const std::size_t vm = sign_variations(chain, mid);
    if (va - vm == 1) {
      b = mid;
    } else {
      a = mid;
      va = vm;
    }
  }
  if (auto r = rational_root_in(q, a, b)) return {*r, *r, *r};
  return {a, b, std::nullopt};
}

AlgebraicNumber make_algebraic(const UniPoly& q, const RootInterval& ri) {
  AlgebraicNumber out;
  out.defining = q;
  out.lo = ri.lo;
  out.hi = ri.hi;
  out.exact = ri.exact;
  if (ri.exact) {
    out.decimal = to_decimal(*ri.exact, 10);
    out.error_bound = 0;
  } else {
    out.decimal = to_decimal((ri.lo + ri.hi) / 2, 10);
    out.error_bound = ri.hi - ri.lo;
  }
  return out;
}

}  // namespace

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi,
                                        const Rational& precision) {
  if (p.is_zero()) throw DomainError("isolate_roots: zero polynomial");
  if (!(lo < hi)) throw DomainError("isolate_roots: requires lo < hi");
  const UniPoly q = squarefree_part(p);
  if (q.degree() <= 0) return {};
  const auto chain = sturm_chain(q);
  std::vector<RootInterval> out;
  std::function<void(const Rational&, const Rational&, std::size_t, std::size_t)> split =
      [&](const Rational& a, const Rational& b, std::size_t va, std::size_t vb) {
        const std::size_t n = va - vb;
        if (n == 0) return;
        if (n == 1) {
          out.push_back(refine_single(q, chain, a, b, precision));
          return;
        }
        const Rational mid = (a + b) / 2;
        const std::size_t vm = sign_variations(chain, mid);
        split(a, mid, va, vm);
        split(mid, b, vm, vb);
      };
  split(lo, hi, sign_variations(chain, lo), sign_variations(chain, hi));
  return out;
}

std::optional<AlgebraicNumber> isolate_largest_root(const UniPoly& p, const Rational& lower,
                                                    const Rational& precision) {
  if (p.is_zero()) throw DomainError("isolate_largest_root: zero polynomial");
  const UniPoly q = squarefree_part(p);
  if (q.degree() <= 0) return std::nullopt;
  const Rational bound = root_bound(q);
  if (lower >= bound) return std::nullopt;
  const auto chain = sturm_chain(q);
  Rational a = lower;
  Rational b = bound;
  std::size_t vb = sign_variations(chain, b);
  std::size_t total = sign_variations(chain, a) - vb;
  if (total == 0) {
    if (q(lower) == 0) return make_algebraic(q, {lower, lower, lower});
    return std::nullopt;
  }
  // keep: no root above b, at least one root in (a, b]
  while (total > 1) {
    const Rational mid = (a + b) / 2;
    const std::size_t vm = sign_variations(chain, mid);
    if (vm - vb >= 1) {
      a = mid;
      total = vm - vb;
    } else {
      b = mid;
      vb = vm;
    }
  }
  return make_algebraic(q, refine_single(q, chain, a, b, precision));
}

AlgebraicNumber refine(const AlgebraicNumber& a, const Rational& precision) {
  if (a.exact || a.hi - a.lo <= precision) return a;
  const auto chain = sturm_chain(a.defining);
  return make_algebraic(a.defining, refine_single(a.defining, chain, a.lo, a.hi, precision));
}

int compare(const AlgebraicNumber& a, const Rational& q) {
  if (a.exact) return cmp(*a.exact, q) < 0 ? -1 : (cmp(*a.exact, q) > 0 ? 1 : 0);
  if (q <= a.lo) return 1;
  if (q > a.hi) return -1;
  const int sq = sgn(a.defining(q));
  if (sq == 0) return 0;
  const int shi = sgn(a.defining(a.hi));
  // one simple root in (lo, hi]; the sign flips only across it
  return sq == shi ? -1 : 1;
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
  if (b.exact) return compare(a, *b.exact);
  if (a.exact) return -compare(b, *a.exact);
  AlgebraicNumber x = a;
  AlgebraicNumber y = b;
  const UniPoly g = gcd(x.defining, y.defining);
  for (;;) {
    if (x.hi <= y.lo) return -1;
    if (y.hi <= x.lo) return 1;
    if (g.degree() >= 1) {
      const Rational lo = std::max(x.lo, y.lo);
      const Rational hi = std::min(x.hi, y.hi);
      if (lo < hi && count_roots_in(g, lo, hi) >= 1) return 0;
    }
    x = refine(x, (x.hi - x.lo) / 4);
    y = refine(y, (y.hi - y.lo) / 4);
    if (x.exact || y.exact) return compare(x, y);
  }
}

Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw DomainError("interval division by an interval containing zero");
  const Interval inv{1 / b.hi, 1 / b.lo};
  return a * inv;
}

}  // namespace fatflats

#include "fatflats/verifier.hpp"

#include <algorithm>
#include <functional>

#include "fatflats/binomial.hpp"
#include "fatflats/flats.hpp"
#include "fatflats/lambda.hpp"
#include "fatflats/parallel.hpp"
#include "fatflats/waldschmidt.hpp"

namespace fatflats {

namespace {

Integer p31(long d, const std::vector<long>& v) {
  Integer p = binom(d + 3, 3);
  for (long m : v)
    if (m > 0) p -= conditions_count(3, 1, m, d);
  return p;
}

// partitions of `total` into at most `parts` parts each <= `cap`, as nondecreasing length-`parts` vectors
void partitions(long total, long parts, long cap, const std::function<void(const std::vector<long>&)>& emit) {
  std::vector<long> desc;
  std::function<void(long, long)> rec = [&](long left, long limit) {
    if (left == 0) {
      std::vector<long> v(static_cast<std::size_t>(parts) - desc.size(), 0);
      v.insert(v.end(), desc.rbegin(), desc.rend());
      emit(v);
      return;
    }
    if (static_cast<long>(desc.size()) == parts) return;
    for (long x = std::min(left, limit); x >= 1; --x) {
      desc.push_back(x);
      rec(left - x, x);
      desc.pop_back();
    }
  };
  rec(total, cap);
}

Integer exact_floor(const Interval& iv, const char* what) {
  const Integer lo = floor(iv.lo);
  if (lo != floor(iv.hi)) throw InternalError(std::string("enclosure of ") + what + " straddles an integer");
  return lo;
}

ReplayCheck check(std::string name, const std::string& expected, const std::string& actual) {
  return {std::move(name), expected, actual, expected == actual};
}

ReplayCheck check_bool(std::string name, bool ok) {
  return {std::move(name), "true", ok ? "true" : "false", ok};
}

ReplayCheck check_near(std::string name, const AlgebraicNumber& a, const Rational& target, const Rational& tol) {
  const Rational diff = a.approx() - target;
  const bool ok = diff <= tol && -diff <= tol && a.error_bound <= tol;
  return {std::move(name), to_decimal(target, 6) + " +- " + to_decimal(tol, 2), a.decimal, ok};
}

UniPoly poly(std::initializer_list<long> c) { return UniPoly(c); }

ReplayReport replay_e304() {
  ReplayReport rep;
  const RatioWitness w = e_empirical(3, 0, 4, 10);
  rep.checks.push_back(check("e_empirical(3,0,4, m_max=10)", "3/2", to_string(w.ratio)));
  rep.checks.push_back(check("witness (t,m)", "(3,2)", "(" + std::to_string(w.t) + "," + std::to_string(w.m) + ")"));
  rep.checks.push_back(check("P_{3,0,4,2}(3)", "4", to_string(hilbert_value(3, 0, 4, 2, 3))));
  const ECertifyResult c = e_certify(3, 0, 4, make_rational(3, 2));
  rep.checks.push_back(check_bool("certified", c.certified));
  if (c.certificate) {
    const auto& ex = c.certificate->expansion;
    rep.checks.push_back(check("m^3 coefficient of 6P(mx)", "x^3 - 4", ex[3].to_string()));
    rep.checks.push_back(check("m^2 coefficient", poly({-12, 0, 6}).to_string(), ex[2].to_string()));
    rep.checks.push_back(check("m coefficient", poly({-8, 11}).to_string(), ex[1].to_string()));
    rep.checks.push_back(check("constant term", "6", ex[0].to_string()));
    rep.checks.push_back(check_bool("m_threshold <= 6", c.certificate->m_threshold <= 6));
  }
  return rep;
}

ReplayReport replay_e316() {
  ReplayReport rep;
  const RatioWitness w = e_empirical(3, 1, 6, 50);
  rep.checks.push_back(check("e_empirical(3,1,6, m_max=50)", "27/7", to_string(w.ratio)));
  rep.checks.push_back(check("witness (t,m)", "(27,7)", "(" + std::to_string(w.t) + "," + std::to_string(w.m) + ")"));
  rep.checks.push_back(check("P_{3,1,6,7}(27)", "28", to_string(hilbert_value(3, 1, 6, 7, 27))));
  const ECertifyResult c = e_certify(3, 1, 6, make_rational(27, 7));
  rep.checks.push_back(check_bool("certified", c.certified));
  if (c.certificate) {
    const auto& ex = c.certificate->expansion;
    rep.checks.push_back(check("m^3 coefficient of 6P(mx)", poly({12, -18, 0, 1}).to_string(), ex[3].to_string()));
    rep.checks.push_back(check("m^2 coefficient", poly({-18, -18, 6}).to_string(), ex[2].to_string()));
    rep.checks.push_back(check("m coefficient", poly({-30, 11}).to_string(), ex[1].to_string()));
    rep.checks.push_back(check("constant term", "6", ex[0].to_string()));
    rep.checks.push_back(check("x_lo", "30/11", to_string(c.certificate->x_lo)));
    rep.checks.push_back(check_bool("m_threshold <= 50", c.certificate->m_threshold <= 50));
  }
  return rep;
}

ReplayReport replay_gtable() {
  ReplayReport rep;
  const Rational tol = make_rational(1, 1000);
  rep.checks.push_back(check("g_{3,1,1}", "1", g_value(3, 1, 1).decimal));
  rep.checks.push_back(check("g_{3,1,2}", "2", g_value(3, 1, 2).decimal));
  rep.checks.push_back(check_near("g_{3,1,3}", g_value(3, 1, 3), parse_rational("2.584"), tol));
  rep.checks.push_back(check_near("g_{3,1,4}", g_value(3, 1, 4), parse_rational("3.064"), tol));
  rep.checks.push_back(check_near("g_{3,1,5}", g_value(3, 1, 5), parse_rational("3.482"), tol));
  const Rational gammas[] = {1, 2, 2, make_rational(8, 3), make_rational(10, 3)};
  for (long s = 1; s <= 5; ++s) {
    const auto g = gamma_known_lookup(3, 1, s);
    rep.checks.push_back(check("gamma_{3,1," + std::to_string(s) + "}", to_string(gammas[s - 1]), g ? to_string(g->value) : "none"));
  }
  return rep;
}

ReplayReport replay_six_lines() {
  ReplayReport rep;
  rep.checks.push_back(check("P_{3,1,6,7}(27)", "28", to_string(hilbert_value(3, 1, 6, 7, 27))));
  rep.checks.push_back(check("P_{3,1,6,7}(26)", "-210", to_string(hilbert_value(3, 1, 6, 7, 26))));
  const UniPoly mixed = hilbert_poly_mixed(3, 1, {4, 3, 3, 3, 3, 3});
  rep.checks.push_back(check("P_{3,1,(4,3,3,3,3,3)}(12)", "-5", to_string(mixed(Rational(12)))));
  const auto gamma = gamma_known_lookup(3, 1, 6);
  rep.checks.push_back(check("gamma_{3,1,6} upper bound", "42/11 (bound-only)",
                             gamma ? to_string(gamma->value) + " (" + to_string(gamma->source) + ")" : "none"));
  rep.checks.push_back(check_near("g_{3,1,6}", g_value(3, 1, 6), parse_rational("3.8587"), make_rational(1, 10000)));
  return rep;
}

ReplayReport replay_bounds(long n, long r, long s, const std::string& gamma, const std::string& e) {
  ReplayReport rep;
  const BoundsReport b = bounds_report(n, r, s);
  rep.checks.push_back(check("gamma", gamma, b.gamma ? to_string(b.gamma->value) : "none"));
  rep.checks.push_back(check("e", e, to_string(b.e)));
  rep.checks.push_back(check_bool("e certified", b.e_certified));
  rep.checks.push_back(check_bool("gamma < e", b.gamma && b.gamma->value < b.e));
  rep.checks.push_back(check_bool("e < g", compare(b.g, b.e) > 0));
  return rep;
}

}  // namespace

OverlapValue two_line_overlap_value(long m1, long m2, long t) {
  if (m1 < 1 || m2 < m1) throw DomainError("two_line_overlap_value needs 1 <= m1 <= m2");
  if (t < 0 || t > m1 - 1) throw DomainError("two_line_overlap_value needs 0 <= t <= m1-1");
  OverlapValue out;
  out.d = m1 + m2 - t - 1;
  out.direct = binom(out.d + 3, 3) - conditions_count(3, 1, m1, out.d) - conditions_count(3, 1, m2, out.d);
  const Integer T(t), a(m1), b(m2);
  out.factored = -3 * T * (2 * a * b - (a + b) * T) - 3 * b * T - 3 * a * T - T * (T - 1) * (T - 2);
  out.factored_is_six_times_direct = out.factored == 6 * out.direct;
  return out;
}

NosymetryBounds nosymetry_bounds(long s) {
  if (s < 7 || s > 12) throw DomainError("nosymetry_bounds needs 7 <= s <= 12");
  NosymetryBounds b;
  b.s = s;
  b.g = g_value(3, 1, s, make_rational(Integer(1), Integer("1000000000000000000000000000000")));
  const Interval G = Interval::of(b.g);
  const Interval S = Interval::point(Rational(s));
  const Interval num = Interval::point(Rational(11)) * G - Interval::point(Rational(5)) * S;
  const Interval den = Interval::point(Rational(6)) * G * G - Interval::point(Rational(3)) * S * G -
                       Interval::point(Rational(3)) * S;
  b.denominator_negative = den.hi < 0;
  b.d_bound = -(G * num / den);
  b.sum_bound = -(S * num / den);
  const Integer fd = exact_floor(b.d_bound, "the degree bound");
  if (b.d_bound.lo == fd && b.d_bound.hi != fd) throw InternalError("degree bound enclosure touches an integer");
  b.d_max = (b.d_bound.hi == fd ? fd - 1 : fd).get_si();
  b.sum_max = exact_floor(b.sum_bound, "the sum bound").get_si();
  return b;
}

NosymetryReport nosymetry_enumerate(long s) {
  NosymetryReport rep;
  rep.bounds = nosymetry_bounds(s);
  const long d_max = rep.bounds.d_max;
  const long sum_max = rep.bounds.sum_max;
  const UniPoly lam = lambda_poly(3, 1, s);

  for (long total = 1; total <= sum_max; ++total)
    partitions(total, s, total, [&](const std::vector<long>&) { ++rep.sequences; });

  struct Block {
    long count = 0;
    long pairwise = 0;
    std::vector<NosymetryViolation> violations;
  };
  const long d_count = std::max(0L, d_max);
  const std::size_t blocks = static_cast<std::size_t>(d_count * std::max(0L, sum_max));
  const std::vector<Block> results = parallel_map<Block>(blocks, [&](std::size_t k) {
    Block blk;
    const long d = 1 + static_cast<long>(k) / sum_max;
    const long total = 1 + static_cast<long>(k) % sum_max;
    // d/m < g with m = total/s
    const Rational x = make_rational(d * s, total);
    if (!(x < 1 || lam(x) < 0)) return blk;
    partitions(total, s, d, [&](const std::vector<long>& v) {
      ++blk.count;
      if (s < 2 || v[v.size() - 1] + v[v.size() - 2] <= d) ++blk.pairwise;
      Integer p = p31(d, v);
      if (p > 0) blk.violations.push_back({d, v, p});
    });
    return blk;
  });
  for (std::size_t k = 0; k < results.size(); ++k) {
    const long d = 1 + static_cast<long>(k) / sum_max;
    rep.cases_checked += results[k].count;
    rep.pairwise_cases += results[k].pairwise;
    rep.cases_by_d[d] += results[k].count;
    rep.violations.insert(rep.violations.end(), results[k].violations.begin(), results[k].violations.end());
  }
  return rep;
}

std::vector<AnalyticRow> nosymetry_analytic(long s_lo, long s_hi) {
  if (s_lo < 2 || s_hi < s_lo) throw DomainError("nosymetry_analytic needs 2 <= s_lo <= s_hi");
  std::vector<AnalyticRow> rows;
  for (long s = s_lo; s <= s_hi; ++s) {
    const UniPoly lam = lambda_poly(3, 1, s);
    rows.push_back({s, lam(make_rational(s, 2)) > 0, lam(make_rational(5 * s, 11)) > 0});
  }
  return rows;
}

std::vector<std::string> appendix_ids() {
  return {"e-3-0-4", "e-3-1-6", "g-table-3-1", "six-lines", "bounds-3-0-4", "bounds-3-1-6"};
}

ReplayReport replay_appendix(const std::string& id) {
  ReplayReport rep;
  if (id == "e-3-0-4") {
    rep = replay_e304();
  } else if (id == "e-3-1-6") {
    rep = replay_e316();
  } else if (id == "g-table-3-1") {
    rep = replay_gtable();
  } else if (id == "six-lines") {
    rep = replay_six_lines();
  } else if (id == "bounds-3-0-4") {
    rep = replay_bounds(3, 0, 4, "4/3", "3/2");
  } else if (id == "bounds-3-1-6") {
    rep = replay_bounds(3, 1, 6, "42/11", "27/7");
  } else {
    throw DomainError("unknown example id '" + id + "'");
  }
  rep.id = id;
  rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(), [](const ReplayCheck& c) { return c.pass; });
  return rep;
}

}  // namespace fatflats

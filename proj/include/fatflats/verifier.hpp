#pragma once

#include <map>
#include <string>
#include <vector>

#include "fatflats/roots.hpp"

namespace fatflats {

/// Two lines whose multiplicities overlap: m1 + m2 > d with d = m1+m2-t-1.
struct OverlapValue {
  long d = 0;
  Integer direct;    // C(d+3,3) - c_{3,1,m1,d} - c_{3,1,m2,d}
  Integer factored;  // -3t(2 m1 m2 - (m1+m2)t) - 3 m2 t - 3 m1 t - t(t-1)(t-2)
  bool factored_is_six_times_direct = false;
};

/// Requires 1 <= m1 <= m2 and 0 <= t <= m1-1.
OverlapValue two_line_overlap_value(long m1, long m2, long t);

/// Search region for s general lines in P^3, 7 <= s <= 12:
/// d < -g(11g-5s)/(6g^2-3sg-3s) and sum m_j <= -s(11g-5s)/(6g^2-3sg-3s).
struct NosymetryBounds {
  long s = 0;
  AlgebraicNumber g;
  Interval d_bound;
  Interval sum_bound;
  bool denominator_negative = false;  // 6g^2 - 3sg - 3s < 0
  long d_max = 0;    // largest integer d below d_bound
  long sum_max = 0;  // floor(sum_bound)
};

NosymetryBounds nosymetry_bounds(long s);

struct NosymetryViolation {
  long d = 0;
  std::vector<long> mults;
  Integer value;
};

struct NosymetryReport {
  NosymetryBounds bounds;
  long sequences = 0;      // nondecreasing, not all zero, sum <= sum_max
  long cases_checked = 0;  // (d, v) pairs with max v <= d and d/m < g
  std::map<long, long> cases_by_d;
  long pairwise_cases = 0;  // the subset with m_i + m_j <= d for all i != j
  std::vector<NosymetryViolation> violations;
};

/// Exhausts the region above, checking P_{3,1,v}(d) <= 0. Blocks of (d, sum)
/// run in parallel and merge in a fixed order.
NosymetryReport nosymetry_enumerate(long s);

struct AnalyticRow {
  long s = 0;
  bool lambda_at_half_positive = false;          // Lambda_{3,1,s}(s/2) > 0
  bool lambda_at_five_elevenths_positive = false;  // Lambda_{3,1,s}(5s/11) > 0
};

std::vector<AnalyticRow> nosymetry_analytic(long s_lo = 13, long s_hi = 40);

struct ReplayCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct ReplayReport {
  std::string id;
  std::vector<ReplayCheck> checks;
  bool pass = false;
};

std::vector<std::string> appendix_ids();

/// Throws DomainError for an unknown id.
ReplayReport replay_appendix(const std::string& id);

}  // namespace fatflats

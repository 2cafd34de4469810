#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fatflats/rational.hpp"

namespace fatflats {

/// L_n(d; m_1, ..., m_s): degree-d forms on P^n vanishing to order m_i at s
/// general points. Degree and multiplicities may be negative mid-reduction.
struct LinearSystem {
  long n = 2;
  long d = 0;
  std::vector<long> mults;

  bool operator==(const LinearSystem&) const = default;
};

/// "L_n(d; m1,m2,...)"
std::string to_string(const LinearSystem& sys);

/// Parses "d;m1,m2,..." (the multiplicity list may be empty).
LinearSystem parse_linear_system(long n, const std::string& text);

/// Same system with multiplicities sorted descending, for comparisons up to relabeling.
LinearSystem sorted(const LinearSystem& sys);

struct CremonaStep {
  std::vector<std::size_t> indices;
  long c = 0;
  LinearSystem result;
};

/// c = (n-1)d - sum_{j in idx} m_j; degree and the chosen multiplicities gain c.
/// Pads mults with zeros up to n+1 entries. idx must hold n+1 distinct indices.
CremonaStep cremona_transform(const LinearSystem& sys, const std::vector<std::size_t>& idx);

/// The n+1 largest multiplicities, ties by lowest index (after padding).
std::vector<std::size_t> greedy_indices(const LinearSystem& sys);

/// d < 0, or some m_i > d.
bool empty_certificate(const LinearSystem& sys);

/// C(d+n, n) - sum_i C(max(m_i,0)+n-1, n); negative multiplicities impose nothing.
Integer virtual_dimension(const LinearSystem& sys);

/// sum_{i in I} m_i <= (|I|-1) d for every I with 2 <= |I| <= n: no span of
/// the points is forced into the base locus. Off this region the virtual
/// dimension is not preserved by Cremona transforms when n >= 3.
bool no_linear_base_locus(const LinearSystem& sys);

/// virtual_dimension > 0. Requires d >= max_i m_i.
bool nonempty_certificate(const LinearSystem& sys);

/// A hyperplane through the points in `subset`, raised to `weight`.
struct HyperplaneTerm {
  std::vector<std::size_t> subset;
  long weight = 0;
};

using HyperplaneWitness = std::vector<HyperplaneTerm>;

/// Product of hyperplanes (each through at most n of the general points) of
/// total degree d meeting every multiplicity. Requires d >= 0 and m_i >= 0.
/// nullopt is not a proof of emptiness.
std::optional<HyperplaneWitness> hyperplane_product_witness(const LinearSystem& sys,
                                                            long node_budget = 1'000'000);

bool witness_valid(const LinearSystem& sys, const HyperplaneWitness& w);

enum class Verdict { Empty, Nonempty, Undecided };
const char* to_string(Verdict v);

enum class Strategy { Greedy };

struct ReductionTrace {
  LinearSystem start;
  std::vector<CremonaStep> steps;
  Verdict verdict = Verdict::Undecided;
  std::string certificate;
  std::optional<HyperplaneWitness> witness;  // on the clamped final system

  const LinearSystem& final_system() const { return steps.empty() ? start : steps.back().result; }
};

/// Applies greedy Cremona steps while c < 0, stopping as soon as a certificate
/// fires or after max_steps. An undecided end state gets a witness search on
/// its clamped form.
ReductionTrace reduce(const LinearSystem& sys, Strategy strategy = Strategy::Greedy, long max_steps = 64);

struct GammaCaseRow {
  long h = 0;
  LinearSystem upper;  // nonempty: alpha <= upper.d
  std::string upper_how;
  bool upper_ok = false;
  LinearSystem lower;  // empty: alpha > lower.d
  ReductionTrace lower_trace;
  bool lower_ok = false;
  Rational upper_ratio;  // upper.d / multiplicity
  Rational lower_ratio;  // (lower.d + 1) / multiplicity
};

struct GammaCaseReport {
  long n = 0;
  long s = 0;
  Rational gamma;
  std::optional<ReductionTrace> chain;  // s = n+3 upper-bound chain
  std::vector<GammaCaseRow> rows;
  std::vector<std::string> failures;
  bool ok = false;
};

/// Replays the Cremona bookkeeping behind the closed form of gamma for
/// n+1 <= s <= n+3 general points, for h = 1..h_max.
GammaCaseReport verify_gamma_points_case(long n, long s, long h_max);

}  // namespace fatflats

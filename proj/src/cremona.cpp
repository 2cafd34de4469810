#include "fatflats/cremona.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fatflats/binomial.hpp"
#include "fatflats/waldschmidt.hpp"

namespace fatflats {

namespace {

void check_ambient(const LinearSystem& sys) {
  if (sys.n < 2) throw DomainError("linear systems need n >= 2");
}

std::vector<long> padded(const LinearSystem& sys) {
  std::vector<long> m = sys.mults;
  if (m.size() < static_cast<std::size_t>(sys.n + 1)) m.resize(static_cast<std::size_t>(sys.n + 1), 0);
  return m;
}

LinearSystem clamped(const LinearSystem& sys) {
  LinearSystem out = sys;
  for (long& m : out.mults) m = std::max(m, 0L);
  return out;
}

long max_mult(const LinearSystem& sys) {
  long m = 0;
  for (long x : sys.mults) m = std::max(m, x);
  return m;
}

void subsets_rec(std::size_t total, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                 std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i + (k - cur.size()) <= total; ++i) {
    cur.push_back(i);
    subsets_rec(total, k, i + 1, cur, out);
    cur.pop_back();
  }
}

struct WitnessSearch {
  std::size_t k;
  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::vector<std::size_t>> containing;  // point -> subset ids
  std::set<std::pair<std::vector<long>, long>> dead;
  std::vector<std::size_t> chosen;
  long budget;

  bool run(std::vector<long>& deficit, long remaining) {
    if (--budget < 0) return false;
    long total = 0;
    long worst = 0;
    std::size_t pick = 0;
    for (std::size_t i = 0; i < deficit.size(); ++i) {
      if (deficit[i] <= 0) continue;
      total += deficit[i];
      if (deficit[i] > worst) {
        worst = deficit[i];
        pick = i;
      }
    }
    if (total == 0) return true;
    if (worst > remaining || total > remaining * static_cast<long>(k)) return false;
    std::vector<long> key(deficit.size());
    for (std::size_t i = 0; i < deficit.size(); ++i) key[i] = std::max(deficit[i], 0L);
    if (dead.count({key, remaining})) return false;
    for (std::size_t id : containing[pick]) {
      for (std::size_t p : subsets[id]) --deficit[p];
      chosen.push_back(id);
      if (run(deficit, remaining - 1)) return true;
      chosen.pop_back();
      for (std::size_t p : subsets[id]) ++deficit[p];
      if (budget < 0) return false;
    }
    dead.insert({std::move(key), remaining});
    return false;
  }
};

// exactly `steps` greedy transforms, then a verdict on the endpoint
ReductionTrace forced_chain(const LinearSystem& sys, long steps) {
  ReductionTrace trace;
  trace.start = sys;
  LinearSystem cur = sys;
  for (long k = 0; k < steps; ++k) {
    CremonaStep next = cremona_transform(cur, greedy_indices(cur));
    cur = next.result;
    trace.steps.push_back(std::move(next));
  }
  const LinearSystem flat = clamped(cur);
  if (empty_certificate(cur)) {
    trace.verdict = Verdict::Empty;
    trace.certificate = "endpoint " + to_string(cur) + " is empty";
  } else if (flat.d >= max_mult(flat) && nonempty_certificate(flat)) {
    trace.verdict = Verdict::Nonempty;
    trace.certificate = "virtual dimension " + to_string(virtual_dimension(flat)) + " > 0 for " + to_string(flat);
  } else if (auto w = hyperplane_product_witness(flat)) {
    trace.verdict = Verdict::Nonempty;
    trace.certificate = "hyperplane product in " + to_string(flat);
    trace.witness = std::move(w);
  }
  return trace;
}

}  // namespace

std::string to_string(const LinearSystem& sys) {
  std::ostringstream os;
  os << "L_" << sys.n << "(" << sys.d << ";";
  for (std::size_t i = 0; i < sys.mults.size(); ++i) os << (i ? "," : " ") << sys.mults[i];
  os << ")";
  return os.str();
}

LinearSystem parse_linear_system(long n, const std::string& text) {
  const auto semi = text.find(';');
  if (semi == std::string::npos) throw DomainError("linear system must look like \"d;m1,m2,...\"");
  LinearSystem sys;
  sys.n = n;
  auto to_long = [&](const std::string& tok) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw DomainError("bad integer '" + tok + "' in linear system");
    }
    if (used != tok.size()) throw DomainError("bad integer '" + tok + "' in linear system");
    return v;
  };
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    const auto e = s.find_last_not_of(" \t");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  sys.d = to_long(trim(text.substr(0, semi)));
  std::string rest = trim(text.substr(semi + 1));
  std::stringstream ss(rest);
  std::string tok;
  while (!rest.empty() && std::getline(ss, tok, ',')) sys.mults.push_back(to_long(trim(tok)));
  check_ambient(sys);
  return sys;
}

LinearSystem sorted(const LinearSystem& sys) {
  LinearSystem out = sys;
  std::sort(out.mults.begin(), out.mults.end(), std::greater<>());
  return out;
}

CremonaStep cremona_transform(const LinearSystem& sys, const std::vector<std::size_t>& idx) {
  check_ambient(sys);
  std::vector<long> m = padded(sys);
  if (idx.size() != static_cast<std::size_t>(sys.n + 1))
    throw DomainError("Cremona transform needs exactly n+1 indices");
  std::set<std::size_t> seen;
  long sum = 0;
  for (std::size_t i : idx) {
    if (i >= m.size()) throw DomainError("index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second) throw DomainError("repeated index " + std::to_string(i));
    sum += m[i];
  }
  CremonaStep step;
  step.indices = idx;
  step.c = (sys.n - 1) * sys.d - sum;
  for (std::size_t i : idx) m[i] += step.c;
  step.result = {sys.n, sys.d + step.c, std::move(m)};
  return step;
}

std::vector<std::size_t> greedy_indices(const LinearSystem& sys) {
  check_ambient(sys);
  const std::vector<long> m = padded(sys);
  std::vector<std::size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return m[a] > m[b]; });
  order.resize(static_cast<std::size_t>(sys.n + 1));
  std::sort(order.begin(), order.end());
  return order;
}

bool empty_certificate(const LinearSystem& sys) {
  if (sys.d < 0) return true;
  return std::any_of(sys.mults.begin(), sys.mults.end(), [&](long m) { return m > sys.d; });
}

Integer virtual_dimension(const LinearSystem& sys) {
  check_ambient(sys);
  if (sys.d < 0) return 0;
  Integer v = binom(sys.d + sys.n, sys.n);
  for (long m : sys.mults) v -= binom(std::max(m, 0L) + sys.n - 1, sys.n);
  return v;
}

bool no_linear_base_locus(const LinearSystem& sys) {
  check_ambient(sys);
  std::vector<long> m;
  for (long x : sys.mults) m.push_back(std::max(x, 0L));
  std::sort(m.begin(), m.end(), std::greater<>());
  // the k largest multiplicities are the worst subset of size k
  long sum = m.empty() ? 0 : m[0];
  for (std::size_t k = 2; k <= m.size() && k <= static_cast<std::size_t>(sys.n); ++k) {
    sum += m[k - 1];
    if (sum > static_cast<long>(k - 1) * sys.d) return false;
  }
  return true;
}

bool nonempty_certificate(const LinearSystem& sys) {
  if (sys.d < max_mult(sys)) throw DomainError("nonempty_certificate needs d >= every multiplicity");
  return virtual_dimension(sys) > 0;
}

std::optional<HyperplaneWitness> hyperplane_product_witness(const LinearSystem& sys, long node_budget) {
  check_ambient(sys);
  if (sys.d < 0) throw DomainError("witness search needs d >= 0");
  for (long m : sys.mults)
    if (m < 0) throw DomainError("witness search needs nonnegative multiplicities");

  const std::size_t s = sys.mults.size();
  WitnessSearch search;
  search.k = std::max<std::size_t>(1, std::min<std::size_t>(static_cast<std::size_t>(sys.n), s));
  search.budget = node_budget;
  if (s > 0) {
    std::vector<std::size_t> cur;
    subsets_rec(s, search.k, 0, cur, search.subsets);
  }
  search.containing.resize(s);
  for (std::size_t id = 0; id < search.subsets.size(); ++id)
    for (std::size_t p : search.subsets[id]) search.containing[p].push_back(id);

  std::vector<long> deficit = sys.mults;
  if (!search.run(deficit, sys.d)) return std::nullopt;

  std::map<std::size_t, long> weights;
  for (std::size_t id : search.chosen) ++weights[id];
  long used = static_cast<long>(search.chosen.size());
  HyperplaneWitness w;
  for (const auto& [id, wt] : weights) w.push_back({search.subsets[id], wt});
  if (used < sys.d) {
    // spare degree: any hyperplane will do
    if (w.empty()) w.push_back({search.subsets.empty() ? std::vector<std::size_t>{} : search.subsets.front(), 0});
    w.front().weight += sys.d - used;
  }
  if (empty_certificate(sys)) throw InternalError("witness found for a system certified empty: " + to_string(sys));
  return w;
}

bool witness_valid(const LinearSystem& sys, const HyperplaneWitness& w) {
  long total = 0;
  std::vector<long> cover(sys.mults.size(), 0);
  for (const auto& term : w) {
    if (term.weight < 0 || term.subset.size() > static_cast<std::size_t>(sys.n)) return false;
    total += term.weight;
    for (std::size_t p : term.subset) {
      if (p >= cover.size()) return false;
      cover[p] += term.weight;
    }
  }
  if (total != sys.d) return false;
  for (std::size_t i = 0; i < cover.size(); ++i)
    if (cover[i] < sys.mults[i]) return false;
  return true;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Empty: return "empty";
    case Verdict::Nonempty: return "nonempty";
    case Verdict::Undecided: return "undecided";
  }
  return "?";
}

ReductionTrace reduce(const LinearSystem& sys, Strategy, long max_steps) {
  check_ambient(sys);
  if (max_steps < 1) throw DomainError("max_steps must be >= 1");
  ReductionTrace trace;
  trace.start = sys;
  LinearSystem cur = sys;
  for (long step = 0;; ++step) {
    if (empty_certificate(cur)) {
      trace.verdict = Verdict::Empty;
      trace.certificate = cur.d < 0 ? "negative degree in " + to_string(cur)
                                    : "a multiplicity exceeds the degree in " + to_string(cur);
      return trace;
    }
    if (cur.d >= max_mult(cur) && nonempty_certificate(cur)) {
      trace.verdict = Verdict::Nonempty;
      trace.certificate = "virtual dimension " + to_string(virtual_dimension(cur)) + " > 0 for " + to_string(cur);
      return trace;
    }
    if (step == max_steps) break;
    CremonaStep next = cremona_transform(cur, greedy_indices(cur));
    if (next.c >= 0) break;
    cur = next.result;
    trace.steps.push_back(std::move(next));
  }
  const LinearSystem flat = clamped(cur);
  if (auto w = hyperplane_product_witness(flat)) {
    trace.verdict = Verdict::Nonempty;
    trace.certificate = "hyperplane product in " + to_string(flat);
    trace.witness = std::move(w);
  } else {
    trace.certificate = "no certificate for " + to_string(cur);
  }
  return trace;
}

GammaCaseReport verify_gamma_points_case(long n, long s, long h_max) {
  if (n < 2) throw DomainError("verify_gamma_points_case needs n >= 2");
  if (s < n + 1 || s > n + 3) throw DomainError("verify_gamma_points_case needs n+1 <= s <= n+3");
  if (h_max < 1) throw DomainError("h_max must be >= 1");
  GammaCaseReport rep;
  rep.n = n;
  rep.s = s;
  rep.gamma = gamma_points_closed(n, s);
  const auto uniform = [&](long d, long m) { return LinearSystem{n, d, std::vector<long>(static_cast<std::size_t>(s), m)}; };
  const auto fail = [&](const std::string& msg) { rep.failures.push_back(msg); };

  // degree and multiplicity of the h = 1 section, and of the h = 1 empty system's multiplicity
  long up_d = 0, up_m = 0, low_d = 0, low_m = 0;
  std::optional<HyperplaneWitness> base;
  if (s == n + 1 || s == n + 2) {
    up_d = s;
    up_m = n;
    low_d = s;
    low_m = n;
    base = hyperplane_product_witness(uniform(up_d, up_m));
    if (!base) fail("no hyperplane witness for " + to_string(uniform(up_d, up_m)));
  } else if (n % 2 == 0) {
    const long m = n / 2;
    up_d = m + 1;
    up_m = m;
    low_d = n + 2;
    low_m = n;
    ReductionTrace chain = forced_chain(uniform(m + 1, m), m);
    LinearSystem target{n, 1, std::vector<long>(static_cast<std::size_t>(2 * m), 1)};
    target.mults.insert(target.mults.end(), 3, 0);
    if (static_cast<long>(chain.steps.size()) != m) fail("c = -1 chain has " + std::to_string(chain.steps.size()) + " steps");
    for (const auto& st : chain.steps)
      if (st.c != -1) fail("chain step with c = " + std::to_string(st.c));
    if (!(sorted(chain.final_system()) == sorted(target))) fail("chain ends at " + to_string(chain.final_system()));
    if (chain.verdict != Verdict::Nonempty) fail("chain endpoint not certified nonempty");
    rep.chain = std::move(chain);
  } else {
    const long m = (n - 1) / 2;
    up_d = (m + 1) * (n + 3);
    up_m = m * (n + 3) + 1;
    low_d = (2 * m + 2) * (2 * m + 4);
    low_m = 2 * m * (2 * m + 4) + 2;
    ReductionTrace chain = forced_chain(uniform(up_d, up_m), m + 1);
    LinearSystem target{n, n + 1, std::vector<long>(static_cast<std::size_t>(n + 1), n)};
    target.mults.insert(target.mults.end(), 2, -1);
    if (static_cast<long>(chain.steps.size()) != m + 1)
      fail("c = -(n+1) chain has " + std::to_string(chain.steps.size()) + " steps");
    for (const auto& st : chain.steps)
      if (st.c != -(n + 1)) fail("chain step with c = " + std::to_string(st.c));
    if (!(sorted(chain.final_system()) == sorted(target))) fail("chain ends at " + to_string(chain.final_system()));
    if (chain.verdict != Verdict::Nonempty) fail("chain endpoint not certified nonempty");
    rep.chain = std::move(chain);
  }

  for (long h = 1; h <= h_max; ++h) {
    GammaCaseRow row;
    row.h = h;
    row.upper = uniform(h * up_d, h * up_m);
    if (base) {
      HyperplaneWitness scaled = *base;
      for (auto& term : scaled) term.weight *= h;
      row.upper_ok = witness_valid(row.upper, scaled);
      row.upper_how = "h-th power of a hyperplane product";
    } else if (rep.chain) {
      row.upper_ok = rep.chain->verdict == Verdict::Nonempty;
      row.upper_how = "h-th power of the section found through the Cremona chain";
    }
    if (!row.upper_ok) fail("upper system not verified: " + to_string(row.upper));

    row.lower = uniform(h * low_d - 1, h * low_m);
    row.lower_trace = reduce(row.lower);
    row.lower_ok = row.lower_trace.verdict == Verdict::Empty;
    if (!row.lower_ok) fail("could not show " + to_string(row.lower) + " empty");

    row.upper_ratio = make_rational(row.upper.d, h * up_m);
    row.lower_ratio = make_rational(row.lower.d + 1, h * low_m);
    if (row.upper_ratio != rep.gamma) fail("upper ratio " + to_string(row.upper_ratio) + " != gamma");
    if (row.lower_ratio != rep.gamma) fail("lower ratio " + to_string(row.lower_ratio) + " != gamma");
    rep.rows.push_back(std::move(row));
  }
  rep.ok = rep.failures.empty();
  return rep;
}

}  // namespace fatflats

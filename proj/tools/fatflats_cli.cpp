#include <algorithm>
#include <numeric>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "report_json.hpp"

#include "fatflats/flats.hpp"
#include "fatflats/lambda.hpp"
#include "fatflats/parallel.hpp"

using namespace fatflats;
using report::Json;

namespace {

enum class Format { Text, Json, Csv };

struct Globals {
  bool json = false;
  bool csv = false;
  unsigned threads = 0;
  std::uint64_t seed = 1;
};

Format format_of(const Globals& g) {
  if (g.json) return Format::Json;
  if (g.csv) return Format::Csv;
  return Format::Text;
}

int emit(const Globals& g, const Json& j, bool ok = true) {
  switch (format_of(g)) {
    case Format::Json: std::cout << j.dump() << "\n"; break;
    case Format::Csv: std::cout << report::as_csv(j); break;
    case Format::Text: std::cout << report::as_text(j); break;
  }
  return ok ? 0 : 1;
}

std::vector<long> parse_list(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(tok, &used);
    } catch (const std::exception&) {
      throw DomainError("bad list entry '" + tok + "'");
    }
    if (used != tok.size()) throw DomainError("bad list entry '" + tok + "'");
    out.push_back(v);
  }
  if (out.empty()) throw DomainError("empty list");
  return out;
}

Json identity_rows(std::uint64_t seed, long samples) {
  Json rows = Json::array();
  auto add = [&](const std::string& name, bool ok) { rows.push_back({{"name", name}, {"pass", ok}}); };

  bool ok = true;
  for (long a = 0; a <= 8; ++a)
    for (long m = 1; m <= 10; ++m) {
      auto [l1, r1] = identity_sum_binom(a, m);
      auto [l2, r2] = identity_sum_i_binom(a, m);
      ok = ok && l1 == r1 && l2 == r2;
    }
  add("sum_{i<m} C(i+a,a) and sum_{i<m} i C(i+a,a)", ok);

  ok = true;
  for (long t = 0; t <= 12; ++t)
    for (long j = 1; j <= 12; ++j) ok = ok && alt_sum_zero(t, j).value == 0;
  add("alternating sum = 0 (t <= 12, 1 <= j <= 12)", ok);

  ok = true;
  for (long t = 1; t <= 12; ++t)
    for (long j = 0; j <= 12; ++j) ok = ok && alt_sum_one(t, j).value == 1;
  add("alternating sum = 1 (1 <= t <= 12, j <= 12)", ok);

  ok = true;
  for (long n = 1; n <= 12; ++n)
    for (long r = 0; r < n; ++r) ok = ok && unit_sum(n, r) == 1;
  add("sum_j (-1)^(r-j) C(n,j) C(n-j-1,r-j) = 1", ok);

  ok = true;
  for (long r = 0; 2 * r + 1 <= 10; ++r)
    for (long n = 2 * r + 1; n <= 10; ++n)
      for (long s : {1L, 2L, 3L, 10L, 100L}) ok = ok && identity_check(n, r, s);
  add("(tau H - E)^n = n! Lambda", ok);

  ok = true;
  for (long r = 1; 2 * r + 1 <= 8; ++r)
    for (long n = 2 * r + 1; n <= 8; ++n)
      for (long s : {1L, 2L, 5L, 10L, 100L}) ok = ok && tower_check(n, r, s) && lambda_poly(n, r, s) == lambda_poly_via_leading(n, r, s);
  add("Lambda tower and leading-coefficient route", ok);

  std::mt19937_64 rng(seed);
  auto uniform = [&](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  bool involution = true, invariance = true;
  long tried = 0;
  for (long k = 0; k < samples; ++k) {
    LinearSystem sys;
    sys.n = uniform(2, 5);
    sys.d = uniform(0, 20);
    const long s = uniform(sys.n + 1, 8);
    for (long i = 0; i < s; ++i) sys.mults.push_back(uniform(-3, sys.d));
    std::vector<std::size_t> idx(static_cast<std::size_t>(s));
    std::iota(idx.begin(), idx.end(), 0);
    std::shuffle(idx.begin(), idx.end(), rng);
    idx.resize(static_cast<std::size_t>(sys.n + 1));
    const CremonaStep once = cremona_transform(sys, idx);
    const CremonaStep twice = cremona_transform(once.result, idx);
    involution = involution && twice.result == sys && twice.c == -once.c;

    LinearSystem pos = sys;
    for (long& m : pos.mults) m = std::max(m, 0L);
    const CremonaStep t = cremona_transform(pos, idx);
    long top = 0;
    bool admissible = t.result.d >= 0;
    for (long m : t.result.mults) {
      admissible = admissible && m >= 0;
      top = std::max(top, m);
    }
    if (admissible && t.result.d >= top && no_linear_base_locus(pos) && no_linear_base_locus(t.result)) {
      ++tried;
      invariance = invariance && virtual_dimension(pos) == virtual_dimension(t.result);
    }
  }
  add("Cremona transform is an involution (" + std::to_string(samples) + " random systems)", involution);
  add("virtual dimension preserved (" + std::to_string(tried) + " samples without linear base locus)", invariance);
  return rows;
}

constexpr const char* kSynopsis =
    "usage: fatflats [--json|--csv] [--threads N] [--seed S] <command>\n"
    "  conditions n r m t\n"
    "  hilbert n r (s m | --mults LIST) [--at T | --poly]\n"
    "  lambda n r s [--poly | --g [--prec P]]\n"
    "  e n r s [--mmax M] [--certify]\n"
    "  bounds n r s [--mmax M]\n"
    "  gamma-points n s\n"
    "  cremona --system \"d;m1,...\" [--dim n] (--transform IDX | --reduce | --witness)\n"
    "  intersections n r s [--check]\n"
    "  verify (nosymetry S | appendix ID | gamma-case n s --hmax H | identities | overlap m1 m2 t)\n";

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fat flats: Hilbert polynomials, Waldschmidt constant bounds, Cremona reductions"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_flag("--json", g.json, "JSON output");
  app.add_flag("--csv", g.csv, "CSV output");
  app.add_option("--threads", g.threads, "worker threads (default: FATFLATS_THREADS or all cores)");
  app.add_option("--seed", g.seed, "seed for randomized checks");

  std::function<int()> action;

  // conditions
  long n = 0, r = 0, s = 0, m = 0, t = 0;
  auto* conditions = app.add_subcommand("conditions", "condition count c_{n,r,m,t}");
  conditions->add_option("n", n)->required();
  conditions->add_option("r", r)->required();
  conditions->add_option("m", m)->required();
  conditions->add_option("t", t)->required();
  conditions->callback([&] {
    action = [&] {
      return emit(g, {{"n", n}, {"r", r}, {"m", m}, {"t", t}, {"count", report::integer(conditions_count(n, r, m, t))}});
    };
  });

  // hilbert
  std::vector<long> sm;
  std::string mults;
  std::optional<long> at;
  bool want_poly = false;
  std::optional<long> function_len;
  auto* hilbert = app.add_subcommand("hilbert", "Hilbert polynomial of fat flats");
  hilbert->add_option("n", n)->required();
  hilbert->add_option("r", r)->required();
  hilbert->add_option("s_m", sm, "s and m for uniform multiplicity")->expected(0, 2);
  hilbert->add_option("--mults", mults, "comma-separated multiplicities");
  auto* at_opt = hilbert->add_option("--at", at, "evaluate at degree T");
  hilbert->add_flag("--poly", want_poly, "print the polynomial")->excludes(at_opt);
  hilbert->add_option("--function", function_len, "Hilbert function of one fat flat, first LEN values");
  hilbert->callback([&] {
    action = [&] {
      if (function_len) {
        if (sm.size() != 2 || sm[0] != 1) throw DomainError("--function needs s = 1 and m");
        Json vals = Json::array();
        for (const auto& v : hilbert_function_flat(n, r, sm[1], *function_len)) vals.push_back(report::integer(v));
        return emit(g, {{"n", n}, {"r", r}, {"m", sm[1]}, {"values", vals}});
      }
      UniPoly p;
      Json j = {{"n", n}, {"r", r}};
      if (!mults.empty()) {
        if (!sm.empty()) throw DomainError("give either s m or --mults, not both");
        const auto v = parse_list(mults);
        p = hilbert_poly_mixed(n, r, v);
        j["mults"] = v;
      } else {
        if (sm.size() != 2) throw DomainError("hilbert needs s m or --mults");
        p = hilbert_poly_uniform(n, r, sm[0], sm[1]);
        j["s"] = sm[0];
        j["m"] = sm[1];
      }
      if (at) {
        j["t"] = *at;
        j["value"] = report::rational(p(Rational(*at)));
      } else {
        j["poly"] = report::poly(p);
        j["poly_text"] = p.to_string("t");
      }
      return emit(g, j);
    };
  });

  // lambda
  bool want_g = false;
  std::string prec = "1e-12";
  auto* lambda = app.add_subcommand("lambda", "Lambda_{n,r,s} and its root g");
  lambda->add_option("n", n)->required();
  lambda->add_option("r", r)->required();
  lambda->add_option("s", s)->required();
  auto* poly_flag = lambda->add_flag("--poly", want_poly, "only the polynomial");
  lambda->add_flag("--g", want_g, "only the root g")->excludes(poly_flag);
  lambda->add_option("--prec", prec, "enclosure width for g");
  lambda->callback([&] {
    action = [&] {
      Json j;
      if (!want_g) {
        const UniPoly p = lambda_poly(n, r, s);
        j["poly"] = report::poly(p);
        j["poly_text"] = p.to_string("tau");
      }
      if (!want_poly) {
        const Json a = report::algebraic(g_value(n, r, s, parse_rational(prec)));
        if (want_g) return emit(g, a);
        j["g"] = a;
      }
      return emit(g, j);
    };
  });

  // e
  long m_max = 60;
  bool certify = false;
  auto* e_cmd = app.add_subcommand("e", "expected Waldschmidt constant e_{n,r,s}");
  e_cmd->add_option("n", n)->required();
  e_cmd->add_option("r", r)->required();
  e_cmd->add_option("s", s)->required();
  e_cmd->add_option("--mmax", m_max, "largest m searched");
  e_cmd->add_flag("--certify", certify, "prove the value exactly");
  e_cmd->callback([&] {
    action = [&] {
      const RatioWitness w = e_empirical(n, r, s, m_max);
      Json j = {{"n", n}, {"r", r}, {"s", s}, {"e", report::rational(w.ratio)}, {"witness", report::witness(w)}, {"m_max", m_max}};
      bool ok = true;
      if (certify) {
        const ECertifyResult c = e_certify(n, r, s, w.ratio);
        const Json cj = report::certify_result(c);
        for (const auto& [k, v] : cj.items()) j[k] = v;
        ok = c.certified;
      }
      return emit(g, j, ok);
    };
  });

  // bounds
  auto* bounds = app.add_subcommand("bounds", "gamma <= e <= g");
  bounds->add_option("n", n)->required();
  bounds->add_option("r", r)->required();
  bounds->add_option("s", s)->required();
  bounds->add_option("--mmax", m_max, "largest m searched for e");
  bounds->callback([&] { action = [&] { return emit(g, report::bounds(bounds_report(n, r, s, m_max))); }; });

  // gamma-points
  auto* gp = app.add_subcommand("gamma-points", "Waldschmidt constant of s <= n+3 general points");
  gp->add_option("n", n)->required();
  gp->add_option("s", s)->required();
  gp->callback([&] {
    action = [&] { return emit(g, {{"n", n}, {"s", s}, {"gamma", report::rational(gamma_points_closed(n, s))}}); };
  });

  // cremona
  std::string system_text, transform;
  bool do_reduce = false, do_witness = false;
  long dim = 3, max_steps = 64;
  auto* cremona = app.add_subcommand("cremona", "linear systems L_n(d; m_1..m_s)");
  cremona->add_option("--system", system_text, "\"d;m1,m2,...\"")->required();
  cremona->add_option("--dim", dim, "ambient dimension n");
  auto* tr_opt = cremona->add_option("--transform", transform, "n+1 comma-separated indices");
  auto* rd_opt = cremona->add_flag("--reduce", do_reduce, "greedy reduction");
  auto* wt_opt = cremona->add_flag("--witness", do_witness, "hyperplane product search");
  cremona->add_option("--max-steps", max_steps, "reduction step limit");
  tr_opt->excludes(rd_opt)->excludes(wt_opt);
  rd_opt->excludes(wt_opt);
  cremona->callback([&] {
    action = [&]() -> int {
      const LinearSystem sys = parse_linear_system(dim, system_text);
      if (!transform.empty()) {
        std::vector<std::size_t> idx;
        for (long i : parse_list(transform)) {
          if (i < 0) throw DomainError("negative index");
          idx.push_back(static_cast<std::size_t>(i));
        }
        const CremonaStep st = cremona_transform(sys, idx);
        return emit(g, {{"start", report::system(sys)}, {"c", st.c}, {"result", report::system(st.result)}});
      }
      if (do_reduce) return emit(g, report::trace(reduce(sys, Strategy::Greedy, max_steps)));
      if (do_witness) {
        const auto w = hyperplane_product_witness(sys);
        Json j = {{"system", report::system(sys)}, {"found", w.has_value()}};
        if (w) j["witness"] = report::hyperplanes(*w);
        return emit(g, j);
      }
      throw DomainError("cremona needs --transform, --reduce or --witness");
    };
  });

  // intersections
  bool check = false;
  auto* inter = app.add_subcommand("intersections", "intersection numbers on the blow-up along s r-planes");
  inter->add_option("n", n)->required();
  inter->add_option("r", r)->required();
  inter->add_option("s", s)->required();
  inter->add_flag("--check", check, "compare with n! Lambda");
  inter->callback([&] {
    action = [&] {
      Json rows = Json::array();
      for (long j = 0; j <= n; ++j)
        rows.push_back({{"j", j}, {"H^j E^(n-j)", report::integer(intersection_number(n, r, j))}});
      const UniPoly p = expand_self_intersection(n, r, s);
      Json j = {{"n", n}, {"r", r}, {"s", s}, {"rows", rows}, {"expansion", report::poly(p)}, {"expansion_text", p.to_string("tau")}};
      bool ok = true;
      if (check) {
        ok = identity_check(n, r, s);
        j["identity"] = ok;
      }
      return emit(g, j, ok);
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "finite verifications");
  verify->fallthrough();
  verify->require_subcommand(1);
  auto* nosym = verify->add_subcommand("nosymetry", "exhaustive check for s general lines in P^3, 7 <= s <= 12");
  nosym->add_option("s", s)->required();
  nosym->callback([&] {
    action = [&] {
      const NosymetryReport rep = nosymetry_enumerate(s);
      return emit(g, report::nosymetry(rep), rep.violations.empty());
    };
  });
  std::string id;
  auto* appendix = verify->add_subcommand("appendix", "replay a worked example");
  appendix->add_option("id", id)->required()->check(CLI::IsMember(appendix_ids()));
  appendix->callback([&] {
    action = [&] {
      const ReplayReport rep = replay_appendix(id);
      return emit(g, report::replay(rep), rep.pass);
    };
  });
  long hmax = 3;
  auto* gcase = verify->add_subcommand("gamma-case", "Cremona bookkeeping for n+1 <= s <= n+3 points");
  gcase->add_option("n", n)->required();
  gcase->add_option("s", s)->required();
  gcase->add_option("--hmax", hmax, "largest h");
  gcase->callback([&] {
    action = [&] {
      const GammaCaseReport rep = verify_gamma_points_case(n, s, hmax);
      return emit(g, report::gamma_case(rep), rep.ok);
    };
  });
  long samples = 200;
  auto* ident = verify->add_subcommand("identities", "binomial identities, Lambda identities, Cremona invariants");
  ident->add_option("--samples", samples, "random systems for the Cremona checks");
  ident->callback([&] {
    action = [&] {
      const Json rows = identity_rows(g.seed, samples);
      bool ok = true;
      for (const auto& row : rows) ok = ok && row["pass"].get<bool>();
      return emit(g, {{"rows", rows}, {"pass", ok}, {"seed", g.seed}}, ok);
    };
  });
  long m1 = 0, m2 = 0;
  auto* ov = verify->add_subcommand("overlap", "two overlapping lines: direct value and factored form");
  ov->add_option("m1", m1)->required();
  ov->add_option("m2", m2)->required();
  ov->add_option("t", t)->required();
  ov->callback([&] {
    action = [&] {
      const OverlapValue v = two_line_overlap_value(m1, m2, t);
      return emit(g, report::overlap(v), v.direct <= 0);
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cerr << kSynopsis;
    return 2;
  }
  if (g.json && g.csv) {
    std::cerr << "--json and --csv are exclusive\n" << app.help();
    return 2;
  }
  set_thread_count(g.threads);
  try {
    return action();
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const InternalError& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return 1;
  }
}

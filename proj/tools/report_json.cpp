#include "report_json.hpp"

#include <set>
#include <sstream>

namespace fatflats::report {

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Json rational(const Rational& q) { return to_string(q); }

Json integer(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return to_string(z);
}

Json poly(const UniPoly& p) {
  Json arr = Json::array();
  for (const auto& c : p.coeffs()) arr.push_back(rational(c));
  return arr;
}

Json algebraic(const AlgebraicNumber& a) {
  Json defining = Json::array();
  for (const auto& c : a.defining.primitive_integer()) defining.push_back(integer(c));
  return {{"defining", defining},
          {"interval", {rational(a.lo), rational(a.hi)}},
          {"decimal", a.decimal},
          {"error_bound", rational(a.error_bound)},
          {"exact", a.exact ? rational(*a.exact) : Json(nullptr)}};
}

Json witness(const RatioWitness& w) {
  return {{"t", w.t}, {"m", w.m}, {"ratio", rational(w.ratio)}, {"value", integer(w.value)}};
}

Json certificate(const ECertificate& c) {
  Json expansion = Json::array();
  for (const auto& p : c.expansion) expansion.push_back(poly(p));
  Json mono = Json::array();
  for (const auto& v : c.coefficient_monotonicity)
    mono.push_back({{"index", v.index}, {"interval", {rational(v.lo), rational(v.hi)}}, {"verdict", v.verdict}});
  return {{"n", c.n},
          {"r", c.r},
          {"s", c.s},
          {"ratio", rational(c.ratio)},
          {"witness", witness(c.witness)},
          {"expansion", expansion},
          {"x_lo", rational(c.x_lo)},
          {"m_threshold", c.m_threshold},
          {"coefficient_monotonicity", mono},
          {"finite_scan_range", c.finite_scan_range},
          {"scanned_pairs", c.scanned_pairs}};
}

Json certify_result(const ECertifyResult& r) {
  Json j = {{"certified", r.certified}};
  if (r.certificate) j["certificate"] = certificate(*r.certificate);
  if (!r.certified) {
    j["failed_step"] = r.failed_step;
    j["detail"] = r.detail;
  }
  return j;
}

Json gamma(const GammaValue& g) {
  return {{"value", rational(g.value)}, {"source", to_string(g.source)}, {"reference", g.reference}};
}

Json bounds(const BoundsReport& b) {
  Json j = {{"n", b.n},
            {"r", b.r},
            {"s", b.s},
            {"gamma", b.gamma ? gamma(*b.gamma) : Json(nullptr)},
            {"e", rational(b.e)},
            {"e_certified", b.e_certified},
            {"e_witness", witness(b.e_witness)},
            {"g", algebraic(b.g)},
            {"e_exceeds_g", b.e_exceeds_g},
            {"notes", b.notes}};
  if (b.e_certificate) {
    j["e_m_threshold"] = b.e_certificate->m_threshold;
    j["e_x_lo"] = rational(b.e_certificate->x_lo);
  }
  return j;
}

Json system(const LinearSystem& sys) {
  return {{"n", sys.n}, {"d", sys.d}, {"mults", sys.mults}, {"text", to_string(sys)}};
}

Json hyperplanes(const HyperplaneWitness& w) {
  Json arr = Json::array();
  for (const auto& t : w) arr.push_back({{"points", t.subset}, {"weight", t.weight}});
  return arr;
}

Json trace(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const auto& st : t.steps) steps.push_back({{"indices", st.indices}, {"c", st.c}, {"result", system(st.result)}});
  Json j = {{"start", system(t.start)},
            {"steps", steps},
            {"final", system(t.final_system())},
            {"verdict", to_string(t.verdict)},
            {"certificate", t.certificate}};
  if (t.witness) j["witness"] = hyperplanes(*t.witness);
  return j;
}

Json gamma_case(const GammaCaseReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"h", row.h},
                    {"upper", to_string(row.upper)},
                    {"upper_how", row.upper_how},
                    {"upper_ok", row.upper_ok},
                    {"lower", to_string(row.lower)},
                    {"lower_ok", row.lower_ok},
                    {"lower_steps", row.lower_trace.steps.size()},
                    {"upper_ratio", rational(row.upper_ratio)},
                    {"lower_ratio", rational(row.lower_ratio)}});
  }
  Json j = {{"n", r.n}, {"s", r.s}, {"gamma", rational(r.gamma)}, {"rows", rows}, {"failures", r.failures}, {"ok", r.ok}};
  if (r.chain) j["chain"] = trace(*r.chain);
  return j;
}

Json nosymetry(const NosymetryReport& r) {
  Json by_d = Json::object();
  for (const auto& [d, c] : r.cases_by_d) by_d[std::to_string(d)] = c;
  Json list = Json::array();
  for (const auto& v : r.violations) list.push_back({{"d", v.d}, {"mults", v.mults}, {"value", integer(v.value)}});
  const auto& b = r.bounds;
  const auto mid = [](const Interval& iv) { return to_decimal((iv.lo + iv.hi) / 2, 6); };
  return {{"s", b.s},
          {"g", algebraic(b.g)},
          {"d_bound", mid(b.d_bound)},
          {"sum_bound", mid(b.sum_bound)},
          {"d_max", b.d_max},
          {"sum_max", b.sum_max},
          {"denominator_negative", b.denominator_negative},
          {"cases", r.sequences},
          {"pairs_checked", r.cases_checked},
          {"pairs_by_d", by_d},
          {"pairwise_constrained", r.pairwise_cases},
          {"violations", r.violations.size()},
          {"violation_list", list}};
}

Json replay(const ReplayReport& r) {
  Json rows = Json::array();
  for (const auto& c : r.checks)
    rows.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
  return {{"id", r.id}, {"rows", rows}, {"pass", r.pass}};
}

Json overlap(const OverlapValue& v) {
  return {{"d", v.d},
          {"direct", integer(v.direct)},
          {"factored", integer(v.factored)},
          {"factored_is_six_times_direct", v.factored_is_six_times_direct}};
}

std::string as_text(const Json& j) {
  if (!j.is_object()) return scalar_text(j) + "\n";
  std::ostringstream os;
  for (const auto& [k, v] : j.items()) os << k << "=" << scalar_text(v) << "\n";
  return os.str();
}

std::string as_csv(const Json& j) {
  std::ostringstream os;
  const auto row_out = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_cell(cells[i]);
    os << "\n";
  };
  if (j.is_object() && j.contains("rows") && j["rows"].is_array() && !j["rows"].empty() && j["rows"][0].is_object()) {
    std::set<std::string> keys;
    for (const auto& row : j["rows"])
      for (const auto& [k, v] : row.items()) keys.insert(k);
    row_out({keys.begin(), keys.end()});
    for (const auto& row : j["rows"]) {
      std::vector<std::string> cells;
      for (const auto& k : keys) cells.push_back(row.contains(k) ? scalar_text(row[k]) : "");
      row_out(cells);
    }
    return os.str();
  }
  if (!j.is_object()) return scalar_text(j) + "\n";
  std::vector<std::string> keys, vals;
  for (const auto& [k, v] : j.items()) {
    keys.push_back(k);
    vals.push_back(scalar_text(v));
  }
  row_out(keys);
  row_out(vals);
  return os.str();
}

}  // namespace fatflats::report

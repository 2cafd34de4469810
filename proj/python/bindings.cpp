#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fatflats/cremona.hpp"
#include "fatflats/flats.hpp"
#include "fatflats/intersection.hpp"
#include "fatflats/lambda.hpp"
#include "fatflats/parallel.hpp"
#include "fatflats/verifier.hpp"
#include "fatflats/waldschmidt.hpp"

namespace py = pybind11;
using namespace fatflats;

namespace {

py::object frac(const Rational& q) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(q));
}

py::object pyint(const Integer& z) { return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10)); }

py::list poly(const UniPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(frac(c));
  return out;
}

py::dict algebraic(const AlgebraicNumber& a) {
  py::dict d;
  d["defining"] = poly(a.defining);
  d["lo"] = frac(a.lo);
  d["hi"] = frac(a.hi);
  d["decimal"] = a.decimal;
  d["exact"] = a.exact ? frac(*a.exact) : py::none();
  return d;
}

py::dict witness(const RatioWitness& w) {
  py::dict d;
  d["t"] = w.t;
  d["m"] = w.m;
  d["ratio"] = frac(w.ratio);
  d["value"] = pyint(w.value);
  return d;
}

py::dict system(const LinearSystem& s) {
  py::dict d;
  d["n"] = s.n;
  d["d"] = s.d;
  d["mults"] = s.mults;
  return d;
}

LinearSystem to_system(long n, long d, std::vector<long> mults) { return LinearSystem{n, d, std::move(mults)}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact computations for fat flats: Hilbert polynomials, Waldschmidt constant bounds, Cremona reductions.";

  m.def("set_threads", &set_thread_count, py::arg("n"));
  m.def("threads", &thread_count);

  m.def("conditions_count", [](long n, long r, long mm, long t) { return pyint(conditions_count(n, r, mm, t)); },
        py::arg("n"), py::arg("r"), py::arg("m"), py::arg("t"));
  m.def("hilbert_function", [](long n, long r, long mm, long length) {
    py::list out;
    for (const auto& v : hilbert_function_flat(n, r, mm, length)) out.append(pyint(v));
    return out;
  }, py::arg("n"), py::arg("r"), py::arg("m"), py::arg("length"));
  m.def("hilbert_poly", [](long n, long r, long s, long mm) { return poly(hilbert_poly_uniform(n, r, s, mm)); },
        py::arg("n"), py::arg("r"), py::arg("s"), py::arg("m"));
  m.def("hilbert_poly_mixed", [](long n, long r, const MultVector& v, long t) { return frac(hilbert_poly_mixed(n, r, v)(Rational(t))); },
        py::arg("n"), py::arg("r"), py::arg("mults"), py::arg("t"), "P_{n,r,v}(t)");

  m.def("lambda_poly", [](long n, long r, long s) { return poly(lambda_poly(n, r, s)); });
  m.def("g_value", [](long n, long r, long s, const std::string& prec) { return algebraic(g_value(n, r, s, parse_rational(prec))); },
        py::arg("n"), py::arg("r"), py::arg("s"), py::arg("precision") = "1e-12");

  m.def("e_empirical", [](long n, long r, long s, long m_max) { return witness(e_empirical(n, r, s, m_max)); },
        py::arg("n"), py::arg("r"), py::arg("s"), py::arg("m_max") = 60);
  m.def("e_certify", [](long n, long r, long s, const std::string& candidate) {
    const auto res = e_certify(n, r, s, parse_rational(candidate));
    py::dict d;
    d["certified"] = res.certified;
    if (res.certificate) {
      d["ratio"] = frac(res.certificate->ratio);
      d["x_lo"] = frac(res.certificate->x_lo);
      d["m_threshold"] = res.certificate->m_threshold;
      d["scanned_pairs"] = res.certificate->scanned_pairs;
    }
    d["failed_step"] = res.failed_step;
    d["detail"] = res.detail;
    return d;
  }, py::arg("n"), py::arg("r"), py::arg("s"), py::arg("candidate"));
  m.def("gamma_points", [](long n, long s) { return frac(gamma_points_closed(n, s)); });
  m.def("bounds", [](long n, long r, long s, long m_max) {
    const auto b = bounds_report(n, r, s, m_max);
    py::dict d;
    if (b.gamma) {
      d["gamma"] = frac(b.gamma->value);
      d["gamma_source"] = to_string(b.gamma->source);
    } else {
      d["gamma"] = py::none();
      d["gamma_source"] = py::none();
    }
    d["e"] = frac(b.e);
    d["e_certified"] = b.e_certified;
    d["g"] = algebraic(b.g);
    d["e_exceeds_g"] = b.e_exceeds_g;
    d["notes"] = b.notes;
    return d;
  }, py::arg("n"), py::arg("r"), py::arg("s"), py::arg("m_max") = 60);

  m.def("cremona_transform", [](long n, long d, std::vector<long> mults, const std::vector<std::size_t>& idx) {
    const auto st = cremona_transform(to_system(n, d, std::move(mults)), idx);
    return py::make_tuple(st.c, system(st.result));
  }, py::arg("n"), py::arg("d"), py::arg("mults"), py::arg("indices"));
  m.def("reduce", [](long n, long d, std::vector<long> mults, long max_steps) {
    const auto t = reduce(to_system(n, d, std::move(mults)), Strategy::Greedy, max_steps);
    py::dict out;
    out["verdict"] = to_string(t.verdict);
    out["certificate"] = t.certificate;
    out["steps"] = t.steps.size();
    out["final"] = system(t.final_system());
    return out;
  }, py::arg("n"), py::arg("d"), py::arg("mults"), py::arg("max_steps") = 64);

  m.def("self_intersection", [](long n, long r, long s) { return poly(expand_self_intersection(n, r, s)); });
  m.def("identity_check", &identity_check);

  m.def("nosymetry", [](long s) {
    const auto rep = nosymetry_enumerate(s);
    py::dict d;
    d["sequences"] = rep.sequences;
    d["cases"] = rep.cases_checked;
    d["cases_by_d"] = rep.cases_by_d;
    d["violations"] = rep.violations.size();
    d["d_max"] = rep.bounds.d_max;
    d["sum_max"] = rep.bounds.sum_max;
    return d;
  }, py::arg("s"));
  m.def("appendix_ids", &appendix_ids);
  m.def("replay", [](const std::string& id) { return replay_appendix(id).pass; }, py::arg("id"));
}

#pragma once

// JSON renderings of library results. Exact values are strings; keys are sorted
// by nlohmann::json, so dump() is canonical.

#include <string>

#include "json.hpp"

#include "fatflats/cremona.hpp"
#include "fatflats/intersection.hpp"
#include "fatflats/verifier.hpp"
#include "fatflats/waldschmidt.hpp"

namespace fatflats::report {

using Json = nlohmann::json;

Json rational(const Rational& q);
Json integer(const Integer& z);
Json poly(const UniPoly& p);  // ascending coefficients as rational strings
Json algebraic(const AlgebraicNumber& a);
Json witness(const RatioWitness& w);
Json certificate(const ECertificate& c);
Json certify_result(const ECertifyResult& r);
Json gamma(const GammaValue& g);
Json bounds(const BoundsReport& b);
Json system(const LinearSystem& sys);
Json hyperplanes(const HyperplaneWitness& w);
Json trace(const ReductionTrace& t);
Json gamma_case(const GammaCaseReport& r);
Json nosymetry(const NosymetryReport& r);
Json replay(const ReplayReport& r);
Json overlap(const OverlapValue& v);

/// One "key=value" line per top-level key; nested values as compact JSON.
std::string as_text(const Json& j);

/// A "rows" array of objects becomes a table; otherwise one row of top-level keys.
std::string as_csv(const Json& j);

}  // namespace fatflats::report

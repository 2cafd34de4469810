#include "doctest.h"
#include "report_json.hpp"

#include "fatflats/lambda.hpp"
#include "fatflats/parallel.hpp"

using namespace fatflats;
using report::Json;

TEST_SUITE("cli") {

TEST_CASE("JSON round-trips byte for byte") {
  const std::vector<Json> docs = {
      report::algebraic(g_value(3, 1, 6)),
      report::certify_result(e_certify(3, 1, 6, make_rational(27, 7))),
      report::bounds(bounds_report(3, 0, 4)),
      report::trace(reduce(LinearSystem{3, 12, {7, 7, 7, 7, 7, 7}}, Strategy::Greedy, 2)),
      report::gamma_case(verify_gamma_points_case(3, 6, 2)),
      report::nosymetry(nosymetry_enumerate(8)),
      report::replay(replay_appendix("six-lines")),
      report::overlap(two_line_overlap_value(2, 2, 1)),
  };
  for (const auto& d : docs) {
    const std::string text = d.dump();
    CHECK(Json::parse(text).dump() == text);
  }
}

TEST_CASE("exact values are strings, never floats") {
  const Json b = report::bounds(bounds_report(3, 1, 6));
  CHECK(b["e"] == "27/7");
  CHECK(b["g"]["interval"][0].is_string());
  const std::string text = b.dump();
  const auto check = [](const Json& j, auto&& self) -> void {
    CHECK_FALSE(j.is_number_float());
    if (j.is_structured())
      for (const auto& v : j) self(v, self);
  };
  check(b, check);
  CHECK(report::integer(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(report::integer(Integer(-5)) == -5);
}

TEST_CASE("text and CSV renderings") {
  const Json j = {{"b", 2}, {"a", "x,y"}};
  CHECK(report::as_text(j) == "a=x,y\nb=2\n");
  CHECK(report::as_csv(j) == "a,b\n\"x,y\",2\n");
  const Json rows = {{"rows", {{{"k", 1}, {"v", "p"}}, {{"k", 2}}}}};
  CHECK(report::as_csv(rows) == "k,v\n1,p\n2,\n");
}

TEST_CASE("reports do not depend on the thread count") {
  set_thread_count(1);
  const std::string a = report::nosymetry(nosymetry_enumerate(7)).dump();
  set_thread_count(3);
  const std::string b = report::nosymetry(nosymetry_enumerate(7)).dump();
  set_thread_count(0);
  CHECK(a == b);
}

}

#include "doctest.h"
#include "eulerstrat/catalog.hpp"

using namespace eulerstrat;

namespace {

FormulaReport report_for(const std::string& example, Formula f) {
  return run_formula(build_example(find_example(example)), f);
}

}  // namespace

TEST_CASE("catalog has six entries and every formula passes") {
  CHECK(catalog().size() == 6);
  for (const auto& e : catalog())
    for (const auto& r : run_example(e)) CHECK_MESSAGE(r.pass, (e.name + " " + r.formula));
  CHECK_THROWS_AS(find_example("nope"), UnknownExampleError);
}

TEST_CASE("worked examples") {
  CHECK(report_for("blow-up", Formula::eq6).equation_text() == "4 = 1*3 + (2 - 1)*1");
  CHECK(report_for("blow-up", Formula::eq15).equation_text() == "4 = 1*3 + (2 - 1*1)*1");
  CHECK(report_for("nodal-cubic", Formula::c1).equation_text() == "1 = 1*2 + (1 - 2)*1");
  CHECK(report_for("nodal-cubic-normalization", Formula::eq17).equation_text() == "2 = 1*2 + (2 - 1*2)*1");
  CHECK(report_for("identity-nodal-cubic", Formula::eq17).equation_text() == "2 = 1*2 + (2 - 1*2)*1");
  CHECK(report_for("smooth-singleton", Formula::c1).terms.size() == 1);
  for (auto f : {Formula::eq6, Formula::eq7, Formula::eq15, Formula::eq16}) CHECK(report_for("blow-up", f).pass);
  for (auto f : {Formula::c1, Formula::c2}) CHECK(report_for("nodal-cubic", f).pass);
}

TEST_CASE("worked example inputs") {
  // Smooth point link S^3: its cone has I-chi 1.
  CHECK(cone_euler(std::vector<Int>{1, 0, 0, 0}, 2) == 1);
  auto cubic = build_example(find_example("nodal-cubic"));
  CHECK(euler(constant(cubic.target.poset, 1)) == 1);
  CHECK(euler(ic_function(cubic.target.links, 1)) == 2);
  auto blow = build_example(find_example("blow-up"));
  CHECK(pushforward(blow.kernel, constant(blow.source.poset, 1)) == ConstrFn(blow.target.poset, {2, 1}));
}

TEST_CASE("run_formula rejects a function for formulas that fix their own") {
  auto map = build_example(find_example("blow-up"));
  auto alpha = constant(map.source.poset, 2);
  CHECK_THROWS_AS(run_formula(map, Formula::eq6, alpha), InputError);
  CHECK(run_formula(map, Formula::eq4, alpha).pass);
  CHECK_THROWS_AS(run_formula(map, Formula::eq11, alpha), SpaceMismatchError);
}

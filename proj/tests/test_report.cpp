#include "doctest.h"

#include <omp.h>

#include "aci/report.hpp"
#include "aci/suites.hpp"

using namespace aci;

namespace {

RunConfig e1_config(const std::string& format = "json") {
  RunConfig c;
  c.format = format;
  FamilyArgs f;
  f.name = "e1";
  f.b = {2, 2};
  f.c = {2, 2};
  c.family = f;
  return c;
}

}  // namespace

TEST_CASE("report document has the documented keys") {
  auto out = run_command(e1_config());
  CHECK(out.exit_code == kOk);
  const auto& d = out.document;
  for (const char* key : {"config", "input", "report"}) CHECK(d.contains(key));
  const auto& r = d["report"];
  for (const char* key : {"degrees", "G", "F", "tau", "st", "ct", "mdr", "ci_type", "lefschetz", "conjectures", "cone"})
    CHECK(r.contains(key));
  for (const char* key : {"i0", "rows", "unimodal", "symmetric", "m_surjective_from_i0"})
    CHECK(r["lefschetz"].contains(key));
  CHECK(r["G"] == Json::parse("[1,2,3,1,-1,-2]"));
  CHECK(r["tau"] == 4);
  CHECK(r["conjectures"]["c2"]["slack"] == 0);
}

TEST_CASE("config survives a JSON round trip") {
  RunConfig c = e1_config();
  c.seed = 123456789012345ULL;
  c.trials = 3;
  c.suite = "theorem-main";
  c.count = 7;
  c.max_degree = 4;
  c.alpha = "3/4";
  c.family->plus_sign = true;
  auto j = to_json(c);
  CHECK(to_json(config_from_json(j)) == j);
  CHECK_THROWS_AS(config_from_json(Json::parse(R"({"command":"analyze"})")), std::invalid_argument);
}

TEST_CASE("replaying the embedded config reproduces the document byte for byte") {
  RunConfig c;
  c.format = "json";
  c.n = 1;
  c.aci = {"x0*x1", "x1^3"};
  for (const char* field : {"gf:65521", "rational"}) {
    c.field = field;
    auto first = render(run_command(c), c);
    auto config = config_from_json(Json::parse(first)["config"]);
    CHECK(render(run_command(config), config) == first);
  }
  auto e1 = e1_config();
  auto doc = render(run_command(e1), e1);
  auto again = config_from_json(Json::parse(doc)["config"]);
  CHECK(render(run_command(again), again) == doc);
}

TEST_CASE("table and json carry the same numbers") {
  auto json = run_command(e1_config("json"));
  auto table = run_command(e1_config("table")).table;
  const auto& r = json.document["report"];
  CHECK(table.find("tau              " + r["tau"].dump() + "\n") != std::string::npos);
  CHECK(table.find("st               " + r["st"].dump() + "\n") != std::string::npos);
  CHECK(table.find("ct               " + r["ct"].dump() + "\n") != std::string::npos);
  CHECK(table.find("mdr              " + r["mdr"].dump() + "\n") != std::string::npos);
  CHECK(table.find("[1,2,3,1,-1,-2]") != std::string::npos);
}

TEST_CASE("exit codes") {
  RunConfig c;
  c.hypersurface = "x0^3";
  CHECK(run_command(c).exit_code == kHypothesisFailure);
  c.hypersurface = "x0^3 + * x1";
  CHECK(run_command(c).exit_code == kParseError);
  c.hypersurface = "x7^3";
  CHECK(run_command(c).exit_code == kParseError);
  c.hypersurface.reset();
  c.aci = {"x0*x1", "x1^3"};
  c.n = 1;
  CHECK(run_command(c).exit_code == kOk);
  c.field = "gf:12";
  CHECK_THROWS_AS(run_command(c), std::invalid_argument);
  c.field = "gf:65521";
  c.order = "lex";
  CHECK_THROWS_AS(run_command(c), std::invalid_argument);
  RunConfig v;
  v.command = "verify";
  v.suite = "no-such-suite";
  CHECK_THROWS_AS(run_command(v), std::invalid_argument);
}

TEST_CASE("rational C2 slack prints as p/q") {
  CHECK(rational_json(mpq_class(3, 4)) == "3/4");
  CHECK(rational_json(mpq_class(-2)) == -2);
  RunConfig c;
  c.format = "json";
  c.hypersurface = "x0^4 - 2*x0^2*x1^2 + x1^4 - 2*x0^2*x2^2 + x2^4 + x0^4";
  c.alpha = "4/3";
  auto out = run_command(c);
  CHECK(out.document["report"]["conjectures"]["c2"]["slack"] == "-4/3");
}

TEST_CASE("family prediction mismatches are identity failures") {
  // the rkl0 prediction for (2,3,5) says M-surjectivity fails; the run agrees
  RunConfig c;
  FamilyArgs f;
  f.name = "rkl0";
  f.p = 2;
  f.q = 3;
  f.d = 5;
  c.family = f;
  c.command = "profile";
  auto out = run_command(c);
  CHECK(out.exit_code == kOk);
  CHECK(out.table.find("M-surjectivity from i0: FAIL") != std::string::npos);
}

TEST_CASE("every suite passes at small size") {
  SuiteOptions o;
  o.seed = 3;
  o.count = 4;
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    auto r = run_suite(PrimeField(), name, o);
    CHECK(r.ok());
    CHECK(r.passed() == r.instances.size());
    CHECK(r.mandatory == (name.rfind("conjecture", 0) != 0));
  }
  CHECK_THROWS_AS(run_suite(PrimeField(), "nope", o), std::invalid_argument);
}

TEST_CASE("suite output is order-stable and independent of the thread count") {
  SuiteOptions o;
  o.seed = 5;
  o.count = 6;
  const int threads = omp_get_max_threads();
  omp_set_num_threads(1);
  auto serial = to_json(run_suite(PrimeField(), "theorem-main", o));
  omp_set_num_threads(4);
  auto parallel = to_json(run_suite(PrimeField(), "theorem-main", o));
  omp_set_num_threads(threads);
  CHECK(serial.dump() == parallel.dump());
  for (std::size_t i = 0; i < serial["instances"].size(); ++i) CHECK(serial["instances"][i]["index"] == i);
}

TEST_CASE("a broken identity is reported as a failing instance") {
  // lefschetz-n2 on an n = 1 family is outside its domain and must fail, not crash
  SuiteOptions o;
  FamilyArgs f;
  f.name = "n1";
  f.d1 = 4;
  o.family = f;
  auto r = run_suite(PrimeField(), "lefschetz-n2", o);
  REQUIRE(r.instances.size() == 1);
  CHECK_FALSE(r.instances[0].pass);
  CHECK_FALSE(r.ok());
}

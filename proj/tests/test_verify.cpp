#include <doctest.h>

#include "peakval/verify.hpp"

using namespace peakval;

namespace {

VerifyReport run(const std::string& id, int size, int jobs = 1) {
  VerifyOptions o;
  o.theorem = id;
  o.max_size = size;
  o.jobs = jobs;
  o.box = 4;
  o.max_cells = 10;
  return verify(o);
}

}  // namespace

TEST_CASE("every theorem passes at small bounds") {
  for (const auto& info : theorem_catalog()) {
    CAPTURE(info.id);
    int size = std::min(info.default_size, 4);
    VerifyReport r = run(info.id, size);
    CHECK(r.passed);
    CHECK(r.counterexample.is_null());
    CHECK(r.checked > 0);
  }
}

TEST_CASE("documented examples") {
  CHECK(run("thm:skewSYT", 6).passed);
  CHECK(run("thm:chi", 4).passed);
}

TEST_CASE("a corrupted conjugation is caught with a counterexample") {
  VerifyOptions o;
  o.max_size = 3;
  o.conjugate = [](const OscillatingTableau& x) { return x; };
  for (const char* id : {"lem:conjugate", "lem:Phi"}) {
    o.theorem = id;
    VerifyReport r = verify(o);
    CHECK_FALSE(r.passed);
    REQUIRE(r.counterexample.is_object());
    CHECK(r.counterexample.contains("property"));
    CHECK(r.counterexample.contains("task"));
    CHECK(to_json(r)["status"] == "fail");
  }
}

TEST_CASE("a conjugation that breaks shapes reports the error") {
  VerifyOptions o;
  o.theorem = "lem:Phi";
  o.max_size = 3;
  o.conjugate = [](const OscillatingTableau& x) { return x.reversed().reversed().reversed(); };
  VerifyReport r = verify(o);
  CHECK_FALSE(r.passed);
}

TEST_CASE("bad requests are rejected") {
  CHECK_THROWS_AS(run("thm:nope", 3), std::invalid_argument);
  CHECK_THROWS_AS(run("thm:chi", 99), std::invalid_argument);
  CHECK_THROWS_AS(run("thm:chi", 3, 0), std::invalid_argument);
  VerifyOptions o;
  o.theorem = "thm:AI";
  o.taus = {Permutation{}};
  CHECK_THROWS_AS(verify(o), std::invalid_argument);
  o.theorem = "thm:skewSYT";
  o.box = 20;
  CHECK_THROWS_AS(verify(o), std::invalid_argument);
}

TEST_CASE("reports do not depend on the number of workers") {
  for (const char* id : {"thm:skewSYT", "thm:transversal-general", "lem:psi"}) {
    auto a = to_json(run(id, 5, 1)).dump();
    auto b = to_json(run(id, 5, 3)).dump();
    CHECK(a == b);
  }
}

TEST_CASE("report layout") {
  Json j = to_json(run("thm:chi", 3));
  std::vector<std::string> keys;
  for (auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"theorem", "bounds", "checked", "status", "counterexample"});
  CHECK(j["status"] == "pass");
  CHECK(j["counterexample"].is_null());
  CHECK(j["bounds"]["max_size"] == 3);
}

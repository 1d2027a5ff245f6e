#include <doctest.h>

#include <cstdlib>

#include "flagval/error.hpp"
#include "flagval/suites.hpp"

using namespace flagval;

namespace {

ErrorCode code_of(const SuiteConfig& c) {
  try {
    run_suite(c);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return ErrorCode::BadInput;
}

SuiteConfig config(std::string suite) {
  SuiteConfig c;
  c.suite = std::move(suite);
  return c;
}

}  // namespace

TEST_CASE("suite registry and configuration errors") {
  CHECK(suite_names().size() == 9);
  CHECK(code_of(config("no-such-suite")) == ErrorCode::UnknownSuite);

  SuiteConfig sampled = config("valuation-axioms");
  CHECK(code_of(sampled) == ErrorCode::InvalidConfig);  // sampled without a seed
  sampled.seed = 1;
  sampled.samples = 0;
  CHECK(code_of(sampled) == ErrorCode::InvalidConfig);

  SuiteConfig big = config("flag-classify");
  big.q = 4;
  CHECK(code_of(big) == ErrorCode::SizeBound);

  SuiteConfig wrong_mode = config("flag-classify");
  wrong_mode.mode = RunMode::Sampled;
  wrong_mode.seed = 1;
  CHECK(code_of(wrong_mode) == ErrorCode::InvalidConfig);

  CHECK_THROWS_AS(parse_run_mode("random"), Error);
}

TEST_CASE("flag classification report") {
  const Report r = run_suite(config("flag-classify"));
  CHECK(r.ok());
  CHECK(r.details["flag_subsets"] == 70);
  const auto j = r.to_json();
  CHECK(j.begin().key() == "suite");
  CHECK_FALSE(j.contains("elapsed_ms"));
  CHECK(j["config"]["seed"].is_null());
}

TEST_CASE("lemma sweep over P2(F2)") {
  const Report r = run_suite(config("lemma-p2"));
  CHECK(r.ok());
  CHECK(r.details["partitions"] == 813);
  CHECK(r.details["hypothesis_holds"] == 77);
}

TEST_CASE("collineation model at p = 2 exhibits the failure") {
  SuiteConfig c = config("collineation");
  c.q = 2;
  const Report r = run_suite(c);
  CHECK(r.ok());
  CHECK(r.witnesses.contains("model-failure exhibited"));
  CHECK(r.details["line_test_not_flag"] == 336);
  c.q = 4;
  CHECK(code_of(c) == ErrorCode::InvalidConfig);
}

TEST_CASE("reports do not depend on the worker count") {
  SuiteConfig c = config("valuation-axioms");
  c.seed = 11;
  c.samples = 300;
  ::setenv("FLAGVAL_THREADS", "1", 1);
  const std::string one = run_suite(c).to_json().dump();
  ::setenv("FLAGVAL_THREADS", "3", 1);
  const std::string three = run_suite(c).to_json().dump();
  ::unsetenv("FLAGVAL_THREADS");
  CHECK(one == three);
  c.seed = 12;
  CHECK(run_suite(c).to_json().dump() != one);
}

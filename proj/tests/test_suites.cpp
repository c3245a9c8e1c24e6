#include "cli.hpp"
#include "doctest.h"
#include "wittcenter/suites.hpp"

using namespace wittcenter;

namespace {

SuiteConfig config(unsigned long trials, std::uint64_t seed) {
  SuiteConfig c;
  c.trials = trials;
  c.seed = seed;
  return c;
}

std::string unexpected(const Report& r) {
  std::string out;
  for (const auto& f : r.failures) {
    if (!is_expected_failure(r.suite, f.check)) out += f.check + ": expected " + f.expected + ", got " + f.got + "\n";
  }
  return out;
}

}  // namespace

TEST_SUITE("suites") {

TEST_CASE("every suite runs clean on a few trials") {
  for (const auto& name : suite_names()) {
    CAPTURE(name);
    const Report r = run_suite(name, config(3, 5));
    CHECK(r.suite == name);
    CHECK(r.checks > 0);
    CHECK(unexpected(r) == "");
    if (name != "phi-even-hom") CHECK(r.ok());
  }
}

TEST_CASE("the only phi-even failure is the uncorrected square") {
  const Report r = verify_phi_even(1, 2, 9);
  REQUIRE(r.failures.size() == 1);
  CHECK(r.failures[0].check == "naive-square-noncentral");
  CHECK(is_expected_failure("phi-even-hom", r.failures[0].check));
  CHECK_FALSE(is_expected_failure("phi-odd-hom", r.failures[0].check));
  const Report r2 = verify_phi_even(2, 2, 9);
  REQUIRE(r2.failures.size() == 1);
  CHECK(r2.failures[0].check == "naive-square-noncentral");
}

TEST_CASE("entry points") {
  CHECK(verify_phi_ring_hom(3, 1, 3, 1).ok());
  CHECK(verify_phi_ring_hom(5, 1, 2, 1).ok());
  const Report r = verify_restricted_identities(5, 3);
  CHECK(r.ok());
  CHECK(r.p == 2u);
  CHECK(r.trials == 5);
  CHECK(r.seed == 3);
}

TEST_CASE("reports are deterministic") {
  for (const char* name : {"phi-odd-hom", "lemma21", "witt-axioms"}) {
    SuiteConfig a = config(4, 77);
    a.workers = 1;
    SuiteConfig b = a;
    b.workers = 3;
    const auto ja = cli::report_to_json(run_suite(name, a)).dump();
    CHECK(ja == cli::report_to_json(run_suite(name, a)).dump());
    CHECK(ja == cli::report_to_json(run_suite(name, b)).dump());
  }
}

TEST_CASE("report fields") {
  SuiteConfig c = config(2, 4);
  c.p = 3;
  c.m = 2;
  const Report r = run_suite("phi-odd-hom", c);
  CHECK(r.p == 3u);
  CHECK(r.m == 2u);
  CHECK(r.d == 1);
  const Report many = run_suite("bracket-sign", config(1, 1));
  CHECK_FALSE(many.p.has_value());
}

TEST_CASE("bad configurations") {
  SuiteConfig c = config(1, 1);
  c.p = 3;
  CHECK_THROWS_AS(run_suite("phi-even-hom", c), SuiteConfigError);
  CHECK_THROWS_AS(run_suite("restricted-identities", c), SuiteConfigError);
  c.p = 2;
  CHECK_THROWS_AS(run_suite("phi-odd-hom", c), SuiteConfigError);
  CHECK_THROWS_AS(run_suite("no-such-suite", config(1, 1)), SuiteConfigError);
  CHECK_THROWS_AS(run_suite("lemma21", config(0, 1)), SuiteConfigError);
  SuiteConfig d = config(1, 1);
  d.d = 5;
  CHECK_THROWS_AS(run_suite("bracket-sign", d), SuiteConfigError);
}

TEST_CASE("other dimensions and primes") {
  SuiteConfig c = config(2, 8);
  c.d = 2;
  for (const char* name : {"phi-odd-hom", "lemma21", "serre-cartier", "binom-e9-bnf"}) {
    CAPTURE(name);
    CHECK(run_suite(name, c).ok());
  }
  SuiteConfig five = config(2, 8);
  five.p = 5;
  for (const char* name : {"bracket-sign", "witt-axioms", "center-iso"}) {
    CAPTURE(name);
    CHECK(run_suite(name, five).ok());
  }
}

}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include <json.hpp>

#include "fibcensus/fib_kernel.hpp"
#include "fibcensus/golden_exact.hpp"
#include "fibcensus/lemma_suite.hpp"
#include "fibcensus/report_io.hpp"

using namespace fibcensus;

TEST_CASE("all checkers pass on moderate ranges") {
  CHECK(check_phi_bounds(500).pass);
  CHECK(check_doubling_ineq(-80, 80).pass);
  CHECK(check_fib_lucas_identity(-80, 80, -80, 80).pass);
  CHECK(check_key_lemma(120, 120).pass);
  CHECK(check_asymptotic_count(LemmaRanges::default_asymptotic_xs()).pass);
  CHECK(check_addition_formula(-80, 80, -80, 80).pass);
  CHECK(check_honsberger(30, 80).pass);
}

TEST_CASE("key lemma spot values") {
  // (n, m) = (5, 3): 5 * 4 <= 21 <= 5 * 5
  const auto [f3, c3] = floor_ceil_phi_pow(3);
  CHECK(fib(5) * f3 <= fib(8));
  CHECK(fib(8) <= fib(5) * c3);
  // boundary n = m - 1: (2, 3): 1 * 4 <= 5 <= 1 * 5
  CHECK(fib(2) * f3 <= fib(5));
  CHECK(fib(5) <= fib(2) * c3);
  // m = 0 is trivial equality
  const auto [f0, c0] = floor_ceil_phi_pow(0);
  CHECK(fib(4) * f0 == fib(4));
  CHECK(fib(4) * c0 == fib(4));
}

TEST_CASE("excluded key-lemma case (0, 1) really fails the right inequality") {
  const auto [f1, c1] = floor_ceil_phi_pow(1);
  CHECK(fib(0) * f1 <= fib(1));  // left side holds
  CHECK(fib(1) > fib(0) * c1);   // right side fails: 1 > 0
}

TEST_CASE("mutation harness: every checker detects its injected fault") {
  const auto expect_detect = [](const CheckResult& r) {
    REQUIRE_FALSE(r.pass);
    REQUIRE(r.counterexample.has_value());
    REQUIRE_FALSE(r.counterexample->empty());
    REQUIRE_FALSE(r.detail.empty());
  };
  expect_detect(check_phi_bounds(500, Fault::corrupt));
  expect_detect(check_doubling_ineq(-80, 80, Fault::corrupt));
  expect_detect(check_fib_lucas_identity(-80, 80, -80, 80, Fault::corrupt));
  expect_detect(check_key_lemma(120, 120, Fault::corrupt));
  expect_detect(check_asymptotic_count(LemmaRanges::default_asymptotic_xs(), Fault::corrupt));
  expect_detect(check_addition_formula(-80, 80, -80, 80, Fault::corrupt));
  expect_detect(check_honsberger(30, 80, Fault::corrupt));
}

TEST_CASE("reported counterexamples re-check independently") {
  SUBCASE("fib_lucas fault point") {
    const CheckResult r = check_fib_lucas_identity(-40, 40, -40, 40, Fault::corrupt);
    REQUIRE_FALSE(r.pass);
    const long long n = (*r.counterexample)[0];
    const long long m = (*r.counterexample)[1];
    const int wrong_unit = (m % 2 == 0) ? 1 : -1;  // the corrupted (-1)^m
    CHECK(fib(n + m) != fib(n) * lucas(m) + wrong_unit * fib(n - m));
    const int unit = (m % 2 == 0) ? -1 : 1;  // the true (-1)^(m+1)
    CHECK(fib(n + m) == fib(n) * lucas(m) + unit * fib(n - m));
  }
  SUBCASE("addition formula fault point") {
    const CheckResult r = check_addition_formula(-40, 40, -40, 40, Fault::corrupt);
    REQUIRE_FALSE(r.pass);
    const long long n = (*r.counterexample)[0];
    const long long m = (*r.counterexample)[1];
    CHECK(fib(n + m) != fib(n) * fib(m + 1) - fib(n - 1) * fib(m));
    CHECK(fib(n + m) == fib(n) * fib(m + 1) + fib(n - 1) * fib(m));
  }
  SUBCASE("doubling fault point") {
    const CheckResult r = check_doubling_ineq(-40, 40, Fault::corrupt);
    REQUIRE_FALSE(r.pass);
    const long long n = (*r.counterexample)[0];
    CHECK(fib(2 * n - 1) != fib(n) * fib(n) - fib(n - 1) * fib(n - 1));
    CHECK(fib(2 * n - 1) == fib(n) * fib(n) + fib(n - 1) * fib(n - 1));
  }
}

TEST_CASE("run_all_checks emits one result per checker") {
  LemmaRanges small;
  small.phi_n_max = 200;
  small.grid_lo = -40;
  small.grid_hi = 40;
  small.key_n_max = 60;
  small.key_m_max = 60;
  small.hons_a_max = 12;
  small.hons_k_max = 40;
  const auto results = run_all_checks(small);
  REQUIRE(results.size() == 7);
  for (const auto& r : results) {
    CHECK(r.pass);
    CHECK_FALSE(r.counterexample.has_value());
  }

  SUBCASE("JSON lines parse and carry the pass flag") {
    const std::string lines = report::check_results_json_lines(results);
    size_t count = 0;
    size_t pos = 0;
    while (pos < lines.size()) {
      const size_t nl = lines.find('\n', pos);
      REQUIRE(nl != std::string::npos);
      const auto j = nlohmann::json::parse(lines.substr(pos, nl - pos));
      CHECK(j.at("pass").get<bool>());
      CHECK(j.at("counterexample").is_null());
      CHECK(!j.at("name").get<std::string>().empty());
      pos = nl + 1;
      ++count;
    }
    CHECK(count == 7);
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(check_phi_bounds(0), std::invalid_argument);
  CHECK_THROWS_AS(check_asymptotic_count({}), std::invalid_argument);
  CHECK_THROWS_AS(check_asymptotic_count({BigNat(10), BigNat(5)}), std::invalid_argument);
  CHECK_THROWS_AS(check_honsberger(1, 10), std::invalid_argument);
}

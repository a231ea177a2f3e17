#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "fibcensus/density_stats.hpp"
#include "fibcensus/golden_exact.hpp"
#include "fibcensus/rank_census.hpp"
#include "test_support.hpp"

using namespace fibcensus;
using testsupport::leq;
using testsupport::within;

namespace {
const char* kTheta10 = "4.78497196678166597135818975237673691031560";
const char* kTheta2 = "1.44042009041255647901755149958786380245860";
const char* kTheta199 = "10.9999475263702374739939314911033356277080";
}  // namespace

TEST_CASE("theta_approx certified anchors") {
  const ThetaApprox t10 = theta_approx(10, 5);
  CHECK(t10.floor_part == 4);
  CHECK(t10.floor_part == ell(10));
  CHECK(within(t10.value, "4.78497", "0.00001"));
  CHECK(leq(t10.error_bound, "0.00001"));
  CHECK(testsupport::encloses(t10.theta_enclosure, kTheta10));
  CHECK(t10.frac_enclosure.strictly_inside_unit());

  const ThetaApprox t7 = theta_approx(7, 3);
  CHECK(t7.floor_part == 4);
  CHECK(within(t7.frac_part, "0.044", "0.001"));

  const ThetaApprox t2 = theta_approx(2, 6);
  CHECK(within(t2.value, "1.440420", "0.000001"));
  CHECK(testsupport::encloses(t2.theta_enclosure, kTheta2));
}

TEST_CASE("theta value and error are consistent with the enclosure") {
  for (long long a : {2LL, 3LL, 7LL, 10LL, 100LL, 199LL}) {
    const ThetaApprox t = theta_approx(a, 12);
    CHECK(t.floor_part == ell(a));
    CHECK(leq(t.error_bound, "0.000000000001"));
    // |value - midpoint| <= error bound by construction; check value against
    // the enclosure endpoints rendered outward.
    const std::string lo = certlog::decimal_floor(t.theta_enclosure.lo, t.prec_bits, 14);
    const std::string hi = certlog::decimal_ceil(t.theta_enclosure.hi, t.prec_bits, 14);
    CHECK(leq(lo, t.value));
    CHECK(leq(t.value, hi));
  }
}

TEST_CASE("theta at 30 digits for the Lucas base 199") {
  const ThetaApprox t = theta_approx(199, 30);
  CHECK(leq(t.error_bound, "0.000000000000000000000000000001"));
  CHECK(t.floor_part == 10);
  CHECK(t.frac_enclosure.strictly_inside_unit());
  CHECK(testsupport::encloses(t.theta_enclosure, kTheta199));
  // theta(199) is within 10^-3 of the integer 11, certified: 1 - frac < 10^-3
  BigInt unit = 0;
  mpz_setbit(unit.get_mpz_t(), static_cast<mp_bitcnt_t>(t.prec_bits));
  CHECK(1000 * (unit - t.frac_enclosure.lo) < unit);
}

TEST_CASE("precision cap raises with the achieved bound") {
  CHECK_THROWS_AS(theta_approx(10, 30, 64), PrecisionCapExceeded);
  try {
    theta_approx(10, 30, 64);
  } catch (const PrecisionCapExceeded& e) {
    CHECK(e.bits_used == 64);
    CHECK(!e.achieved_bound.empty());
    CHECK(std::string(e.what()).find("64") != std::string::npos);
  }
}

TEST_CASE("theta decimals certified by exact integer power comparison") {
  // theta(10) in (4.78497, 4.78498) iff Phi^478497 < 10^100000 < Phi^478498;
  // both sides decided exactly in Z[Phi], no logarithms involved.
  const BigNat big = pow10(100000);
  CHECK(cmp_int_phi_pow(big, 478497) == std::strong_ordering::greater);
  CHECK(cmp_int_phi_pow(big, 478498) == std::strong_ordering::less);
}

TEST_CASE("density report at N = 100, base 10") {
  const DensityReport r = density_report(10, 100, 10);
  CHECK(r.ell == 4);
  CHECK(r.A_N == 21);
  CHECK(r.B_N == 79);
  CHECK(r.A_N + r.B_N == r.N);
  CHECK(r.ell * r.A_N + (r.ell + 1) * r.B_N == r.rank_h);
  CHECK(r.share_A == "0.210000");
  CHECK(r.share_B == "0.790000");
  CHECK(within(r.theoretical_B, "0.78497196678", "0.0000000001"));
  CHECK(within(r.theoretical_A, "0.21502803322", "0.0000000001"));
  // |0.79 - 0.784972| = 0.005028
  CHECK(leq(r.deviation, "0.0051"));
  CHECK(leq("0.0049", r.deviation));
}

TEST_CASE("density deviation shrinks from N = 100 to N = 10^4") {
  const DensityReport small = density_report(10, 100, 10);
  const DensityReport large = density_report(10, 10000, 10);
  CHECK(large.A_N == 2150);
  CHECK(large.B_N == 7850);
  CHECK(leq(large.deviation, small.deviation));
  CHECK(!leq(small.deviation, large.deviation));  // strictly smaller
}

TEST_CASE("density for the Lucas base 199 is one-sided at N = 1000") {
  const DensityReport r = density_report(199, 1000, 10);
  CHECK(r.ell == 10);
  CHECK(r.A_N == 0);
  CHECK(r.B_N == 1000);
  CHECK(r.share_B == "1.000000");
  CHECK(leq("0.999", r.theoretical_B));
}

TEST_CASE("density report is identical across thread counts") {
  const DensityReport seq = density_report(10, 2000, 8, 1);
  const DensityReport par = density_report(10, 2000, 8, 4);
  CHECK(seq.A_N == par.A_N);
  CHECK(seq.B_N == par.B_N);
  CHECK(seq.share_A == par.share_A);
  CHECK(seq.deviation == par.deviation);
  CHECK(seq.theta == par.theta);
}

TEST_CASE("expected statistics") {
  const ExpectedStats s10 = expected_stats(10, 5);
  CHECK(within(s10.expectation, "4.78497", "0.00001"));
  CHECK(within(s10.stddev, "0.41085", "0.0001"));  // sqrt(0.784972 * 0.215028)

  const ExpectedStats s199 = expected_stats(199, 5);
  CHECK(leq(s199.stddev, "0.01"));

  for (long long a : {2LL, 3LL, 7LL, 10LL, 199LL, 1000LL})
    CHECK(leq(expected_stats(a, 5).stddev, "0.5"));
}

TEST_CASE("empirical statistics") {
  const StatsReport r4 = empirical_stats(10, 4, 5);
  CHECK(r4.empirical_mean == "4.750000");  // counts 5, 5, 5, 4
  CHECK(r4.count_sum == 19);

  const StatsReport r6 = empirical_stats(2, 6, 5);
  CHECK(r6.empirical_mean == "1.500000");  // counts 1, 2, 1, 2, 1, 2

  SUBCASE("mean equals ell + share_B as an exact integer identity") {
    for (long long a : {2LL, 7LL, 10LL}) {
      const long long n = 500;
      const StatsReport r = empirical_stats(a, n, 5);
      const TheoremReport v = verify_theorem(a, n);
      const auto it = v.histogram.find(r.ell + 1);
      const long long b = it == v.histogram.end() ? 0 : it->second;
      REQUIRE(r.count_sum == r.ell * n + b);
      REQUIRE(r.count_sum >= r.ell * n);
      REQUIRE(r.count_sum <= (r.ell + 1) * n);
    }
  }
}

TEST_CASE("argument validation") {
  CHECK_THROWS_AS(theta_approx(1, 5), std::invalid_argument);
  CHECK_THROWS_AS(theta_approx(10, 0), std::invalid_argument);
  CHECK_THROWS_AS(density_report(10, 0, 5), std::invalid_argument);
  CHECK_THROWS_AS(empirical_stats(10, 1, 5), std::invalid_argument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "fibcensus/fib_kernel.hpp"

using namespace fibcensus;

namespace {

// Local signed table built by the recurrence only, independent of fast
// doubling.
std::vector<BigInt> signed_table(FibIndex lo, FibIndex hi) {
  std::vector<BigInt> t(static_cast<size_t>(hi - lo + 1));
  // F_0 = 0, F_1 = 1 seeded in from the iterative oracle direction
  const size_t i0 = static_cast<size_t>(-lo);
  t[i0] = 0;
  t[i0 + 1] = 1;
  for (size_t i = i0 + 2; i < t.size(); ++i) t[i] = t[i - 2] + t[i - 1];
  for (size_t i = i0; i-- > 0;) t[i] = t[i + 2] - t[i + 1];
  return t;
}

}  // namespace

TEST_CASE("fib_pair anchors and known values") {
  const FibPair p0 = fib_pair(0);
  CHECK(p0.lo == 0);
  CHECK(p0.hi == 1);
  const FibPair p10 = fib_pair(10);
  CHECK(p10.lo == 55);
  CHECK(p10.hi == 89);
  const FibPair p24 = fib_pair(24);
  CHECK(p24.lo == 46368);
  CHECK(p24.hi == 75025);
  CHECK_THROWS_AS(fib_pair(-1), std::invalid_argument);
}

TEST_CASE("fib handles signed indices") {
  CHECK(fib(12) == 144);
  CHECK(fib(-5) == 5);
  CHECK(fib(-4) == -3);
  CHECK(fib(-1) == 1);
  CHECK(fib(0) == 0);
}

TEST_CASE("lucas known values") {
  CHECK(lucas(0) == 2);
  CHECK(lucas(1) == 1);
  CHECK(lucas(4) == 7);
  CHECK(lucas(11) == 199);
  CHECK(lucas(-3) == -4);
}

TEST_CASE("iterative oracle small values") {
  CHECK(fib_iter_oracle(0) == 0);
  CHECK(fib_iter_oracle(2) == 1);
  CHECK(fib_iter_oracle(13) == 233);
  CHECK(fib_iter_oracle(20) == 6765);
  CHECK_THROWS_AS(fib_iter_oracle(-2), std::invalid_argument);
}

TEST_CASE("fast doubling equals the iterative oracle for n <= 10^4") {
  BigNat prev = 0, cur = 1;
  for (FibIndex n = 0; n <= 10000; ++n) {
    const FibPair p = fib_pair(n);
    REQUIRE(p.lo == prev);
    REQUIRE(p.hi == cur);
    prev += cur;
    prev.swap(cur);
  }
}

TEST_CASE("recurrence holds through the fast path") {
  for (FibIndex n : {0LL, 1LL, 2LL, 17LL, 100LL, 999LL, 4321LL, 9998LL}) {
    const FibPair p = fib_pair(n);
    CHECK(p.lo + p.hi == fib_pair(n + 2).lo);
  }
}

TEST_CASE("negative-index reflection over -500..500") {
  const auto t = signed_table(-502, 502);
  const auto at = [&](FibIndex n) { return t[static_cast<size_t>(n + 502)]; };
  for (FibIndex n = -500; n <= 500; ++n) {
    REQUIRE(fib(n) == at(n));
    const BigInt expected = (n % 2 == 0) ? BigInt(-at(n)) : at(n);
    REQUIRE(fib(-n) == expected);
  }
}

TEST_CASE("lucas relations over -200..200") {
  for (FibIndex n = -200; n <= 200; ++n) {
    REQUIRE(lucas(n) == fib(n - 1) + fib(n + 1));
    REQUIRE(lucas(n) + lucas(n + 1) == lucas(n + 2));
  }
}

TEST_CASE("addition formula over the signed grid -100..100") {
  const auto t = signed_table(-202, 202);
  const auto at = [&](FibIndex n) { return t[static_cast<size_t>(n + 202)]; };
  for (FibIndex n = -100; n <= 100; ++n)
    for (FibIndex m = -100; m <= 100; ++m)
      REQUIRE(at(n + m) == at(n) * at(m + 1) + at(n - 1) * at(m));
}

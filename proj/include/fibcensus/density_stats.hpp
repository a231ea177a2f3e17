#pragma once

#include <stdexcept>
#include <string>

#include "fibcensus/bigint.hpp"
#include "fibcensus/certified_log.hpp"

namespace fibcensus {

// Thrown when precision escalation would exceed the configured bit cap
// before certifying the requested bound; carries the bound actually reached.
struct PrecisionCapExceeded : std::runtime_error {
  PrecisionCapExceeded(const std::string& msg, long bits, std::string achieved)
      : std::runtime_error(msg), bits_used(bits), achieved_bound(std::move(achieved)) {}
  long bits_used;
  std::string achieved_bound;
};

// Escalation cap in bits: FIBCENSUS_PRECISION_CAP from the environment, or
// 100000 by default.
long default_precision_cap();

// Certified decimal approximation of theta(a) = log a / log Phi. The floor
// part is taken from the exact Z[Phi] path (ell), never from rounding, and
// the enclosure is escalated until the fractional part is provably inside
// the open interval (0, 1) -- termination is guaranteed because theta is
// irrational for every integer a >= 2.
struct ThetaApprox {
  long long a = 0;
  int digits = 0;
  std::string value;         // decimal string, digits + 2 places
  std::string error_bound;   // certified: |true theta - value| <= error_bound
  long long floor_part = 0;  // = ell(a), exact
  std::string frac_part;     // theta - floor_part, same error bound
  long prec_bits = 0;
  certlog::Enclosure theta_enclosure;  // raw enclosures for exact checks
  certlog::Enclosure frac_enclosure;
};

ThetaApprox theta_approx(long long a, int digits, long max_bits = default_precision_cap());

// Empirical densities of the two interval classes over k in [0, N), against
// the theoretical densities 1 - <theta> and <theta>. A_N + B_N = N and
// ell*A_N + (ell+1)*B_N = rank(a^N) are enforced as exact identities.
struct DensityReport {
  long long a = 0;
  long long N = 0;
  long long ell = 0;
  long long A_N = 0;  // intervals with exactly ell Fibonacci numbers
  long long B_N = 0;  // intervals with exactly ell + 1
  std::string share_A;
  std::string share_B;
  std::string theta;
  std::string theta_err;
  std::string theoretical_A;
  std::string theoretical_B;
  std::string deviation;
  long long rank_h = 0;  // card(F ∩ [1, a^N)), exact
};

DensityReport density_report(long long a, long long N, int digits, int threads = 1,
                             long max_bits = default_precision_cap());

// E(X) = theta and sigma(X) = sqrt(<theta>(1 - <theta>)) for the two-point
// count distribution, both certified to 10^-digits.
struct ExpectedStats {
  long long a = 0;
  std::string expectation;
  std::string stddev;
  long prec_bits = 0;
  certlog::Enclosure theta_enclosure;
  certlog::Enclosure sigma_enclosure;
};

ExpectedStats expected_stats(long long a, int digits, long max_bits = default_precision_cap());

// Sample mean / population standard deviation of the counts over k < N,
// side by side with the certified expectation.
struct StatsReport {
  long long a = 0;
  long long N = 0;
  long long ell = 0;
  std::string expectation;
  std::string stddev;
  std::string empirical_mean;
  std::string empirical_std;
  long long count_sum = 0;
  long long count_sum_sq = 0;
};

StatsReport empirical_stats(long long a, long long N, int digits, int threads = 1,
                            long max_bits = default_precision_cap());

}  // namespace fibcensus

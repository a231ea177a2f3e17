#include "fibcensus/density_stats.hpp"

#include <cassert>
#include <cstdlib>
#include <stdexcept>

#include "fibcensus/rank_census.hpp"

namespace fibcensus {

using certlog::Enclosure;

namespace {

// "0.0000nnn" from an integer count of 10^-places units.
std::string format_units(const BigInt& n, int places) {
  assert(n >= 0);
  std::string digits = n.get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<size_t>(places), 1, '.');
  return digits;
}

// Exact rational A/N rendered with floor at `places` decimals.
std::string format_ratio(long long numer, long long denom, int places) {
  BigInt n = to_big(numer) * pow10(static_cast<unsigned long>(places));
  mpz_fdiv_q(n.get_mpz_t(), n.get_mpz_t(), to_big(denom).get_mpz_t());
  return format_units(n, places);
}

BigInt two_pow(long bits) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), BigInt(1).get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

// Enclosure width small enough that the rendered bound lands below
// 10^-digits with room for the decimal rounding step.
bool tight_enough(const Enclosure& e, int digits) {
  return 4 * e.width() * pow10(static_cast<unsigned long>(digits)) <= two_pow(e.prec);
}

struct CertifiedTheta {
  long long a = 0;
  int digits = 0;
  long prec = 0;
  long long floor_part = 0;
  Enclosure theta;
  Enclosure frac;
  Enclosure sigma;  // populated when requested
};

CertifiedTheta certify_theta(long long a, int digits, long max_bits, bool need_sigma) {
  if (a < 2) throw std::invalid_argument("theta: base must be an integer >= 2");
  if (digits < 1) throw std::invalid_argument("theta: digits must be >= 1");
  if (max_bits < 16) throw PrecisionCapExceeded("precision cap below minimum working precision",
                                                max_bits, "(none)");
  const long long floor_part = ell(a);

  long prec = std::min(64L, max_bits);
  for (;;) {
    CertifiedTheta c;
    c.a = a;
    c.digits = digits;
    c.prec = prec;
    c.floor_part = floor_part;
    c.theta = certlog::log_ratio(to_big(a), prec);
    c.frac = certlog::sub_int(c.theta, to_big(floor_part));

    bool ok = tight_enough(c.theta, digits) && c.frac.strictly_inside_unit();
    if (ok && need_sigma) {
      const Enclosure one_minus{two_pow(prec) - c.frac.hi, two_pow(prec) - c.frac.lo, prec};
      c.sigma = certlog::sqrt(certlog::mul(c.frac, one_minus));
      ok = tight_enough(c.sigma, digits);
    }
    if (ok) return c;

    if (prec >= max_bits) {
      const int places = digits + 2;
      throw PrecisionCapExceeded(
          "theta certification for a=" + std::to_string(a) + " needs more than " +
              std::to_string(max_bits) + " bits; achieved bound " +
              certlog::decimal_ceil(c.theta.width(), prec, places) + " at " +
              std::to_string(prec) + " bits",
          prec, certlog::decimal_ceil(c.theta.width(), prec, places));
    }
    prec = std::min(prec * 2, max_bits);
  }
}

// Certified bound on |true - rendered midpoint|: half the enclosure width,
// ceiled at `places` decimals, plus one unit for the rendering floor.
std::string error_bound_string(const Enclosure& e, int places) {
  BigInt n;
  // width at prec+1 scale is width/2 in value
  mpz_cdiv_q(n.get_mpz_t(), BigInt(e.width() * pow10(static_cast<unsigned long>(places))).get_mpz_t(),
             two_pow(e.prec + 1).get_mpz_t());
  return format_units(n + 1, places);
}

}  // namespace

long default_precision_cap() {
  if (const char* env = std::getenv("FIBCENSUS_PRECISION_CAP")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) return cap;
  }
  return 100000;
}

ThetaApprox theta_approx(long long a, int digits, long max_bits) {
  const CertifiedTheta c = certify_theta(a, digits, max_bits, false);
  const int places = digits + 2;
  ThetaApprox out;
  out.a = a;
  out.digits = digits;
  out.value = certlog::decimal_mid(c.theta, places);
  out.error_bound = error_bound_string(c.theta, places);
  out.floor_part = c.floor_part;
  out.frac_part = certlog::decimal_mid(c.frac, places);
  out.prec_bits = c.prec;
  out.theta_enclosure = c.theta;
  out.frac_enclosure = c.frac;
  return out;
}

DensityReport density_report(long long a, long long N, int digits, int threads, long max_bits) {
  if (N < 1) throw std::invalid_argument("density_report: N must be >= 1");
  const CertifiedTheta c = certify_theta(a, digits, max_bits, false);
  const long long l = c.floor_part;
  const CensusAggregate agg = census_aggregate_parallel(a, N, l, threads);
  if (!agg.violations.empty())
    throw std::logic_error("density_report: interval count outside {ell, ell+1}");

  DensityReport r;
  r.a = a;
  r.N = N;
  r.ell = l;
  auto it = agg.histogram.find(l);
  r.A_N = it == agg.histogram.end() ? 0 : it->second;
  it = agg.histogram.find(l + 1);
  r.B_N = it == agg.histogram.end() ? 0 : it->second;
  if (r.A_N + r.B_N != N)
    throw std::logic_error("density_report: class counts do not partition N");
  r.rank_h = rank(pow_int(to_big(a), static_cast<unsigned long>(N))).h;
  if (l * r.A_N + (l + 1) * r.B_N != r.rank_h)
    throw std::logic_error("density_report: rank identity violated");

  const int places = digits + 2;
  r.share_A = format_ratio(r.A_N, N, 6);
  r.share_B = format_ratio(r.B_N, N, 6);
  r.theta = certlog::decimal_mid(c.theta, places);
  r.theta_err = error_bound_string(c.theta, places);
  const Enclosure th_a{two_pow(c.prec) - c.frac.hi, two_pow(c.prec) - c.frac.lo, c.prec};
  r.theoretical_A = certlog::decimal_mid(th_a, places);
  r.theoretical_B = certlog::decimal_mid(c.frac, places);

  // deviation = |B/N - frac_mid|, exact; equals |A/N - (1 - frac_mid)|.
  const BigInt frac_mid2 = c.frac.lo + c.frac.hi;  // frac midpoint at prec+1
  BigInt num = to_big(r.B_N) * two_pow(c.prec + 1) - frac_mid2 * to_big(N);
  if (num < 0) num = -num;
  BigInt dev;
  mpz_cdiv_q(dev.get_mpz_t(),
             BigInt(num * pow10(static_cast<unsigned long>(places))).get_mpz_t(),
             BigInt(to_big(N) * two_pow(c.prec + 1)).get_mpz_t());
  r.deviation = format_units(dev, places);
  return r;
}

ExpectedStats expected_stats(long long a, int digits, long max_bits) {
  const CertifiedTheta c = certify_theta(a, digits, max_bits, true);
  const int places = digits + 2;
  ExpectedStats s;
  s.a = a;
  s.expectation = certlog::decimal_mid(c.theta, places);
  s.stddev = certlog::decimal_mid(c.sigma, places);
  s.prec_bits = c.prec;
  s.theta_enclosure = c.theta;
  s.sigma_enclosure = c.sigma;
  return s;
}

StatsReport empirical_stats(long long a, long long N, int digits, int threads, long max_bits) {
  if (N < 2) throw std::invalid_argument("empirical_stats: N must be >= 2");
  const ExpectedStats exp_stats = expected_stats(a, digits, max_bits);
  const long long l = ell(a);
  const CensusAggregate agg = census_aggregate_parallel(a, N, l, threads);

  StatsReport r;
  r.a = a;
  r.N = N;
  r.ell = l;
  r.expectation = exp_stats.expectation;
  r.stddev = exp_stats.stddev;
  r.count_sum = agg.count_sum;
  r.count_sum_sq = agg.count_sum_sq;
  r.empirical_mean = format_ratio(agg.count_sum, N, 6);
  // population std: sqrt(N*sum_sq - sum^2) / N, floored at 6 decimals
  const BigInt disc =
      to_big(N) * to_big(agg.count_sum_sq) - to_big(agg.count_sum) * to_big(agg.count_sum);
  assert(disc >= 0);
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), BigInt(disc * pow10(12)).get_mpz_t());
  BigInt std6;
  mpz_fdiv_q(std6.get_mpz_t(), root.get_mpz_t(), to_big(N).get_mpz_t());
  r.empirical_std = format_units(std6, 6);
  return r;
}

}  // namespace fibcensus

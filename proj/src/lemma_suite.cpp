#include "fibcensus/lemma_suite.hpp"

#include <algorithm>
#include <stdexcept>

#include "fibcensus/certified_log.hpp"
#include "fibcensus/fib_kernel.hpp"
#include "fibcensus/golden_exact.hpp"
#include "fibcensus/rank_census.hpp"

namespace fibcensus {

namespace {

// Contiguous F_lo..F_hi computed once; grid checkers index it instead of
// re-running fast doubling per point.
class FibTable {
 public:
  FibTable(FibIndex lo, FibIndex hi) : lo_(lo) {
    values_.resize(static_cast<size_t>(hi - lo + 1));
    values_[0] = fib(lo);
    if (values_.size() > 1) values_[1] = fib(lo + 1);
    for (size_t i = 2; i < values_.size(); ++i) values_[i] = values_[i - 2] + values_[i - 1];
  }
  const BigInt& operator[](FibIndex n) const { return values_[static_cast<size_t>(n - lo_)]; }
  BigInt lucas(FibIndex n) const { return (*this)[n - 1] + (*this)[n + 1]; }

 private:
  FibIndex lo_;
  std::vector<BigInt> values_;
};

CheckResult failure(CheckResult r, std::vector<long long> params, std::string detail) {
  r.pass = false;
  r.counterexample = std::move(params);
  r.detail = std::move(detail);
  return r;
}

std::string range_str(long long lo, long long hi) {
  return "[" + std::to_string(lo) + ", " + std::to_string(hi) + "]";
}

}  // namespace

CheckResult check_phi_bounds(long long n_max, Fault fault) {
  if (n_max < 1) throw std::invalid_argument("check_phi_bounds: n_max must be >= 1");
  CheckResult r;
  r.name = "phi_power_bounds";
  r.parameter_range = "n in " + range_str(1, n_max);
  const long long shift = fault == Fault::none ? 0 : 1;
  const FibTable f(-4, n_max + 1);
  for (long long n = 1; n <= n_max; ++n) {
    const GoldenInt value{f[n], 0};
    const GoldenInt lower{f[n - 3 + shift], f[n - 2 + shift]};  // Phi^(n-2+shift)
    const GoldenInt upper{f[n - 2 + shift], f[n - 1 + shift]};  // Phi^(n-1+shift)
    const int left = (value - lower).sign();
    const int right = (upper - value).sign();
    const bool left_ok = n >= 3 ? left > 0 : left >= 0;
    const bool right_ok = n >= 2 ? right > 0 : right >= 0;
    if (!left_ok || !right_ok)
      return failure(std::move(r), {n},
                     "power sandwich violated at n=" + std::to_string(n));
  }
  return r;
}

CheckResult check_doubling_ineq(long long n_lo, long long n_hi, Fault fault) {
  CheckResult r;
  r.name = "doubling_inequality";
  r.parameter_range = "n in " + range_str(n_lo, n_hi);
  const FibIndex t_lo = std::min(2 * n_lo - 1, n_lo - 1);
  const FibIndex t_hi = std::max(2 * n_hi - 1, n_hi);
  const FibTable f(t_lo, t_hi);
  for (long long n = n_lo; n <= n_hi; ++n) {
    const BigInt lhs = f[2 * n - 1];
    const BigInt sq_n = f[n] * f[n];
    const BigInt sq_prev = f[n - 1] * f[n - 1];
    const BigInt rhs = fault == Fault::none ? BigInt(sq_n + sq_prev) : BigInt(sq_n - sq_prev);
    if (lhs != rhs || lhs < sq_n)
      return failure(std::move(r), {n}, "doubling identity broken at n=" + std::to_string(n));
  }
  return r;
}

CheckResult check_fib_lucas_identity(long long n_lo, long long n_hi, long long m_lo,
                                     long long m_hi, Fault fault) {
  CheckResult r;
  r.name = "fib_lucas_identity";
  r.parameter_range = "n in " + range_str(n_lo, n_hi) + ", m in " + range_str(m_lo, m_hi);
  const FibIndex t_lo = std::min({n_lo + m_lo, n_lo - m_hi, m_lo - 1, n_lo});
  const FibIndex t_hi = std::max({n_hi + m_hi, n_hi - m_lo, m_hi + 1, n_hi});
  const FibTable f(t_lo, t_hi);
  for (long long m = m_lo; m <= m_hi; ++m) {
    const BigInt lm = f.lucas(m);
    // (-1)^(m+1); the fault flips it to (-1)^m
    const int unit = ((m % 2 == 0) == (fault != Fault::none)) ? 1 : -1;
    for (long long n = n_lo; n <= n_hi; ++n) {
      if (f[n + m] != f[n] * lm + unit * f[n - m])
        return failure(std::move(r), {n, m},
                       "Lucas addition identity broken at (n, m) = (" + std::to_string(n) +
                           ", " + std::to_string(m) + ")");
    }
  }
  return r;
}

CheckResult check_key_lemma(long long n_max, long long m_max, Fault fault) {
  if (n_max < 0 || m_max < 0) throw std::invalid_argument("check_key_lemma: negative range");
  CheckResult r;
  r.name = "key_floor_ceil_lemma";
  r.parameter_range = "n in [0, " + std::to_string(n_max) + "], m in [0, " + std::to_string(m_max) +
                      "], n >= m - 1, (n, m) != (0, 1)";
  const FibTable f(0, n_max + m_max + 1);
  for (long long m = 0; m <= m_max; ++m) {
    auto [flo, fhi] = floor_ceil_phi_pow(m);
    if (fault != Fault::none) std::swap(flo, fhi);
    for (long long n = std::max<long long>(0, m - 1); n <= n_max; ++n) {
      if (n == 0 && m == 1) continue;
      const BigInt& mid = f[n + m];
      if (f[n] * flo > mid || mid > f[n] * fhi)
        return failure(std::move(r), {n, m},
                       "floor/ceil sandwich broken at (n, m) = (" + std::to_string(n) + ", " +
                           std::to_string(m) + ")");
    }
  }
  // Hypothesis necessity: the excluded couple (0, 1) must really violate the
  // right-hand inequality (F_1 = 1 > F_0 * ceil(Phi) = 0).
  if (m_max >= 1) {
    const auto [flo1, fhi1] = floor_ceil_phi_pow(1);
    if (!(f[1] > f[0] * fhi1))
      return failure(std::move(r), {0, 1}, "excluded case (0, 1) unexpectedly satisfies the bound");
  }
  return r;
}

CheckResult check_asymptotic_count(const std::vector<BigNat>& x_values, Fault fault) {
  if (x_values.empty()) throw std::invalid_argument("check_asymptotic_count: no sample points");
  CheckResult r;
  r.name = "asymptotic_rank";
  r.parameter_range = std::to_string(x_values.size()) + " increasing values";
  constexpr long kPrec = 128;
  const certlog::Enclosure lphi = certlog::ln_phi(kPrec);
  BigInt prev_dist = -1;
  BigInt unit = 0;
  mpz_setbit(unit.get_mpz_t(), kPrec);
  for (size_t i = 0; i < x_values.size(); ++i) {
    const BigNat& x = x_values[i];
    if (x < 2 || (i > 0 && x <= x_values[i - 1]))
      throw std::invalid_argument("check_asymptotic_count: values must be increasing and >= 2");
    long long h = rank(x).h;
    if (fault != Fault::none) h += h / 8 + 1;
    // ratio = h / (ln x / ln Phi) = h * ln Phi / ln x, as a certified enclosure
    const BigInt hz = to_big(h);
    const certlog::Enclosure num{hz * lphi.lo, hz * lphi.hi, kPrec};
    const certlog::Enclosure ratio = certlog::div(num, certlog::ln_int(x, kPrec));
    const BigInt d_lo = abs(ratio.lo - unit);
    const BigInt d_hi = abs(ratio.hi - unit);
    const BigInt dist = std::max(d_lo, d_hi);
    if (prev_dist >= 0 && dist > prev_dist)
      return failure(std::move(r), {static_cast<long long>(i)},
                     "ratio distance from 1 not decreasing at sample " + std::to_string(i));
    if (i + 1 == x_values.size() && 20 * dist >= unit)
      return failure(std::move(r), {static_cast<long long>(i)},
                     "final ratio distance from 1 not below 0.05");
    prev_dist = dist;
  }
  return r;
}

CheckResult check_addition_formula(long long n_lo, long long n_hi, long long m_lo,
                                   long long m_hi, Fault fault) {
  CheckResult r;
  r.name = "addition_formula";
  r.parameter_range = "n in " + range_str(n_lo, n_hi) + ", m in " + range_str(m_lo, m_hi);
  const FibIndex t_lo = std::min({n_lo + m_lo, n_lo - 1, m_lo});
  const FibIndex t_hi = std::max({n_hi + m_hi, n_hi, m_hi + 1});
  const FibTable f(t_lo, t_hi);
  const int unit = fault == Fault::none ? 1 : -1;
  for (long long n = n_lo; n <= n_hi; ++n)
    for (long long m = m_lo; m <= m_hi; ++m)
      if (f[n + m] != f[n] * f[m + 1] + unit * f[n - 1] * f[m])
        return failure(std::move(r), {n, m},
                       "addition formula broken at (n, m) = (" + std::to_string(n) + ", " +
                           std::to_string(m) + ")");
  return r;
}

CheckResult check_honsberger(long long a_max, long long k_max, Fault fault) {
  if (a_max < 2) throw std::invalid_argument("check_honsberger: a_max must be >= 2");
  if (k_max < 0) throw std::invalid_argument("check_honsberger: k_max must be >= 0");
  CheckResult r;
  r.name = "honsberger_bound";
  r.parameter_range = "a in " + range_str(2, a_max) + ", k in " + range_str(0, k_max);
  for (long long a = 2; a <= a_max; ++a) {
    const long long l = ell(a);
    const long long sharp = fault == Fault::none ? l + 1 : l;  // fault drops the +1
    if (l + 1 > a)
      return failure(std::move(r), {a, -1}, "ell(a) + 1 exceeds a at a=" + std::to_string(a));
    CensusStream stream(a);
    for (long long k = 0; k <= k_max; ++k) {
      const CensusRecord rec = stream.next();
      if (rec.count > sharp || rec.count > a)
        return failure(std::move(r), {a, k},
                       "count " + std::to_string(rec.count) + " exceeds bound at (a, k) = (" +
                           std::to_string(a) + ", " + std::to_string(k) + ")");
    }
  }
  return r;
}

std::vector<BigNat> LemmaRanges::default_asymptotic_xs() {
  // Ranks at power-of-ten sample points chosen so the certified distance
  // sequence is strictly decreasing (integer rank jitter makes that false
  // for some progressions, e.g. 10^6 -> 10^12 ties exactly).
  return {pow10(3), pow10(6), pow10(9), pow10(24)};
}

std::vector<CheckResult> run_all_checks(const LemmaRanges& ranges, Fault fault) {
  std::vector<CheckResult> results;
  results.push_back(check_phi_bounds(ranges.phi_n_max, fault));
  results.push_back(check_doubling_ineq(ranges.grid_lo, ranges.grid_hi, fault));
  results.push_back(check_fib_lucas_identity(ranges.grid_lo, ranges.grid_hi, ranges.grid_lo,
                                             ranges.grid_hi, fault));
  results.push_back(check_key_lemma(ranges.key_n_max, ranges.key_m_max, fault));
  results.push_back(check_asymptotic_count(ranges.asymptotic_xs, fault));
  results.push_back(check_addition_formula(ranges.grid_lo, ranges.grid_hi, ranges.grid_lo,
                                           ranges.grid_hi, fault));
  results.push_back(check_honsberger(ranges.hons_a_max, ranges.hons_k_max, fault));
  return results;
}

}  // namespace fibcensus

#include "fibcensus/rank_census.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <utility>

#include "fibcensus/fib_kernel.hpp"
#include "fibcensus/golden_exact.hpp"

namespace fibcensus {

namespace {

constexpr double kLogPhi = 0.48121182505960347;
constexpr double kLogSqrt5 = 0.80471895621705020;

void check_base(long long a) {
  if (a < 2) throw std::invalid_argument("base must be an integer >= 2");
}

BigNat power_of_base(long long a, long long k) {
  if (k < 0) throw std::invalid_argument("exponent must be nonnegative");
  return pow_int(to_big(a), static_cast<unsigned long>(k));
}

}  // namespace

Rank rank(const BigNat& x) {
  if (x < 1) throw std::invalid_argument("rank: defined on [1, oo) only");
  // Binet-based first guess for the witness index, then exact correction.
  const double est = (log_approx(x) + kLogSqrt5) / kLogPhi;
  FibIndex j = std::max<FibIndex>(2, static_cast<FibIndex>(est) - 2);
  FibPair fp = fib_pair(j);
  BigNat cur = std::move(fp.lo);   // F_j
  BigNat nxt = std::move(fp.hi);   // F_{j+1}
  while (cur < x) {                // ensure F_j >= x
    cur += nxt;
    cur.swap(nxt);
    ++j;
  }
  while (j > 2) {                  // ensure j minimal
    BigNat prev = nxt - cur;       // F_{j-1}
    if (prev < x) break;
    nxt = std::move(cur);
    cur = std::move(prev);
    --j;
  }
  return Rank{x, j - 2, j};
}

long long count_interval(const BigNat& lo, const BigNat& hi) {
  if (lo < 1) throw std::invalid_argument("count_interval: lower bound must be >= 1");
  if (hi < lo) throw std::invalid_argument("count_interval: empty-range bounds out of order");
  return rank(hi).h - rank(lo).h;
}

long long ell(const BigNat& a) {
  if (a < 2) throw std::invalid_argument("ell: base must be an integer >= 2");
  const double est = log_approx(a) / kLogPhi;
  long long l = std::max(1LL, static_cast<long long>(est) - 2);
  while (l > 1 && cmp_int_phi_pow(a, l) == std::strong_ordering::less) --l;
  while (cmp_int_phi_pow(a, l + 1) != std::strong_ordering::less) ++l;
  return l;
}

CensusRecord census(long long a, long long k) {
  check_base(a);
  const BigNat lo = power_of_base(a, k);
  return CensusRecord{a, k, count_interval(lo, BigNat(lo * static_cast<long>(a)))};
}

CensusStream::CensusStream(long long a, long long k_start) : a_(a), k_(k_start) {
  check_base(a);
  const BigNat lo = power_of_base(a, k_start);
  boundary_ = lo * static_cast<long>(a);
  const Rank r = rank(lo);  // witness = smallest Fibonacci value >= lo
  FibPair fp = fib_pair(r.witness_index);
  value_ = std::move(fp.lo);
  next_ = std::move(fp.hi);
}

CensusRecord CensusStream::next() {
  long long c = 0;
  while (value_ < boundary_) {
    ++c;
    value_ += next_;
    value_.swap(next_);
  }
  CensusRecord rec{a_, k_, c};
  ++k_;
  boundary_ *= static_cast<long>(a_);
  return rec;
}

std::vector<CensusRecord> census_stream(long long a, long long count) {
  if (count < 1) throw std::invalid_argument("census_stream: need at least one interval");
  CensusStream stream(a);
  std::vector<CensusRecord> records;
  records.reserve(static_cast<size_t>(count));
  for (long long k = 0; k < count; ++k) records.push_back(stream.next());
  return records;
}

CensusAggregate census_aggregate(long long a, long long k_begin, long long k_end,
                                 long long expected_lo, bool keep_records) {
  if (k_begin < 0 || k_end < k_begin)
    throw std::invalid_argument("census_aggregate: bad k range");
  CensusAggregate agg;
  agg.a = a;
  agg.k_begin = k_begin;
  agg.k_end = k_end;
  CensusStream stream(a, k_begin);
  for (long long k = k_begin; k < k_end; ++k) {
    const CensusRecord rec = stream.next();
    ++agg.histogram[rec.count];
    agg.count_sum += rec.count;
    agg.count_sum_sq += rec.count * rec.count;
    if (rec.count != expected_lo && rec.count != expected_lo + 1)
      agg.violations.push_back(rec);
    if (keep_records) agg.records.push_back(rec);
  }
  return agg;
}

CensusAggregate census_aggregate_parallel(long long a, long long count, long long expected_lo,
                                          int threads, bool keep_records) {
  check_base(a);
  if (count < 1) throw std::invalid_argument("census_aggregate_parallel: need >= 1 interval");
  const long long workers = std::max(1LL, std::min<long long>(threads, count));
  if (workers == 1) return census_aggregate(a, 0, count, expected_lo, keep_records);

  std::vector<CensusAggregate> parts(static_cast<size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  const long long chunk = count / workers;
  const long long rest = count % workers;
  long long begin = 0;
  for (long long w = 0; w < workers; ++w) {
    const long long end = begin + chunk + (w < rest ? 1 : 0);
    pool.emplace_back([&parts, w, a, begin, end, expected_lo, keep_records] {
      parts[static_cast<size_t>(w)] = census_aggregate(a, begin, end, expected_lo, keep_records);
    });
    begin = end;
  }
  for (auto& t : pool) t.join();

  CensusAggregate merged;
  merged.a = a;
  merged.k_begin = 0;
  merged.k_end = count;
  for (const auto& part : parts) {  // parts are in k order; merging is exact
    for (const auto& [c, n] : part.histogram) merged.histogram[c] += n;
    merged.violations.insert(merged.violations.end(), part.violations.begin(),
                             part.violations.end());
    merged.count_sum += part.count_sum;
    merged.count_sum_sq += part.count_sum_sq;
    merged.records.insert(merged.records.end(), part.records.begin(), part.records.end());
  }
  return merged;
}

TheoremReport verify_theorem(long long a, long long count, int threads, bool keep_records) {
  check_base(a);
  if (count < 1) throw std::invalid_argument("verify_theorem: need at least one interval");
  const long long l = ell(a);
  CensusAggregate agg = census_aggregate_parallel(a, count, l, threads, keep_records);
  TheoremReport report;
  report.a = a;
  report.intervals = count;
  report.ell = l;
  report.histogram = std::move(agg.histogram);
  report.violations = std::move(agg.violations);
  report.records = std::move(agg.records);
  report.all_pass = report.violations.empty();
  return report;
}

}  // namespace fibcensus

#pragma once

#include <map>
#include <vector>

#include "fibcensus/bigint.hpp"

namespace fibcensus {

// Rank of x: the number h of distinct Fibonacci values in [1, x), together
// with the witness index j = h + 2 of the smallest Fibonacci value >= x.
// For x >= 2 the bracketing F_{h+1} < x <= F_{h+2} holds; h = 0 iff x = 1.
// The duplicate F_1 = F_2 = 1 is counted once (Fibonacci numbers form a set),
// and 0 is never counted since rank is defined on [1, oo).
struct Rank {
  BigNat x;
  long long h = 0;
  FibIndex witness_index = 2;
};

Rank rank(const BigNat& x);  // requires x >= 1

// Number of distinct Fibonacci values in [lo, hi); requires 1 <= lo <= hi.
long long count_interval(const BigNat& lo, const BigNat& hi);

// The unique l >= 1 with Phi^l <= a < Phi^(l+1), for an integer a >= 2.
// Decided purely by exact comparisons in Z[Phi]; no floating point result
// is ever trusted (a double only seeds the search position).
long long ell(const BigNat& a);
inline long long ell(long long a) { return ell(to_big(a)); }

// Exact count of Fibonacci values in [a^k, a^(k+1)).
struct CensusRecord {
  long long a = 0;
  long long k = 0;
  long long count = 0;
  friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

CensusRecord census(long long a, long long k);

// Forward streaming census: one pass over the Fibonacci sequence, advancing
// the power boundary by a single small multiplication per interval. May be
// constructed at an arbitrary starting k, so disjoint k-chunks can run in
// parallel and be recombined exactly.
class CensusStream {
 public:
  explicit CensusStream(long long a, long long k_start = 0);
  CensusRecord next();
  long long base() const { return a_; }
  long long k() const { return k_; }

 private:
  long long a_;
  long long k_;
  BigNat boundary_;  // a^(k_+1)
  BigNat value_;     // smallest distinct Fibonacci value not yet assigned
  BigNat next_;      // its successor
};

std::vector<CensusRecord> census_stream(long long a, long long count);

// Per-interval census aggregated over k in [k_begin, k_end): histogram of
// counts, violations of the expected {expected_lo, expected_lo + 1} pair,
// and power sums of the counts for statistics.
struct CensusAggregate {
  long long a = 0;
  long long k_begin = 0;
  long long k_end = 0;
  std::map<long long, long long> histogram;
  std::vector<CensusRecord> violations;
  long long count_sum = 0;
  long long count_sum_sq = 0;
  std::vector<CensusRecord> records;  // populated only when requested
};

CensusAggregate census_aggregate(long long a, long long k_begin, long long k_end,
                                 long long expected_lo, bool keep_records = false);

// Same result as census_aggregate(a, 0, count, expected_lo), computed on up
// to `threads` workers over disjoint k-chunks. Merging is exact integer
// addition, so the result is identical for any thread count.
CensusAggregate census_aggregate_parallel(long long a, long long count, long long expected_lo,
                                          int threads, bool keep_records = false);

// Dichotomy verification: every interval count must equal ell(a) or
// ell(a) + 1. A non-empty violation list signals an implementation bug.
struct TheoremReport {
  long long a = 0;
  long long intervals = 0;
  long long ell = 0;
  bool all_pass = false;
  std::map<long long, long long> histogram;
  std::vector<CensusRecord> violations;
  std::vector<CensusRecord> records;  // populated only when requested
};

TheoremReport verify_theorem(long long a, long long count, int threads = 1,
                             bool keep_records = false);

}  // namespace fibcensus

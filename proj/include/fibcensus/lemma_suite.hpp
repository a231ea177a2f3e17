#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fibcensus/bigint.hpp"

namespace fibcensus {

// Outcome of one lemma checker. pass == false always comes with the
// parameter tuple of the first counterexample, so the failure can be
// re-evaluated independently.
struct CheckResult {
  std::string name;
  std::string parameter_range;
  bool pass = true;
  std::optional<std::vector<long long>> counterexample;
  std::string detail;
};

// Fault::corrupt flips one sign / offset inside the identity a checker
// verifies. Used by the mutation harness to demonstrate that every checker
// actually detects a broken identity and reports a counterexample; it is
// never part of a real verification run.
enum class Fault { none, corrupt };

// Phi^(n-2) <= F_n <= Phi^(n-1) for n in [1, n_max], strict on the left for
// n >= 3 and on the right for n >= 2. Exact comparison in Z[Phi].
CheckResult check_phi_bounds(long long n_max, Fault fault = Fault::none);

// F_{2n-1} = F_n^2 + F_{n-1}^2 (hence F_{2n-1} >= F_n^2) over a signed range.
CheckResult check_doubling_ineq(long long n_lo, long long n_hi, Fault fault = Fault::none);

// F_{n+m} = F_n L_m + (-1)^(m+1) F_{n-m} over a signed grid.
CheckResult check_fib_lucas_identity(long long n_lo, long long n_hi, long long m_lo,
                                     long long m_hi, Fault fault = Fault::none);

// F_n floor(Phi^m) <= F_{n+m} <= F_n ceil(Phi^m) for 0 <= n <= n_max,
// 0 <= m <= m_max under the hypotheses n >= m - 1 and (n, m) != (0, 1); also
// confirms the excluded case (0, 1) really violates the right inequality.
CheckResult check_key_lemma(long long n_max, long long m_max, Fault fault = Fault::none);

// rank(x) ~ log x / log Phi: the certified ratio distance from 1 must
// decrease along the given increasing values and end below 0.05.
CheckResult check_asymptotic_count(const std::vector<BigNat>& x_values,
                                   Fault fault = Fault::none);

// F_{n+m} = F_n F_{m+1} + F_{n-1} F_m over a signed grid.
CheckResult check_addition_formula(long long n_lo, long long n_hi, long long m_lo,
                                   long long m_hi, Fault fault = Fault::none);

// census(a, k).count <= ell(a) + 1 <= a for a in [2, a_max], k in [0, k_max].
CheckResult check_honsberger(long long a_max, long long k_max, Fault fault = Fault::none);

struct LemmaRanges {
  long long phi_n_max = 2000;
  long long grid_lo = -200;
  long long grid_hi = 200;
  long long key_n_max = 300;
  long long key_m_max = 300;
  long long hons_a_max = 100;
  long long hons_k_max = 200;
  std::vector<BigNat> asymptotic_xs = default_asymptotic_xs();

  static std::vector<BigNat> default_asymptotic_xs();
};

std::vector<CheckResult> run_all_checks(const LemmaRanges& ranges = {},
                                        Fault fault = Fault::none);

}  // namespace fibcensus

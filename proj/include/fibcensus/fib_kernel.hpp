#pragma once

#include "fibcensus/bigint.hpp"

namespace fibcensus {

// Consecutive Fibonacci values (F_n, F_{n+1}) at a nonnegative index.
struct FibPair {
  FibIndex n = 0;
  BigNat lo;  // F_n
  BigNat hi;  // F_{n+1}
};

// (F_n, F_{n+1}) by fast doubling: O(log n) big-integer multiplications,
// applying F_{2k} = F_k(2F_{k+1} - F_k) and F_{2k+1} = F_k^2 + F_{k+1}^2
// top-down over the binary expansion of n. Requires n >= 0.
FibPair fib_pair(FibIndex n);

// F_n for any integer n, negative indices via F_{-n} = (-1)^{n+1} F_n.
BigInt fib(FibIndex n);

// L_n = F_{n-1} + F_{n+1} for any integer n.
BigInt lucas(FibIndex n);

// F_n by sequential addition. Test oracle for fib_pair; intended for
// n up to ~1e5. Requires n >= 0.
BigNat fib_iter_oracle(FibIndex n);

}  // namespace fibcensus

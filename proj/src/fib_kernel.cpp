#include "fibcensus/fib_kernel.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace fibcensus {

double log_approx(const BigNat& x) {
  signed long exp2;
  double mant = mpz_get_d_2exp(&exp2, x.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

FibPair fib_pair(FibIndex n) {
  if (n < 0) throw std::invalid_argument("fib_pair: index must be nonnegative");
  BigNat a = 0, b = 1;  // (F_0, F_1)
  if (n > 0) {
    const auto un = static_cast<unsigned long long>(n);
    const int top = std::bit_width(un) - 1;
    BigNat t, u;
    for (int i = top; i >= 0; --i) {
      // (a, b) = (F_k, F_{k+1})  ->  (F_2k, F_2k+1)
      t = a * (2 * b - a);
      u = a * a + b * b;
      if ((un >> i) & 1ULL) {
        a = u;
        b = t + u;  // F_{2k+2} = F_{2k} + F_{2k+1}
      } else {
        a = t;
        b = u;
      }
    }
  }
  return FibPair{n, std::move(a), std::move(b)};
}

BigInt fib(FibIndex n) {
  if (n >= 0) return fib_pair(n).lo;
  const FibIndex k = -n;
  BigInt f = fib_pair(k).lo;
  return (k % 2 == 0) ? BigInt(-f) : f;  // F_{-k} = (-1)^{k+1} F_k
}

BigInt lucas(FibIndex n) { return fib(n - 1) + fib(n + 1); }

BigNat fib_iter_oracle(FibIndex n) {
  if (n < 0) throw std::invalid_argument("fib_iter_oracle: index must be nonnegative");
  BigNat prev = 0, cur = 1;
  for (FibIndex i = 0; i < n; ++i) {
    prev += cur;
    prev.swap(cur);
  }
  return prev;
}

}  // namespace fibcensus

#include "fibcensus/golden_exact.hpp"

#include <cassert>
#include <stdexcept>

#include "fibcensus/fib_kernel.hpp"

namespace fibcensus {

int GoldenInt::sign() const {
  const BigInt u = 2 * p + q;
  const BigInt& v = q;
  const int su = sgn(u);
  const int sv = sgn(v);
  if (su == sv) return su;
  if (su == 0) return sv;
  if (sv == 0) return su;
  // Opposite signs: compare |u| with |v|*sqrt(5) by squaring.
  const int s = sgn(u * u - 5 * v * v);
  // s == 0 would mean u^2 = 5 v^2 with u, v nonzero, impossible over Z.
  assert(s != 0);
  return su * s;
}

GoldenInt phi_pow(FibIndex m) { return {fib(m - 1), fib(m)}; }

GoldenInt phi_bar_pow(FibIndex m) { return {fib(m + 1), -fib(m)}; }

std::pair<BigInt, BigInt> floor_ceil_phi_pow(FibIndex m) {
  if (m < 0) throw std::invalid_argument("floor_ceil_phi_pow: exponent must be nonnegative");
  if (m == 0) return {1, 1};
  BigInt lm = lucas(m);
  if (m % 2 == 0) return {lm - 1, std::move(lm)};  // Phi^m in (L_m - 1, L_m)
  return {lm, lm + 1};                             // Phi^m in (L_m, L_m + 1)
}

std::strong_ordering cmp_int_phi_pow(const BigNat& x, FibIndex m) {
  if (x < 1) throw std::invalid_argument("cmp_int_phi_pow: x must be positive");
  if (m < 0) throw std::invalid_argument("cmp_int_phi_pow: exponent must be nonnegative");
  const FibPair fp = fib_pair(m);
  const BigInt f_prev = fp.hi - fp.lo;       // F_{m-1}
  const GoldenInt diff{x - f_prev, -fp.lo};  // (x, 0) - Phi^m
  const int s = diff.sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace fibcensus

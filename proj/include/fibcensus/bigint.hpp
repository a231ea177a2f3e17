#pragma once

#include <gmpxx.h>

#include <string>

namespace fibcensus {

// Arbitrary-precision integers. BigNat is a BigInt that is nonnegative by
// convention; the distinction is semantic, both are backed by GMP.
using BigInt = mpz_class;
using BigNat = mpz_class;

// Signed sequence index. Values at indices beyond the int64 range are far
// outside anything representable, so a fixed-width index is not a practical
// restriction.
using FibIndex = long long;

inline int sgn(const BigInt& v) { return mpz_sgn(v.get_mpz_t()); }

// GMP's C++ wrapper has no long long constructor; go through long (LP64).
static_assert(sizeof(long) == sizeof(long long), "index conversions assume an LP64 ABI");
inline BigInt to_big(long long v) { return BigInt(static_cast<long>(v)); }

inline BigNat pow_int(const BigNat& base, unsigned long exponent) {
  BigNat r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

inline BigNat pow10(unsigned long exponent) { return pow_int(10, exponent); }

// Natural log of a positive integer, double precision. Safe for values far
// beyond double range (mantissa and exponent are split off first). Used for
// index estimation only, never on a correctness path.
double log_approx(const BigNat& x);

}  // namespace fibcensus

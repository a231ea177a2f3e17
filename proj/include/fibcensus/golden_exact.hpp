#pragma once

#include <compare>
#include <utility>

#include "fibcensus/bigint.hpp"

namespace fibcensus {

// Element p + q*Phi of the ring Z[Phi], Phi = (1+sqrt(5))/2. The
// representation is unique (1 and Phi are linearly independent over Q), and
// the sign of the represented real number is decidable in exact integer
// arithmetic, so Z[Phi] carries a total order.
struct GoldenInt {
  BigInt p;
  BigInt q;

  GoldenInt() = default;
  GoldenInt(BigInt p_, BigInt q_) : p(std::move(p_)), q(std::move(q_)) {}

  // Sign of the real number p + q*Phi: rewrite as u + v*sqrt(5) with
  // u = 2p + q, v = q; when u and v disagree in sign the order is decided by
  // one integer squaring (u^2 vs 5 v^2).
  int sign() const;

  friend GoldenInt operator+(const GoldenInt& a, const GoldenInt& b) {
    return {a.p + b.p, a.q + b.q};
  }
  friend GoldenInt operator-(const GoldenInt& a, const GoldenInt& b) {
    return {a.p - b.p, a.q - b.q};
  }
  friend GoldenInt operator-(const GoldenInt& a) { return {-a.p, -a.q}; }
  // (p1 + q1 Phi)(p2 + q2 Phi) with Phi^2 = Phi + 1 folded in.
  friend GoldenInt operator*(const GoldenInt& a, const GoldenInt& b) {
    return {a.p * b.p + a.q * b.q, a.p * b.q + a.q * b.p + a.q * b.q};
  }
  friend bool operator==(const GoldenInt& a, const GoldenInt& b) {
    return a.p == b.p && a.q == b.q;
  }
  friend std::strong_ordering operator<=>(const GoldenInt& a, const GoldenInt& b) {
    const int s = (a - b).sign();
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
};

// Phi^m = F_{m-1} + F_m * Phi, exact for any integer m.
GoldenInt phi_pow(FibIndex m);

// Conjugate power: (1 - Phi)^m = F_{m+1} - F_m * Phi.
GoldenInt phi_bar_pow(FibIndex m);

// (floor(Phi^m), ceil(Phi^m)) for m >= 0, via the Lucas parity cases:
// m = 0 -> (1, 1); even m >= 2 -> (L_m - 1, L_m); odd m -> (L_m, L_m + 1).
std::pair<BigInt, BigInt> floor_ceil_phi_pow(FibIndex m);

// Exact ordering of a positive integer x against Phi^m (m >= 0).
// Equality occurs only at (x, m) = (1, 0).
std::strong_ordering cmp_int_phi_pow(const BigNat& x, FibIndex m);

}  // namespace fibcensus

#pragma once

#include <string>

#include "fibcensus/bigint.hpp"

namespace fibcensus::certlog {

// Certified enclosure of a real value: the true value lies in
// [lo, hi] * 2^-prec. All operations round outward, so enclosures are
// preserved under arbitrary composition; no floating point is involved.
struct Enclosure {
  BigInt lo;
  BigInt hi;
  long prec = 0;

  BigInt width() const { return hi - lo; }
  // width <= 10^-pow10, decided exactly.
  bool width_at_most(int pow10) const;
  // true value provably inside the open interval (0, 1).
  bool strictly_inside_unit(void) const;
};

Enclosure from_int(const BigInt& v, long prec);

Enclosure add(const Enclosure& a, const Enclosure& b);
Enclosure sub(const Enclosure& a, const Enclosure& b);
// Multiplication / division for nonnegative enclosures (all uses here are
// positive quantities); div requires b.lo > 0.
Enclosure mul(const Enclosure& a, const Enclosure& b);
Enclosure div(const Enclosure& a, const Enclosure& b);
// Square root of a nonnegative enclosure.
Enclosure sqrt(const Enclosure& a);
// Exact shift of an enclosure by an integer: value - k.
Enclosure sub_int(const Enclosure& a, const BigInt& k);

// ln 2 at the given precision (via 2*atanh(1/3) with a rigorous tail bound).
Enclosure ln2(long prec);
// ln x for an exact integer x >= 1.
Enclosure ln_int(const BigNat& x, long prec);
// Golden ratio (1+sqrt(5))/2 and its log.
Enclosure phi(long prec);
Enclosure ln_phi(long prec);
// theta(a) = ln a / ln Phi for an integer a >= 2.
Enclosure log_ratio(const BigNat& a, long prec);

// Decimal rendering of scaled/2^prec (scaled >= 0) with a fixed number of
// fractional places; floor and ceil variants. Output is locale-independent
// and platform-identical.
std::string decimal_floor(const BigInt& scaled, long prec, int places);
std::string decimal_ceil(const BigInt& scaled, long prec, int places);
// Midpoint of an enclosure rendered with floor at `places` decimals.
std::string decimal_mid(const Enclosure& e, int places);

}  // namespace fibcensus::certlog

#include "fibcensus/certified_log.hpp"

#include <cassert>
#include <stdexcept>

namespace fibcensus::certlog {

namespace {

BigInt fdiv(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt cdiv(const BigInt& n, const BigInt& d) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

BigInt shift_left(const BigInt& v, long bits) {
  BigInt r;
  mpz_mul_2exp(r.get_mpz_t(), v.get_mpz_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

BigInt unit(long prec) { return shift_left(1, prec); }

BigInt isqrt(const BigInt& v) {
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  return r;
}

// atanh(z/2^prec)*2^prec with directed rounding; z must satisfy
// 0 <= z/2^prec <= 0.4 so the geometric tail factor 1/(1-z^2) stays below 2.
// upper=false: every operation floors and the tail is dropped, so the result
// is a lower bound. upper=true: every operation ceils and 2*u covers the
// dropped tail, so the result is an upper bound.
BigInt atanh_directed(const BigInt& z, long prec, bool upper) {
  assert(z >= 0);
  assert(5 * z <= 2 * unit(prec));
  const BigInt one = unit(prec);
  const BigInt zsq = upper ? cdiv(z * z, one) : fdiv(z * z, one);
  BigInt acc = 0;
  BigInt u = z;  // bound on z^(2j+1) * 2^prec, directed per mode
  for (long long j = 0;; ++j) {
    const BigInt term_den = to_big(2 * j + 1);
    acc += upper ? cdiv(u, term_den) : fdiv(u, term_den);
    u = upper ? cdiv(u * zsq, one) : fdiv(u * zsq, one);
    if (!upper) {
      if (u == 0) break;
    } else if (u <= 4) {
      acc += 2 * u;  // remaining tail <= u/(1-z^2) <= 2u ulps
      break;
    }
  }
  return acc;
}

}  // namespace

bool Enclosure::width_at_most(int pow10) const {
  return width() * pow_int(10, static_cast<unsigned long>(pow10)) <= unit(prec);
}

bool Enclosure::strictly_inside_unit() const { return lo > 0 && hi < unit(prec); }

Enclosure from_int(const BigInt& v, long prec) {
  BigInt s = shift_left(v, prec);
  return {s, s, prec};
}

Enclosure add(const Enclosure& a, const Enclosure& b) {
  assert(a.prec == b.prec);
  return {a.lo + b.lo, a.hi + b.hi, a.prec};
}

Enclosure sub(const Enclosure& a, const Enclosure& b) {
  assert(a.prec == b.prec);
  return {a.lo - b.hi, a.hi - b.lo, a.prec};
}

Enclosure mul(const Enclosure& a, const Enclosure& b) {
  assert(a.prec == b.prec);
  assert(a.lo >= 0 && b.lo >= 0);
  const BigInt one = unit(a.prec);
  return {fdiv(a.lo * b.lo, one), cdiv(a.hi * b.hi, one), a.prec};
}

Enclosure div(const Enclosure& a, const Enclosure& b) {
  assert(a.prec == b.prec);
  assert(a.lo >= 0 && b.lo > 0);
  return {fdiv(shift_left(a.lo, a.prec), b.hi), cdiv(shift_left(a.hi, a.prec), b.lo), a.prec};
}

Enclosure sqrt(const Enclosure& a) {
  assert(a.lo >= 0);
  BigInt lo = isqrt(shift_left(a.lo, a.prec));
  BigInt hi = isqrt(shift_left(a.hi, a.prec));
  if (hi * hi < shift_left(a.hi, a.prec)) ++hi;
  return {std::move(lo), std::move(hi), a.prec};
}

Enclosure sub_int(const Enclosure& a, const BigInt& k) {
  const BigInt s = shift_left(k, a.prec);
  return {a.lo - s, a.hi - s, a.prec};
}

Enclosure ln2(long prec) {
  // ln 2 = 2 * atanh(1/3); 1/3 is not dyadic, so the endpoints differ by one ulp.
  const BigInt z_lo = fdiv(unit(prec), 3);
  const BigInt z_hi = z_lo + 1;
  return {2 * atanh_directed(z_lo, prec, false), 2 * atanh_directed(z_hi, prec, true), prec};
}

Enclosure ln_int(const BigNat& x, long prec) {
  if (x < 1) throw std::invalid_argument("ln_int: argument must be >= 1");
  if (x == 1) return {0, 0, prec};
  const long e = static_cast<long>(mpz_sizeinbase(x.get_mpz_t(), 2)) - 1;
  // y = x / 2^e in [1, 2); dyadic, so exact when prec >= e.
  Enclosure y{0, 0, prec};
  if (prec >= e) {
    y.lo = shift_left(x, prec - e);
    y.hi = y.lo;
  } else {
    y.lo = fdiv(x, shift_left(1, e - prec));
    y.hi = y.lo + 1;
  }
  const BigInt one = unit(prec);
  const BigInt z_lo = fdiv(shift_left(y.lo - one, prec), y.hi + one);
  const BigInt z_hi = cdiv(shift_left(y.hi - one, prec), y.lo + one);
  const Enclosure l2 = ln2(prec);
  return {e * l2.lo + 2 * atanh_directed(z_lo, prec, false),
          e * l2.hi + 2 * atanh_directed(z_hi, prec, true), prec};
}

Enclosure phi(long prec) {
  const BigInt s = isqrt(shift_left(5, 2 * prec));  // floor(sqrt(5) * 2^prec)
  const BigInt one = unit(prec);
  return {fdiv(one + s, 2), cdiv(one + s + 1, 2), prec};
}

Enclosure ln_phi(long prec) {
  const Enclosure y = phi(prec);
  const BigInt one = unit(prec);
  const BigInt z_lo = fdiv(shift_left(y.lo - one, prec), y.hi + one);
  const BigInt z_hi = cdiv(shift_left(y.hi - one, prec), y.lo + one);
  return {2 * atanh_directed(z_lo, prec, false), 2 * atanh_directed(z_hi, prec, true), prec};
}

Enclosure log_ratio(const BigNat& a, long prec) {
  if (a < 2) throw std::invalid_argument("log_ratio: base must be >= 2");
  return div(ln_int(a, prec), ln_phi(prec));
}

std::string decimal_floor(const BigInt& scaled, long prec, int places) {
  assert(scaled >= 0);
  assert(places >= 1);
  const BigInt n = fdiv(scaled * pow10(static_cast<unsigned long>(places)), unit(prec));
  std::string digits = n.get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<size_t>(places), 1, '.');
  return digits;
}

std::string decimal_ceil(const BigInt& scaled, long prec, int places) {
  assert(scaled >= 0);
  const BigInt one = unit(prec);
  const BigInt n = cdiv(scaled * pow10(static_cast<unsigned long>(places)), one);
  std::string digits = n.get_str();
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<size_t>(places) + 1 - digits.size(), '0');
  digits.insert(digits.size() - static_cast<size_t>(places), 1, '.');
  return digits;
}

std::string decimal_mid(const Enclosure& e, int places) {
  // (lo + hi) is the midpoint at prec + 1 bits; no halving needed.
  return decimal_floor(e.lo + e.hi, e.prec + 1, places);
}

}  // namespace fibcensus::certlog

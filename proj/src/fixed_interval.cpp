#include "fixed_interval.hpp"

#include <algorithm>

namespace heig {

FixedInterval::FixedInterval(FixedPoint lo, FixedPoint hi)
    : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_.frac_bits() != hi_.frac_bits())
    throw PrecisionMismatch(lo_.frac_bits(), hi_.frac_bits());
  if (lo_.mantissa() > hi_.mantissa())
    throw MalformedInput("interval bounds out of order");
}

FixedInterval FixedInterval::enclose(const mpz_class& mantissa,
                                     long src_frac_bits, long frac_bits) {
  if (frac_bits >= src_frac_bits) {
    mpz_class m;
    mpz_mul_2exp(m.get_mpz_t(), mantissa.get_mpz_t(),
                 frac_bits - src_frac_bits);
    FixedPoint v(std::move(m), frac_bits);
    return {v, v};
  }
  long shift = src_frac_bits - frac_bits;
  return {FixedPoint(shift_right_floor(mantissa, shift), frac_bits),
          FixedPoint(shift_right_ceil(mantissa, shift), frac_bits)};
}

FixedInterval FixedInterval::rescaled(long new_frac_bits) const {
  if (new_frac_bits >= frac_bits())
    return {lo_.rescaled(new_frac_bits), hi_.rescaled(new_frac_bits)};
  long shift = frac_bits() - new_frac_bits;
  return {
      FixedPoint(shift_right_floor(lo_.mantissa(), shift), new_frac_bits),
      FixedPoint(shift_right_ceil(hi_.mantissa(), shift), new_frac_bits)};
}

namespace {
void require_same_bits(const FixedInterval& a, const FixedInterval& b) {
  if (a.frac_bits() != b.frac_bits())
    throw PrecisionMismatch(a.frac_bits(), b.frac_bits());
}
}  // namespace

FixedInterval FixedInterval::add(const FixedInterval& a,
                                 const FixedInterval& b) {
  require_same_bits(a, b);
  // Sums of equal-precision fixed-point values are exact.
  return {FixedPoint(a.lo().mantissa() + b.lo().mantissa(), a.frac_bits()),
          FixedPoint(a.hi().mantissa() + b.hi().mantissa(), a.frac_bits())};
}

FixedInterval FixedInterval::sub(const FixedInterval& a,
                                 const FixedInterval& b) {
  require_same_bits(a, b);
  return {FixedPoint(a.lo().mantissa() - b.hi().mantissa(), a.frac_bits()),
          FixedPoint(a.hi().mantissa() - b.lo().mantissa(), a.frac_bits())};
}

FixedInterval FixedInterval::mul(const FixedInterval& a,
                                 const FixedInterval& b) {
  require_same_bits(a, b);
  long f = a.frac_bits();
  // Corner products carry 2f fractional bits exactly; round the extremes
  // outward when shedding f bits.
  mpz_class p1 = a.lo().mantissa() * b.lo().mantissa();
  mpz_class p2 = a.lo().mantissa() * b.hi().mantissa();
  mpz_class p3 = a.hi().mantissa() * b.lo().mantissa();
  mpz_class p4 = a.hi().mantissa() * b.hi().mantissa();
  const mpz_class& mn = std::min({p1, p2, p3, p4});
  const mpz_class& mx = std::max({p1, p2, p3, p4});
  return {FixedPoint(shift_right_floor(mn, f), f),
          FixedPoint(shift_right_ceil(mx, f), f)};
}

FixedInterval FixedInterval::div(const FixedInterval& a,
                                 const FixedInterval& b) {
  require_same_bits(a, b);
  if (b.contains_zero()) throw IntervalContainsZero();
  long f = a.frac_bits();
  mpz_class lo, hi;
  bool first = true;
  for (const FixedPoint* n : {&a.lo(), &a.hi()}) {
    for (const FixedPoint* d : {&b.lo(), &b.hi()}) {
      mpz_class num;
      mpz_mul_2exp(num.get_mpz_t(), n->mantissa().get_mpz_t(), f);
      mpz_class qf = div_floor(num, d->mantissa());
      mpz_class qc = div_ceil(num, d->mantissa());
      if (first) {
        lo = qf;
        hi = qc;
        first = false;
      } else {
        if (qf < lo) lo = qf;
        if (qc > hi) hi = qc;
      }
    }
  }
  return {FixedPoint(std::move(lo), f), FixedPoint(std::move(hi), f)};
}

Sign FixedInterval::sign(const FixedInterval& a) {
  if (a.lo().sign() > 0) return Sign::Positive;
  if (a.hi().sign() < 0) return Sign::Negative;
  return Sign::Indeterminate;
}

bool FixedInterval::contains(const FixedPoint& v) const {
  if (v.frac_bits() != frac_bits())
    throw PrecisionMismatch(v.frac_bits(), frac_bits());
  return lo_.mantissa() <= v.mantissa() && v.mantissa() <= hi_.mantissa();
}

}  // namespace heig

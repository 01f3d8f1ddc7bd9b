#pragma once

#include "fixed_point.hpp"

namespace heig {

enum class Sign { Positive, Negative, Indeterminate };

/// Closed interval [lo, hi] of fixed-point values sharing one fractional
/// precision.  Every operation rounds outward, so the exact real result of
/// the operation applied to any members of the operand intervals is contained
/// in the result interval.
class FixedInterval {
 public:
  FixedInterval() = default;
  FixedInterval(FixedPoint lo, FixedPoint hi);

  static FixedInterval point(const FixedPoint& v) { return {v, v}; }
  /// Tightest interval at frac_bits containing mantissa*2^-src_frac_bits.
  static FixedInterval enclose(const mpz_class& mantissa, long src_frac_bits,
                               long frac_bits);

  const FixedPoint& lo() const { return lo_; }
  const FixedPoint& hi() const { return hi_; }
  long frac_bits() const { return lo_.frac_bits(); }

  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool is_point() const { return lo_.mantissa() == hi_.mantissa(); }
  /// Width in units of 2^-frac_bits.
  mpz_class width_ulps() const { return hi_.mantissa() - lo_.mantissa(); }

  FixedInterval rescaled(long new_frac_bits) const;

  static FixedInterval add(const FixedInterval& a, const FixedInterval& b);
  static FixedInterval sub(const FixedInterval& a, const FixedInterval& b);
  static FixedInterval mul(const FixedInterval& a, const FixedInterval& b);
  /// Throws IntervalContainsZero when b straddles zero.
  static FixedInterval div(const FixedInterval& a, const FixedInterval& b);

  static Sign sign(const FixedInterval& a);

  /// True when v (same frac_bits) lies inside [lo, hi].
  bool contains(const FixedPoint& v) const;

 private:
  FixedPoint lo_, hi_;
};

}  // namespace heig

#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "errors.hpp"

namespace heig {

/// Arbitrary-size binary fixed-point scalar: value = mantissa * 2^(-frac_bits).
///
/// The mantissa is a GMP integer of unbounded size, so the integer part is
/// always carried exactly; frac_bits fixes the number of binary digits after
/// the radix point.  Rounding is truncation toward zero throughout.  Values
/// are immutable after construction and safe to share between threads.
class FixedPoint {
 public:
  FixedPoint() : mantissa_(0), frac_bits_(0) {}
  FixedPoint(mpz_class mantissa, long frac_bits)
      : mantissa_(std::move(mantissa)), frac_bits_(frac_bits) {}

  static FixedPoint zero(long frac_bits) { return {mpz_class(0), frac_bits}; }
  static FixedPoint one(long frac_bits) {
    mpz_class m(1);
    m <<= frac_bits;
    return {std::move(m), frac_bits};
  }
  static FixedPoint from_integer(long v, long frac_bits) {
    mpz_class m(v);
    m <<= frac_bits;
    return {std::move(m), frac_bits};
  }

  const mpz_class& mantissa() const { return mantissa_; }
  long frac_bits() const { return frac_bits_; }

  bool is_zero() const { return mantissa_ == 0; }
  int sign() const { return sgn(mantissa_); }

  /// Change the fractional precision.  Lowering truncates toward zero (never
  /// increases the magnitude); raising is exact.
  FixedPoint rescaled(long new_frac_bits) const;

  FixedPoint negated() const { return {-mantissa_, frac_bits_}; }
  FixedPoint abs() const { return {::abs(mantissa_), frac_bits_}; }

  /// Lossy conversion for diagnostics only.
  double to_double() const;

  /// a + b and a - b; operands must share frac_bits (throws
  /// PrecisionMismatch otherwise) and the result keeps it.
  static FixedPoint add(const FixedPoint& a, const FixedPoint& b);
  static FixedPoint sub(const FixedPoint& a, const FixedPoint& b);

  /// a * b truncated toward zero to out_frac_bits; |error| < 2^-out_frac_bits.
  static FixedPoint mul(const FixedPoint& a, const FixedPoint& b,
                        long out_frac_bits);

  /// a / b truncated toward zero to out_frac_bits.  Throws DivisionByZero.
  static FixedPoint div(const FixedPoint& a, const FixedPoint& b,
                        long out_frac_bits);

  /// Value comparison; operands must share frac_bits.
  static int compare(const FixedPoint& a, const FixedPoint& b);

  bool operator==(const FixedPoint& o) const {
    return frac_bits_ == o.frac_bits_ && mantissa_ == o.mantissa_;
  }

 private:
  mpz_class mantissa_;
  long frac_bits_;
};

// Directed mantissa shifts shared by the interval code.
inline mpz_class shift_right_trunc(const mpz_class& m, long bits) {
  mpz_class r;
  mpz_tdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), bits);
  return r;
}
inline mpz_class shift_right_floor(const mpz_class& m, long bits) {
  mpz_class r;
  mpz_fdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), bits);
  return r;
}
inline mpz_class shift_right_ceil(const mpz_class& m, long bits) {
  mpz_class r;
  mpz_cdiv_q_2exp(r.get_mpz_t(), m.get_mpz_t(), bits);
  return r;
}

inline mpz_class div_floor(const mpz_class& n, const mpz_class& d) {
  mpz_class r;
  mpz_fdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}
inline mpz_class div_ceil(const mpz_class& n, const mpz_class& d) {
  mpz_class r;
  mpz_cdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}
inline mpz_class div_trunc(const mpz_class& n, const mpz_class& d) {
  mpz_class r;
  mpz_tdiv_q(r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return r;
}

}  // namespace heig

#include "fixed_point.hpp"

#include <cmath>

namespace heig {

FixedPoint FixedPoint::rescaled(long new_frac_bits) const {
  if (new_frac_bits == frac_bits_) return *this;
  mpz_class m;
  if (new_frac_bits > frac_bits_) {
    mpz_mul_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(),
                 new_frac_bits - frac_bits_);
  } else {
    mpz_tdiv_q_2exp(m.get_mpz_t(), mantissa_.get_mpz_t(),
                    frac_bits_ - new_frac_bits);
  }
  return {std::move(m), new_frac_bits};
}

double FixedPoint::to_double() const {
  // mpz -> double saturates for huge mantissas; scale via ldexp to keep the
  // exponent range usable for moderate values.
  signed long exp2 = 0;
  double d = mpz_get_d_2exp(&exp2, mantissa_.get_mpz_t());
  return std::ldexp(d, static_cast<int>(exp2 - frac_bits_));
}

FixedPoint FixedPoint::add(const FixedPoint& a, const FixedPoint& b) {
  if (a.frac_bits_ != b.frac_bits_)
    throw PrecisionMismatch(a.frac_bits_, b.frac_bits_);
  return {a.mantissa_ + b.mantissa_, a.frac_bits_};
}

FixedPoint FixedPoint::sub(const FixedPoint& a, const FixedPoint& b) {
  if (a.frac_bits_ != b.frac_bits_)
    throw PrecisionMismatch(a.frac_bits_, b.frac_bits_);
  return {a.mantissa_ - b.mantissa_, a.frac_bits_};
}

FixedPoint FixedPoint::mul(const FixedPoint& a, const FixedPoint& b,
                           long out_frac_bits) {
  // Product mantissa sits at a.frac + b.frac fractional bits; shift to the
  // requested precision, truncating toward zero.
  mpz_class p = a.mantissa_ * b.mantissa_;
  long shift = a.frac_bits_ + b.frac_bits_ - out_frac_bits;
  mpz_class m;
  if (shift >= 0) {
    mpz_tdiv_q_2exp(m.get_mpz_t(), p.get_mpz_t(), shift);
  } else {
    mpz_mul_2exp(m.get_mpz_t(), p.get_mpz_t(), -shift);
  }
  return {std::move(m), out_frac_bits};
}

FixedPoint FixedPoint::div(const FixedPoint& a, const FixedPoint& b,
                           long out_frac_bits) {
  if (b.mantissa_ == 0) throw DivisionByZero();
  // quotient = (a.m / b.m) * 2^(b.frac - a.frac); bring to out_frac_bits.
  long shift = out_frac_bits - a.frac_bits_ + b.frac_bits_;
  mpz_class m;
  if (shift >= 0) {
    mpz_class num;
    mpz_mul_2exp(num.get_mpz_t(), a.mantissa_.get_mpz_t(), shift);
    mpz_tdiv_q(m.get_mpz_t(), num.get_mpz_t(), b.mantissa_.get_mpz_t());
  } else {
    mpz_class den;
    mpz_mul_2exp(den.get_mpz_t(), b.mantissa_.get_mpz_t(), -shift);
    mpz_tdiv_q(m.get_mpz_t(), a.mantissa_.get_mpz_t(), den.get_mpz_t());
  }
  return {std::move(m), out_frac_bits};
}

int FixedPoint::compare(const FixedPoint& a, const FixedPoint& b) {
  if (a.frac_bits_ != b.frac_bits_)
    throw PrecisionMismatch(a.frac_bits_, b.frac_bits_);
  return cmp(a.mantissa_, b.mantissa_);
}

}  // namespace heig

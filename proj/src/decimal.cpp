#include "decimal.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace heig {

namespace {

mpz_class pow10z(unsigned long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, e);
  return p;
}

// floor(log10(m * 2^-f)) for m > 0, computed exactly.  Start from a bit-length
// estimate and correct by comparison; the estimate is off by at most one.
long decimal_exponent(const mpz_class& m, long f) {
  long bits = static_cast<long>(mpz_sizeinbase(m.get_mpz_t(), 2));
  // value in [2^(bits-1-f), 2^(bits-f)); log10(2) ~ 0.30103
  long e = static_cast<long>(
      std::floor(static_cast<double>(bits - 1 - f) * 0.30102999566398119521));
  auto value_lt_pow10 = [&](long p) {
    // m * 2^-f < 10^p  <=>  m * 10^-p < 2^f (p >= 0) etc.
    mpz_class lhs = m, rhs;
    if (p >= 0) {
      rhs = pow10z(p);
      if (f >= 0) {
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), f);
      }
    } else {
      rhs = 1;
      mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), f);
      lhs = m * pow10z(-p);
    }
    return lhs < rhs;
  };
  // want e with 10^e <= value < 10^(e+1)
  while (value_lt_pow10(e)) --e;
  while (!value_lt_pow10(e + 1)) ++e;
  return e;
}

// Significant digits of m*2^-f as an integer, truncated toward zero (or
// rounded to nearest when round_nearest).
DecimalSci extract_digits(const mpz_class& m, long f, int digits,
                          bool round_nearest) {
  long e = decimal_exponent(m, f);
  long t = digits - 1 - e;  // multiply value by 10^t to get `digits` digits
  auto compute = [&](long tt) {
    mpz_class d;
    if (tt >= 0) {
      mpz_class num = m * pow10z(tt);
      if (round_nearest) {
        // floor((2*num + den) / (2*den)) with den = 2^f
        mpz_class num2 = num * 2;
        mpz_class den;
        mpz_setbit(den.get_mpz_t(), f);
        num2 += den;
        mpz_fdiv_q(d.get_mpz_t(), num2.get_mpz_t(), den.get_mpz_t());
        mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), 1);
      } else {
        mpz_tdiv_q_2exp(d.get_mpz_t(), num.get_mpz_t(), f);
      }
    } else {
      mpz_class den = pow10z(-tt);
      mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), f);
      mpz_class num = m;
      if (round_nearest) {
        num *= 2;
        num += den;
        mpz_fdiv_q(d.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), 1);
      } else {
        mpz_tdiv_q(d.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      }
    }
    return d;
  };
  mpz_class d = compute(t);
  // Rounding can push to 10^digits (e.g. 9.99 -> 10.0); renormalize.
  mpz_class low = pow10z(digits - 1), high = pow10z(digits);
  while (d >= high) {
    ++e;
    t = digits - 1 - e;
    d = compute(t);
  }
  while (d < low) {
    --e;
    t = digits - 1 - e;
    d = compute(t);
  }
  return DecimalSci{std::move(d), digits, e};
}

}  // namespace

std::string DecimalSci::to_string() const {
  std::string ds = digits.get_str();
  std::string out;
  out += ds[0];
  if (num_digits > 1) {
    out += '.';
    out += ds.substr(1);
  }
  out += 'e';
  out += std::to_string(exponent);
  return out;
}

DecimalSci DecimalSci::parse(const std::string& s) {
  // Accepted shape: D[.D+]e[-]E  (one leading digit, lowercase e, no plus
  // signs, exponent unpadded).
  size_t i = 0;
  auto fail = [&]() -> DecimalSci { throw MalformedInput(s); };
  if (s.empty() || !std::isdigit(static_cast<unsigned char>(s[0]))) return fail();
  std::string digs;
  digs += s[i++];
  if (i < s.size() && s[i] == '.') {
    ++i;
    size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      digs += s[i++];
    }
    if (i == start) return fail();
  }
  if (i >= s.size() || s[i] != 'e') return fail();
  ++i;
  size_t exp_start = i;
  if (i < s.size() && s[i] == '-') ++i;
  size_t dig_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i != s.size() || dig_start == i) return fail();
  long e = std::strtol(s.c_str() + exp_start, nullptr, 10);
  DecimalSci d;
  d.digits = mpz_class(digs, 10);
  d.num_digits = static_cast<int>(digs.size());
  d.exponent = e;
  return d;
}

std::string truncate_sig_digits(const FixedPoint& x, int digits) {
  if (x.sign() <= 0) throw NonPositiveInput("truncate_sig_digits");
  if (digits < 1) throw MalformedInput("digit count must be >= 1");
  return extract_digits(x.mantissa(), x.frac_bits(), digits, false).to_string();
}

std::string round_sig_digits(const FixedPoint& x, int digits) {
  if (x.sign() <= 0) throw NonPositiveInput("round_sig_digits");
  if (digits < 1) throw MalformedInput("digit count must be >= 1");
  return extract_digits(x.mantissa(), x.frac_bits(), digits, true).to_string();
}

std::string bump_last_digit(const std::string& s) {
  DecimalSci d = DecimalSci::parse(s);
  d.digits += 1;
  if (d.digits >= pow10z(d.num_digits)) {
    // all-nines carry: 9.99 -> 1.00 with exponent + 1
    mpz_divexact_ui(d.digits.get_mpz_t(), d.digits.get_mpz_t(), 10);
    d.exponent += 1;
  }
  return d.to_string();
}

FixedInterval decimal_to_interval(const std::string& s, long frac_bits) {
  DecimalSci d = DecimalSci::parse(s);
  long p = d.exponent - d.num_digits + 1;  // value = digits * 10^p
  if (p >= 0) {
    mpz_class m = d.digits * pow10z(p);
    mpz_mul_2exp(m.get_mpz_t(), m.get_mpz_t(), frac_bits);
    FixedPoint v(std::move(m), frac_bits);
    return {v, v};
  }
  mpz_class num = d.digits;
  mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), frac_bits);
  mpz_class den = pow10z(-p);
  return {FixedPoint(div_floor(num, den), frac_bits),
          FixedPoint(div_ceil(num, den), frac_bits)};
}

FixedPoint decimal_to_fixed_floor(const std::string& s, long frac_bits) {
  return decimal_to_interval(s, frac_bits).lo();
}

}  // namespace heig

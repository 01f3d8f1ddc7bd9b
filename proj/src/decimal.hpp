#pragma once

#include <string>

#include "fixed_interval.hpp"
#include "fixed_point.hpp"

namespace heig {

/// Decimal scientific representation d.dd...e±E with a fixed number of
/// significant digits.  All conversions go through exact integer scaling by
/// powers of ten, never through floating point.
struct DecimalSci {
  mpz_class digits;  // the significant digits as one integer, no dot
  int num_digits;    // count of significant digits
  long exponent;     // value = digits * 10^(exponent - num_digits + 1)

  std::string to_string() const;
  static DecimalSci parse(const std::string& s);  // throws MalformedInput
};

/// Truncate x (> 0) toward zero to `digits` significant decimal digits and
/// render as scientific notation.  The returned value never exceeds x.
std::string truncate_sig_digits(const FixedPoint& x, int digits);

/// Same digits, rounded to nearest instead of truncated (reporting helper).
std::string round_sig_digits(const FixedPoint& x, int digits);

/// Add one unit in the last significant digit of a decimal string produced by
/// truncate_sig_digits; carries propagate and an all-nines mantissa bumps the
/// exponent.
std::string bump_last_digit(const std::string& s);

/// Tightest fixed-point interval at frac_bits containing the decimal value.
FixedInterval decimal_to_interval(const std::string& s, long frac_bits);

/// Largest fixed-point value at frac_bits not exceeding the decimal value.
FixedPoint decimal_to_fixed_floor(const std::string& s, long frac_bits);

}  // namespace heig

#pragma once

#include "fixed_interval.hpp"
#include "fixed_point.hpp"
#include "rational.hpp"

namespace heig {

/// Gamma at a positive rational argument, absolute error below
/// 2^-frac_bits.  Integer arguments are exact factorials.
FixedPoint gamma_fixed(const Rational& x, long frac_bits);

/// Certified enclosure of gamma at a positive rational argument; the interval
/// width never exceeds 2^(-frac_bits+2).
FixedInterval gamma_interval(const Rational& x, long frac_bits);

/// Drops memoized gamma values (test hook; evaluation is cached per
/// (num, den, frac_bits) and the cache is safe for concurrent readers).
void gamma_cache_clear();

}  // namespace heig

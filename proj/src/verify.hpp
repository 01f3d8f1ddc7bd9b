#pragma once

#include <string>

#include "fixed_point.hpp"
#include "hankel_matrix.hpp"

namespace heig {

enum class VerifyStatus { Verified, Refuted, Inconclusive };

struct VerifyOutcome {
  VerifyStatus status = VerifyStatus::Inconclusive;
  Sign lower_sign = Sign::Indeterminate;  // of det(M - aI)
  Sign upper_sign = Sign::Indeterminate;  // of det(M - bI)
  // det(M - aI) enclosed as exactly [0, 0]: the probe itself is an
  // eigenvalue and a bracketing certificate can never exist.
  bool lower_exact_zero = false;
  std::string probe_low;   // a = x truncated to 15 significant digits
  std::string probe_high;  // b = a plus one unit in the last digit
};

/// Certifies the converged value x by sign tests on certified determinants:
/// with a = trunc15(x) and b = bump(a), Verified means det(M - aI) is
/// certainly positive and det(M - bI) certainly negative, which proves an
/// eigenvalue lies in (a, b] -- i.e. the reported 15 digits are exact.
/// Refuted means one of the signs is certainly wrong; Indeterminate signs
/// (including pivot enclosures that straddle zero mid-elimination) yield
/// Inconclusive, which callers resolve by escalating the matrix precision.
VerifyOutcome verify_eigenvalue(const HankelIntervalMatrix& m,
                                const FixedPoint& x);

}  // namespace heig

#include "verify.hpp"

#include "decimal.hpp"
#include "ldlt.hpp"

namespace heig {

VerifyOutcome verify_eigenvalue(const HankelIntervalMatrix& m,
                                const FixedPoint& x) {
  if (x.sign() <= 0) throw NonPositiveInput("verify_eigenvalue");
  long kv = m.frac_bits();

  VerifyOutcome out;
  out.probe_low = truncate_sig_digits(x, 15);
  out.probe_high = bump_last_digit(out.probe_low);

  FixedInterval a = decimal_to_interval(out.probe_low, kv);
  FixedInterval b = decimal_to_interval(out.probe_high, kv);

  try {
    FixedInterval det_a = ldlt_det_interval(m, a);
    out.lower_sign = FixedInterval::sign(det_a);
    out.lower_exact_zero =
        det_a.lo().is_zero() && det_a.hi().is_zero();
    FixedInterval det_b = ldlt_det_interval(m, b);
    out.upper_sign = FixedInterval::sign(det_b);
  } catch (const ZeroPivot&) {
    // a pivot enclosure straddled zero mid-elimination: not enough precision
    out.status = VerifyStatus::Inconclusive;
    return out;
  }

  if (out.lower_sign == Sign::Positive && out.upper_sign == Sign::Negative) {
    out.status = VerifyStatus::Verified;
  } else if (out.lower_sign == Sign::Negative ||
             out.upper_sign == Sign::Positive) {
    out.status = VerifyStatus::Refuted;
  } else {
    out.status = VerifyStatus::Inconclusive;
  }
  return out;
}

}  // namespace heig

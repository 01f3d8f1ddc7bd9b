#include "secant.hpp"

#include "decimal.hpp"

namespace heig {

std::pair<FixedPoint, FixedPoint> initial_points(const HankelMatrix& m) {
  long k = m.frac_bits();
  FixedPoint one = FixedPoint::one(k);
  const FixedPoint& m00 = m.entry(0, 0);
  const FixedPoint& smaller =
      FixedPoint::compare(m00, one) < 0 ? m00 : one;
  mpz_class mant = shift_right_trunc(smaller.mantissa(), 16);
  if (mant == 0) mant = 1;
  return {FixedPoint(-mant, k), FixedPoint::zero(k)};
}

namespace {

bool digits_stable(const FixedPoint& prev, const FixedPoint& cur) {
  if (prev.sign() <= 0 || cur.sign() <= 0) return false;
  return truncate_sig_digits(prev, 15) == truncate_sig_digits(cur, 15);
}

}  // namespace

SecantTrace secant_smallest_eigenvalue(const HankelMatrix& m,
                                       const DetEvaluator& det, long k_bits,
                                       const FixedPoint* accepted_root) {
  const long n = m.order();
  SecantTrace trace;

  auto probe = [&](const FixedPoint& x, const FixedPoint& x_prev) {
    try {
      return det(x);
    } catch (const ZeroPivot& zp) {
      if (zp.pivot_index == n - 1 && x.sign() > 0) {
        // Every leading pivot stayed nonzero and the last one vanished: P(x)
        // reads as exactly zero, so x sits on (or within one ulp below) the
        // root.  Accept when the digits already stabilized or when a prior
        // escalation hit the same probe; otherwise ask for more precision.
        bool same_as_accepted =
            accepted_root && x == accepted_root->rescaled(k_bits);
        if (digits_stable(x_prev, x) || same_as_accepted) {
          trace.iterates.push_back({x, FixedPoint::zero(k_bits)});
          trace.converged = true;
          trace.exact_root_hit = true;
          trace.iterations = static_cast<long>(trace.iterates.size());
          return FixedPoint::zero(k_bits);
        }
        throw RootHitAtPrecision(x);
      }
      throw;
    }
  };

  auto [x1, x2] = initial_points(m);
  FixedPoint p1 = probe(x1, x1);
  if (p1.sign() <= 0) throw SignViolation("P(x1) <= 0");
  trace.iterates.push_back({x1, p1});
  FixedPoint p2 = probe(x2, x1);
  if (trace.converged) return trace;
  if (p2.sign() <= 0) throw SignViolation("P(0) <= 0");
  trace.iterates.push_back({x2, p2});

  FixedPoint xa = x1, pa = p1, xb = x2, pb = p2;
  const long max_iterations = 10000;
  for (long i = 0; i < max_iterations; ++i) {
    FixedPoint dp = FixedPoint::sub(pb, pa);
    if (dp.is_zero()) throw NoProgress();
    FixedPoint num = FixedPoint::mul(FixedPoint::sub(xb, xa), pb, k_bits);
    FixedPoint step = FixedPoint::div(num, dp, k_bits);
    FixedPoint xn = FixedPoint::sub(xb, step);

    if (xn == xb) {
      // The iteration reached a fixed point of the arithmetic.  If the value
      // is an established positive iterate its digits are trivially stable.
      if (xb.sign() > 0) {
        trace.converged = true;
        trace.iterations = static_cast<long>(trace.iterates.size());
        return trace;
      }
      throw NoProgress();
    }
    if (FixedPoint::compare(xn, xb) < 0) {
      // Monotone ascent is guaranteed in exact arithmetic; a downward step
      // means rounding noise took over.
      throw NoProgress();
    }

    FixedPoint pn = probe(xn, xb);
    if (trace.converged) return trace;
    if (pn.sign() < 0) throw SignViolation("P(x) < 0 below the root");
    if (pn.is_zero()) {
      // a zero reading without a zero pivot: product underflow
      if (digits_stable(xb, xn)) {
        trace.iterates.push_back({xn, pn});
        trace.converged = true;
        trace.exact_root_hit = true;
        trace.iterations = static_cast<long>(trace.iterates.size());
        return trace;
      }
      throw RootHitAtPrecision(xn);
    }
    trace.iterates.push_back({xn, pn});
    if (digits_stable(xb, xn)) {
      trace.converged = true;
      trace.iterations = static_cast<long>(trace.iterates.size());
      return trace;
    }
    xa = xb;
    pa = pb;
    xb = xn;
    pb = pn;
  }
  throw NoProgress();
}

}  // namespace heig

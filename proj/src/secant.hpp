#pragma once

#include <functional>
#include <vector>

#include "fixed_point.hpp"
#include "hankel_matrix.hpp"

namespace heig {

struct SecantIterate {
  FixedPoint x;
  FixedPoint det;  // P(x) = det(M - xI)
};

struct SecantTrace {
  std::vector<SecantIterate> iterates;
  bool converged = false;
  long iterations = 0;
  // The final probe zeroed the last pivot: the determinant read exactly as
  // zero and the probe was accepted as the root.  Only that terminal iterate
  // may carry a zero determinant.
  bool exact_root_hit = false;

  const FixedPoint& eigenvalue() const { return iterates.back().x; }
};

/// A positive probe made the final pivot vanish while earlier pivots stayed
/// positive: P(x) is indistinguishable from zero at this precision and the
/// digits had not stabilized yet.  The caller escalates precision and, if the
/// re-run lands on the same probe again, accepts it as an exactly
/// representable eigenvalue.
class RootHitAtPrecision : public Error {
 public:
  explicit RootHitAtPrecision(FixedPoint probe)
      : Error("secant probe zeroed the determinant"), probe(std::move(probe)) {}
  FixedPoint probe;
};

using DetEvaluator = std::function<FixedPoint(const FixedPoint&)>;

/// Starting points below the smallest eigenvalue: x2 = 0 and
/// x1 = -2^-16 * min(1, M[0][0]), strictly negative.
std::pair<FixedPoint, FixedPoint> initial_points(const HankelMatrix& m);

/// Runs the secant recurrence
///   x_{i+1} = x_i - (x_i - x_{i-1}) P(x_i) / (P(x_i) - P(x_{i-1}))
/// until the top 15 significant decimal digits of successive iterates agree.
/// Iterates are strictly increasing after the first two and every recorded
/// P(x_i) is positive (except a terminal exact root hit).  Throws NoProgress
/// or SignViolation when the working precision is exhausted, and
/// RootHitAtPrecision as described above; `accepted_root` short-circuits the
/// re-run acceptance for that case.
SecantTrace secant_smallest_eigenvalue(const HankelMatrix& m,
                                       const DetEvaluator& det, long k_bits,
                                       const FixedPoint* accepted_root = nullptr);

}  // namespace heig

#pragma once

#include <vector>

#include "channel.hpp"
#include "fixed_interval.hpp"
#include "fixed_point.hpp"
#include "hankel_matrix.hpp"
#include "timing.hpp"

namespace heig {

/// Test hook: collects the pivots (workspace precision) and the published
/// column ratios (half precision, rows p+1..n-1 per column p) of a serial
/// factorization.
struct LdltCapture {
  std::vector<FixedPoint> pivots;
  std::vector<std::vector<FixedPoint>> ratio_columns;
};

/// det(M - xI) via square-root-free LDL^T elimination in submatrix order:
/// each finished column is applied to every column to its right, and the
/// determinant is the product of the diagonal pivots.
///
/// The workspace carries the matrix precision K; finished columns and their
/// pivot ratios are truncated to K/2 fractional bits before use, so the
/// elimination update M[r][c] -= C[c]*ratio[r] is an exact K-bit operation.
/// Throws ZeroPivot when a pivot (or its half-precision truncation, where a
/// division needs it) vanishes at the working precision.
FixedPoint ldlt_det_serial(const HankelMatrix& m, const FixedPoint& x,
                           LdltCapture* capture = nullptr);

/// Certified enclosure of det(M - shift*I) for an interval matrix, same
/// elimination with outward rounding.  The final determinant interval may
/// straddle zero; ZeroPivot is thrown only when a pivot interval straddles
/// zero while later columns still need to divide by it.
FixedInterval ldlt_det_interval(const HankelIntervalMatrix& m,
                                const FixedInterval& shift);

struct ParallelDetResult {
  FixedPoint determinant;
  TimingBreakdown timing;
};

/// Pipelined multi-worker evaluation of det(M - xI).  Columns are owned by
/// workers in reflected round-robin order; the owner of column p+1 applies
/// column p to it first, publishes it on the channel, then applies column p
/// to the rest of its columns while the broadcast proceeds in the background.
/// Receivers apply column p everywhere they own, then compute whatever ratio
/// entries the channel cut off.
///
/// Updates to any column happen in a fixed order by exactly one worker, so
/// the result is bit-identical to ldlt_det_serial for every worker count and
/// channel configuration.  Phase accounting in the returned breakdown holds
/// per-worker averages; total_seconds is wall clock.
ParallelDetResult ldlt_det_parallel(const HankelMatrix& m, const FixedPoint& x,
                                    long workers, ColumnChannel& channel);

}  // namespace heig

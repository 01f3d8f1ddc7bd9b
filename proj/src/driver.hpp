#pragma once

#include <limits>
#include <string>

#include "fixed_point.hpp"
#include "hankel_matrix.hpp"
#include "rational.hpp"
#include "secant.hpp"
#include "timing.hpp"

namespace heig {

struct RunConfig {
  long n = 1;
  Rational beta;
  long k_bits = 0;  // 0 selects the precision automatically
  long workers = 1;
  double net_bandwidth = std::numeric_limits<double>::infinity();  // bytes/s
  double net_latency_ms = 0.0;
  bool verify = true;
  std::string output_path;       // consumed by the front end
  std::string dump_matrix_path;  // empty = no dump
};

struct ConditionEstimate {
  FixedPoint lambda_max_lower;
  FixedPoint lambda_max_upper;
  FixedPoint lambda1;
  FixedPoint cond_lower;  // lambda_max_lower / lambda1
};

struct RunResult {
  long n = 0;
  Rational beta;
  long k_bits = 0;
  long kv_bits = 0;  // 0 when verification was skipped
  long workers = 1;
  std::string eigenvalue;  // 15 significant digits
  bool verified = false;
  std::string diagnosis;  // non-empty only for documented edge outcomes
  long iterations = 0;
  std::string condition_lower_bound;
  TimingBreakdown timing;
};

/// Starting precision: at least 512 bits, at least 8 bits per matrix order,
/// padded further when 1/beta > 1 (conditioning worsens as beta shrinks),
/// rounded up to a multiple of 64.
long choose_initial_precision(long n, const Rational& beta);

/// Doubling escalation, bounded by the cap (throws PrecisionCapExceeded).
long escalate_precision(long k_bits, long cap_bits);

/// Escalation bound: HANKEL_EIG_PRECISION_CAP from the environment, else 2^21.
long precision_cap();

/// Bounds on the largest eigenvalue: the (N-1, N-1) entry from below (a
/// Rayleigh quotient with the last unit vector) and the trace from above.
std::pair<FixedPoint, FixedPoint> lambda_max_bounds(const HankelMatrix& m);

FixedPoint condition_lower_bound(const HankelMatrix& m,
                                 const FixedPoint& lambda1);

/// Full pipeline: matrix generation, secant iteration with precision
/// escalation, interval verification, condition estimate, and timing.
RunResult run(const RunConfig& cfg);

}  // namespace heig

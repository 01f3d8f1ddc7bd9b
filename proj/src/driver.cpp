#include "driver.hpp"

#include <cmath>
#include <cstdlib>
#include <memory>
#include <optional>

#include "channel.hpp"
#include "decimal.hpp"
#include "ldlt.hpp"
#include "verify.hpp"

namespace heig {

long choose_initial_precision(long n, const Rational& beta) {
  if (n < 1) throw InvalidConfig("order must be >= 1");
  long inv_beta_ceil =
      static_cast<long>((beta.den + beta.num - 1) / beta.num);
  long k = std::max({512L, 8 * n, 4 * n * std::max(1L, inv_beta_ceil)});
  return ((k + 63) / 64) * 64;
}

long escalate_precision(long k_bits, long cap_bits) {
  long next = 2 * k_bits;
  if (next > cap_bits) throw PrecisionCapExceeded(next, cap_bits);
  return next;
}

long precision_cap() {
  if (const char* env = std::getenv("HANKEL_EIG_PRECISION_CAP")) {
    char* end = nullptr;
    long cap = std::strtol(env, &end, 10);
    if (end && *end == '\0' && cap >= 64) return cap;
    throw InvalidConfig("HANKEL_EIG_PRECISION_CAP must be an integer >= 64");
  }
  return 1L << 21;
}

std::pair<FixedPoint, FixedPoint> lambda_max_bounds(const HankelMatrix& m) {
  long n = m.order();
  FixedPoint lower = m.entry(n - 1, n - 1);
  FixedPoint upper = lower;
  for (long k = 0; k + 1 < n; ++k)
    upper = FixedPoint::add(upper, m.entry(k, k));
  return {lower, upper};
}

FixedPoint condition_lower_bound(const HankelMatrix& m,
                                 const FixedPoint& lambda1) {
  if (lambda1.sign() <= 0) throw NonPositiveInput("condition_lower_bound");
  auto [lower, upper] = lambda_max_bounds(m);
  return FixedPoint::div(lower, lambda1.rescaled(lower.frac_bits()),
                         lower.frac_bits());
}

namespace {

void validate(const RunConfig& cfg) {
  if (cfg.n < 1) throw InvalidConfig("order must be >= 1");
  if (cfg.workers < 1) throw InvalidConfig("workers must be >= 1");
  if (cfg.k_bits != 0) {
    if (cfg.k_bits < 64) throw InvalidConfig("precision must be >= 64 bits");
    if (cfg.k_bits % 2 != 0)
      throw InvalidConfig("precision must be even (column buffers carry half)");
  }
  if (!(cfg.net_bandwidth > 0))
    throw InvalidConfig("net bandwidth must be positive or inf");
  if (cfg.net_latency_ms < 0) throw InvalidConfig("net latency must be >= 0");
}

std::unique_ptr<ColumnChannel> make_channel(const RunConfig& cfg) {
  if (std::isinf(cfg.net_bandwidth) && cfg.net_latency_ms == 0.0)
    return std::make_unique<SharedMemoryChannel>();
  return std::make_unique<ThrottledChannel>(cfg.net_bandwidth,
                                            cfg.net_latency_ms / 1000.0);
}

}  // namespace

RunResult run(const RunConfig& cfg) {
  validate(cfg);
  const long cap = precision_cap();
  long k = cfg.k_bits != 0 ? cfg.k_bits : choose_initial_precision(cfg.n, cfg.beta);
  if (k > cap) throw PrecisionCapExceeded(k, cap);

  RunResult result;
  result.n = cfg.n;
  result.beta = cfg.beta;
  result.workers = cfg.workers;

  std::unique_ptr<ColumnChannel> channel =
      cfg.workers > 1 ? make_channel(cfg) : nullptr;

  // Secant with precision escalation.  A probe that lands exactly on the
  // root at two precisions in a row is accepted as an exact eigenvalue.
  SecantTrace trace;
  std::optional<HankelMatrix> matrix;
  bool have_root_hint = false;
  FixedPoint root_hint;
  for (;;) {
    matrix.emplace(build_matrix(cfg.n, cfg.beta, k));
    DetEvaluator eval = [&](const FixedPoint& x) {
      if (cfg.workers == 1) {
        Stopwatch sw;
        FixedPoint det = ldlt_det_serial(*matrix, x);
        double t = sw.lap();
        result.timing.record(Phase::Compute, t);
        result.timing.total_seconds += t;
        return det;
      }
      ParallelDetResult res = ldlt_det_parallel(*matrix, x, cfg.workers, *channel);
      result.timing.add(res.timing);
      return res.determinant;
    };
    try {
      trace = secant_smallest_eigenvalue(
          *matrix, eval, k, have_root_hint ? &root_hint : nullptr);
      break;
    } catch (const RootHitAtPrecision& hit) {
      root_hint = hit.probe;
      have_root_hint = true;
      k = escalate_precision(k, cap);
    } catch (const ZeroPivot&) {
      k = escalate_precision(k, cap);
    } catch (const NoProgress&) {
      k = escalate_precision(k, cap);
    } catch (const SignViolation&) {
      k = escalate_precision(k, cap);
    }
  }
  result.k_bits = k;
  result.iterations = trace.iterations;

  const FixedPoint& lambda1 = trace.eigenvalue();
  result.eigenvalue = truncate_sig_digits(lambda1, 15);

  if (!cfg.dump_matrix_path.empty())
    dump_matrix_to_file(*matrix, cfg.dump_matrix_path);

  if (cfg.verify) {
    long kv = 2 * k;
    for (;;) {
      HankelIntervalMatrix certified =
          build_interval_matrix(cfg.n, cfg.beta, kv);
      Stopwatch sw;
      VerifyOutcome outcome =
          verify_eigenvalue(certified, lambda1.rescaled(kv));
      double t = sw.lap();
      result.timing.record(Phase::Compute, t);
      result.timing.total_seconds += t;

      result.kv_bits = kv;
      if (outcome.status == VerifyStatus::Verified) {
        result.verified = true;
        break;
      }
      if (outcome.status == VerifyStatus::Refuted) {
        throw Refuted("interval verification contradicted the converged value at " +
                      outcome.probe_low);
      }
      if (outcome.lower_exact_zero) {
        // det(M - aI) = [0, 0]: the truncated probe is itself an eigenvalue,
        // so the bracketing test is inconclusive at any precision.
        result.verified = false;
        result.diagnosis =
            "det(M - aI) is exactly zero: the 15-digit probe " +
            outcome.probe_low +
            " is itself an eigenvalue; bracketing verification does not apply";
        break;
      }
      kv = escalate_precision(kv, cap);
    }
  }

  result.condition_lower_bound =
      round_sig_digits(condition_lower_bound(*matrix, lambda1), 3);
  return result;
}

}  // namespace heig

#include <doctest.h>

#include <random>

#include "ldlt.hpp"

using namespace heig;

namespace {

HankelMatrix pd_hankel(std::mt19937_64& rng, long n, long f) {
  std::vector<mpq_class> nodes, weights;
  for (long l = 0; l < n; ++l) {
    nodes.emplace_back(1 + static_cast<long>(rng() % 64) + l * 64, 16);
    weights.emplace_back(1 + static_cast<long>(rng() % 255), 8);
  }
  std::vector<FixedPoint> strip;
  for (long s = 0; s < 2 * n - 1; ++s) {
    mpq_class mu = 0;
    for (long l = 0; l < n; ++l) {
      mpq_class p = weights[l];
      for (long e = 0; e < s; ++e) p *= nodes[l];
      mu += p;
    }
    mpz_class num = mu.get_num() << f;
    strip.emplace_back(div_trunc(num, mu.get_den()), f);
  }
  return {n, Rational(1, 1), f, std::move(strip)};
}

}  // namespace

TEST_CASE("one worker degenerates to the serial pipeline") {
  std::mt19937_64 rng(71);
  HankelMatrix h = pd_hankel(rng, 12, 96);
  SharedMemoryChannel ch;
  ParallelDetResult r =
      ldlt_det_parallel(h, FixedPoint::zero(96), 1, ch);
  CHECK(r.determinant == ldlt_det_serial(h, FixedPoint::zero(96)));
}

TEST_CASE("parallel determinants are bit-identical across worker counts") {
  std::mt19937_64 rng(73);
  for (long n : {9L, 24L}) {
    HankelMatrix h = pd_hankel(rng, n, 128);
    FixedPoint x(mpz_class(1) << 100, 128);  // small positive shift
    FixedPoint serial = ldlt_det_serial(h, x);
    for (long workers : {1L, 2L, 3L, 4L, 5L, 8L}) {
      SharedMemoryChannel ch;
      ParallelDetResult r = ldlt_det_parallel(h, x, workers, ch);
      CHECK(r.determinant.mantissa() == serial.mantissa());
      CHECK(r.determinant.frac_bits() == serial.frac_bits());
    }
  }
}

TEST_CASE("throttled channel keeps the value and shifts the time profile") {
  std::mt19937_64 rng(79);
  HankelMatrix h = pd_hankel(rng, 20, 128);
  FixedPoint x = FixedPoint::zero(128);
  FixedPoint serial = ldlt_det_serial(h, x);

  // generous bandwidth: identical value, every ratio entry delivered
  ThrottledChannel fast(1e9, 0.0);
  ParallelDetResult rf = ldlt_det_parallel(h, x, 3, fast);
  CHECK(rf.determinant == serial);

  // tight bandwidth: still identical value, receivers fall back to their own
  // divisions and wait on the wire
  ThrottledChannel slow(200e3, 0.0005);
  ParallelDetResult rs = ldlt_det_parallel(h, x, 3, slow);
  CHECK(rs.determinant == serial);
  double fast_share = (rf.timing.net_wait_seconds + rf.timing.div_seconds) /
                      rf.timing.total_seconds;
  double slow_share = (rs.timing.net_wait_seconds + rs.timing.div_seconds) /
                      rs.timing.total_seconds;
  CHECK(slow_share > fast_share);
}

TEST_CASE("unthrottled channel performs no receiver divisions") {
  std::mt19937_64 rng(83);
  HankelMatrix h = pd_hankel(rng, 16, 128);
  SharedMemoryChannel ch;
  ParallelDetResult r = ldlt_det_parallel(h, FixedPoint::zero(128), 4, ch);
  CHECK(r.timing.div_seconds == 0.0);
  CHECK(r.timing.compute_seconds > 0.0);
  CHECK(r.timing.accounted_seconds() <= r.timing.total_seconds * 1.05 + 0.01);
}

TEST_CASE("a zero pivot aborts every worker cleanly") {
  // the all-ones matrix is singular
  std::vector<FixedPoint> strip(5, FixedPoint::one(64));
  HankelMatrix h(3, Rational(1, 1), 64, std::move(strip));
  SharedMemoryChannel ch;
  CHECK_THROWS_AS(ldlt_det_parallel(h, FixedPoint::zero(64), 3, ch),
                  ZeroPivot);
}

TEST_CASE("phase accounting is monotone and additive") {
  TimingBreakdown tb;
  tb.record(Phase::Compute, 3.0);
  tb.record(Phase::Compute, 4.0);
  CHECK(tb.compute_seconds == doctest::Approx(7.0));
  TimingBreakdown zero;
  CHECK(zero.accounted_seconds() == 0.0);
  TimingBreakdown other;
  other.record(Phase::NetWait, 1.5);
  other.record(Phase::Div, 0.5);
  tb.add(other);
  CHECK(tb.accounted_seconds() == doctest::Approx(9.0));
  tb.record(Phase::Div, -1.0);  // negative durations clamp to zero
  CHECK(tb.div_seconds == doctest::Approx(0.5));
}

#include <doctest.h>

#include <random>

#include "fixed_interval.hpp"
#include "rational_matrix.hpp"

using namespace heig;
using heig::oracle::fixed_to_rational;

namespace {

FixedInterval make_iv(long lo, long hi, long f) {
  return {FixedPoint::from_integer(lo, f), FixedPoint::from_integer(hi, f)};
}

FixedInterval random_iv(std::mt19937_64& rng, long f) {
  mpz_class a(static_cast<long>(rng() % 100000) - 50000);
  mpz_class w(static_cast<long>(rng() % 1000));
  return {FixedPoint(a, f), FixedPoint(a + w, f)};
}

mpq_class lo_q(const FixedInterval& iv) { return fixed_to_rational(iv.lo()); }
mpq_class hi_q(const FixedInterval& iv) { return fixed_to_rational(iv.hi()); }

}  // namespace

TEST_CASE("interval multiplication basics") {
  FixedInterval r = FixedInterval::mul(make_iv(1, 2, 8), make_iv(3, 4, 8));
  CHECK(r.lo() == FixedPoint::from_integer(3, 8));
  CHECK(r.hi() == FixedPoint::from_integer(8, 8));

  FixedInterval s = FixedInterval::mul(make_iv(-1, 1, 8), make_iv(-1, 1, 8));
  CHECK(s.lo() == FixedPoint::from_integer(-1, 8));
  CHECK(s.hi() == FixedPoint::from_integer(1, 8));
}

TEST_CASE("a truncated third times three contains one") {
  long f = 64;
  FixedPoint third_down = FixedPoint::div(FixedPoint::one(f),
                                          FixedPoint::from_integer(3, f), f);
  FixedInterval third(third_down,
                      FixedPoint(third_down.mantissa() + 1, f));
  FixedInterval r = FixedInterval::mul(third, make_iv(3, 3, f));
  CHECK(r.contains(FixedPoint::one(f)));
}

TEST_CASE("interval sign classification") {
  CHECK(FixedInterval::sign(make_iv(2, 3, 8)) == Sign::Positive);
  CHECK(FixedInterval::sign(make_iv(-3, -2, 8)) == Sign::Negative);
  CHECK(FixedInterval::sign(make_iv(-1, 1, 8)) == Sign::Indeterminate);
  CHECK(FixedInterval::sign(make_iv(0, 1, 8)) == Sign::Indeterminate);
  CHECK(FixedInterval::sign(make_iv(-1, 0, 8)) == Sign::Indeterminate);
}

TEST_CASE("division rejects a divisor straddling zero") {
  CHECK_THROWS_AS(FixedInterval::div(make_iv(1, 2, 8), make_iv(-1, 1, 8)),
                  IntervalContainsZero);
  CHECK_THROWS_AS(FixedInterval::div(make_iv(1, 2, 8), make_iv(0, 1, 8)),
                  IntervalContainsZero);
}

TEST_CASE("containment: exact rational results stay inside") {
  std::mt19937_64 rng(31);
  long f = 24;
  for (int i = 0; i < 500; ++i) {
    FixedInterval a = random_iv(rng, f);
    FixedInterval b = random_iv(rng, f);
    // pick random members of each operand interval (dyadic midpoint-ish)
    mpq_class va = lo_q(a) + (hi_q(a) - lo_q(a)) * mpq_class(rng() % 101, 100);
    mpq_class vb = lo_q(b) + (hi_q(b) - lo_q(b)) * mpq_class(rng() % 101, 100);

    FixedInterval sum = FixedInterval::add(a, b);
    CHECK(lo_q(sum) <= va + vb);
    CHECK(va + vb <= hi_q(sum));

    FixedInterval dif = FixedInterval::sub(a, b);
    CHECK(lo_q(dif) <= va - vb);
    CHECK(va - vb <= hi_q(dif));

    FixedInterval prod = FixedInterval::mul(a, b);
    CHECK(lo_q(prod) <= va * vb);
    CHECK(va * vb <= hi_q(prod));

    if (!b.contains_zero()) {
      FixedInterval quot = FixedInterval::div(a, b);
      CHECK(lo_q(quot) <= va / vb);
      CHECK(va / vb <= hi_q(quot));
    }
  }
}

TEST_CASE("interval invariants") {
  CHECK_THROWS_AS(FixedInterval(FixedPoint::from_integer(2, 8),
                                FixedPoint::from_integer(1, 8)),
                  MalformedInput);
  CHECK_THROWS_AS(FixedInterval(FixedPoint::one(8), FixedPoint::one(16)),
                  PrecisionMismatch);
  CHECK_THROWS_AS(FixedInterval::add(make_iv(0, 1, 8), make_iv(0, 1, 16)),
                  PrecisionMismatch);
}

TEST_CASE("outward rescaling keeps containment") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 100; ++i) {
    FixedInterval a = random_iv(rng, 40);
    FixedInterval down = a.rescaled(12);
    CHECK(lo_q(down) <= lo_q(a));
    CHECK(hi_q(a) <= hi_q(down));
  }
}

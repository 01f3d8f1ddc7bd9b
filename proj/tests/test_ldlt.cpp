#include <doctest.h>

#include <random>

#include "assignment.hpp"
#include "ldlt.hpp"
#include "rational_matrix.hpp"

using namespace heig;
using heig::oracle::det_exact;
using heig::oracle::fixed_to_rational;
using heig::oracle::RationalMatrix;

namespace {

HankelMatrix strip_matrix(std::vector<long> strip, long f) {
  long n = static_cast<long>((strip.size() + 1) / 2);
  std::vector<FixedPoint> entries;
  for (long v : strip) entries.push_back(FixedPoint::from_integer(v, f));
  return {n, Rational(1, 1), f, std::move(entries)};
}

// Positive definite Hankel strip: moments of a random discrete measure with
// n distinct positive dyadic nodes.
HankelMatrix random_pd_hankel(std::mt19937_64& rng, long n, long f) {
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
    // into fixed point, truncating
    mpz_class num = mu.get_num() << f;
    strip.emplace_back(div_trunc(num, mu.get_den()), f);
  }
  return {n, Rational(1, 1), f, std::move(strip)};
}

// Exact rational elimination mirroring the half-precision pipeline but with
// no rounding: an independent reference for the pivot sequence.
std::vector<mpq_class> exact_ldlt_pivots(const RationalMatrix& src) {
  long n = src.order();
  RationalMatrix m = src;
  std::vector<mpq_class> pivots;
  for (long p = 0; p < n; ++p) {
    mpq_class d = m.at(p, p);
    pivots.push_back(d);
    for (long c = p + 1; c < n; ++c)
      for (long r = c; r < n; ++r) {
        mpq_class upd = m.at(r, c) - m.at(c, p) * (m.at(r, p) / d);
        m.at(r, c) = upd;
        m.at(c, r) = upd;
      }
  }
  return pivots;
}

mpq_class pow2q(long e) {
  mpq_class q(1);
  if (e >= 0)
    q <<= e;
  else
    q /= (mpq_class(1) << -e);
  return q;
}

}  // namespace

TEST_CASE("column assignment is a reflected round-robin") {
  CHECK(ColumnAssignment(8, 4).owners() ==
        std::vector<long>{0, 1, 2, 3, 3, 2, 1, 0});
  CHECK(ColumnAssignment(5, 1).owners() == std::vector<long>{0, 0, 0, 0, 0});
  CHECK(ColumnAssignment(13, 3).owners() ==
        std::vector<long>{0, 1, 2, 2, 1, 0, 0, 1, 2, 2, 1, 0, 0});

  // every worker holds floor or ceil of n/s columns
  for (long n : {7L, 40L, 101L}) {
    for (long s : {1L, 2L, 3L, 5L, 8L}) {
      ColumnAssignment asg(n, s);
      for (long w = 0; w < s; ++w) {
        long count = static_cast<long>(asg.columns_of(w).size());
        CHECK(count >= n / s);
        CHECK(count <= (n + s - 1) / s);
      }
    }
  }
}

TEST_CASE("two-by-two determinants by hand") {
  CHECK(ldlt_det_serial(strip_matrix({2, 0, 3}, 32), FixedPoint::zero(32)) ==
        FixedPoint::from_integer(6, 32));

  LdltCapture cap;
  FixedPoint det = ldlt_det_serial(strip_matrix({2, 1, 2}, 32),
                                   FixedPoint::zero(32), &cap);
  CHECK(det == FixedPoint::from_integer(3, 32));
  REQUIRE(cap.pivots.size() == 2);
  CHECK(cap.pivots[0] == FixedPoint::from_integer(2, 32));
  CHECK(fixed_to_rational(cap.pivots[1]) == mpq_class(3, 2));
  // ratio of the first column: 1/2
  CHECK(fixed_to_rational(cap.ratio_columns[0][0]) == mpq_class(1, 2));
}

TEST_CASE("factorial matrix determinant is exact") {
  HankelMatrix h = build_matrix(4, Rational(1, 1), 512);
  FixedPoint det = ldlt_det_serial(h, FixedPoint::zero(512));
  mpq_class oracle = det_exact(RationalMatrix::from_fixed(h));
  CHECK(fixed_to_rational(det) == oracle);
  CHECK(oracle == 144);
}

TEST_CASE("pivots match the exact elimination oracle") {
  std::mt19937_64 rng(53);
  long f = 128;
  for (int rep = 0; rep < 10; ++rep) {
    HankelMatrix h = random_pd_hankel(rng, 6, f);
    LdltCapture cap;
    ldlt_det_serial(h, FixedPoint::zero(f), &cap);
    auto exact = exact_ldlt_pivots(RationalMatrix::from_fixed(h));
    // half-precision column truncation drifts each update by up to an ulp
    // scaled by the column magnitude; the largest entry bounds that
    mpq_class scale = 1;
    for (long s = 0; s < 11; ++s) {
      mpq_class e = fixed_to_rational(h.anti_diagonal(s));
      if (e > scale) scale = e;
    }
    for (long p = 0; p < 6; ++p) {
      mpq_class diff = fixed_to_rational(cap.pivots[p]) - exact[p];
      CHECK(abs(diff) < scale * 12 * pow2q(-f / 2));
    }
  }
}

TEST_CASE("reconstruction: L D L^T returns the input") {
  std::mt19937_64 rng(59);
  long f = 160;
  for (int rep = 0; rep < 6; ++rep) {
    long n = 4 + static_cast<long>(rng() % 5);  // 4..8
    HankelMatrix h = random_pd_hankel(rng, n, f);
    LdltCapture cap;
    ldlt_det_serial(h, FixedPoint::zero(f), &cap);

    // L has unit diagonal; column p below the diagonal is the captured ratio
    std::vector<std::vector<mpq_class>> L(n, std::vector<mpq_class>(n, 0));
    for (long i = 0; i < n; ++i) L[i][i] = 1;
    for (long p = 0; p + 1 < n; ++p)
      for (long r = p + 1; r < n; ++r)
        L[r][p] = fixed_to_rational(cap.ratio_columns[p][r - p - 1]);

    mpq_class budget = pow2q(-f / 2) * 2 * n;
    mpq_class max_entry = 0;
    for (long i = 0; i < n; ++i)
      for (long j = 0; j <= i; ++j) {
        mpq_class acc = 0;
        for (long k = 0; k <= j; ++k)
          acc += L[i][k] * fixed_to_rational(cap.pivots[k]) * L[j][k];
        mpq_class target = fixed_to_rational(h.entry(i, j));
        if (abs(target) > max_entry) max_entry = abs(target);
        CHECK(abs(acc - target) < budget * (max_entry + 1));
      }
  }
}

TEST_CASE("positive definiteness gives positive pivots for x <= 0") {
  std::mt19937_64 rng(61);
  long f = 128;
  for (int rep = 0; rep < 8; ++rep) {
    long n = 2 + static_cast<long>(rng() % 7);
    HankelMatrix h = random_pd_hankel(rng, n, f);
    for (long xm : {0L, -1L, -7L}) {
      LdltCapture cap;
      ldlt_det_serial(h, FixedPoint(mpz_class(xm) << (f - 4), f), &cap);
      for (const FixedPoint& piv : cap.pivots) CHECK(piv.sign() > 0);
    }
  }
}

TEST_CASE("singular matrix reports the failing pivot") {
  // all-ones 2x2 collapses in the second column
  try {
    ldlt_det_serial(strip_matrix({1, 1, 1}, 64), FixedPoint::zero(64));
    FAIL("expected ZeroPivot");
  } catch (const ZeroPivot& zp) {
    CHECK(zp.pivot_index == 1);
    CHECK(zp.frac_bits == 64);
  }
}

TEST_CASE("endCol below startCol applies nothing") {
  // a 1x1 matrix runs no elimination at all; the determinant is the entry
  HankelMatrix h = strip_matrix({7}, 32);
  CHECK(ldlt_det_serial(h, FixedPoint::zero(32)) ==
        FixedPoint::from_integer(7, 32));
}

TEST_CASE("interval determinant encloses the plain one") {
  std::mt19937_64 rng(67);
  long f = 128;
  for (int rep = 0; rep < 8; ++rep) {
    long n = 2 + static_cast<long>(rng() % 6);
    HankelMatrix h = random_pd_hankel(rng, n, f);
    std::vector<FixedInterval> strip;
    for (long s = 0; s < 2 * n - 1; ++s)
      strip.push_back(FixedInterval::point(h.anti_diagonal(s)));
    HankelIntervalMatrix ih(n, h.beta(), f, std::move(strip));

    FixedPoint plain = ldlt_det_serial(h, FixedPoint::zero(f));
    FixedInterval certified =
        ldlt_det_interval(ih, FixedInterval::point(FixedPoint::zero(f)));
    CHECK(certified.contains(plain));
    CHECK(FixedInterval::sign(certified) == Sign::Positive);
  }
}

TEST_CASE("interval elimination flags a straddling pivot") {
  std::vector<FixedInterval> strip = {
      FixedInterval(FixedPoint::from_integer(-1, 64),
                    FixedPoint::from_integer(1, 64)),
      FixedInterval::point(FixedPoint::one(64)),
      FixedInterval::point(FixedPoint::from_integer(2, 64))};
  HankelIntervalMatrix ih(2, Rational(1, 1), 64, std::move(strip));
  CHECK_THROWS_AS(
      ldlt_det_interval(ih, FixedInterval::point(FixedPoint::zero(64))),
      ZeroPivot);
}

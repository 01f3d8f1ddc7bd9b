#include <doctest.h>
#include <mpfr.h>

#include <sstream>

#include "hankel_matrix.hpp"
#include "rational_matrix.hpp"

using namespace heig;
using heig::oracle::fixed_to_rational;

TEST_CASE("the factorial matrix: beta = 1") {
  HankelMatrix m = build_matrix(4, Rational(1, 1), 64);
  long fact[7] = {1, 1, 2, 6, 24, 120, 720};
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 4; ++j)
      CHECK(m.entry(i, j) == FixedPoint::from_integer(fact[i + j], 64));
}

TEST_CASE("order one") {
  HankelMatrix m = build_matrix(1, Rational(1, 1), 64);
  CHECK(m.entry(0, 0) == FixedPoint::one(64));
}

TEST_CASE("fractional beta entry matches the mpfr oracle") {
  // entry(0,0) for beta = 7/4 is (4/7) gamma(4/7)
  long f = 128;
  HankelMatrix m = build_matrix(4, Rational(7, 4), f);

  mpfr_t x, g;
  mpfr_inits2(f + 128, x, g, nullptr);
  mpfr_set_ui(x, 4, MPFR_RNDN);
  mpfr_div_ui(x, x, 7, MPFR_RNDN);
  mpfr_gamma(g, x, MPFR_RNDN);
  mpfr_mul_ui(g, g, 4, MPFR_RNDN);
  mpfr_div_ui(g, g, 7, MPFR_RNDN);
  mpfr_mul_2exp(g, g, f, MPFR_RNDN);
  mpz_class oracle;
  mpfr_get_z(oracle.get_mpz_t(), g, MPFR_RNDN);
  mpfr_clears(x, g, nullptr);

  mpz_class diff = m.entry(0, 0).mantissa() - oracle;
  CHECK(abs(diff) <= 2);
}

TEST_CASE("symmetry and anti-diagonal constancy are structural") {
  HankelMatrix m = build_matrix(6, Rational(7, 4), 96);
  for (long i = 0; i < 6; ++i) {
    for (long j = 0; j < 6; ++j) {
      CHECK(&m.entry(i, j) == &m.entry(j, i));
      if (i + 1 < 6 && j >= 1) CHECK(&m.entry(i, j) == &m.entry(i + 1, j - 1));
      CHECK(m.entry(i, j).sign() > 0);
    }
  }
}

TEST_CASE("interval matrix encloses the plain one") {
  HankelMatrix m = build_matrix(5, Rational(7, 4), 96);
  HankelIntervalMatrix im = build_interval_matrix(5, Rational(7, 4), 96);
  for (long s = 0; s < 9; ++s) {
    CHECK(im.anti_diagonal(s).contains(m.anti_diagonal(s)));
    CHECK(im.anti_diagonal(s).width_ulps() <= 8);
  }
}

TEST_CASE("dump round-trips bit-exactly") {
  HankelMatrix m = build_matrix(5, Rational(1, 2), 80);
  std::stringstream ss;
  dump_matrix(m, ss);

  // shape: one line per anti-diagonal with the three fields
  std::string first_line;
  std::getline(ss, first_line);
  CHECK(first_line.substr(0, 4) == "s=0 ");
  CHECK(first_line.find("hex=") != std::string::npos);
  CHECK(first_line.find("fracbits=80") != std::string::npos);

  ss.clear();
  ss.seekg(0);
  HankelMatrix back = load_matrix_dump(ss, Rational(1, 2));
  REQUIRE(back.order() == 5);
  CHECK(back.frac_bits() == 80);
  for (long s = 0; s < 9; ++s)
    CHECK(back.anti_diagonal(s) == m.anti_diagonal(s));
}

TEST_CASE("dump loader rejects malformed input") {
  std::stringstream ss("s=0 hex=ff fracbits=8\ns=2 hex=ff fracbits=8\n");
  CHECK_THROWS_AS(load_matrix_dump(ss), MalformedInput);
  std::stringstream even("s=0 hex=ff fracbits=8\ns=1 hex=ff fracbits=8\n");
  CHECK_THROWS_AS(load_matrix_dump(even), MalformedInput);
}

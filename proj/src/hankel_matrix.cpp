#include "hankel_matrix.hpp"

#include <climits>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "gamma.hpp"

namespace heig {

HankelMatrix build_matrix(long n, const Rational& beta, long frac_bits) {
  if (n < 1) throw InvalidConfig("matrix order must be >= 1");
  std::vector<FixedPoint> strip;
  strip.reserve(2 * n - 1);
  for (long s = 0; s < 2 * n - 1; ++s) {
    unsigned long k = static_cast<unsigned long>(1 + s);
    if (k > ULONG_MAX / beta.den) throw OverflowGuard("gamma argument");
    Rational arg(k * beta.den, beta.num);
    // compute with guard bits, fold in 1/beta exactly, round to nearest
    long guarded = frac_bits + 8;
    FixedInterval g = gamma_interval(arg, guarded);
    mpz_class lo = div_floor(g.lo().mantissa() * beta.den, mpz_class(beta.num));
    mpz_class hi = div_ceil(g.hi().mantissa() * beta.den, mpz_class(beta.num));
    mpz_class mid = shift_right_floor(lo + hi, 1);
    mid += mpz_class(1) << 7;
    strip.emplace_back(shift_right_floor(mid, 8), frac_bits);
  }
  return {n, beta, frac_bits, std::move(strip)};
}

HankelIntervalMatrix build_interval_matrix(long n, const Rational& beta,
                                           long frac_bits) {
  if (n < 1) throw InvalidConfig("matrix order must be >= 1");
  std::vector<FixedInterval> strip;
  strip.reserve(2 * n - 1);
  for (long s = 0; s < 2 * n - 1; ++s) {
    unsigned long k = static_cast<unsigned long>(1 + s);
    if (k > ULONG_MAX / beta.den) throw OverflowGuard("gamma argument");
    Rational arg(k * beta.den, beta.num);
    long guarded = frac_bits + 8;
    FixedInterval g = gamma_interval(arg, guarded);
    mpz_class lo = div_floor(g.lo().mantissa() * beta.den, mpz_class(beta.num));
    mpz_class hi = div_ceil(g.hi().mantissa() * beta.den, mpz_class(beta.num));
    strip.emplace_back(FixedPoint(shift_right_floor(lo, 8), frac_bits),
                       FixedPoint(shift_right_ceil(hi, 8), frac_bits));
  }
  return {n, beta, frac_bits, std::move(strip)};
}

void dump_matrix(const HankelMatrix& m, std::ostream& os) {
  for (long s = 0; s < 2 * m.order() - 1; ++s) {
    os << "s=" << s << " hex=" << m.anti_diagonal(s).mantissa().get_str(16)
       << " fracbits=" << m.frac_bits() << "\n";
  }
}

void dump_matrix_to_file(const HankelMatrix& m, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw Error("cannot open dump file: " + path);
  dump_matrix(m, os);
}

HankelMatrix load_matrix_dump(std::istream& is, Rational beta) {
  std::vector<FixedPoint> strip;
  long frac_bits = 0;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string s_tok, hex_tok, fb_tok;
    ls >> s_tok >> hex_tok >> fb_tok;
    if (s_tok.rfind("s=", 0) != 0 || hex_tok.rfind("hex=", 0) != 0 ||
        fb_tok.rfind("fracbits=", 0) != 0)
      throw MalformedInput("matrix dump line: " + line);
    long s = std::stol(s_tok.substr(2));
    if (s != static_cast<long>(strip.size()))
      throw MalformedInput("matrix dump out of order at s=" + std::to_string(s));
    frac_bits = std::stol(fb_tok.substr(9));
    strip.emplace_back(mpz_class(hex_tok.substr(4), 16), frac_bits);
  }
  if (strip.empty() || strip.size() % 2 == 0)
    throw MalformedInput("matrix dump must hold 2n-1 anti-diagonals");
  long n = static_cast<long>((strip.size() + 1) / 2);
  return {n, beta, frac_bits, std::move(strip)};
}

}  // namespace heig

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fixed_interval.hpp"
#include "fixed_point.hpp"
#include "rational.hpp"

namespace heig {

/// Dense symmetric moment matrix M[i][j] = (1/beta) * gamma((1+i+j)/beta).
/// Entries depend on i+j only, so a single strip of 2n-1 anti-diagonal values
/// backs the whole matrix; symmetry and anti-diagonal constancy are
/// structural rather than numerical.
template <typename Entry>
class HankelMatrixT {
 public:
  HankelMatrixT(long n, Rational beta, long frac_bits,
                std::vector<Entry> anti_diagonals)
      : n_(n),
        beta_(beta),
        frac_bits_(frac_bits),
        anti_diagonals_(std::move(anti_diagonals)) {}

  long order() const { return n_; }
  long frac_bits() const { return frac_bits_; }
  const Rational& beta() const { return beta_; }

  const Entry& entry(long i, long j) const { return anti_diagonals_[i + j]; }
  const Entry& anti_diagonal(long s) const { return anti_diagonals_[s]; }

 private:
  long n_;
  Rational beta_;
  long frac_bits_;
  std::vector<Entry> anti_diagonals_;
};

using HankelMatrix = HankelMatrixT<FixedPoint>;
using HankelIntervalMatrix = HankelMatrixT<FixedInterval>;

/// Entries accurate to better than 2^-frac_bits; exact when 1/beta and the
/// gamma arguments are integers.
HankelMatrix build_matrix(long n, const Rational& beta, long frac_bits);

/// Entries as certified enclosures of the exact moments.
HankelIntervalMatrix build_interval_matrix(long n, const Rational& beta,
                                           long frac_bits);

/// One line per anti-diagonal: `s=<i+j> hex=<mantissa> fracbits=<K>`.
void dump_matrix(const HankelMatrix& m, std::ostream& os);
void dump_matrix_to_file(const HankelMatrix& m, const std::string& path);

/// Rebuilds a matrix from dump lines (bit-exact).  The dump does not carry
/// beta, so the caller supplies it (defaults to 1/1).
HankelMatrix load_matrix_dump(std::istream& is, Rational beta = Rational());

}  // namespace heig

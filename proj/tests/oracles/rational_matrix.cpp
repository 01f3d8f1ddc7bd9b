#include "rational_matrix.hpp"

#include <unordered_map>

namespace heig::oracle {

mpq_class fixed_to_rational(const FixedPoint& v) {
  mpz_class den(1);
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), v.frac_bits());
  mpq_class q(v.mantissa(), den);
  q.canonicalize();
  return q;
}

RationalMatrix RationalMatrix::from_fixed(const HankelMatrix& src) {
  RationalMatrix m(src.order());
  for (long i = 0; i < src.order(); ++i)
    for (long j = 0; j < src.order(); ++j)
      m.at(i, j) = fixed_to_rational(src.entry(i, j));
  return m;
}

RationalMatrix RationalMatrix::shifted(const mpq_class& x) const {
  RationalMatrix m = *this;
  for (long i = 0; i < n_; ++i) m.at(i, i) -= x;
  return m;
}

namespace {

// Minor over the rows `row..n-1` and the column set `mask`.
mpq_class minor_det(const RationalMatrix& m, long row, unsigned mask,
                    std::unordered_map<unsigned, mpq_class>& memo) {
  long n = m.order();
  if (row == n) return 1;
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;

  mpq_class acc = 0;
  int parity = 0;
  for (long col = 0; col < n; ++col) {
    unsigned bit = 1u << col;
    if (!(mask & bit)) continue;
    mpq_class sub = minor_det(m, row + 1, mask & ~bit, memo);
    if (parity % 2 == 0)
      acc += m.at(row, col) * sub;
    else
      acc -= m.at(row, col) * sub;
    ++parity;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

mpq_class det_exact(const RationalMatrix& m) {
  if (m.order() > 12) throw SizeGuard("det_exact handles n <= 12");
  if (m.order() < 1) throw SizeGuard("det_exact needs n >= 1");
  // memo per first-row: separate maps keyed by remaining-column mask per row
  // depth would collide; key on mask alone is safe because the set size
  // determines the row.
  std::unordered_map<unsigned, mpq_class> memo;
  unsigned full = (m.order() == 32) ? ~0u : ((1u << m.order()) - 1);
  return minor_det(m, 0, full, memo);
}

}  // namespace heig::oracle

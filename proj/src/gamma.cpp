#include "gamma.hpp"

#include <climits>
#include <map>
#include <mutex>
#include <tuple>

namespace heig {

namespace {

// Positive value known to lie in [lo, hi] * 2^-exp2.  Multiplications shed
// excess mantissa bits with directed shifts so sizes stay bounded.
struct ScaledInterval {
  mpz_class lo, hi;
  long exp2 = 0;

  void normalize(long max_bits) {
    long bits = static_cast<long>(mpz_sizeinbase(hi.get_mpz_t(), 2));
    if (bits <= max_bits) return;
    long s = bits - max_bits;
    lo = shift_right_floor(lo, s);
    hi = shift_right_ceil(hi, s);
    exp2 -= s;
  }

  static ScaledInterval mul(const ScaledInterval& a, const ScaledInterval& b,
                            long max_bits) {
    ScaledInterval r{a.lo * b.lo, a.hi * b.hi, a.exp2 + b.exp2};
    r.normalize(max_bits);
    return r;
  }

  // [floor, ceil] bounds rescaled to exactly 2^-target_exp2.
  std::pair<mpz_class, mpz_class> at_scale(long target_exp2) const {
    long s = target_exp2 - exp2;
    if (s >= 0) {
      mpz_class l, h;
      mpz_mul_2exp(l.get_mpz_t(), lo.get_mpz_t(), s);
      mpz_mul_2exp(h.get_mpz_t(), hi.get_mpz_t(), s);
      return {l, h};
    }
    return {shift_right_floor(lo, -s), shift_right_ceil(hi, -s)};
  }
};

// Enclosure of e at scale 2^prec via the factorial series, evaluated from the
// innermost term outward with floor division only.
ScaledInterval euler_e(long prec) {
  // term count: stop once floor(log2 m!) certainly exceeds prec + 4, so the
  // dropped tail 2/(m+1)! is below one ulp
  long m = 2, bits = 1;
  while (bits < prec + 4) {
    ++m;
    bits += static_cast<long>(mpz_sizeinbase(mpz_class(m).get_mpz_t(), 2)) - 1;
  }
  // sum 1/k! from the innermost term outward: acc_k = 1 + acc_{k+1}/(k+1)
  // telescopes to the full series
  mpz_class unit;
  mpz_setbit(unit.get_mpz_t(), prec);
  mpz_class acc = unit;
  for (long k = m; k >= 1; --k) {
    mpz_class t;
    mpz_fdiv_q_ui(t.get_mpz_t(), acc.get_mpz_t(), k);
    acc = unit + t;
  }
  // m floor divisions each lose < 1 ulp downward; tail < 2 ulps
  return {acc, acc + m + 2, prec};
}

ScaledInterval exp_neg(unsigned long r, long prec) {
  long work = prec + 96;
  ScaledInterval e = euler_e(work);
  // e^r by binary exponentiation, then reciprocal
  ScaledInterval acc{mpz_class(1), mpz_class(1), 0};
  ScaledInterval base = e;
  unsigned long k = r;
  long max_bits = work + 64;
  while (k > 0) {
    if (k & 1) acc = ScaledInterval::mul(acc, base, max_bits);
    base = ScaledInterval::mul(base, base, max_bits);
    k >>= 1;
  }
  // 1/v for v in [lo, hi]*2^-e2: choose the output scale so the mantissa
  // keeps ~work significant bits.
  long lo_bits = static_cast<long>(mpz_sizeinbase(acc.lo.get_mpz_t(), 2));
  long s = work + lo_bits - acc.exp2 + 2;
  mpz_class num;
  mpz_setbit(num.get_mpz_t(), acc.exp2 + s);
  ScaledInterval inv{div_floor(num, acc.hi), div_ceil(num, acc.lo), s};
  inv.normalize(max_bits);
  return inv;
}

// Enclosure at scale 2^prec of gamma(a/b) for a/b in (1, 2), b >= 2,
// gcd(a, b) = 1.  Uses the split gamma = (lower incomplete at cutoff r) +
// (upper tail), with the lower part evaluated as
//   r^z e^-r * sum_k r^k / (z (z+1) ... (z+k))
// in directed integer arithmetic; the upper tail is bounded by (r+1) e^-r
// and absorbed into the upper bound.
std::pair<mpz_class, mpz_class> gamma_base(unsigned long a, unsigned long b,
                                           long prec) {
  long pser = prec + 96;
  unsigned long r =
      static_cast<unsigned long>(((pser + 64) * 693148LL) / 1000000LL) + 2;

  // series sum at scale 2^pser
  mpz_class scale;
  mpz_setbit(scale.get_mpz_t(), pser);
  mpz_class num0 = scale * b;
  mpz_class ulo = div_floor(num0, mpz_class(a));
  mpz_class uhi = div_ceil(num0, mpz_class(a));
  mpz_class slo = ulo, shi = uhi;
  mpz_class rb = mpz_class(r) * b;
  mpz_class divisor(a);
  const unsigned long max_terms = 64 * (pser + r) + 1024;
  unsigned long k = 0;
  while (true) {
    ++k;
    if (k > max_terms) throw Error("gamma series failed to converge");
    divisor += b;
    ulo = div_floor(ulo * rb, divisor);
    uhi = div_ceil(uhi * rb, divisor);
    slo += ulo;
    shi += uhi;
    if (k >= 2 * r && uhi <= 1) {
      shi += 2;  // geometric tail once the term ratio is below 1/2
      break;
    }
  }
  ScaledInterval sum{slo, shi, pser};

  // r^(a/b) = r * r^(c/b) with c = a - b in [0, b)
  unsigned long c = a - b;
  ScaledInterval rpow{mpz_class(r), mpz_class(r), 0};
  if (c != 0) {
    mpz_class arg;
    mpz_ui_pow_ui(arg.get_mpz_t(), r, c);
    mpz_mul_2exp(arg.get_mpz_t(), arg.get_mpz_t(),
                 pser * static_cast<long>(b));
    mpz_class root;
    mpz_root(root.get_mpz_t(), arg.get_mpz_t(), b);
    ScaledInterval frac{root, root + 1, pser};
    rpow = ScaledInterval::mul(rpow, frac, pser + 64);
  }

  ScaledInterval er = exp_neg(r, pser);
  long max_bits = pser + 64;
  ScaledInterval g = ScaledInterval::mul(ScaledInterval::mul(rpow, er, max_bits),
                                         sum, max_bits);
  auto [lo, hi] = g.at_scale(prec);
  // upper incomplete tail: (r+1) e^-r < 2^-(pser+64) * (r+1) -- below one ulp
  hi += 1;
  return {lo, hi};
}

struct Key {
  unsigned long num, den;
  long bits;
  bool operator<(const Key& o) const {
    return std::tie(num, den, bits) < std::tie(o.num, o.den, o.bits);
  }
};

std::mutex g_cache_mutex;
std::map<Key, std::pair<mpz_class, mpz_class>> g_value_cache;  // at frac_bits
std::map<Key, std::pair<mpz_class, mpz_class>> g_base_cache;   // at 2^-bits

std::pair<mpz_class, mpz_class> gamma_base_cached(unsigned long a,
                                                  unsigned long b, long prec) {
  Key key{a, b, prec};
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_base_cache.find(key);
    if (it != g_base_cache.end()) return it->second;
  }
  auto value = gamma_base(a, b, prec);
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_base_cache.emplace(key, std::move(value)).first->second;
}

// Certified enclosure of gamma(num/den) at scale 2^frac_bits.
std::pair<mpz_class, mpz_class> gamma_core(unsigned long num,
                                           unsigned long den, long frac_bits) {
  Key key{num, den, frac_bits};
  {
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto it = g_value_cache.find(key);
    if (it != g_value_cache.end()) return it->second;
  }

  std::pair<mpz_class, mpz_class> result;
  if (den == 1) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), num - 1);
    mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), frac_bits);
    result = {f, f};
  } else {
    // Reduce into (1, 2) with the recurrence, keeping the lift factor as an
    // exact rational so the only approximation is the base value.
    unsigned long q = num / den;
    mpz_class lift_num(1), lift_den(1);
    unsigned long base_num;
    if (q >= 1) {
      unsigned long steps = q - 1;
      base_num = num - steps * den;
      for (unsigned long j = 1; j <= steps; ++j) {
        mpz_mul_ui(lift_num.get_mpz_t(), lift_num.get_mpz_t(), num - j * den);
      }
      mpz_ui_pow_ui(lift_den.get_mpz_t(), den, steps);
    } else {
      // argument below 1: gamma(z) = gamma(z + 1) / z
      if (num > ULONG_MAX - den) throw OverflowGuard("gamma argument");
      base_num = num + den;
      lift_num = den;
      lift_den = num;
    }

    long lift_bits = static_cast<long>(mpz_sizeinbase(lift_num.get_mpz_t(), 2)) -
                     static_cast<long>(mpz_sizeinbase(lift_den.get_mpz_t(), 2));
    for (int attempt = 0;; ++attempt) {
      long prec = frac_bits + 80 + std::max(0L, lift_bits + 8) + 64 * attempt;
      prec = ((prec + 1023) / 1024) * 1024;  // bucket for base-cache reuse
      auto [blo, bhi] = gamma_base_cached(base_num, den, prec);
      mpz_class lo = div_floor(blo * lift_num, lift_den);
      mpz_class hi = div_ceil(bhi * lift_num, lift_den);
      lo = shift_right_floor(lo, prec - frac_bits);
      hi = shift_right_ceil(hi, prec - frac_bits);
      if (hi - lo <= 4) {
        result = {std::move(lo), std::move(hi)};
        break;
      }
      if (attempt >= 3) throw Error("gamma enclosure failed to tighten");
    }
  }

  std::lock_guard<std::mutex> lock(g_cache_mutex);
  return g_value_cache.emplace(key, std::move(result)).first->second;
}

}  // namespace

FixedPoint gamma_fixed(const Rational& x, long frac_bits) {
  if (x.den == 1) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), x.num - 1);
    mpz_mul_2exp(f.get_mpz_t(), f.get_mpz_t(), frac_bits);
    return {std::move(f), frac_bits};
  }
  long guarded = frac_bits + 8;
  auto [lo, hi] = gamma_core(x.num, x.den, guarded);
  mpz_class mid = shift_right_floor(lo + hi, 1);
  // round to nearest at the requested precision
  mid += mpz_class(1) << 7;
  return {shift_right_floor(mid, 8), frac_bits};
}

FixedInterval gamma_interval(const Rational& x, long frac_bits) {
  auto [lo, hi] = gamma_core(x.num, x.den, frac_bits);
  return {FixedPoint(std::move(lo), frac_bits),
          FixedPoint(std::move(hi), frac_bits)};
}

void gamma_cache_clear() {
  std::lock_guard<std::mutex> lock(g_cache_mutex);
  g_value_cache.clear();
  g_base_cache.clear();
}

}  // namespace heig

#include "ldlt.hpp"

#include <atomic>
#include <exception>
#include <thread>

#include "assignment.hpp"

namespace heig {

namespace {

// ratio = trunc(value / pivot) at the buffer precision: both operands already
// carry k2 fractional bits, so scale the numerator back up before dividing.
inline void half_ratio(mpz_class& out, const mpz_class& value,
                       const mpz_class& pivot, long k2) {
  mpz_class num;
  mpz_mul_2exp(num.get_mpz_t(), value.get_mpz_t(), k2);
  mpz_tdiv_q(out.get_mpz_t(), num.get_mpz_t(), pivot.get_mpz_t());
}

FixedPoint fold_pivots(const std::vector<mpz_class>& pivots, long k) {
  FixedPoint det = FixedPoint::one(k);
  for (const mpz_class& p : pivots)
    det = FixedPoint::mul(det, FixedPoint(p, k), k);
  return det;
}

}  // namespace

FixedPoint ldlt_det_serial(const HankelMatrix& m, const FixedPoint& x,
                           LdltCapture* capture) {
  const long n = m.order();
  const long k = m.frac_bits();
  const long k2 = k / 2;
  if (x.frac_bits() != k) throw PrecisionMismatch(x.frac_bits(), k);

  // lower-triangle workspace, one vector per column (rows c..n-1)
  std::vector<std::vector<mpz_class>> cols(n);
  for (long c = 0; c < n; ++c) {
    cols[c].resize(n - c);
    for (long r = c; r < n; ++r) cols[c][r - c] = m.entry(r, c).mantissa();
    cols[c][0] -= x.mantissa();
  }

  std::vector<mpz_class> pivots(n);
  std::vector<mpz_class> values(n), ratios(n);  // row-indexed buffers
  for (long p = 0; p < n; ++p) {
    const mpz_class& pivot = cols[p][0];
    if (pivot == 0) throw ZeroPivot(p, k);
    pivots[p] = pivot;
    if (p == n - 1) break;

    for (long r = p; r < n; ++r)
      mpz_tdiv_q_2exp(values[r].get_mpz_t(), cols[p][r - p].get_mpz_t(), k2);
    if (values[p] == 0) throw ZeroPivot(p, k);
    for (long r = p + 1; r < n; ++r)
      half_ratio(ratios[r], values[r], values[p], k2);
    if (capture) {
      std::vector<FixedPoint> col;
      for (long r = p + 1; r < n; ++r) col.emplace_back(ratios[r], k2);
      capture->ratio_columns.push_back(std::move(col));
    }

    for (long c = p + 1; c < n; ++c) {
      const mpz_class& mult = values[c];
      std::vector<mpz_class>& col = cols[c];
      for (long r = c; r < n; ++r)
        mpz_submul(col[r - c].get_mpz_t(), mult.get_mpz_t(),
                   ratios[r].get_mpz_t());
    }
  }

  if (capture)
    for (long p = 0; p < n; ++p) capture->pivots.emplace_back(pivots[p], k);
  return fold_pivots(pivots, k);
}

FixedInterval ldlt_det_interval(const HankelIntervalMatrix& m,
                                const FixedInterval& shift) {
  const long n = m.order();
  const long k = m.frac_bits();
  const long k2 = k / 2;
  if (shift.frac_bits() != k) throw PrecisionMismatch(shift.frac_bits(), k);

  struct Bounds {
    mpz_class lo, hi;
  };
  std::vector<std::vector<Bounds>> cols(n);
  for (long c = 0; c < n; ++c) {
    cols[c].resize(n - c);
    for (long r = c; r < n; ++r) {
      cols[c][r - c].lo = m.entry(r, c).lo().mantissa();
      cols[c][r - c].hi = m.entry(r, c).hi().mantissa();
    }
    cols[c][0].lo -= shift.hi().mantissa();
    cols[c][0].hi -= shift.lo().mantissa();
  }

  FixedInterval det = FixedInterval::point(FixedPoint::one(k));
  std::vector<Bounds> values(n), ratios(n);
  for (long p = 0; p < n; ++p) {
    const Bounds& pivot = cols[p][0];
    det = FixedInterval::mul(
        det, FixedInterval(FixedPoint(pivot.lo, k), FixedPoint(pivot.hi, k)));
    if (p == n - 1) break;

    for (long r = p; r < n; ++r) {
      values[r].lo = shift_right_floor(cols[p][r - p].lo, k2);
      values[r].hi = shift_right_ceil(cols[p][r - p].hi, k2);
    }
    if (sgn(values[p].lo) <= 0 && sgn(values[p].hi) >= 0)
      throw ZeroPivot(p, k);
    for (long r = p + 1; r < n; ++r) {
      // directed corner quotients (divisor is sign-definite)
      bool first = true;
      for (const mpz_class* num : {&values[r].lo, &values[r].hi}) {
        for (const mpz_class* den : {&values[p].lo, &values[p].hi}) {
          mpz_class scaled;
          mpz_mul_2exp(scaled.get_mpz_t(), num->get_mpz_t(), k2);
          mpz_class qf = div_floor(scaled, *den);
          mpz_class qc = div_ceil(scaled, *den);
          if (first) {
            ratios[r].lo = qf;
            ratios[r].hi = qc;
            first = false;
          } else {
            if (qf < ratios[r].lo) ratios[r].lo = qf;
            if (qc > ratios[r].hi) ratios[r].hi = qc;
          }
        }
      }
    }

    for (long c = p + 1; c < n; ++c) {
      const Bounds& mult = values[c];
      std::vector<Bounds>& col = cols[c];
      for (long r = c; r < n; ++r) {
        // corner products carry exactly k fractional bits
        mpz_class p1 = mult.lo * ratios[r].lo;
        mpz_class p2 = mult.lo * ratios[r].hi;
        mpz_class p3 = mult.hi * ratios[r].lo;
        mpz_class p4 = mult.hi * ratios[r].hi;
        const mpz_class& mn = std::min({p1, p2, p3, p4});
        const mpz_class& mx = std::max({p1, p2, p3, p4});
        col[r - c].lo -= mx;
        col[r - c].hi -= mn;
      }
    }
  }
  return det;
}

namespace {

struct ParallelState {
  const HankelMatrix& m;
  const FixedPoint& x;
  long n, k, k2, workers;
  ColumnAssignment assignment;
  ColumnChannel& channel;
  std::vector<mpz_class> pivots;  // slot p written only by the owner of col p
  std::vector<TimingBreakdown> per_worker;
  std::atomic<bool> failed{false};
  std::mutex error_mutex;
  std::exception_ptr error;

  ParallelState(const HankelMatrix& m_, const FixedPoint& x_, long workers_,
                ColumnChannel& ch)
      : m(m_),
        x(x_),
        n(m_.order()),
        k(m_.frac_bits()),
        k2(m_.frac_bits() / 2),
        workers(workers_),
        assignment(m_.order(), workers_),
        channel(ch),
        pivots(m_.order()),
        per_worker(workers_) {}

  void fail(std::exception_ptr e) {
    {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = e;
    }
    failed.store(true);
    channel.poison();
  }
};

// Per-worker view of the current pipeline stage: the published column plus
// any ratio entries this worker had to recompute itself.
struct StageView {
  std::shared_ptr<const ColumnData> data;
  std::vector<mpz_class> ratio_tail;  // rows stage+1+delivered .. n-1
  long delivered = 0;

  const mpz_class& value(long row) const { return data->values[row - data->stage]; }
  const mpz_class& ratio(long row) const {
    long idx = row - data->stage - 1;
    return idx < delivered ? data->ratios[idx] : ratio_tail[idx - delivered];
  }
};

void worker_main(ParallelState& st, long rank) {
  try {
    const long n = st.n, k2 = st.k2;
    std::vector<long> owned = st.assignment.columns_of(rank);
    TimingBreakdown& tb = st.per_worker[rank];

    // own workspace: only owned columns are materialized
    std::vector<std::vector<mpz_class>> cols(n);
    for (long c : owned) {
      cols[c].resize(n - c);
      for (long r = c; r < n; ++r) cols[c][r - c] = st.m.entry(r, c).mantissa();
      cols[c][0] -= st.x.mantissa();
    }

    // Column 0 needs no communication: every worker derives it from the
    // source matrix, bit-identically.
    StageView cur;
    {
      mpz_class shifted = st.m.entry(0, 0).mantissa() - st.x.mantissa();
      if (shifted == 0) throw ZeroPivot(0, st.k);
      auto d = std::make_shared<ColumnData>();
      d->stage = 0;
      d->values.resize(n);
      mpz_tdiv_q_2exp(d->values[0].get_mpz_t(), shifted.get_mpz_t(), k2);
      for (long r = 1; r < n; ++r)
        mpz_tdiv_q_2exp(d->values[r].get_mpz_t(),
                        st.m.entry(r, 0).mantissa().get_mpz_t(), k2);
      if (d->values[0] == 0 && n > 1) throw ZeroPivot(0, st.k);
      d->ratios.resize(n - 1);
      for (long r = 1; r < n; ++r)
        half_ratio(d->ratios[r - 1], d->values[r], d->values[0], k2);
      cur.data = std::move(d);
      cur.delivered = n - 1;
      if (st.assignment.owner(0) == rank) st.pivots[0] = std::move(shifted);
    }

    auto apply_range = [&](const StageView& view, long start_col,
                           long end_col) {
      long stage = view.data->stage;
      for (long c : owned) {
        if (c < start_col || c > end_col) continue;
        const mpz_class& mult = view.value(c);
        std::vector<mpz_class>& col = cols[c];
        for (long r = c; r < n; ++r)
          mpz_submul(col[r - c].get_mpz_t(), mult.get_mpz_t(),
                     view.ratio(r).get_mpz_t());
      }
      (void)stage;
    };

    for (long p = 0; p + 1 < n; ++p) {
      if (st.failed.load()) return;
      long next_col = p + 1;
      Stopwatch sw;
      if (st.assignment.owner(next_col) == rank) {
        apply_range(cur, next_col, next_col);
        const mpz_class& pivot = cols[next_col][0];
        if (pivot == 0) throw ZeroPivot(next_col, st.k);
        st.pivots[next_col] = pivot;

        auto next = std::make_shared<ColumnData>();
        next->stage = next_col;
        next->values.resize(n - next_col);
        for (long r = next_col; r < n; ++r)
          mpz_tdiv_q_2exp(next->values[r - next_col].get_mpz_t(),
                          cols[next_col][r - next_col].get_mpz_t(), k2);
        if (next->values[0] == 0 && next_col < n - 1)
          throw ZeroPivot(next_col, st.k);
        next->ratios.resize(n - next_col - 1);
        for (long r = next_col + 1; r < n; ++r)
          half_ratio(next->ratios[r - next_col - 1],
                     next->values[r - next_col], next->values[0], k2);
        tb.record(Phase::Compute, sw.lap());

        st.channel.publish(next);
        apply_range(cur, next_col + 1, n - 1);
        tb.record(Phase::Compute, sw.lap());
        st.channel.finish_publish(next_col);
        tb.record(Phase::NetWait, sw.lap());

        cur = StageView{};
        cur.data = std::move(next);
        cur.delivered = static_cast<long>(cur.data->ratios.size());
      } else {
        apply_range(cur, next_col, n - 1);
        tb.record(Phase::Compute, sw.lap());
        AwaitResult res = st.channel.await(next_col);
        tb.record(Phase::NetWait, sw.lap());

        StageView next;
        next.data = std::move(res.data);
        next.delivered = res.ratios_delivered;
        long total = static_cast<long>(next.data->ratios.size());
        if (next.delivered < total) {
          next.ratio_tail.resize(total - next.delivered);
          for (long i = next.delivered; i < total; ++i)
            half_ratio(next.ratio_tail[i - next.delivered],
                       next.data->values[i + 1], next.data->values[0], k2);
          tb.record(Phase::Div, sw.lap());
        }
        cur = std::move(next);
      }
    }
  } catch (...) {
    st.fail(std::current_exception());
  }
}

}  // namespace

ParallelDetResult ldlt_det_parallel(const HankelMatrix& m, const FixedPoint& x,
                                    long workers, ColumnChannel& channel) {
  if (workers < 1) throw InvalidConfig("need at least one worker");
  if (x.frac_bits() != m.frac_bits())
    throw PrecisionMismatch(x.frac_bits(), m.frac_bits());

  Stopwatch wall;
  channel.reset(m.order(), workers);
  ParallelState st(m, x, workers, channel);

  std::vector<std::thread> threads;
  threads.reserve(workers);
  for (long w = 0; w < workers; ++w)
    threads.emplace_back(worker_main, std::ref(st), w);
  for (auto& t : threads) t.join();

  if (st.error) std::rethrow_exception(st.error);

  ParallelDetResult out;
  out.determinant = fold_pivots(st.pivots, m.frac_bits());
  for (const TimingBreakdown& tb : st.per_worker) out.timing.add(tb);
  out.timing.compute_seconds /= workers;
  out.timing.net_wait_seconds /= workers;
  out.timing.div_seconds /= workers;
  out.timing.total_seconds = wall.lap();
  return out;
}

}  // namespace heig

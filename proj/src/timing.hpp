#pragma once

#include <chrono>

namespace heig {

enum class Phase { Compute, NetWait, Div };

/// Accumulated determinant-time accounting: main computation, time blocked on
/// column delivery, and leftover column-ratio divisions performed by
/// receivers.  The three phases never exceed total_seconds; the remainder is
/// bookkeeping overhead.  When several workers run, the phase fields hold the
/// per-worker average so they stay comparable to the wall-clock total.
struct TimingBreakdown {
  double compute_seconds = 0.0;
  double net_wait_seconds = 0.0;
  double div_seconds = 0.0;
  double total_seconds = 0.0;

  void record(Phase phase, double seconds) {
    if (seconds < 0) seconds = 0;
    switch (phase) {
      case Phase::Compute: compute_seconds += seconds; break;
      case Phase::NetWait: net_wait_seconds += seconds; break;
      case Phase::Div: div_seconds += seconds; break;
    }
  }

  void add(const TimingBreakdown& o) {
    compute_seconds += o.compute_seconds;
    net_wait_seconds += o.net_wait_seconds;
    div_seconds += o.div_seconds;
    total_seconds += o.total_seconds;
  }

  double accounted_seconds() const {
    return compute_seconds + net_wait_seconds + div_seconds;
  }
};

/// Steady-clock stopwatch for phase accounting.
class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double lap() {
    auto now = std::chrono::steady_clock::now();
    double s = std::chrono::duration<double>(now - start_).count();
    start_ = now;
    return s;
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace heig

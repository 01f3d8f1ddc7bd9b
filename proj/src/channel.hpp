#pragma once

#include <gmpxx.h>

#include <chrono>
#include <condition_variable>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

namespace heig {

/// One finished column as published by its owner: the column values and the
/// column-over-pivot ratios, both at half the workspace fractional precision.
/// `values[0]` is the pivot entry of the column; `ratios[i]` corresponds to
/// row stage+1+i.
struct ColumnData {
  long stage = 0;
  std::vector<mpz_class> values;
  std::vector<mpz_class> ratios;
};

struct AwaitResult {
  std::shared_ptr<const ColumnData> data;
  // Number of leading `ratios` entries that were delivered; receivers
  // recompute the remainder themselves.
  long ratios_delivered = 0;
};

/// Inter-worker publication of finished columns.  One pipeline stage has a
/// single writer (the column owner) and any number of readers.  A channel
/// instance serves one determinant evaluation at a time; reset() clears all
/// stage state.
class ColumnChannel {
 public:
  virtual ~ColumnChannel() = default;

  virtual void reset(long n, long workers) = 0;

  /// Owner side, non-blocking: makes the column available and starts the
  /// (possibly simulated) broadcast of the ratio entries.
  virtual void publish(std::shared_ptr<const ColumnData> data) = 0;

  /// Owner side: the owner's foreground work for this stage is done; no
  /// further ratio entries will be offered.  Blocks until in-flight
  /// transmissions drain.
  virtual void finish_publish(long stage) = 0;

  /// Receiver side: blocks until the stage's column is delivered and the
  /// ratio transmission settled.
  virtual AwaitResult await(long stage) = 0;

  /// Unblocks every waiter with a failure (error propagation path).
  virtual void poison() = 0;
};

/// In-process publication through shared memory: delivery is immediate, a
/// receiver only ever blocks while the owner is still preparing the column,
/// and every ratio entry is always delivered.
class SharedMemoryChannel : public ColumnChannel {
 public:
  void reset(long n, long workers) override;
  void publish(std::shared_ptr<const ColumnData> data) override;
  void finish_publish(long stage) override;
  AwaitResult await(long stage) override;
  void poison() override;

 private:
  struct Slot {
    std::shared_ptr<const ColumnData> data;
    long consumers = 0;
  };
  std::mutex mutex_;
  std::condition_variable cv_;
  std::map<long, Slot> slots_;
  long workers_ = 1;
  bool poisoned_ = false;
};

/// Shared-memory publication with a simulated wire: a serial link of fixed
/// bandwidth and latency.  The column is always sent in full; ratio entries
/// are sent in chunks only while the owner's foreground computation is still
/// running, and receivers compute whatever was cut off.  Waits are realized
/// as real sleeps so wall-clock behavior matches the configured link.
class ThrottledChannel : public ColumnChannel {
 public:
  ThrottledChannel(double bytes_per_second, double latency_seconds,
                   long min_chunk_entries = 64);

  void reset(long n, long workers) override;
  void publish(std::shared_ptr<const ColumnData> data) override;
  void finish_publish(long stage) override;
  AwaitResult await(long stage) override;
  void poison() override;

 private:
  struct Slot {
    std::shared_ptr<const ColumnData> data;
    std::vector<double> chunk_starts;   // seconds since reset
    std::vector<double> chunk_ends;
    std::vector<long> chunk_counts;     // cumulative entries after chunk i
    double column_delivered = 0.0;
    bool finalized = false;
    long ratios_sent = 0;
    double drained_at = 0.0;
    long consumers = 0;
  };

  double now() const;
  void sleep_until_mark(double mark);
  static double payload_bytes(const mpz_class& v);

  double bandwidth_;
  double latency_;
  long min_chunk_;
  std::chrono::steady_clock::time_point epoch_;
  double wire_free_at_ = 0.0;

  std::mutex mutex_;
  std::condition_variable cv_;
  std::map<long, Slot> slots_;
  long workers_ = 1;
  bool poisoned_ = false;
};

}  // namespace heig

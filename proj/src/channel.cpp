#include "channel.hpp"

#include <algorithm>
#include <thread>

#include "errors.hpp"

namespace heig {

void SharedMemoryChannel::reset(long /*n*/, long workers) {
  std::lock_guard<std::mutex> lock(mutex_);
  slots_.clear();
  workers_ = workers;
  poisoned_ = false;
}

void SharedMemoryChannel::publish(std::shared_ptr<const ColumnData> data) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (workers_ == 1) return;  // no receivers
  slots_[data->stage].data = std::move(data);
  cv_.notify_all();
}

void SharedMemoryChannel::finish_publish(long /*stage*/) {
  // Delivery is immediate; there is nothing to drain.
}

AwaitResult SharedMemoryChannel::await(long stage) {
  std::unique_lock<std::mutex> lock(mutex_);
  cv_.wait(lock, [&] {
    if (poisoned_) return true;
    auto it = slots_.find(stage);
    return it != slots_.end() && it->second.data != nullptr;
  });
  if (poisoned_) throw ChannelFailure("poisoned");
  auto it = slots_.find(stage);
  AwaitResult r{it->second.data,
                static_cast<long>(it->second.data->ratios.size())};
  if (++it->second.consumers >= workers_ - 1) slots_.erase(it);
  return r;
}

void SharedMemoryChannel::poison() {
  std::lock_guard<std::mutex> lock(mutex_);
  poisoned_ = true;
  cv_.notify_all();
}

ThrottledChannel::ThrottledChannel(double bytes_per_second,
                                   double latency_seconds,
                                   long min_chunk_entries)
    : bandwidth_(bytes_per_second),
      latency_(latency_seconds),
      min_chunk_(std::max(1L, min_chunk_entries)),
      epoch_(std::chrono::steady_clock::now()) {}

double ThrottledChannel::now() const {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       epoch_)
      .count();
}

void ThrottledChannel::sleep_until_mark(double mark) {
  auto deadline =
      epoch_ + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                   std::chrono::duration<double>(mark));
  std::this_thread::sleep_until(deadline);
}

double ThrottledChannel::payload_bytes(const mpz_class& v) {
  // serialized mantissa plus a small per-entry header
  return static_cast<double>((mpz_sizeinbase(v.get_mpz_t(), 2) + 7) / 8 + 8);
}

void ThrottledChannel::reset(long /*n*/, long workers) {
  std::lock_guard<std::mutex> lock(mutex_);
  slots_.clear();
  workers_ = workers;
  poisoned_ = false;
  wire_free_at_ = 0.0;
  epoch_ = std::chrono::steady_clock::now();
}

void ThrottledChannel::publish(std::shared_ptr<const ColumnData> data) {
  std::lock_guard<std::mutex> lock(mutex_);
  if (workers_ == 1) return;  // no receivers
  Slot& slot = slots_[data->stage];

  double column_bytes = 0.0;
  for (const mpz_class& v : data->values) column_bytes += payload_bytes(v);

  double t = now();
  double start = std::max(wire_free_at_, t);
  double column_sent = start + column_bytes / bandwidth_;
  slot.column_delivered = column_sent + latency_;

  // Ratio entries follow the column on the same wire, split into chunks so a
  // cutoff leaves a usable prefix.  Chunk size: at least min_chunk_ entries,
  // otherwise a sixteenth of what remains.
  long total = static_cast<long>(data->ratios.size());
  long offset = 0;
  double clock = column_sent;
  while (offset < total) {
    long remaining = total - offset;
    long count = std::max(min_chunk_, (remaining + 15) / 16);
    count = std::min(count, remaining);
    double bytes = 0.0;
    for (long i = offset; i < offset + count; ++i)
      bytes += payload_bytes(data->ratios[i]);
    slot.chunk_starts.push_back(clock);
    clock += bytes / bandwidth_;
    slot.chunk_ends.push_back(clock);
    offset += count;
    slot.chunk_counts.push_back(offset);
  }
  slot.data = std::move(data);
  cv_.notify_all();
}

void ThrottledChannel::finish_publish(long stage) {
  double drained;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (workers_ == 1) return;
    auto it = slots_.find(stage);
    if (it == slots_.end()) throw ChannelFailure("finish before publish");
    Slot& slot = it->second;
    double t = now();
    // a chunk counts as sent if its transmission started before the owner's
    // foreground work completed
    long sent_chunks = 0;
    double last_end = slot.column_delivered - latency_;
    for (size_t i = 0; i < slot.chunk_starts.size(); ++i) {
      if (slot.chunk_starts[i] <= t) {
        sent_chunks = static_cast<long>(i + 1);
        last_end = slot.chunk_ends[i];
      } else {
        break;
      }
    }
    slot.ratios_sent = sent_chunks == 0 ? 0 : slot.chunk_counts[sent_chunks - 1];
    slot.drained_at = std::max(slot.column_delivered, last_end + latency_);
    slot.finalized = true;
    wire_free_at_ = last_end;
    drained = slot.drained_at;
    cv_.notify_all();
  }
  sleep_until_mark(drained);
}

AwaitResult ThrottledChannel::await(long stage) {
  AwaitResult r;
  double drained;
  {
    std::unique_lock<std::mutex> lock(mutex_);
    cv_.wait(lock, [&] {
      if (poisoned_) return true;
      auto it = slots_.find(stage);
      return it != slots_.end() && it->second.finalized;
    });
    if (poisoned_) throw ChannelFailure("poisoned");
    auto it = slots_.find(stage);
    r.data = it->second.data;
    r.ratios_delivered = it->second.ratios_sent;
    drained = it->second.drained_at;
    if (++it->second.consumers >= workers_ - 1) slots_.erase(it);
  }
  sleep_until_mark(drained);
  return r;
}

void ThrottledChannel::poison() {
  std::lock_guard<std::mutex> lock(mutex_);
  poisoned_ = true;
  cv_.notify_all();
}

}  // namespace heig

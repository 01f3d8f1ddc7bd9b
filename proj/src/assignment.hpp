#pragma once

#include <vector>

#include "errors.hpp"

namespace heig {

/// Reflected round-robin (boustrophedon) mapping of matrix columns to
/// workers: 0, 1, ..., S-1, S-1, ..., 1, 0, repeating.  Later columns carry
/// less trailing work, so the reflection keeps per-worker totals within one
/// column of each other.
class ColumnAssignment {
 public:
  ColumnAssignment(long n, long workers) {
    if (n < 1) throw InvalidConfig("need at least one column");
    if (workers < 1) throw InvalidConfig("need at least one worker");
    owners_.resize(n);
    for (long col = 0; col < n; ++col) {
      long r = col % (2 * workers);
      owners_[col] = r < workers ? r : 2 * workers - 1 - r;
    }
  }

  long owner(long col) const { return owners_[col]; }
  const std::vector<long>& owners() const { return owners_; }

  std::vector<long> columns_of(long worker) const {
    std::vector<long> cols;
    for (long c = 0; c < static_cast<long>(owners_.size()); ++c)
      if (owners_[c] == worker) cols.push_back(c);
    return cols;
  }

 private:
  std::vector<long> owners_;
};

}  // namespace heig

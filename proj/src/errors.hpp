#pragma once

#include <stdexcept>
#include <string>

namespace heig {

// Base for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Binary operation received operands whose fractional precisions differ.
// Mixed precisions must be reconciled explicitly by the caller.
class PrecisionMismatch : public Error {
 public:
  PrecisionMismatch(long a, long b)
      : Error("fractional precision mismatch: " + std::to_string(a) + " vs " +
              std::to_string(b)) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NonPositiveInput : public Error {
 public:
  explicit NonPositiveInput(const std::string& ctx)
      : Error("non-positive input: " + ctx) {}
};

class MalformedInput : public Error {
 public:
  explicit MalformedInput(const std::string& ctx)
      : Error("malformed input: " + ctx) {}
};

class IntervalContainsZero : public Error {
 public:
  IntervalContainsZero() : Error("divisor interval contains zero") {}
};

// A pivot (or the column value derived from it) truncated to zero, or a pivot
// interval straddles zero where a division is required.  This signals
// insufficient working precision; the eigenvalue driver reacts by escalating
// precision rather than aborting.
class ZeroPivot : public Error {
 public:
  ZeroPivot(long pivot_index, long frac_bits)
      : Error("zero pivot at column " + std::to_string(pivot_index) +
              " with " + std::to_string(frac_bits) + " fractional bits"),
        pivot_index(pivot_index),
        frac_bits(frac_bits) {}
  long pivot_index;
  long frac_bits;
};

// Two successive root-finder iterates were bitwise equal before the leading
// digits stabilized: the working precision is exhausted.
class NoProgress : public Error {
 public:
  NoProgress() : Error("secant iteration stalled before digit stabilization") {}
};

// A probe determinant came out non-positive below the smallest eigenvalue,
// which the theory forbids; only rounding at insufficient precision can
// produce it.
class SignViolation : public Error {
 public:
  explicit SignViolation(const std::string& ctx)
      : Error("determinant sign violation: " + ctx) {}
};

class PrecisionCapExceeded : public Error {
 public:
  PrecisionCapExceeded(long requested, long cap)
      : Error("precision escalation to " + std::to_string(requested) +
              " bits exceeds cap " + std::to_string(cap)) {}
};

class SizeGuard : public Error {
 public:
  explicit SizeGuard(const std::string& ctx) : Error("size guard: " + ctx) {}
};

class OverflowGuard : public Error {
 public:
  explicit OverflowGuard(const std::string& ctx)
      : Error("overflow guard: " + ctx) {}
};

class InvalidConfig : public Error {
 public:
  explicit InvalidConfig(const std::string& ctx)
      : Error("invalid configuration: " + ctx) {}
};

// Interval verification definitively contradicted the converged value.  This
// should never happen; it indicates a defect in the solver.
class Refuted : public Error {
 public:
  explicit Refuted(const std::string& ctx) : Error("refuted: " + ctx) {}
};

class ChannelFailure : public Error {
 public:
  explicit ChannelFailure(const std::string& ctx)
      : Error("column channel failure: " + ctx) {}
};

}  // namespace heig

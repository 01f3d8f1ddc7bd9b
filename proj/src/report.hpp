#pragma once

#include <string>

#include "driver.hpp"

namespace heig {

/// Stable JSON schema:
/// {"n", "beta", "k_bits", "kv_bits", "eigenvalue", "verified", "iterations",
///  "condition_lower_bound", "timing": {"total_s", "compute_s", "net_s",
///  "div_s"}, "workers"}
/// Decimal quantities are strings: they routinely exceed any machine float
/// range.
std::string to_json(const RunResult& r, int indent = 2);

/// Inverse of to_json for the schema fields.
RunResult from_json(const std::string& text);

/// Human-readable run summary: eigenvalue, precision, iterations,
/// verification status, and the phase percentage breakdown.
std::string summary_text(const RunResult& r);

}  // namespace heig

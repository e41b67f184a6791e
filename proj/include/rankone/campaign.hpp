#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rankone/catalog.hpp"
#include "rankone/sphericity.hpp"

namespace rankone {

inline constexpr const char* kToolVersion = "1.0.0";

/// Outcome of one executed catalog case. Every field except elapsed_seconds
/// is deterministic for a fixed seed; elapsed_seconds is wall time and is
/// never serialized into reports.
struct CaseResult {
  std::string case_id;
  std::string theorem_id;
  std::string family;  // "so", "su", "sp", "f4-model"
  std::size_t n = 0;
  std::vector<std::pair<std::string, std::string>> params;
  std::string expected;  // expected status name
  std::string computed;  // computed status name, or "error: <cause>"
  std::string reason;    // criterion reason; empty on errors
  /// Named dimension report: candidate and split-part dimensions, complement
  /// dimension where the criterion defines one, module dimension for action
  /// cases.
  std::vector<std::pair<std::string, std::size_t>> dims;
  /// Tangent-span ranks at the orbit oracle's sample schedule, in schedule
  /// order; empty when no oracle ran.
  std::vector<std::size_t> ranks_at_samples;
  /// For a deficient orbit verdict: the witness point (exact rational
  /// coordinates), its rank and the rank a transitive action would need.
  std::vector<std::string> witness;
  std::size_t witness_rank = 0;
  std::size_t required_rank = 0;
  std::string status;  // "PASS", "FAIL" or "DISCREPANCY-CANDIDATE"
  double elapsed_seconds = 0.0;
};

/// Deterministic record of one campaign: all case results in catalog order
/// plus summary counts. Two runs with identical inputs serialize to identical
/// bytes (elapsed times are excluded from serialization).
struct Report {
  std::string tool_version = kToolVersion;
  std::uint64_t seed = 0;
  std::string theorem_id;
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::vector<CaseResult> results;
  std::size_t pass_count = 0;
  std::size_t fail_count = 0;
  std::size_t discrepancy_count = 0;
};

/// Execute one catalog case against a prebuilt ambient algebra. Exceptions
/// from construction or criteria are captured as computed = "error: <cause>".
/// Asserted cases get status PASS exactly when computed equals expected;
/// discrepancy probes always get status DISCREPANCY-CANDIDATE.
CaseResult run_case(const AmbientAlgebra& alg, const TableCase& c,
                    std::uint64_t seed);

/// Run a table campaign over an inclusive rank range (the exceptional tables
/// ignore the range and run once). The orthogonal reductive table also runs
/// the non-asserting discrepancy probes at each rank. Cases may execute in
/// parallel (`threads` workers; 0 resolves VERIFY_THREADS, then the OpenMP
/// default), but results always appear in deterministic catalog order.
/// Throws std::invalid_argument on unknown ids or out-of-range ranks.
Report run_campaign(const std::string& theorem_id, std::size_t n_min,
                    std::size_t n_max, std::uint64_t seed,
                    std::size_t threads);

/// Serial reference runner with the identical contract: used to validate
/// that parallel execution changes nothing but wall time.
Report run_campaign_serial(const std::string& theorem_id, std::size_t n_min,
                           std::size_t n_max, std::uint64_t seed);

/// The non-asserting discrepancy scan for one family and rank: every probe
/// is evaluated and reported with status DISCREPANCY-CANDIDATE.
std::vector<CaseResult> run_discrepancy_scan(Family family, std::size_t n,
                                             std::uint64_t seed);

}  // namespace rankone

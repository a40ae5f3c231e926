#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "hyperham/harness/json.hpp"

namespace hyperham::harness {

inline constexpr const char* kToolVersion = "hyperham 0.1.0";

/// FNV-1a over the bytes, as 16 hex digits.
std::string content_digest(std::string_view bytes);

struct ExperimentReport {
  std::string command;
  std::string input_digest;
  json parameters = json::object();
  json results = json::object();
  std::int64_t wall_ms = 0;
  std::uint64_t nodes_explored = 0;
  std::string version = kToolVersion;
  bool passed = true;
  /// Set when some search ran out of budget; the suite then fails with exit code 2.
  bool undecided = false;

  json to_json() const;
};

struct SuiteOptions {
  int jobs = 1;
  bool deterministic = true;
  std::optional<std::chrono::milliseconds> budget;
  /// Also run every member without parity pruning.
  bool unpruned_cross_check = true;
  /// Force-built Bbar members with even |A| for n ∈ kN.
  bool controls = true;
};

/**
 * For every n ∈ (k/2)N with 3k/2 <= n <= n_max and every family member: the
 * certificate, its check, and the exhaustive solver verdicts. Controls record
 * whatever the solver finds; any cycle they yield must split into two perfect matchings.
 */
ExperimentReport run_prop12_suite(int k, int n_max, const SuiteOptions& options = {});

/// Rows (n, formula, brute, argmax) for n ∈ (k/2)N, 3k/2 <= n <= n_max. The formula
/// column is null unless d = k-1, and must then equal the brute value.
ExperimentReport run_threshold_scan(int k, int n_max, int d, const SuiteOptions& options = {});

}  // namespace hyperham::harness

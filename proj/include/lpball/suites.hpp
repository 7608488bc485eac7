// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lpball/stats.hpp"

namespace lpball {

/// Overrides for a verification suite. Unset fields use the suite's own
/// defaults, which cover the acceptance parameter grid.
struct SuiteConfig {
  std::optional<std::size_t> n;
  std::optional<double> p;
  std::optional<std::size_t> count;
  double alpha = 0.01;
  unsigned threads = 1;
};

struct TestReport {
  std::string suite;
  std::uint64_t seed = 0;
  SuiteConfig config;
  std::string config_digest;
  std::vector<TestOutcome> outcomes;  // sorted by name

  bool passed() const noexcept;
};

/// uniform-equivalence, pgd-canonical, radial-law, cone-dirichlet, nuod,
/// poincare-borel, tpoing-limit, rate-identities, moment-roundtrips,
/// sigma-pushforward, verblunsky-roundtrips.
const std::vector<std::string>& suite_names();

/// Runs a named suite. Every test inside draws from its own sub-stream keyed
/// by the test name, so the report depends only on (suite, seed, config).
/// Throws usage for unknown suites.
TestReport run_suite(const std::string& suite, const SuiteConfig& config, std::uint64_t seed);

/// JSON: {suite, seed, config, config_digest, passed, outcomes:[{name,
/// statistic, p_value, threshold, passed, sample_size, seed}]}.
std::string report_to_json(const TestReport& report);
std::string report_to_text(const TestReport& report);

}  // namespace lpball

// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "lpball/batch.hpp"
#include "lpball/random.hpp"

namespace lpball {

struct KsResult {
  double statistic = 0.0;  // D
  double p_value = 1.0;
};

/// Kolmogorov survival function Q(lambda) = P(K > lambda), truncated once the
/// series tail drops below 1e-10.
double kolmogorov_q(double lambda);

/// sup |F_n - F| and the asymptotic p-value Q(sqrt(n) D).
KsResult ks_one_sample(std::span<const double> samples, const std::function<double(double)>& cdf);

/// Two-sample statistic with effective size n1 n2 / (n1 + n2).
KsResult ks_two_sample(std::span<const double> s1, std::span<const double> s2);

struct TestOutcome {
  std::string name;
  double statistic = 0.0;
  double p_value = 1.0;
  double threshold = 0.0;
  bool passed = false;
  std::size_t sample_size = 0;
  std::uint64_t seed = 0;
};

/// Negative upper orthant dependence of |X_1|..|X_N| on a finite grid. For
/// each grid point x, d(x) = P_n(|X_i| > x_i for all i) - prod_i P_n(|X_i| > x_i),
/// with a bootstrap standard error. statistic = max_x d(x); threshold = 3 se
/// at the maximizing point; passes when d(x) <= 3 se(x) everywhere.
/// `grid[i]` lists the thresholds for coordinate i (one list is broadcast).
TestOutcome nuod_check(const SampleBatch& batch, const std::vector<std::vector<double>>& grid,
                       RandomStream& stream, const std::string& name = "nuod",
                       std::size_t bootstrap_rounds = 200);

/// Pairwise independence scan over the columns: Spearman correlation (normal
/// approximation) and a chi-square test on the 4x4 quartile table for every
/// pair. Passes when every p-value clears alpha / (number of tests).
/// statistic = largest |Spearman rho|, p_value = smallest p-value.
TestOutcome independence_scan(const SampleBatch& batch, double alpha = 0.01,
                              const std::string& name = "independence");

}  // namespace lpball

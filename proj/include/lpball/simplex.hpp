// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lpball/random.hpp"

namespace lpball {

/// Parameters (a, b) of a generalized Dirichlet law; also used for the
/// p-generalized Dirichlet law on the ball.
struct GDParams {
  std::vector<double> a;
  std::vector<double> b;

  std::size_t size() const noexcept { return a.size(); }
  /// Throws parameter_domain unless lengths match and every entry is > 0.
  void validate() const;
};

enum class SimplexKind { open, closed };

struct SimplexPoint {
  std::vector<double> p;
  SimplexKind kind = SimplexKind::closed;
};

/// Normalized independent gamma(a_i) draws.
SimplexPoint draw_dirichlet(std::span<const double> a, RandomStream& stream);

/// P_j = Z_j prod_{k<j} (1 - Z_k). All z_j must lie in (0,1).
SimplexPoint stick_break(std::span<const double> z);

/// Recovers Z_j = P_j / (1 - P_1 - ... - P_{j-1}).
std::vector<double> stick_break_inverse(const SimplexPoint& point);

/// Independent Z_j ~ Beta(a_j, b_j) pushed through stick_break.
SimplexPoint draw_gd(const GDParams& params, RandomStream& stream);

enum class GemKind { theta, alpha_theta };

/// Stick-breaking parameters of GEM(theta) / GEM(alpha, theta) truncated at n
/// sticks: a_j = 1 - alpha, b_j = theta + j alpha, with j counted from 1.
GDParams gem_params(GemKind kind, double theta, double alpha, std::size_t n);

}  // namespace lpball

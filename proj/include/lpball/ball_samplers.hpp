// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>

#include "lpball/batch.hpp"
#include "lpball/random.hpp"
#include "lpball/simplex.hpp"

namespace lpball {

/// p-generalized Dirichlet draws. Per row and coordinate j: Z ~ Beta(a_j, b_j),
/// then a Rademacher sign, C_j = eps Z^{1/p}; the row is from_canonical(C).
SampleBatch sample_pgd(std::size_t n, double p, const GDParams& params, std::size_t count,
                       RandomStream& stream, unsigned threads = 1);

/// Uniform law on the unit l_p ball. p = infinity draws iid uniform on (-1,1).
///  - canonical:   sample_pgd with a_j = 1/p, b_j = 1 + (n-j)/p
///  - scaled-cone: U^{1/n} G / ||G||_p, G iid G_p
///  - gamma-exp:   G / (||G||_p^p + E)^{1/p}, E ~ exponential(1)
SampleBatch sample_uniform_ball(std::size_t n, double p, UniformMethod method, std::size_t count,
                                RandomStream& stream, unsigned threads = 1);

/// Cone measure on the unit l_p sphere: G / ||G||_p with G iid G_p.
SampleBatch sample_cone_sphere(std::size_t n, double p, std::size_t count, RandomStream& stream,
                               unsigned threads = 1);

/// Dispatches on spec.kind (pgd, uniform, cone_sphere).
SampleBatch sample(const BallDistributionSpec& spec, std::size_t count, RandomStream& stream,
                   unsigned threads = 1);

/// CDF of ||X||_p^p for X uniform on the ball: t^{n/p}, t in [0,1].
double radial_cdf(std::size_t n, double p, double t);

/// Parameters of the uniform law in canonical form.
GDParams uniform_ball_params(std::size_t n, double p);

}  // namespace lpball

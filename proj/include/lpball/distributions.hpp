// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "lpball/random.hpp"

namespace lpball {

/// gamma(shape, rate) variate, density proportional to x^{shape-1} e^{-rate x}.
/// Marsaglia-Tsang for shape >= 1; shape < 1 uses gamma(a) = gamma(a+1) U^{1/a}.
double draw_gamma(double shape, double rate, RandomStream& stream);

/// log of a gamma(shape, 1) variate. Stays finite for very small shapes where
/// the variate itself underflows.
double draw_log_gamma(double shape, RandomStream& stream);

/// Beta(a,b) on (0,1) by Cheng's BB/BC rejection algorithms. With
/// `symmetric`, returns 2x-1 on (-1,1). Values equal to 0 or 1 are redrawn.
double draw_beta(double a, double b, bool symmetric, RandomStream& stream);

/// G_p variate: density exp(-|x|^p) / (2 Gamma(1+1/p)), drawn as eps * gamma(1/p)^{1/p}.
double draw_gp(double p, RandomStream& stream);

/// +1 or -1 with probability 1/2 each.
double draw_rademacher(RandomStream& stream);

double draw_exponential(RandomStream& stream);

}  // namespace lpball

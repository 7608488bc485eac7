// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "lpball/random.hpp"
#include "lpball/simplex.hpp"

namespace lpball {

enum class UniformMethod { canonical, scaled_cone, gamma_exp };

enum class DistributionKind {
  pgd,             // p-generalized Dirichlet on the ball
  uniform,         // uniform on the ball
  cone_sphere,     // cone measure on the sphere
  moment_uniform,  // uniform on the real moment space (values in (0,1))
  data,            // rows of unknown origin (read from a file, transformed)
};

inline constexpr double kInfiniteP = std::numeric_limits<double>::infinity();

struct BallDistributionSpec {
  std::size_t n = 1;
  double p = 2.0;
  DistributionKind kind = DistributionKind::uniform;
  UniformMethod method = UniformMethod::canonical;
  GDParams params;       // pgd only
  bool complex = false;  // rows hold (re, im) pairs; columns = 2 n
};

/// Row-major batch of draws, count x columns.
struct SampleBatch {
  BallDistributionSpec spec;
  std::size_t columns = 0;
  std::vector<double> rows;
  std::uint64_t seed = 0;

  std::size_t count() const noexcept { return columns == 0 ? 0 : rows.size() / columns; }
  std::span<const double> row(std::size_t i) const { return {rows.data() + i * columns, columns}; }
  std::span<double> row(std::size_t i) { return {rows.data() + i * columns, columns}; }
  /// Copy of one column.
  std::vector<double> column(std::size_t j) const;
};

const char* to_string(UniformMethod method) noexcept;
const char* to_string(DistributionKind kind) noexcept;
/// Throws usage for unknown names.
UniformMethod parse_uniform_method(const std::string& name);

/// Worker count for batch generation: LPBALL_THREADS if set, else hardware concurrency.
unsigned default_thread_count();

/// Fills `count` rows of width `columns`. Row i is generated from its own
/// sub-stream split off a key drawn from `stream`, so the output does not
/// depend on `threads` or on how rows are chunked.
void fill_rows(std::size_t count, std::size_t columns, RandomStream& stream, unsigned threads,
               std::vector<double>& out,
               const std::function<void(RandomStream&, std::span<double>)>& draw_row);

}  // namespace lpball

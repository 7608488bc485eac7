// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>

namespace lpball {

/// Counter-based random stream (Philox4x32-10 keyed by the seed).
///
/// The n-th 64-bit output depends only on (seed, n), so a stream can be
/// reconstructed at any position and results never depend on which thread
/// produced them. Sub-streams are obtained by hashing (seed, index) into a
/// fresh key.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed, std::uint64_t position = 0) noexcept
      : seed_(seed), position_(position) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t position() const noexcept { return position_; }

  std::uint64_t next_u64() noexcept;

  /// Uniform on the open interval (0,1); never returns 0 or 1.
  double uniform_open() noexcept;

  /// Standard normal (Marsaglia polar method).
  double normal() noexcept;

  /// Independent stream derived from (seed, index); does not advance *this.
  RandomStream split(std::uint64_t index) const noexcept;

 private:
  std::uint64_t seed_;
  std::uint64_t position_;
  std::uint64_t cached_block_ = ~std::uint64_t{0};
  std::array<std::uint32_t, 4> cache_{};
};

/// SplitMix64 finalizer; used for seed derivation.
std::uint64_t mix64(std::uint64_t x) noexcept;

}  // namespace lpball

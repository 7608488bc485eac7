// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "lpball/batch.hpp"

namespace lpball {

enum class BatchFormat { csv, json };

/// "csv" or "json"; anything else is a usage error.
BatchFormat parse_batch_format(const std::string& name);

/// CSV: header x1..xN (re1,im1,... for complex rows), one row per draw, 17
/// significant digits. JSON: {spec, seed, columns, rows}.
void write_batch(const SampleBatch& batch, std::ostream& out, BatchFormat format);
void write_batch(const SampleBatch& batch, const std::string& path, BatchFormat format);

/// Reads either format (JSON when the first non-blank character is '{').
/// With `expected_n`, a header declaring a different dimension is a parse
/// error. Malformed input raises parse errors that carry the line number.
SampleBatch read_batch(std::istream& in, std::optional<std::size_t> expected_n = std::nullopt);
SampleBatch read_batch(const std::string& path, std::optional<std::size_t> expected_n = std::nullopt);

}  // namespace lpball

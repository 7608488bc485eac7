// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace lpball {

enum class ErrorKind {
  parameter_domain,   // distribution parameter outside its admissible range
  domain,             // point on/outside a ball, cube or simplex boundary
  usage,              // bad call: empty input, unknown name, bad grid
  parse,              // malformed input file
  io,                 // unreadable or unwritable path
  moment_boundary,    // moment vector not in the interior of the moment space
  conditioning,       // Hankel/Toeplitz system too ill-conditioned to trust
  moment_validity,    // Toeplitz form of trigonometric moments not positive definite
  insufficient_sample,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace lpball

// SPDX-FileCopyrightText: Copyright (c) 2026 lpball developers
// SPDX-License-Identifier: Apache-2.0

#include "lpball/error.hpp"

namespace lpball {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::parameter_domain: return "parameter-domain";
    case ErrorKind::domain: return "domain";
    case ErrorKind::usage: return "usage";
    case ErrorKind::parse: return "parse";
    case ErrorKind::io: return "io";
    case ErrorKind::moment_boundary: return "moment-space-boundary";
    case ErrorKind::conditioning: return "conditioning";
    case ErrorKind::moment_validity: return "moment-validity";
    case ErrorKind::insufficient_sample: return "insufficient-sample";
  }
  return "unknown";
}

}  // namespace lpball

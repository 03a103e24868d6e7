// Copyright 2026 The cspegasos Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace pegasos {

/// Bad input: unreadable files, malformed values, invalid arguments,
/// dimension mismatches. The CLI maps this to exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// Data or numerics that make a computation undefined: single-class data,
/// folds smaller than a class, a singular estimator. The CLI maps this to
/// exit code 3.
class NumericError : public std::runtime_error {
 public:
  explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace pegasos

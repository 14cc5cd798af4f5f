// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pathnorm {

enum class ErrorKind {
  kInvalidArgument,
  kNonIntegrable,
  kMultiSingular,
  kNoAsymptote,
  kGammaInfinite,
  kNoConvergence,
  kDimMismatch,
  kTooLarge,
  kIndexOutOfRange,
  kWidthMismatch,
  kNormBudgetViolated,
  kLambdaTooSmall,
  kEmptyDataset,
  kDiverged,
  kParseError,
};

std::string_view to_string(ErrorKind kind);

/// Every failure surfaced by the library. `kind()` is stable and is what
/// callers (and the CLI exit-code mapping) should branch on.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace pathnorm

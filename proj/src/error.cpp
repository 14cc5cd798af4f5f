// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/error.hpp"

namespace pathnorm {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument: return "InvalidArgument";
    case ErrorKind::kNonIntegrable: return "NonIntegrable";
    case ErrorKind::kMultiSingular: return "MultiSingular";
    case ErrorKind::kNoAsymptote: return "NoAsymptote";
    case ErrorKind::kGammaInfinite: return "GammaInfinite";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kDimMismatch: return "DimMismatch";
    case ErrorKind::kTooLarge: return "TooLarge";
    case ErrorKind::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::kWidthMismatch: return "WidthMismatch";
    case ErrorKind::kNormBudgetViolated: return "NormBudgetViolated";
    case ErrorKind::kLambdaTooSmall: return "LambdaTooSmall";
    case ErrorKind::kEmptyDataset: return "EmptyDataset";
    case ErrorKind::kDiverged: return "Diverged";
    case ErrorKind::kParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace pathnorm

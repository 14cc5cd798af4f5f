// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>

namespace pathnorm {

struct QuadConfig {
  double abs_tol = 1e-8;
  double rel_tol = 1e-8;
  int max_subdivisions = 10'000;
  /// Truncation threshold for the improper tails of the curvature integral.
  double tail_cutoff_tol = 1e-6;

  /// Throws kInvalidArgument unless every tolerance is positive and
  /// max_subdivisions >= 1.
  void validate() const;
};

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  int subdivisions = 0;
};

/// Globally adaptive Gauss-Kronrod (21-point) integration of f over the
/// finite interval [a, b]. Bisects the panel with the largest error estimate
/// until error <= abs_tol + rel_tol * |value| or the subdivision budget runs out.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadConfig& cfg);

}  // namespace pathnorm

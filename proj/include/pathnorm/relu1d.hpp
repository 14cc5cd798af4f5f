// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

#include "pathnorm/activation.hpp"

namespace pathnorm {

/// alpha * relu(beta * t + gamma)
struct ReluUnit {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

struct ReluNet1D {
  std::vector<ReluUnit> units;
};

struct ApproxCertificate {
  double epsilon_requested = 0.0;
  double sup_error_measured = 0.0;
  double path_norm = 0.0;
  double gamma_reference = 0.0;
  long grid_points = 0;
  long partition_N = 0;
  double x_lo = 0.0;
  double x_hi = 0.0;
  double x_eps = 0.0;  ///< pivot of the construction

  bool holds() const {
    return sup_error_measured <= epsilon_requested &&
           path_norm <= gamma_reference + epsilon_requested;
  }
};

struct Approximation {
  ReluNet1D net;
  ApproxCertificate certificate;
};

double eval_relu1d(const ReluNet1D& net, double t);

/// Evaluates the net at ascending abscissae in O(K log K + n) by sweeping
/// over the sorted breakpoints.
std::vector<double> eval_relu1d_sorted(const ReluNet1D& net, std::span<const double> ts);

double path_norm_1d(const ReluNet1D& net);

/// Builds a ReLU net g with sup|f - g| <= eps and path norm <= gamma(f) + eps.
/// The pivot is the near-minimizer of g (or the singular point), the residual
/// is interpolated on uniform partitions of both half-windows, and the
/// partition is refined until both certificate inequalities hold on the
/// validation grid.
///
/// Throws kGammaInfinite when the curvature integral diverges and
/// kNoConvergence when the partition exceeds 10^6 knots.
Approximation approximate_activation(const Activation& act, double eps, const QuadConfig& cfg = {});

}  // namespace pathnorm

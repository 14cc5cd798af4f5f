// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pathnorm/activation.hpp"
#include "pathnorm/relu1d.hpp"

namespace pathnorm {

/// a * sigma(b^T x + c)
struct Unit {
  double a = 0.0;
  std::vector<double> b;
  double c = 0.0;
};

/// f(x) = sum_k a_k sigma(b_k^T x + c_k) on inputs in [-1, 1]^d.
struct TwoLayerNet {
  int input_dim = 1;
  std::vector<Unit> units;
  Activation activation = relu();

  int width() const { return static_cast<int>(units.size()); }

  /// Throws kDimMismatch unless every b_k has length input_dim.
  void validate() const;
};

double eval_two_layer(const TwoLayerNet& net, std::span<const double> x);

/// sum_k |a_k| (||b_k||_1 + |c_k|)
double path_norm(const TwoLayerNet& net);

/// sum_k |a_k| (||b_k||_1 + |c_k| + 1)
double modified_path_norm(const TwoLayerNet& net);

/// Sum of |a_k|, the Q of the output deviation bound.
double outer_l1(const TwoLayerNet& net);

/// Rescales every unit to (t a, b / t, c / t).
TwoLayerNet rescale_units(const TwoLayerNet& net, double t);

struct RewriteReport {
  double eps = 0.0;
  double gamma_reference = 0.0;
  int relu_width = 0;            ///< K, width of the 1-D approximant
  double path_norm_out = 0.0;
  double norm_bound = 0.0;       ///< (gamma + eps) * modified_path_norm(input)
  double deviation_bound = 0.0;  ///< eps * sum |a_k|
  double deviation_measured = 0.0;
  int deviation_samples = 0;
  ApproxCertificate certificate;

  bool holds() const {
    return path_norm_out <= norm_bound && deviation_measured <= deviation_bound;
  }
};

struct Rewrite {
  TwoLayerNet net;
  RewriteReport report;
};

/// Replaces sigma by its certified ReLU approximant and expands the result
/// into an m*K unit ReLU network. Deviation is measured on `samples` seeded
/// uniform inputs from [-1, 1]^d.
Rewrite rewrite_to_relu(const TwoLayerNet& net, double eps, const QuadConfig& cfg = {},
                        int samples = 10'000, std::uint64_t seed = 0);

/// Random net with a_k ~ U(-scale, scale)/m and b_k, c_k ~ U(-1, 1).
TwoLayerNet random_two_layer(const Activation& act, int d, int m, double scale, std::uint64_t seed);

}  // namespace pathnorm

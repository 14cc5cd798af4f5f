// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pathnorm/barron.hpp"
#include "pathnorm/bounds.hpp"
#include "pathnorm/resnet.hpp"
#include "pathnorm/two_layer.hpp"

namespace pathnorm {

struct Dataset {
  std::vector<Sample> inputs;
  std::vector<double> targets;
  std::string noise_model = "none";

  std::size_t size() const { return inputs.size(); }

  /// Inputs in [-1, 1]^d with a common d, targets in [0, 1].
  /// Throws kEmptyDataset, kDimMismatch or kInvalidArgument.
  void validate() const;
};

/// 0.5 (clamp(pred, 0, 1) - y)^2
double truncated_loss(double pred, double y);

double empirical_risk(const TwoLayerNet& net, const Dataset& data);
double empirical_risk(const ResNet& net, const Dataset& data);

/// empirical_risk + lambda * modified_path_norm
double objective(const TwoLayerNet& net, const Dataset& data, double lambda);
/// empirical_risk + lambda * norm_closed
double objective(const ResNet& net, const Dataset& data, double lambda);

/// Parameter-shaped (sub)gradient of the two-layer objective.
struct Gradient {
  std::vector<double> a;
  std::vector<std::vector<double>> b;
  std::vector<double> c;
};

/// Clamped predictions contribute nothing; sign(0) = 0 in the norm terms.
Gradient gradient(const TwoLayerNet& net, const Dataset& data, double lambda);

struct TrainConfig {
  double lambda = 0.0;
  int steps = 500;
  double step_size = 0.1;
  int batch = 0;  ///< 0 means full batch
  std::uint64_t seed = 0;
  double init_scale = 1.0;
  int width = 16;
  /// Soft-threshold the outer weights against lambda * (||b||_1 + |c| + 1)
  /// instead of stepping along the subgradient of |a|.
  bool proximal = true;

  void validate() const;
};

struct TrainTrace {
  std::vector<double> objective;  ///< J at every iterate, starting with the initial net
  std::vector<double> risk;
  std::vector<double> norm;
  int best_step = 0;
};

struct FitResult {
  TwoLayerNet net;  ///< best iterate by J
  TrainTrace trace;
};

/// Seeded (mini-batch) gradient descent on J. Throws kDiverged on a
/// non-finite objective.
FitResult fit(const TwoLayerNet& init, const Dataset& data, const TrainConfig& cfg);

/// Net of width cfg.width initialized with a ~ U(-s, s)/m, b, c ~ U(-1, 1).
TwoLayerNet init_two_layer(const Activation& act, int d, const TrainConfig& cfg);

/// Noiseless data set labelled by the represented function.
Dataset barron_dataset(const BarronRep& rep, const Activation& act, int n, std::uint64_t seed);

struct AprioriRun {
  std::uint64_t seed = 0;
  double train_risk = 0.0;
  double heldout_risk = 0.0;
  double final_norm = 0.0;
  double bound = 0.0;
  bool holds = false;
};

struct AprioriReport {
  double lambda_n = 0.0;
  double lambda = 0.0;
  double barron_norm = 0.0;
  double c_sigma = 0.0;
  double delta = 0.0;
  std::vector<AprioriRun> runs;

  int passed() const;
  double pass_fraction() const;
};

struct AprioriConfig {
  int d = 2;
  int n = 512;
  int m = 64;
  double lambda_mult = 1.0;
  double delta = 0.05;
  int heldout = 100'000;
  int steps = 300;
  double step_size = 0.5;
  std::vector<std::uint64_t> seeds;
};

/// Trains the regularized estimator with lambda = lambda_mult * lambda_n on
/// fresh samples per seed and compares its held-out risk with the bound.
AprioriReport apriori_experiment(const BarronRep& rep, const Activation& act, const AprioriConfig& cfg,
                                 const QuadConfig& quad = {});

}  // namespace pathnorm

// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "pathnorm/activation.hpp"
#include "pathnorm/two_layer.hpp"

namespace pathnorm {

struct ResBlock {
  Eigen::MatrixXd W;  ///< m x D
  Eigen::MatrixXd U;  ///< D x m
};

/// h_0 = V (x, 1); h_l = h_{l-1} + U_l sigma(W_l h_{l-1}); f = alpha^T h_L.
struct ResNet {
  Eigen::MatrixXd V;  ///< D x (d+1)
  std::vector<ResBlock> blocks;
  Eigen::VectorXd alpha;  ///< D
  Activation activation = relu();
  double c = 5.0;

  int input_dim() const { return static_cast<int>(V.cols()) - 1; }
  int state_dim() const { return static_cast<int>(V.rows()); }
  int hidden_dim() const { return blocks.empty() ? 0 : static_cast<int>(blocks.front().W.rows()); }
  int depth() const { return static_cast<int>(blocks.size()); }

  /// Throws kDimMismatch on inconsistent shapes and kInvalidArgument for c <= 0.
  void validate() const;
};

/// 4 gamma(sigma) + 1, the boundary value of the admissible weights.
double default_c(const Activation& act, const QuadConfig& cfg = {});

double eval_resnet(const ResNet& net, std::span<const double> x);

/// sum_{i=0}^{L} || |alpha|^T P_L ... P_{i+1} |U_i| ||_1 with
/// P_l = I + c |U_l||W_l| and U_0 = V.
double norm_closed(const ResNet& net);

struct RecursiveNorm {
  double total = 0.0;
  double weighted_path_norm = 0.0;
  double r = 0.0;
  std::vector<Eigen::VectorXd> M;  ///< M[l-1] holds M_l, length m
};

/// Weighted path norm plus the modification r from the M_l recursion.
RecursiveNorm norm_recursive(const ResNet& net);

/// Sum of absolute path weights over every path of every length, by explicit
/// enumeration. Throws kTooLarge for L > 6, D or m > 6, or more than 2e7 paths.
double norm_bruteforce(const ResNet& net);

/// Number of paths norm_bruteforce would visit.
double bruteforce_path_count(const ResNet& net);

struct ModificationBounds {
  std::vector<Eigen::VectorXd> M_bounds;  ///< same layout as RecursiveNorm::M
  double r_bound = 0.0;
};

/// Upper bounds on M_{l,i} and r. Rectangular factors are zero-padded to
/// n x n with n = max(D, m) so that I + |U| and I + c|W| are well defined.
ModificationBounds modification_bounds(const ResNet& net);

/// Norm of hidden neuron i of block l (both 1-based):
/// c sum_{k=0}^{l-1} || |W_l^{i,:}| P_{l-1} ... P_{k+1} |U_k| ||_1.
/// Throws kIndexOutOfRange.
double hidden_norm(const ResNet& net, int l, int i);

struct HiddenNormParts {
  double closed = 0.0;
  double path_norm = 0.0;     ///< c || |W_l^{i,:}| P_{l-1} ... P_1 |V| ||_1
  double modification = 0.0;  ///< M_{l,i}
};

HiddenNormParts hidden_norm_parts(const ResNet& net, int l, int i);

/// Stacks a width L*m two-layer net into L residual blocks of width m with
/// state (x, 1, accumulator). Throws kWidthMismatch if the width is not L*m.
ResNet embed_two_layer(const TwoLayerNet& src, int L, int m, double c);

/// Entries of V, W_l, U_l, alpha drawn from N(0, 1).
ResNet random_resnet(const Activation& act, int d, int D, int m, int L, double c, std::uint64_t seed);

}  // namespace pathnorm

// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "pathnorm/activation.hpp"
#include "pathnorm/resnet.hpp"
#include "pathnorm/two_layer.hpp"

namespace pathnorm {

using Sample = std::vector<double>;

// ---- Rademacher complexity bounds ------------------------------------------

/// 2 gamma Q sqrt(2 ln(2d+2) / n)
double rad_bound_two_layer(double Q, int d, long n, double gamma_sigma);
/// 2 Q sqrt(2 ln(2d+2) / n)
double rad_bound_relu(double Q, int d, long n);
/// (4 gamma + 1) Q sqrt(2 ln(2d+2) / n)
double rad_bound_resnet(double Q, int d, long n, double gamma_sigma);
/// max_i ||x_i||_inf sqrt(2 ln(2d) / n) for the unit l1 ball of linear maps.
double rad_bound_linear(const std::vector<Sample>& samples);

// ---- Generalization and a-priori bounds ------------------------------------

/// (norm + 1)(8 gamma sqrt(2 ln(2d+2)) + 1)/sqrt(n) + sqrt(2 ln(7/delta)/n)
double posterior_gap_bound(double norm, int d, long n, double delta, double gamma_sigma);

/// (8 gamma sqrt(2 ln(2d+2)) + 1)/sqrt(n)
double lambda_n_two_layer(int d, long n, double gamma_sigma);
/// ((8 gamma + 2) sqrt(2 ln(2d+2)) + 1)/sqrt(n)
double lambda_n_resnet(int d, long n, double gamma_sigma);

/// 3 C ||f||^2/(2m) + 2 ||f|| lambda + 2(||f|| + 1) lambda_n + 2 sqrt(2 ln(14/delta)/n).
/// Throws kLambdaTooSmall when lambda < lambda_n.
double apriori_bound_two_layer(double norm_f, int m, int d, long n, double delta, double lambda,
                               const Activation& act, const QuadConfig& cfg = {});

/// 3 C ||f||^2/(2Lm) + 2 C2 ||f|| lambda + 2(C2 ||f|| + 1) lambda_n + 2 sqrt(2 ln(14/delta)/n)
/// with C2 = 4 gamma + 1 and the residual lambda_n.
double apriori_bound_resnet(double norm_f, int L, int m, int d, long n, double delta, double lambda,
                            const Activation& act, const QuadConfig& cfg = {});

// ---- Empirical Rademacher estimate -----------------------------------------

struct Candidate {
  std::function<double(std::span<const double>)> f;
  double norm = 0.0;
};

struct RadEstimate {
  double value = 0.0;
  double std_error = 0.0;  ///< Monte-Carlo error over sign draws
  int n_sign_draws = 0;
  int n_candidate_functions = 0;
  std::uint64_t seed = 0;
  std::string kind = "lower_estimate";
};

/// (1/draws) sum_draws max_f (1/n) sum_i xi_i f(x_i) over the finite candidate
/// set; a lower estimate of the class complexity. Throws kNormBudgetViolated
/// when a candidate norm exceeds `budget`.
RadEstimate empirical_rademacher(const std::vector<Sample>& samples, const std::vector<Candidate>& candidates,
                                 double budget, int n_sign_draws = 256, std::uint64_t seed = 0);

std::vector<Sample> uniform_cube_samples(int d, int n, std::uint64_t seed);

/// Random two-layer nets rescaled to `budget` in the path norm (ReLU class)
/// or the modified path norm (general activations).
std::vector<TwoLayerNet> two_layer_candidates(const Activation& act, int d, int width, int count,
                                              double budget, bool modified, std::uint64_t seed);

/// Random residual nets rescaled to `budget` in norm_closed.
std::vector<ResNet> resnet_candidates(const Activation& act, int d, int D, int m, int L, double c, int count,
                                      double budget, std::uint64_t seed);

/// Signed coordinate vectors plus random directions on the unit l1 sphere.
std::vector<Sample> linear_candidates(int d, int count, std::uint64_t seed);

std::vector<Candidate> as_candidates(const std::vector<TwoLayerNet>& nets, bool modified);
std::vector<Candidate> as_candidates(const std::vector<ResNet>& nets);
std::vector<Candidate> as_linear_candidates(const std::vector<Sample>& directions);

}  // namespace pathnorm

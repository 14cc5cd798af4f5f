// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "pathnorm/bounds.hpp"
#include "pathnorm/error.hpp"

namespace pathnorm {
namespace {

TEST(RadBounds, FrozenValues) {
  EXPECT_NEAR(rad_bound_two_layer(1, 1, 2, 1.0), 2.3548200450309493, 1e-14);
  EXPECT_NEAR(rad_bound_relu(1, 1, 2), 2.3548200450309493, 1e-14);
  EXPECT_NEAR(rad_bound_resnet(1, 1, 2, 1.0), 5.8870501125773735, 1e-14);
  EXPECT_EQ(rad_bound_two_layer(0, 3, 10, 2.0), 0.0);
  EXPECT_EQ(rad_bound_relu(0, 3, 10), 0.0);
  EXPECT_EQ(rad_bound_resnet(0, 3, 10, 1.5), 0.0);
}

TEST(RadBounds, ReluIsGammaOneBitForBit) {
  for (int d : {1, 2, 7})
    for (long n : {1L, 50L, 100000L})
      for (double Q : {0.3, 1.0, 12.5}) EXPECT_EQ(rad_bound_relu(Q, d, n), rad_bound_two_layer(Q, d, n, 1.0));
}

TEST(RadBounds, Monotone) {
  for (double Q = 0.5; Q < 5; Q += 0.5) {
    EXPECT_LT(rad_bound_two_layer(Q, 2, 100, 1.5), rad_bound_two_layer(Q + 0.5, 2, 100, 1.5));
    EXPECT_GT(rad_bound_resnet(Q, 2, 100, 1.5), rad_bound_resnet(Q, 2, 400, 1.5));
    EXPECT_LT(posterior_gap_bound(Q, 2, 100, 0.1, 1.0), posterior_gap_bound(Q + 0.5, 2, 100, 0.1, 1.0));
    EXPECT_GT(posterior_gap_bound(Q, 2, 100, 0.1, 1.0), posterior_gap_bound(Q, 2, 200, 0.1, 1.0));
  }
  EXPECT_NEAR(rad_bound_resnet(1, 2, 50, 1.5) / rad_bound_relu(1, 2, 50), 3.5, 1e-9);
}

TEST(RadBounds, Linear) {
  const std::vector<Sample> corners{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}, {0.5, 0}, {0, 0}, {0.2, -1}, {1, 0.3}};
  EXPECT_NEAR(rad_bound_linear(corners), 0.5887050112577373, 1e-14);
  EXPECT_EQ(rad_bound_linear({{0.0, 0.0}}), 0.0);
  std::vector<Sample> doubled = corners;
  for (auto& x : doubled)
    for (auto& v : x) v *= 2;
  EXPECT_NEAR(rad_bound_linear(doubled), 2 * rad_bound_linear(corners), 1e-14);
}

TEST(PosteriorGap, FrozenValue) {
  EXPECT_NEAR(posterior_gap_bound(0, 1, 100, 0.1, 1.0), 1.7235833552533555, 1e-13);
  const double near_one = posterior_gap_bound(0, 1, 100, 1 - 1e-12, 1.0);
  EXPECT_NEAR(near_one - lambda_n_two_layer(1, 100, 1.0), std::sqrt(2 * std::log(7.0)) / 10, 1e-9);
}

TEST(LambdaN, FrozenValues) {
  EXPECT_NEAR(lambda_n_two_layer(1, 100, 1.0), 1.4320873778523162, 1e-14);
  EXPECT_NEAR(lambda_n_resnet(1, 100, 1.0), 1.7651092223153952, 1e-14);
  EXPECT_NEAR(lambda_n_resnet(3, 64, 1.2) - lambda_n_two_layer(3, 64, 1.2), 2 * std::sqrt(2 * std::log(8.0)) / 8, 1e-14);
  EXPECT_NEAR(lambda_n_two_layer(2, 400, 1.5), 0.5 * lambda_n_two_layer(2, 100, 1.5), 1e-14);
}

TEST(Apriori, FrozenAndLimits) {
  const double ln = lambda_n_two_layer(2, 512, 1.5);
  EXPECT_NEAR(ln, 1.0481188231085468, 1e-13);
  EXPECT_NEAR(apriori_bound_two_layer(2.7, 64, 2, 512, 0.05, ln, sigmoid()), 14.396079832977938, 1e-8);
  const double zero = apriori_bound_two_layer(0, 64, 2, 512, 0.05, ln, sigmoid());
  EXPECT_NEAR(zero, 2 * ln + 2 * std::sqrt(2 * std::log(14 / 0.05) / 512), 1e-12);
  const double wide = apriori_bound_two_layer(2.7, 1 << 30, 2, 512, 0.05, ln, sigmoid());
  EXPECT_NEAR(wide, 14.396079832977938 - 3 * 4 * 2.7 * 2.7 / 128, 1e-6);
  try {
    apriori_bound_two_layer(1, 8, 2, 512, 0.05, 0.5 * ln, sigmoid());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kLambdaTooSmall);
  }
  const double lr = lambda_n_resnet(2, 512, 1.0);
  EXPECT_THROW(apriori_bound_resnet(1, 2, 4, 2, 512, 0.05, 0.9 * lr, relu()), Error);
  // First term with L*m equal to the two-layer width coincides.
  const double r = apriori_bound_resnet(2.0, 4, 16, 2, 512, 0.05, lr, relu());
  const double first = 3 * 1.0 * 4.0 / (2 * 64);
  EXPECT_NEAR(r - first, 2 * 5 * 2 * lr + 2 * (5 * 2 + 1) * lr + 2 * std::sqrt(2 * std::log(14 / 0.05) / 512), 1e-12);
}

TEST(EmpiricalRademacher, ZeroAndSymmetricClasses) {
  const auto xs = uniform_cube_samples(2, 40, 1);
  const std::vector<Candidate> zero{{[](std::span<const double>) { return 0.0; }, 0.0}};
  EXPECT_EQ(empirical_rademacher(xs, zero, 1.0).value, 0.0);
  const auto f = [](std::span<const double> x) { return x[0] - 0.3 * x[1]; };
  const std::vector<Candidate> pm{{f, 1.0}, {[&](std::span<const double> x) { return -f(x); }, 1.0}};
  const RadEstimate est = empirical_rademacher(xs, pm, 1.0, 512, 3);
  EXPECT_GT(est.value, 0.0);
  EXPECT_EQ(est.n_sign_draws, 512);
  EXPECT_EQ(est.n_candidate_functions, 2);
  EXPECT_EQ(est.kind, "lower_estimate");
  EXPECT_EQ(est.value, empirical_rademacher(xs, pm, 1.0, 512, 3).value);
}

TEST(EmpiricalRademacher, BudgetIsEnforced) {
  const auto xs = uniform_cube_samples(1, 5, 1);
  const std::vector<Candidate> over{{[](std::span<const double>) { return 1.0; }, 1.5}};
  try {
    empirical_rademacher(xs, over, 1.0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNormBudgetViolated);
  }
}

TEST(EmpiricalRademacher, ReluBoundDominates) {
  const auto xs = uniform_cube_samples(2, 50, 4);
  const auto nets = two_layer_candidates(relu(), 2, 8, 200, 1.0, false, 4);
  for (const auto& n : nets) EXPECT_NEAR(path_norm(n), 1.0, 1e-12);
  const RadEstimate est = empirical_rademacher(xs, as_candidates(nets, false), 1.0, 256, 4);
  EXPECT_LE(est.value, rad_bound_relu(1, 2, 50));
}

TEST(Candidates, NormalizedToBudget) {
  for (const auto& n : two_layer_candidates(tanh_activation(), 3, 5, 20, 2.5, true, 1))
    EXPECT_NEAR(modified_path_norm(n), 2.5, 1e-12);
  for (const auto& r : resnet_candidates(sigmoid(), 2, 3, 3, 2, 7.0, 20, 0.75, 1))
    EXPECT_NEAR(norm_closed(r), 0.75, 1e-12);
  for (const auto& u : linear_candidates(4, 30, 2)) {
    double s = 0;
    for (double v : u) s += std::abs(v);
    EXPECT_NEAR(s, 1.0, 1e-12);
  }
}

TEST(UniformCube, RangeAndDeterminism) {
  const auto a = uniform_cube_samples(3, 100, 9);
  const auto b = uniform_cube_samples(3, 100, 9);
  EXPECT_EQ(a, b);
  for (const auto& x : a)
    for (double v : x) {
      EXPECT_GE(v, -1.0);
      EXPECT_LE(v, 1.0);
    }
}

}  // namespace
}  // namespace pathnorm

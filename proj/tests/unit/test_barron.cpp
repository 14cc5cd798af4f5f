// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "pathnorm/barron.hpp"
#include "pathnorm/error.hpp"

namespace pathnorm {
namespace {

TEST(BarronNorm, HandValues) {
  BarronRep single{2, {{1.0, {1.0, -1.5, 0.5}, 2.0}}, {}};
  EXPECT_DOUBLE_EQ(barron_norm_estimate(single), 8.0);

  BarronRep zero{1, {{0.5, {1.0, 2.0}, 0.0}, {0.5, {-3.0, 1.0}, 0.0}}, {}};
  EXPECT_EQ(barron_norm_estimate(zero), 0.0);

  BarronRep two{1, {{0.5, {0.0, 0.0}, 1.0}, {0.5, {0.25, -0.75}, 1.0}}, {}};
  EXPECT_DOUBLE_EQ(barron_norm_estimate(two), std::sqrt(2.5));
}

TEST(BarronNorm, GaussianSamplerIsSeeded) {
  BarronRep rep{2, {}, BarronSampler{"gaussian", 0.5, 1.0}};
  EXPECT_EQ(barron_norm_estimate(rep, 20'000, 3), barron_norm_estimate(rep, 20'000, 3));
  // E(1 + sum|w_j|)^2 with w_j ~ N(0, 1/4): 1 + 3 * 2 * 0.5 * sqrt(2/pi) + E(sum|w_j|)^2
  const double m1 = 0.5 * std::sqrt(2.0 / M_PI);
  const double second = 3 * 0.25 + 6 * m1 * m1;
  const double exact = std::sqrt(1.0 + 2.0 * 3.0 * m1 + second);
  EXPECT_NEAR(barron_norm_estimate(rep, 200'000, 1), exact, 1e-2);
}

TEST(SampleFromBarron, SingleAtomGivesIdenticalUnits) {
  BarronRep rep{2, {{1.0, {0.5, -1.0, 0.25}, 3.0}}, {}};
  const TwoLayerNet net = sample_from_barron(rep, 16, sigmoid(), 1);
  for (const auto& u : net.units) {
    EXPECT_EQ(u.a, 3.0 / 16.0);
    EXPECT_EQ(u.b, (std::vector<double>{0.5, -1.0}));
    EXPECT_EQ(u.c, 0.25);
  }
  const std::vector<double> x{0.3, -0.6};
  EXPECT_NEAR(eval_two_layer(net, x), eval_barron(rep, sigmoid(), x), 1e-14);
}

TEST(SampleFromBarron, AtomFrequencies) {
  BarronRep rep{1, {{0.3, {1.0, 0.0}, 1.0}, {0.7, {-1.0, 0.0}, 1.0}}, {}};
  const int m = 10'000;
  const TwoLayerNet net = sample_from_barron(rep, m, relu(), 42);
  int first = 0;
  for (const auto& u : net.units) first += u.b[0] > 0;
  const double sd = std::sqrt(m * 0.3 * 0.7);
  EXPECT_NEAR(first, 0.3 * m, 3 * sd);
}

TEST(SampleFromBarron, NormExpectationBelowEstimate) {
  BarronRep rep{2, {{0.25, {1.0, 2.0, 0.0}, 1.0}, {0.75, {0.0, -0.5, 0.5}, -2.0}}, {}};
  double mean = 0.0;
  for (std::uint64_t s = 0; s < 200; ++s) mean += modified_path_norm(sample_from_barron(rep, 8, tanh_activation(), s));
  mean /= 200;
  EXPECT_LE(mean, barron_norm_estimate(rep) + 0.05);
}

TEST(SampleFromBarron, Validation) {
  BarronRep bad{1, {{0.4, {1.0, 0.0}, 1.0}}, {}};
  EXPECT_THROW(sample_from_barron(bad, 4, relu(), 0), Error);
  BarronRep ok{1, {{1.0, {1.0, 0.0}, 1.0}}, {}};
  EXPECT_THROW(sample_from_barron(ok, 0, relu(), 0), Error);
}

TEST(CSigma, Catalog) {
  EXPECT_NEAR(c_sigma(relu()), 1.0, 1e-9);
  EXPECT_NEAR(c_sigma(sigmoid()), 4.0, 1e-6);
  EXPECT_NEAR(c_sigma(tanh_activation()), 25.0, 1e-5);
}

}  // namespace
}  // namespace pathnorm

// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pathnorm/error.hpp"
#include "pathnorm/relu1d.hpp"

namespace pathnorm {
namespace {

TEST(EvalRelu1d, HandValues) {
  EXPECT_EQ(eval_relu1d({{{1, 1, 0}}}, -2.0), 0.0);
  EXPECT_EQ(eval_relu1d({{{2, 1, 0}, {-1, 1, -1}}}, 3.0), 4.0);
  EXPECT_EQ(eval_relu1d({}, 1.7), 0.0);
}

TEST(PathNorm1d, HandValues) {
  EXPECT_EQ(path_norm_1d({{{1, 1, 0}}}), 1.0);
  EXPECT_EQ(path_norm_1d({{{2, -3, 1}, {0.5, 0, 4}}}), 10.0);
  EXPECT_EQ(path_norm_1d({}), 0.0);
}

TEST(EvalRelu1d, SortedSweepAgreesWithDirectSum) {
  const ReluNet1D net{{{2, 1, 0}, {-1, 1, -1}, {0.5, -2, 3}, {1.5, 0, 2}, {-0.25, 0, -1}, {0.7, -1, -4}}};
  std::vector<double> ts;
  for (int i = 0; i <= 200; ++i) ts.push_back(-10.0 + 0.1 * i);
  const auto fast = eval_relu1d_sorted(net, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) EXPECT_NEAR(fast[i], eval_relu1d(net, ts[i]), 1e-12);
}

TEST(Approximate, ReluIsOneUnit) {
  const Approximation a = approximate_activation(relu(), 1e-3);
  ASSERT_EQ(a.net.units.size(), 1u);
  EXPECT_EQ(a.net.units[0].alpha, 1.0);
  EXPECT_EQ(a.net.units[0].beta, 1.0);
  EXPECT_EQ(a.net.units[0].gamma, 0.0);
  EXPECT_EQ(a.certificate.sup_error_measured, 0.0);
  EXPECT_EQ(a.certificate.path_norm, 1.0);
}

TEST(Approximate, SigmoidCertificate) {
  const Approximation a = approximate_activation(sigmoid(), 1e-2);
  EXPECT_LE(a.certificate.sup_error_measured, 1e-2);
  EXPECT_LE(a.certificate.path_norm, 1.5 + 1e-2);
  EXPECT_TRUE(a.certificate.holds());
}

TEST(Approximate, TanhOnAnIndependentGrid) {
  const Approximation a = approximate_activation(tanh_activation(), 1e-2);
  EXPECT_LE(a.certificate.path_norm, 5.01);
  double err = 0.0;
  for (int i = 0; i <= 1'000'000; ++i) {
    const double x = -50.0 + 100.0 * i / 1e6;
    err = std::max(err, std::abs(eval_relu1d(a.net, x) - std::tanh(x)));
  }
  for (double x : {-1000.0, -200.0, 200.0, 1000.0}) err = std::max(err, std::abs(eval_relu1d(a.net, x) - std::tanh(x)));
  EXPECT_LE(err, 1e-2);
}

class CatalogApprox : public ::testing::TestWithParam<std::tuple<int, double>> {};

TEST_P(CatalogApprox, CertificatesAndFarField) {
  const Activation act = catalog()[std::get<0>(GetParam())];
  const double eps = std::get<1>(GetParam());
  const Approximation a = approximate_activation(act, eps);
  EXPECT_TRUE(a.certificate.holds()) << act.name;
  EXPECT_LE(a.certificate.path_norm, gamma(act) + eps) << act.name;
  double err = 0.0;
  for (int i = 0; i <= 200'000; ++i) {
    const double x = -100.0 + 200.0 * i / 2e5;
    err = std::max(err, std::abs(eval_relu1d(a.net, x) - act.f(x)));
  }
  for (double x : {-1000.0, 1000.0}) err = std::max(err, std::abs(eval_relu1d(a.net, x) - act.f(x)));
  EXPECT_LE(err, eps) << act.name;

  // Far-field slopes equal the activation's asymptote slopes.
  const Asymptotes asy = resolved_asymptotes(act);
  const double sr = eval_relu1d(a.net, 2e6) - eval_relu1d(a.net, 1e6);
  const double sl = eval_relu1d(a.net, -1e6) - eval_relu1d(a.net, -2e6);
  EXPECT_NEAR(sr / 1e6, asy.right.slope, 1e-9) << act.name;
  EXPECT_NEAR(sl / 1e6, asy.left.slope, 1e-9) << act.name;
}

INSTANTIATE_TEST_SUITE_P(Catalog, CatalogApprox,
                         ::testing::Combine(::testing::Range(0, 8), ::testing::Values(1e-1, 1e-2)));

TEST(Approximate, InterpolatesAtKnots) {
  const Approximation a = approximate_activation(softplus(), 1e-2);
  const auto& c = a.certificate;
  const double h = (c.x_hi - c.x_eps) / static_cast<double>(c.partition_N);
  for (long i = 0; i <= c.partition_N; i += 7) {
    const double x = c.x_eps + h * static_cast<double>(i);
    EXPECT_NEAR(eval_relu1d(a.net, x), softplus().f(x), 1e-10);
  }
}

TEST(Approximate, NormConvergesToGamma) {
  const double g = gamma(sigmoid());
  const double coarse = approximate_activation(sigmoid(), 1e-1).certificate.path_norm;
  const double fine = approximate_activation(sigmoid(), 1e-4).certificate.path_norm;
  EXPECT_LE(std::abs(fine - g), std::abs(coarse - g) + 1e-12);
  EXPECT_NEAR(fine, g, 1e-3);
}

TEST(Approximate, Errors) {
  EXPECT_THROW(approximate_activation(sigmoid(), 0.0), Error);
  try {
    approximate_activation(custom_activation("square", "x*x", "2*x", "2"), 1e-2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kGammaInfinite);
  }
}

}  // namespace
}  // namespace pathnorm

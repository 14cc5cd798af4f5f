// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "pathnorm/activation.hpp"
#include "pathnorm/error.hpp"

namespace pathnorm {
namespace {

constexpr double kQuadTol = 1e-6;

TEST(Gamma0, SigmoidIsThreeHalves) { EXPECT_NEAR(gamma0(sigmoid()), 1.5, kQuadTol); }

TEST(Gamma0, TanhIsFour) { EXPECT_NEAR(gamma0(tanh_activation()), 4.0, kQuadTol); }

TEST(Gamma0, SoftplusIsOnePlusTwoLnTwo) { EXPECT_NEAR(gamma0(softplus()), 1.0 + 2.0 * std::log(2.0), kQuadTol); }

TEST(Gamma0, AffineIsZero) {
  const Activation a = custom_activation("affine", "0.5 + 2*x", "2", "0");
  EXPECT_NEAR(gamma0(a), 0.0, 1e-12);
}

TEST(Gamma0, QuadraticIsNonIntegrable) {
  const Activation q = custom_activation("square", "x*x", "2*x", "2");
  try {
    gamma0(q);
    FAIL() << "expected NonIntegrable";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonIntegrable);
  }
}

TEST(Gamma0, InvariantUnderAddingAffinePart) {
  const Activation base = custom_activation("sig", "1/(1+exp(-x))", "exp(-x)/(1+exp(-x))^2",
                                            "exp(-x)*(exp(-x)-1)/(1+exp(-x))^3");
  const Activation shifted = custom_activation("sig_plus", "1/(1+exp(-x)) + 3 - 0.5*x",
                                               "exp(-x)/(1+exp(-x))^2 - 0.5",
                                               "exp(-x)*(exp(-x)-1)/(1+exp(-x))^3");
  EXPECT_NEAR(gamma0(base), gamma0(shifted), kQuadTol);
  EXPECT_NEAR(gamma0(base), 1.5, kQuadTol);
}

TEST(InfG, SigmoidAttainsZeroAtMinusInfinity) {
  const InfG r = inf_g(sigmoid());
  EXPECT_EQ(r.where, InfLocation::kMinusInfinity);
  EXPECT_NEAR(r.g_star, 0.0, 1e-6);
}

TEST(InfG, TanhIsOneAtMinusInfinity) {
  const InfG r = inf_g(tanh_activation());
  EXPECT_NEAR(r.g_star, 1.0, 1e-6);
  EXPECT_TRUE(std::isinf(r.x_star));
}

TEST(InfG, ReluIsZeroOnTheNegativeAxis) {
  const InfG r = inf_g(relu());
  EXPECT_NEAR(r.g_star, 0.0, 1e-12);
  EXPECT_LE(r.x_star, 0.0);
}

struct ClosedForm {
  const char* ref;
  double value;
};

class GammaClosedForm : public ::testing::TestWithParam<ClosedForm> {};

TEST_P(GammaClosedForm, QuadratureMatches) {
  const Activation act = make_activation(GetParam().ref);
  EXPECT_NEAR(gamma(act), GetParam().value, 1e-6) << GetParam().ref;
  ASSERT_TRUE(act.closed_form_gamma.has_value());
  EXPECT_NEAR(*act.closed_form_gamma, GetParam().value, 1e-9);
}

const double kGelu =
    4.0 * (0.5 * std::erfc(-1.0) + (1.0 + std::numbers::sqrt2) / (std::numbers::e * std::sqrt(std::numbers::pi))) - 3.0;

INSTANTIATE_TEST_SUITE_P(
    Table, GammaClosedForm,
    ::testing::Values(ClosedForm{"relu", 1.0}, ClosedForm{"leaky_relu:lambda=0", 1.0},
                      ClosedForm{"leaky_relu:lambda=0.1", 1.1}, ClosedForm{"sigmoid", 1.5}, ClosedForm{"tanh", 5.0},
                      ClosedForm{"elu:alpha=0.5", 2.5}, ClosedForm{"elu:alpha=1", 3.0},
                      ClosedForm{"elu:alpha=2", 7.0}, ClosedForm{"softplus", 1.0 + 2.0 * std::log(2.0)},
                      ClosedForm{"gelu", kGelu}, ClosedForm{"swish:beta=0.5", 4.9131879996406289},
                      ClosedForm{"swish:beta=1", 3.1562726400780483}, ClosedForm{"swish:beta=2", 2.2778149602967580}));

TEST(Gamma, GeluValue) { EXPECT_NEAR(kGelu, 2.6897, 1e-4); }

TEST(Gamma, SwishTracksApproximateCoefficients) {
  for (double beta : {0.5, 1.0, 2.0}) EXPECT_NEAR(gamma(swish(beta)), 1.7569 / beta + 1.3994, 1e-3);
}

TEST(Gamma, EluSingularVariantIsThreeAlphaPlusOne) {
  Activation e = elu(1.0);
  e.singular_points = {{0.0, 1.0, 1.0}};
  EXPECT_NEAR(gamma(e), 4.0, 1e-6);
}

TEST(Gamma, MultipleSingularPointsAreRejected) {
  Activation r = relu();
  r.singular_points.push_back({1.0, 1.0, 1.0});
  try {
    gamma(r);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kMultiSingular);
  }
}

TEST(Lipschitz, Catalog) {
  const auto r = lipschitz_bound(relu());
  EXPECT_NEAR(r.bound, 1.0, 1e-9);
  EXPECT_NEAR(r.empirical_sup, 1.0, 1e-12);
  const auto s = lipschitz_bound(sigmoid());
  EXPECT_NEAR(s.bound, 1.5, 1e-6);
  EXPECT_NEAR(s.empirical_sup, 0.25, 1e-9);
  const auto t = lipschitz_bound(tanh_activation());
  EXPECT_NEAR(t.bound, 5.0, 1e-6);
  EXPECT_NEAR(t.empirical_sup, 1.0, 1e-9);
  for (const auto& act : catalog()) {
    const auto l = lipschitz_bound(act);
    EXPECT_LE(l.empirical_sup, l.bound) << act.name;
  }
}

TEST(Asymptotes, SoftplusAndGelu) {
  for (const auto& act : {softplus(), gelu()}) {
    const Asymptotes a = asymptotes(act);
    EXPECT_NEAR(a.left.slope, 0.0, 1e-8);
    EXPECT_NEAR(a.left.intercept, 0.0, 1e-8);
    EXPECT_NEAR(a.right.slope, 1.0, 1e-8);
    EXPECT_NEAR(a.right.intercept, 0.0, 1e-8);
  }
}

TEST(Asymptotes, Affine) {
  const Asymptotes a = asymptotes(custom_activation("affine", "3 - 2*x", "-2", "0"));
  EXPECT_NEAR(a.left.slope, -2.0, 1e-12);
  EXPECT_NEAR(a.left.intercept, 3.0, 1e-9);
  EXPECT_NEAR(a.right.slope, -2.0, 1e-12);
  EXPECT_NEAR(a.right.intercept, 3.0, 1e-9);
}

TEST(Asymptotes, MatchStoredFieldsAndWindowEdge) {
  for (const auto& act : catalog()) {
    const Asymptotes a = asymptotes(act);
    if (act.asymptote_right) {
      EXPECT_NEAR(a.right.slope, act.asymptote_right->slope, 1e-6) << act.name;
      EXPECT_NEAR(a.right.intercept, act.asymptote_right->intercept, 1e-6) << act.name;
    }
    if (act.asymptote_left) {
      EXPECT_NEAR(a.left.slope, act.asymptote_left->slope, 1e-6) << act.name;
      EXPECT_NEAR(a.left.intercept, act.asymptote_left->intercept, 1e-6) << act.name;
    }
    const double X = a.window;
    EXPECT_LE(std::abs(act.f(X) - (a.right.slope * X + a.right.intercept)), 1e-5) << act.name;
    EXPECT_LE(std::abs(act.f(-X) - (-a.left.slope * X + a.left.intercept)), 1e-5) << act.name;
  }
}

TEST(Asymptotes, QuadraticHasNone) {
  try {
    asymptotes(custom_activation("square", "x*x", "2*x", "2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNoAsymptote);
  }
}

TEST(Catalog, EightEntries) {
  const auto cat = catalog();
  ASSERT_EQ(cat.size(), 8u);
  EXPECT_EQ(cat.front().name, "relu");
  EXPECT_EQ(*cat.front().closed_form_gamma, 1.0);
}

TEST(Catalog, EluAlphaOneIsSmooth) {
  const Activation e = elu(1.0);
  EXPECT_TRUE(e.singular_points.empty());
  EXPECT_EQ(*e.closed_form_gamma, 3.0);
  EXPECT_EQ(elu(0.5).singular_points.size(), 1u);
}

TEST(Catalog, DerivativesMatchFiniteDifferences) {
  for (const auto& act : catalog()) {
    for (double x : {-3.3, -0.7, 0.45, 2.1}) {
      const double h = 1e-5;
      EXPECT_NEAR(act.f1(x), (act.f(x + h) - act.f(x - h)) / (2 * h), 1e-6) << act.name << " x=" << x;
      EXPECT_NEAR(act.f2(x), (act.f1(x + h) - act.f1(x - h)) / (2 * h), 1e-5) << act.name << " x=" << x;
    }
  }
}

TEST(Catalog, References) {
  EXPECT_EQ(make_activation("elu:alpha=0.5").reference(), "elu:alpha=0.5");
  EXPECT_EQ(make_activation("swish:beta=2").hyperparams.at("beta"), 2.0);
  EXPECT_TRUE(make_activation("leaky_relu:lambda=0").is_relu());
  EXPECT_THROW(make_activation("nope"), Error);
  EXPECT_THROW(make_activation("elu:beta=1"), Error);
}

TEST(Custom, RejectsMalformedExpressions) {
  try {
    custom_activation("bad", "1 + * x", "0", "0");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kParseError);
  }
}

}  // namespace
}  // namespace pathnorm

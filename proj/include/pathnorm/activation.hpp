// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pathnorm/quadrature.hpp"

namespace pathnorm {

/// Line a*x + b approached by an activation at one end of the real axis.
struct Asymptote {
  double slope = 0.0;
  double intercept = 0.0;
};

/// Abscissa where the activation is continuous but not twice weakly
/// differentiable. The one-sided first derivatives are stored, not estimated.
struct SingularPoint {
  double x = 0.0;
  double slope_left = 0.0;
  double slope_right = 0.0;
};

/// A scalar activation together with its derivatives and the data the
/// curvature norms need. Values are immutable after construction.
struct Activation {
  using Fn = std::function<double(double)>;

  std::string name;
  Fn f;
  Fn f1;
  Fn f2;
  std::vector<SingularPoint> singular_points;
  std::optional<Asymptote> asymptote_left;
  std::optional<Asymptote> asymptote_right;
  std::optional<double> closed_form_gamma;
  std::map<std::string, double> hyperparams;
  /// Set for activations built from expressions; used when serializing.
  std::optional<std::map<std::string, std::string>> expressions;

  double operator()(double x) const { return f(x); }

  /// Canonical CLI reference, e.g. "elu:alpha=0.5".
  std::string reference() const;

  bool is_relu() const { return name == "relu"; }
};

// ---- Catalog ---------------------------------------------------------------

Activation relu();
Activation leaky_relu(double lambda);
Activation sigmoid();
Activation tanh_activation();
Activation elu(double alpha);
Activation gelu();
Activation softplus();
Activation swish(double beta);

/// The eight activations of the reference table, with default
/// hyperparameters (leaky-ReLU lambda = 0.1, ELU alpha = 1, swish beta = 1).
std::vector<Activation> catalog();

/// Builds an activation from a reference such as "sigmoid", "elu:alpha=0.5"
/// or "swish:beta=2". Throws kInvalidArgument on unknown names or parameters.
Activation make_activation(std::string_view reference);
Activation make_activation(const std::string& name, std::map<std::string, double> params);

/// Custom activation from parsed expressions over x.
Activation custom_activation(std::string name, std::string_view f, std::string_view f1,
                             std::string_view f2, std::vector<SingularPoint> singular_points = {});

// ---- Norm quantities -----------------------------------------------------

/// g(x) = |f(x)| + (|x| + 2)|f'(x)|.
double g_value(const Activation& act, double x);

enum class InfLocation { kInterior, kMinusInfinity, kPlusInfinity };

struct InfG {
  double x_star = 0.0;  ///< +-infinity when the infimum is a limit
  double g_star = 0.0;
  InfLocation where = InfLocation::kInterior;
};

/// Infimum of g over the real line: grid scan on [-64, 64], golden-section
/// refinement, and the limits g(-inf), g(+inf) from the asymptotes.
InfG inf_g(const Activation& act, const QuadConfig& cfg = {});

/// Curvature integral of |f''(x)|(|x|+1) over the smooth pieces of f.
/// Throws kNonIntegrable when the tails do not decay within the hard window.
double gamma0(const Activation& act, const QuadConfig& cfg = {});

struct GammaParts {
  double curvature = 0.0;    ///< gamma0 (or its piecewise variant)
  double linear_term = 0.0;  ///< inf g, or the singular-point boundary term
  double total = 0.0;
  bool singular = false;
};

/// gamma = gamma0 + inf g for smooth activations; for a single singular point
/// x0 the boundary term |f(x0)| + (1+|x0|)(|f'_+(x0)| + |f'_-(x0)|) replaces
/// inf g. Throws kMultiSingular for more than one singular point.
GammaParts gamma_parts(const Activation& act, const QuadConfig& cfg = {});
double gamma(const Activation& act, const QuadConfig& cfg = {});

struct LipschitzEstimate {
  double bound = 0.0;          ///< gamma + min(|f'(+inf)|, |f'(-inf)|)
  double empirical_sup = 0.0;  ///< sup |f'| over a dense grid
};

LipschitzEstimate lipschitz_bound(const Activation& act, const QuadConfig& cfg = {});

struct Asymptotes {
  Asymptote left;
  Asymptote right;
  double window = 0.0;  ///< |x| at which the Cauchy check succeeded
};

/// Numerically determined asymptotes. Throws kNoAsymptote when the slope or
/// intercept sequences fail to settle within the search window.
Asymptotes asymptotes(const Activation& act, const QuadConfig& cfg = {});

/// Stored asymptotes when present, otherwise `asymptotes(act)`.
Asymptotes resolved_asymptotes(const Activation& act, const QuadConfig& cfg = {});

}  // namespace pathnorm

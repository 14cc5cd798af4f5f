// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pathnorm/activation.hpp"
#include "pathnorm/two_layer.hpp"

namespace pathnorm {

/// One point mass of a discrete representation: probability p, inner
/// weight w = (b, c) of length d+1 and coefficient a.
struct BarronAtom {
  double p = 0.0;
  std::vector<double> w;
  double a = 0.0;
};

/// Named parametric measure over w with a constant coefficient.
/// distribution: "gaussian" (w ~ N(0, scale^2 I)) or "uniform"
/// (w ~ U(-scale, scale)^{d+1}).
struct BarronSampler {
  std::string distribution = "gaussian";
  double scale = 1.0;
  double amplitude = 1.0;
};

/// f(x) = E_{w ~ pi}[a(w) sigma(w^T (x, 1))].
struct BarronRep {
  int input_dim = 1;
  std::vector<BarronAtom> atoms;        ///< used when non-empty
  std::optional<BarronSampler> sampler;  ///< used when atoms is empty

  bool is_discrete() const { return !atoms.empty(); }

  /// Throws kInvalidArgument on bad shapes, negative weights or weights
  /// that do not sum to one.
  void validate() const;
};

/// Value of the represented function; exact for discrete representations,
/// a seeded Monte-Carlo average with `n_mc` draws otherwise.
double eval_barron(const BarronRep& rep, const Activation& act, std::span<const double> x,
                   int n_mc = 4096, std::uint64_t seed = 0);

/// Draws m atoms i.i.d. from pi; unit k = (a(w_k)/m, w_k[0..d), w_k[d]).
TwoLayerNet sample_from_barron(const BarronRep& rep, int m, const Activation& act, std::uint64_t seed);

/// sqrt(E[a(w)^2 (||w||_1 + 1)^2]); an upper bound on the Barron norm of the
/// represented function. Exact for discrete representations.
double barron_norm_estimate(const BarronRep& rep, int n_mc = 100'000, std::uint64_t seed = 0);

/// (gamma + min(|sigma'(+inf)|, |sigma'(-inf)|) + |sigma(0)|)^2
double c_sigma(const Activation& act, const QuadConfig& cfg = {});

}  // namespace pathnorm

// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/two_layer.hpp"

#include <cmath>
#include <string>

#include "pathnorm/error.hpp"
#include "pathnorm/rng.hpp"

namespace pathnorm {

namespace {

double l1(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

double pre_activation(const Unit& u, std::span<const double> x) {
  double s = u.c;
  for (std::size_t j = 0; j < x.size(); ++j) s += u.b[j] * x[j];
  return s;
}

}  // namespace

void TwoLayerNet::validate() const {
  if (input_dim < 1) throw Error(ErrorKind::kDimMismatch, "input dimension must be >= 1");
  for (std::size_t k = 0; k < units.size(); ++k)
    if (static_cast<int>(units[k].b.size()) != input_dim)
      throw Error(ErrorKind::kDimMismatch, "unit " + std::to_string(k) + " has " +
                                               std::to_string(units[k].b.size()) +
                                               " inner weights, expected " + std::to_string(input_dim));
}

double eval_two_layer(const TwoLayerNet& net, std::span<const double> x) {
  if (static_cast<int>(x.size()) != net.input_dim)
    throw Error(ErrorKind::kDimMismatch, "input has " + std::to_string(x.size()) +
                                             " coordinates, expected " + std::to_string(net.input_dim));
  double s = 0.0;
  for (const auto& u : net.units) s += u.a * net.activation.f(pre_activation(u, x));
  return s;
}

double path_norm(const TwoLayerNet& net) {
  double s = 0.0;
  for (const auto& u : net.units) s += std::abs(u.a) * (l1(u.b) + std::abs(u.c));
  return s;
}

double modified_path_norm(const TwoLayerNet& net) {
  double s = 0.0;
  for (const auto& u : net.units) s += std::abs(u.a) * (l1(u.b) + std::abs(u.c) + 1.0);
  return s;
}

double outer_l1(const TwoLayerNet& net) {
  double s = 0.0;
  for (const auto& u : net.units) s += std::abs(u.a);
  return s;
}

TwoLayerNet rescale_units(const TwoLayerNet& net, double t) {
  if (!(t > 0.0)) throw Error(ErrorKind::kInvalidArgument, "rescaling factor must be positive");
  TwoLayerNet out = net;
  for (auto& u : out.units) {
    u.a *= t;
    for (double& b : u.b) b /= t;
    u.c /= t;
  }
  return out;
}

Rewrite rewrite_to_relu(const TwoLayerNet& net, double eps, const QuadConfig& cfg, int samples,
                        std::uint64_t seed) {
  net.validate();
  const Approximation approx = approximate_activation(net.activation, eps, cfg);
  TwoLayerNet out;
  out.input_dim = net.input_dim;
  out.activation = relu();
  out.units.reserve(net.units.size() * approx.net.units.size());
  for (const auto& u : net.units) {
    for (const auto& r : approx.net.units) {
      const double a = u.a * r.alpha;
      if (a == 0.0) continue;
      Unit v;
      v.a = a;
      v.b.resize(u.b.size());
      for (std::size_t j = 0; j < u.b.size(); ++j) v.b[j] = r.beta * u.b[j];
      v.c = r.beta * u.c + r.gamma;
      out.units.push_back(std::move(v));
    }
  }

  RewriteReport rep;
  rep.eps = eps;
  rep.gamma_reference = approx.certificate.gamma_reference;
  rep.relu_width = static_cast<int>(approx.net.units.size());
  rep.path_norm_out = path_norm(out);
  rep.norm_bound = (rep.gamma_reference + eps) * modified_path_norm(net);
  rep.deviation_bound = eps * outer_l1(net);
  rep.deviation_samples = samples;
  rep.certificate = approx.certificate;
  Rng rng(seed, 0x7e3);
  std::vector<double> x(net.input_dim);
  for (int s = 0; s < samples; ++s) {
    for (double& xi : x) xi = rng.uniform(-1.0, 1.0);
    rep.deviation_measured =
        std::max(rep.deviation_measured, std::abs(eval_two_layer(net, x) - eval_two_layer(out, x)));
  }
  return {std::move(out), rep};
}

TwoLayerNet random_two_layer(const Activation& act, int d, int m, double scale, std::uint64_t seed) {
  Rng rng(seed, 0x2a1);
  TwoLayerNet net;
  net.input_dim = d;
  net.activation = act;
  net.units.resize(m);
  for (auto& u : net.units) {
    u.a = rng.uniform(-scale, scale) / m;
    u.b.resize(d);
    for (double& b : u.b) b = rng.uniform(-1.0, 1.0);
    u.c = rng.uniform(-1.0, 1.0);
  }
  return net;
}

}  // namespace pathnorm

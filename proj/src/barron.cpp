// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/barron.hpp"

#include <algorithm>
#include <cmath>

#include "pathnorm/error.hpp"
#include "pathnorm/rng.hpp"

namespace pathnorm {

namespace {

std::vector<double> draw_parametric(const BarronSampler& s, int d, Rng& rng) {
  std::vector<double> w(d + 1);
  for (double& v : w) v = s.distribution == "gaussian" ? s.scale * rng.normal() : rng.uniform(-s.scale, s.scale);
  return w;
}

std::size_t draw_atom(const std::vector<double>& cumulative, Rng& rng) {
  const double u = rng.uniform() * cumulative.back();
  const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
  return std::min<std::size_t>(it - cumulative.begin(), cumulative.size() - 1);
}

double atom_value(const Activation& act, const std::vector<double>& w, std::span<const double> x) {
  double z = w.back();
  for (std::size_t j = 0; j < x.size(); ++j) z += w[j] * x[j];
  return act.f(z);
}

double l1_plus_one(const std::vector<double>& w) {
  double s = 1.0;
  for (double v : w) s += std::abs(v);
  return s;
}

}  // namespace

void BarronRep::validate() const {
  if (input_dim < 1) throw Error(ErrorKind::kInvalidArgument, "input dimension must be >= 1");
  if (atoms.empty()) {
    if (!sampler) throw Error(ErrorKind::kInvalidArgument, "representation has neither atoms nor a sampler");
    if (sampler->distribution != "gaussian" && sampler->distribution != "uniform")
      throw Error(ErrorKind::kInvalidArgument, "unknown distribution '" + sampler->distribution + "'");
    if (!(sampler->scale > 0.0)) throw Error(ErrorKind::kInvalidArgument, "sampler scale must be positive");
    return;
  }
  double total = 0.0;
  for (const auto& atom : atoms) {
    if (static_cast<int>(atom.w.size()) != input_dim + 1)
      throw Error(ErrorKind::kInvalidArgument, "atom weight must have d+1 entries");
    if (!(atom.p >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "atom probabilities must be >= 0");
    total += atom.p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw Error(ErrorKind::kInvalidArgument, "atom probabilities sum to " + std::to_string(total));
}

double eval_barron(const BarronRep& rep, const Activation& act, std::span<const double> x, int n_mc,
                   std::uint64_t seed) {
  if (static_cast<int>(x.size()) != rep.input_dim)
    throw Error(ErrorKind::kDimMismatch, "input dimension does not match the representation");
  if (rep.is_discrete()) {
    double s = 0.0;
    for (const auto& atom : rep.atoms) s += atom.p * atom.a * atom_value(act, atom.w, x);
    return s;
  }
  Rng rng(seed, 0xba7);
  double s = 0.0;
  for (int i = 0; i < n_mc; ++i) s += rep.sampler->amplitude * atom_value(act, draw_parametric(*rep.sampler, rep.input_dim, rng), x);
  return s / n_mc;
}

TwoLayerNet sample_from_barron(const BarronRep& rep, int m, const Activation& act, std::uint64_t seed) {
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "sample width must be >= 1");
  rep.validate();
  Rng rng(seed, 0xb5);
  const int d = rep.input_dim;
  std::vector<double> cumulative;
  for (const auto& atom : rep.atoms) cumulative.push_back((cumulative.empty() ? 0.0 : cumulative.back()) + atom.p);

  TwoLayerNet net;
  net.input_dim = d;
  net.activation = act;
  net.units.resize(m);
  for (auto& u : net.units) {
    std::vector<double> w;
    double a = 0.0;
    if (rep.is_discrete()) {
      const auto& atom = rep.atoms[draw_atom(cumulative, rng)];
      w = atom.w;
      a = atom.a;
    } else {
      w = draw_parametric(*rep.sampler, d, rng);
      a = rep.sampler->amplitude;
    }
    u.a = a / m;
    u.b.assign(w.begin(), w.begin() + d);
    u.c = w[d];
  }
  return net;
}

double barron_norm_estimate(const BarronRep& rep, int n_mc, std::uint64_t seed) {
  rep.validate();
  if (rep.is_discrete()) {
    double s = 0.0;
    for (const auto& atom : rep.atoms) {
      const double t = atom.a * l1_plus_one(atom.w);
      s += atom.p * t * t;
    }
    return std::sqrt(s);
  }
  if (n_mc < 1) throw Error(ErrorKind::kInvalidArgument, "n_mc must be >= 1");
  Rng rng(seed, 0xb0);
  double s = 0.0;
  for (int i = 0; i < n_mc; ++i) {
    const double t = rep.sampler->amplitude * l1_plus_one(draw_parametric(*rep.sampler, rep.input_dim, rng));
    s += t * t;
  }
  return std::sqrt(s / n_mc);
}

double c_sigma(const Activation& act, const QuadConfig& cfg) {
  const Asymptotes asy = resolved_asymptotes(act, cfg);
  const double t = gamma(act, cfg) + std::min(std::abs(asy.left.slope), std::abs(asy.right.slope)) +
                   std::abs(act.f(0.0));
  return t * t;
}

}  // namespace pathnorm

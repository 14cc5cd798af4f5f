// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/train.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pathnorm/error.hpp"
#include "pathnorm/parallel.hpp"
#include "pathnorm/rng.hpp"

namespace pathnorm {

namespace {

double sgn(double v) { return static_cast<double>((v > 0) - (v < 0)); }

double clamp01(double v) { return std::min(std::max(v, 0.0), 1.0); }

double l1(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

void require_nonempty(const Dataset& data) {
  if (data.size() == 0) throw Error(ErrorKind::kEmptyDataset, "data set is empty");
  if (data.targets.size() != data.inputs.size())
    throw Error(ErrorKind::kDimMismatch, "inputs and targets differ in length");
}

// Risk-part gradient accumulated over the listed sample indices.
void accumulate_risk_gradient(const TwoLayerNet& net, const Dataset& data, const std::vector<std::size_t>& idx,
                              Gradient& g) {
  const std::size_t m = net.units.size();
  const double inv_n = 1.0 / static_cast<double>(idx.size());
  std::vector<double> z(m);
  std::vector<double> s(m);
  for (std::size_t i : idx) {
    const auto& x = data.inputs[i];
    double pred = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const Unit& u = net.units[k];
      double zk = u.c;
      for (std::size_t j = 0; j < x.size(); ++j) zk += u.b[j] * x[j];
      z[k] = zk;
      s[k] = net.activation.f(zk);
      pred += u.a * s[k];
    }
    if (!(pred > 0.0 && pred < 1.0)) continue;
    const double r = (pred - data.targets[i]) * inv_n;
    for (std::size_t k = 0; k < m; ++k) {
      const Unit& u = net.units[k];
      g.a[k] += r * s[k];
      const double back = r * u.a * net.activation.f1(z[k]);
      for (std::size_t j = 0; j < x.size(); ++j) g.b[k][j] += back * x[j];
      g.c[k] += back;
    }
  }
}

Gradient zero_gradient(const TwoLayerNet& net) {
  Gradient g;
  g.a.assign(net.units.size(), 0.0);
  g.c.assign(net.units.size(), 0.0);
  g.b.assign(net.units.size(), std::vector<double>(net.input_dim, 0.0));
  return g;
}

}  // namespace

void Dataset::validate() const {
  require_nonempty(*this);
  const auto d = inputs.front().size();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (inputs[i].size() != d) throw Error(ErrorKind::kDimMismatch, "sample " + std::to_string(i) + " has wrong dimension");
    for (double v : inputs[i])
      if (!(v >= -1.0 && v <= 1.0))
        throw Error(ErrorKind::kInvalidArgument, "sample " + std::to_string(i) + " leaves [-1, 1]^d");
    if (!(targets[i] >= 0.0 && targets[i] <= 1.0))
      throw Error(ErrorKind::kInvalidArgument, "target " + std::to_string(i) + " outside [0, 1]");
  }
}

double truncated_loss(double pred, double y) {
  const double e = clamp01(pred) - y;
  return 0.5 * e * e;
}

double empirical_risk(const TwoLayerNet& net, const Dataset& data) {
  require_nonempty(data);
  double s = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) s += truncated_loss(eval_two_layer(net, data.inputs[i]), data.targets[i]);
  return s / static_cast<double>(data.size());
}

double empirical_risk(const ResNet& net, const Dataset& data) {
  require_nonempty(data);
  double s = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) s += truncated_loss(eval_resnet(net, data.inputs[i]), data.targets[i]);
  return s / static_cast<double>(data.size());
}

double objective(const TwoLayerNet& net, const Dataset& data, double lambda) {
  return empirical_risk(net, data) + lambda * modified_path_norm(net);
}

double objective(const ResNet& net, const Dataset& data, double lambda) {
  return empirical_risk(net, data) + lambda * norm_closed(net);
}

Gradient gradient(const TwoLayerNet& net, const Dataset& data, double lambda) {
  require_nonempty(data);
  net.validate();
  Gradient g = zero_gradient(net);
  std::vector<std::size_t> idx(data.size());
  std::iota(idx.begin(), idx.end(), 0);
  accumulate_risk_gradient(net, data, idx, g);
  for (std::size_t k = 0; k < net.units.size(); ++k) {
    const Unit& u = net.units[k];
    g.a[k] += lambda * sgn(u.a) * (l1(u.b) + std::abs(u.c) + 1.0);
    for (std::size_t j = 0; j < u.b.size(); ++j) g.b[k][j] += lambda * std::abs(u.a) * sgn(u.b[j]);
    g.c[k] += lambda * std::abs(u.a) * sgn(u.c);
  }
  return g;
}

void TrainConfig::validate() const {
  if (steps < 1) throw Error(ErrorKind::kInvalidArgument, "steps must be >= 1");
  if (!(step_size > 0.0)) throw Error(ErrorKind::kInvalidArgument, "step_size must be positive");
  if (!(lambda >= 0.0)) throw Error(ErrorKind::kInvalidArgument, "lambda must be >= 0");
  if (batch < 0) throw Error(ErrorKind::kInvalidArgument, "batch must be >= 0");
  if (width < 1) throw Error(ErrorKind::kInvalidArgument, "width must be >= 1");
}

FitResult fit(const TwoLayerNet& init, const Dataset& data, const TrainConfig& cfg) {
  cfg.validate();
  require_nonempty(data);
  init.validate();
  Rng rng(cfg.seed, 0xf17);
  TwoLayerNet net = init;
  FitResult out{net, {}};
  auto record = [&](int step) {
    const double risk = empirical_risk(net, data);
    const double norm = modified_path_norm(net);
    const double J = risk + cfg.lambda * norm;
    if (!std::isfinite(J)) throw Error(ErrorKind::kDiverged, "objective became non-finite at step " + std::to_string(step));
    out.trace.objective.push_back(J);
    out.trace.risk.push_back(risk);
    out.trace.norm.push_back(norm);
    if (J < out.trace.objective[out.trace.best_step]) {
      out.trace.best_step = step;
      out.net = net;
    }
  };
  record(0);

  std::vector<std::size_t> idx(data.size());
  std::iota(idx.begin(), idx.end(), 0);
  const bool full = cfg.batch == 0 || cfg.batch >= static_cast<int>(data.size());
  const double eta = cfg.step_size;
  for (int step = 1; step <= cfg.steps; ++step) {
    std::vector<std::size_t> batch;
    if (full) {
      batch = idx;
    } else {
      batch.resize(cfg.batch);
      for (auto& b : batch) b = static_cast<std::size_t>(rng() % data.size());
    }
    Gradient g = zero_gradient(net);
    accumulate_risk_gradient(net, data, batch, g);
    for (std::size_t k = 0; k < net.units.size(); ++k) {
      Unit& u = net.units[k];
      const double mass = l1(u.b) + std::abs(u.c) + 1.0;
      const double abs_a = std::abs(u.a);
      for (std::size_t j = 0; j < u.b.size(); ++j) u.b[j] -= eta * (g.b[k][j] + cfg.lambda * abs_a * sgn(u.b[j]));
      u.c -= eta * (g.c[k] + cfg.lambda * abs_a * sgn(u.c));
      if (cfg.proximal) {
        const double v = u.a - eta * g.a[k];
        u.a = sgn(v) * std::max(std::abs(v) - eta * cfg.lambda * mass, 0.0);
      } else {
        u.a -= eta * (g.a[k] + cfg.lambda * sgn(u.a) * mass);
      }
    }
    record(step);
  }
  return out;
}

TwoLayerNet init_two_layer(const Activation& act, int d, const TrainConfig& cfg) {
  return random_two_layer(act, d, cfg.width, cfg.init_scale, cfg.seed);
}

Dataset barron_dataset(const BarronRep& rep, const Activation& act, int n, std::uint64_t seed) {
  Dataset data;
  data.inputs = uniform_cube_samples(rep.input_dim, n, seed);
  data.targets.reserve(n);
  for (const auto& x : data.inputs) data.targets.push_back(eval_barron(rep, act, x));
  return data;
}

int AprioriReport::passed() const {
  return static_cast<int>(std::count_if(runs.begin(), runs.end(), [](const AprioriRun& r) { return r.holds; }));
}

double AprioriReport::pass_fraction() const {
  return runs.empty() ? 0.0 : static_cast<double>(passed()) / static_cast<double>(runs.size());
}

AprioriReport apriori_experiment(const BarronRep& rep, const Activation& act, const AprioriConfig& cfg,
                                 const QuadConfig& quad) {
  rep.validate();
  if (rep.input_dim != cfg.d) throw Error(ErrorKind::kDimMismatch, "representation dimension differs from d");
  AprioriReport report;
  const double g = gamma(act, quad);
  report.lambda_n = lambda_n_two_layer(cfg.d, cfg.n, g);
  report.lambda = cfg.lambda_mult * report.lambda_n;
  report.barron_norm = barron_norm_estimate(rep);
  report.c_sigma = c_sigma(act, quad);
  report.delta = cfg.delta;
  const double bound =
      apriori_bound_two_layer(report.barron_norm, cfg.m, cfg.d, cfg.n, cfg.delta, report.lambda, act, quad);
  report.runs.resize(cfg.seeds.size());
  parallel_for(cfg.seeds.size(), [&](std::size_t s) {
    const std::uint64_t seed = cfg.seeds[s];
    const Dataset train = barron_dataset(rep, act, cfg.n, Rng(seed, 1)());
    train.validate();
    TrainConfig tc;
    tc.lambda = report.lambda;
    tc.steps = cfg.steps;
    tc.step_size = cfg.step_size;
    tc.seed = seed;
    tc.width = cfg.m;
    const FitResult fitted = fit(init_two_layer(act, cfg.d, tc), train, tc);
    const Dataset heldout = barron_dataset(rep, act, cfg.heldout, Rng(seed, 2)());
    AprioriRun run;
    run.seed = seed;
    run.train_risk = empirical_risk(fitted.net, train);
    run.heldout_risk = empirical_risk(fitted.net, heldout);
    run.final_norm = modified_path_norm(fitted.net);
    run.bound = bound;
    run.holds = run.heldout_risk <= bound;
    report.runs[s] = run;
  });
  return report;
}

}  // namespace pathnorm

// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pathnorm/barron.hpp"
#include "pathnorm/error.hpp"
#include "pathnorm/parallel.hpp"
#include "pathnorm/rng.hpp"

namespace pathnorm {

namespace {

void check_dn(int d, long n) {
  if (d < 1 || n < 1) throw Error(ErrorKind::kInvalidArgument, "d and n must be >= 1");
}

double log_term(int d) { return std::sqrt(2.0 * std::log(2.0 * d + 2.0)); }

// Pairwise summation keeps the reduction independent of the schedule.
double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) return std::accumulate(v.begin(), v.end(), 0.0);
  const std::size_t half = v.size() / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

}  // namespace

double rad_bound_two_layer(double Q, int d, long n, double gamma_sigma) {
  check_dn(d, n);
  return 2.0 * gamma_sigma * Q * std::sqrt(2.0 * std::log(2.0 * d + 2.0) / static_cast<double>(n));
}

double rad_bound_relu(double Q, int d, long n) { return rad_bound_two_layer(Q, d, n, 1.0); }

double rad_bound_resnet(double Q, int d, long n, double gamma_sigma) {
  check_dn(d, n);
  return (4.0 * gamma_sigma + 1.0) * Q * std::sqrt(2.0 * std::log(2.0 * d + 2.0) / static_cast<double>(n));
}

double rad_bound_linear(const std::vector<Sample>& samples) {
  if (samples.empty()) throw Error(ErrorKind::kEmptyDataset, "no samples");
  const auto d = samples.front().size();
  double max_inf = 0.0;
  for (const auto& x : samples) {
    if (x.size() != d) throw Error(ErrorKind::kDimMismatch, "samples have mixed dimensions");
    for (double v : x) max_inf = std::max(max_inf, std::abs(v));
  }
  return max_inf * std::sqrt(2.0 * std::log(2.0 * static_cast<double>(d)) / static_cast<double>(samples.size()));
}

double posterior_gap_bound(double norm, int d, long n, double delta, double gamma_sigma) {
  check_dn(d, n);
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::kInvalidArgument, "delta must lie in (0, 1)");
  const double sn = std::sqrt(static_cast<double>(n));
  return (norm + 1.0) * (8.0 * gamma_sigma * log_term(d) + 1.0) / sn +
         std::sqrt(2.0 * std::log(7.0 / delta) / static_cast<double>(n));
}

double lambda_n_two_layer(int d, long n, double gamma_sigma) {
  check_dn(d, n);
  return (8.0 * gamma_sigma * log_term(d) + 1.0) / std::sqrt(static_cast<double>(n));
}

double lambda_n_resnet(int d, long n, double gamma_sigma) {
  check_dn(d, n);
  return ((8.0 * gamma_sigma + 2.0) * log_term(d) + 1.0) / std::sqrt(static_cast<double>(n));
}

double apriori_bound_two_layer(double norm_f, int m, int d, long n, double delta, double lambda,
                               const Activation& act, const QuadConfig& cfg) {
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "m must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::kInvalidArgument, "delta must lie in (0, 1)");
  const double g = gamma(act, cfg);
  const double ln = lambda_n_two_layer(d, n, g);
  if (lambda < ln)
    throw Error(ErrorKind::kLambdaTooSmall, "lambda " + std::to_string(lambda) + " < lambda_n " + std::to_string(ln));
  return 3.0 * c_sigma(act, cfg) * norm_f * norm_f / (2.0 * m) + 2.0 * norm_f * lambda +
         2.0 * (norm_f + 1.0) * ln + 2.0 * std::sqrt(2.0 * std::log(14.0 / delta) / static_cast<double>(n));
}

double apriori_bound_resnet(double norm_f, int L, int m, int d, long n, double delta, double lambda,
                            const Activation& act, const QuadConfig& cfg) {
  if (m < 1 || L < 1) throw Error(ErrorKind::kInvalidArgument, "L and m must be >= 1");
  if (!(delta > 0.0 && delta < 1.0)) throw Error(ErrorKind::kInvalidArgument, "delta must lie in (0, 1)");
  const double g = gamma(act, cfg);
  const double c2 = 4.0 * g + 1.0;
  const double ln = lambda_n_resnet(d, n, g);
  if (lambda < ln)
    throw Error(ErrorKind::kLambdaTooSmall, "lambda " + std::to_string(lambda) + " < lambda_n " + std::to_string(ln));
  return 3.0 * c_sigma(act, cfg) * norm_f * norm_f / (2.0 * L * m) + 2.0 * c2 * norm_f * lambda +
         2.0 * (c2 * norm_f + 1.0) * ln + 2.0 * std::sqrt(2.0 * std::log(14.0 / delta) / static_cast<double>(n));
}

RadEstimate empirical_rademacher(const std::vector<Sample>& samples, const std::vector<Candidate>& candidates,
                                 double budget, int n_sign_draws, std::uint64_t seed) {
  if (samples.empty()) throw Error(ErrorKind::kEmptyDataset, "no samples");
  if (n_sign_draws < 1) throw Error(ErrorKind::kInvalidArgument, "n_sign_draws must be >= 1");
  for (std::size_t k = 0; k < candidates.size(); ++k)
    if (candidates[k].norm > budget * (1.0 + 1e-12))
      throw Error(ErrorKind::kNormBudgetViolated, "candidate " + std::to_string(k) + " has norm " +
                                                      std::to_string(candidates[k].norm) + " > " +
                                                      std::to_string(budget));
  const std::size_t n = samples.size();
  const std::size_t K = candidates.size();
  std::vector<double> values(K * n);
  parallel_for(K, [&](std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) values[k * n + i] = candidates[k].f(samples[i]);
  });
  std::vector<double> per_draw(n_sign_draws);
  const Rng root(seed, 0x4ad);
  parallel_for(static_cast<std::size_t>(n_sign_draws), [&](std::size_t t) {
    Rng rng = root.split(t);
    std::vector<double> xi(n);
    for (double& s : xi) s = rng.sign();
    double best = K == 0 ? 0.0 : -std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < K; ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < n; ++i) s += xi[i] * values[k * n + i];
      best = std::max(best, s / static_cast<double>(n));
    }
    per_draw[t] = best;
  });
  RadEstimate est;
  est.n_sign_draws = n_sign_draws;
  est.n_candidate_functions = static_cast<int>(K);
  est.seed = seed;
  est.value = pairwise_sum(per_draw) / n_sign_draws;
  double var = 0.0;
  for (double v : per_draw) var += (v - est.value) * (v - est.value);
  est.std_error = n_sign_draws > 1 ? std::sqrt(var / (n_sign_draws - 1) / n_sign_draws) : 0.0;
  return est;
}

std::vector<Sample> uniform_cube_samples(int d, int n, std::uint64_t seed) {
  Rng rng(seed, 0xc0be);
  std::vector<Sample> out(n, Sample(d));
  for (auto& x : out)
    for (double& v : x) v = rng.uniform(-1.0, 1.0);
  return out;
}

std::vector<TwoLayerNet> two_layer_candidates(const Activation& act, int d, int width, int count, double budget,
                                              bool modified, std::uint64_t seed) {
  std::vector<TwoLayerNet> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    TwoLayerNet net = random_two_layer(act, d, width, 1.0, Rng(seed, k)());
    const double norm = modified ? modified_path_norm(net) : path_norm(net);
    if (norm > 0.0)
      for (auto& u : net.units) u.a *= budget / norm;
    out.push_back(std::move(net));
  }
  return out;
}

std::vector<ResNet> resnet_candidates(const Activation& act, int d, int D, int m, int L, double c, int count,
                                      double budget, std::uint64_t seed) {
  std::vector<ResNet> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    ResNet net = random_resnet(act, d, D, m, L, c, Rng(seed, k)());
    const double norm = norm_closed(net);
    if (norm > 0.0) net.alpha *= budget / norm;
    out.push_back(std::move(net));
  }
  return out;
}

std::vector<Sample> linear_candidates(int d, int count, std::uint64_t seed) {
  std::vector<Sample> out;
  for (int j = 0; j < d; ++j)
    for (double s : {1.0, -1.0}) {
      Sample u(d, 0.0);
      u[j] = s;
      out.push_back(std::move(u));
    }
  Rng rng(seed, 0x11);
  for (int k = 0; k < count; ++k) {
    Sample u(d);
    double l1 = 0.0;
    for (double& v : u) {
      v = rng.normal();
      l1 += std::abs(v);
    }
    for (double& v : u) v /= l1;
    out.push_back(std::move(u));
  }
  return out;
}

std::vector<Candidate> as_candidates(const std::vector<TwoLayerNet>& nets, bool modified) {
  std::vector<Candidate> out;
  for (const auto& net : nets)
    out.push_back({[&net](std::span<const double> x) { return eval_two_layer(net, x); },
                   modified ? modified_path_norm(net) : path_norm(net)});
  return out;
}

std::vector<Candidate> as_candidates(const std::vector<ResNet>& nets) {
  std::vector<Candidate> out;
  for (const auto& net : nets)
    out.push_back({[&net](std::span<const double> x) { return eval_resnet(net, x); }, norm_closed(net)});
  return out;
}

std::vector<Candidate> as_linear_candidates(const std::vector<Sample>& directions) {
  std::vector<Candidate> out;
  for (const auto& u : directions) {
    double l1 = 0.0;
    for (double v : u) l1 += std::abs(v);
    out.push_back({[&u](std::span<const double> x) {
                     double s = 0.0;
                     for (std::size_t j = 0; j < u.size(); ++j) s += u[j] * x[j];
                     return s;
                   },
                   l1});
  }
  return out;
}

}  // namespace pathnorm

// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/relu1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pathnorm/error.hpp"

namespace pathnorm {

double eval_relu1d(const ReluNet1D& net, double t) {
  double s = 0.0;
  for (const auto& u : net.units) s += u.alpha * std::max(0.0, u.beta * t + u.gamma);
  return s;
}

double path_norm_1d(const ReluNet1D& net) {
  double s = 0.0;
  for (const auto& u : net.units) s += std::abs(u.alpha) * (std::abs(u.beta) + std::abs(u.gamma));
  return s;
}

std::vector<double> eval_relu1d_sorted(const ReluNet1D& net, std::span<const double> ts) {
  struct Event {
    double at;
    double slope;
    double offset;
  };
  // slope/offset accumulate alpha*beta and alpha*gamma over the active units.
  double slope = 0.0;
  double offset = 0.0;
  std::vector<Event> events;
  events.reserve(net.units.size());
  for (const auto& u : net.units) {
    const double as = u.alpha * u.beta;
    const double ao = u.alpha * u.gamma;
    if (u.beta == 0.0) {
      if (u.gamma > 0.0) offset += ao;
    } else if (u.beta > 0.0) {
      events.push_back({-u.gamma / u.beta, as, ao});
    } else {
      slope += as;
      offset += ao;
      events.push_back({-u.gamma / u.beta, -as, -ao});
    }
  }
  std::sort(events.begin(), events.end(), [](const Event& a, const Event& b) { return a.at < b.at; });
  std::vector<double> out(ts.size());
  std::size_t e = 0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    while (e < events.size() && events[e].at <= ts[i]) {
      slope += events[e].slope;
      offset += events[e].offset;
      ++e;
    }
    out[i] = slope * ts[i] + offset;
  }
  return out;
}

namespace {

struct Pivot {
  double x = 0.0;
  double value = 0.0;
  double slope_left = 0.0;
  double slope_right = 0.0;
  bool singular = false;
};

Pivot choose_pivot(const Activation& act, double eps, const QuadConfig& cfg) {
  if (act.singular_points.size() > 1)
    throw Error(ErrorKind::kMultiSingular, act.name + " has more than one singular point");
  if (act.singular_points.size() == 1) {
    const auto& sp = act.singular_points.front();
    return {sp.x, act.f(sp.x), sp.slope_left, sp.slope_right, true};
  }
  const InfG inf = inf_g(act, cfg);
  double x = inf.x_star;
  if (inf.where != InfLocation::kInterior) {
    const double dir = inf.where == InfLocation::kMinusInfinity ? -1.0 : 1.0;
    double X = 8.0;
    while (g_value(act, dir * X) > inf.g_star + 0.5 * eps) {
      X *= 2.0;
      if (X > 1e12)
        throw Error(ErrorKind::kNoConvergence, act.name + ": g does not approach its limit");
    }
    x = dir * X;
  }
  const double s = act.f1(x);
  return {x, act.f(x), s, s, false};
}

double asymptote_gap(const Activation& act, const Asymptote& a, double x) {
  return std::abs(act.f(x) - (a.slope * x + a.intercept));
}

double tail_right(const Activation& act, const Asymptote& r, double X) {
  return std::abs((act.f(X) - (r.slope * X + r.intercept)) - (std::abs(X) + 1.0) * (act.f1(X) - r.slope));
}

double tail_left(const Activation& act, const Asymptote& l, double X) {
  return std::abs((act.f(X) - (l.slope * X + l.intercept)) + (std::abs(X) + 1.0) * (act.f1(X) - l.slope));
}

double choose_half_width(const Activation& act, const Pivot& p, const Asymptotes& asy, double eps) {
  double T = 8.0;
  while (T <= std::abs(p.x)) T *= 2.0;
  for (; T <= 1e9; T *= 2.0) {
    const double lo = p.x - T;
    const double hi = p.x + T;
    if (asymptote_gap(act, asy.left, lo) < 0.5 * eps && asymptote_gap(act, asy.right, hi) < 0.5 * eps &&
        (lo >= 0 || tail_left(act, asy.left, lo) < eps / 32.0) &&
        (hi <= 0 || tail_right(act, asy.right, hi) < eps / 32.0))
      return T;
  }
  throw Error(ErrorKind::kNoConvergence, act.name + ": asymptote not reached within the window");
}

// Units interpolating r(u) = f_eps(pivot + dir*u) on u in [0, T] with N
// cells, end slope `tail_slope` in u, starting from r(0) = r'(0) = 0.
void interpolate_half(const std::vector<double>& r, double T, double tail_slope, double pivot,
                      double dir, std::vector<ReluUnit>& units) {
  const std::size_t N = r.size() - 1;
  const double h = T / static_cast<double>(N);
  double prev_slope = 0.0;
  for (std::size_t i = 0; i <= N; ++i) {
    const double next_slope = i < N ? (r[i + 1] - r[i]) / h : tail_slope;
    const double u = h * static_cast<double>(i);
    // relu(u - u_i) with u = dir*(x - pivot)
    units.push_back({next_slope - prev_slope, dir, -dir * pivot - u});
    prev_slope = next_slope;
  }
}

}  // namespace

Approximation approximate_activation(const Activation& act, double eps, const QuadConfig& cfg) {
  if (!(eps > 0.0)) throw Error(ErrorKind::kInvalidArgument, "eps must be positive");
  double gamma_ref = 0.0;
  try {
    gamma_ref = gamma(act, cfg);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kNonIntegrable)
      throw Error(ErrorKind::kGammaInfinite, act.name + ": " + e.what());
    throw;
  }
  const Asymptotes asy = resolved_asymptotes(act, cfg);
  const Pivot p = choose_pivot(act, eps, cfg);
  const double T = choose_half_width(act, p, asy, eps);

  // Affine part reproduced exactly by at most three units.
  std::vector<ReluUnit> base;
  if (p.singular) {
    base.push_back({p.slope_right, 1.0, -p.x});
    base.push_back({-p.slope_left, -1.0, p.x});
    base.push_back({p.value < 0 ? -1.0 : 1.0, 0.0, std::abs(p.value)});
  } else {
    const double c = p.value - p.x * p.slope_right;
    base.push_back({p.slope_right, 1.0, 0.0});
    base.push_back({-p.slope_right, -1.0, 0.0});
    base.push_back({c < 0 ? -1.0 : 1.0, 0.0, std::abs(c)});
  }
  const auto residual = [&](double x) {
    const double lin = x >= p.x ? p.slope_right : p.slope_left;
    return act.f(x) - p.value - lin * (x - p.x);
  };

  // Validation grid, ascending.
  constexpr long kUniform = 1L << 20;
  std::vector<double> grid;
  grid.reserve(kUniform + 128);
  std::vector<double> far;
  const double span = 2.0 * T;
  for (int k = 0; k < 64; ++k) {
    const double r = span * std::pow(1e6 / span, (k + 1) / 64.0);
    far.push_back(r);
  }
  for (auto it = far.rbegin(); it != far.rend(); ++it) grid.push_back(p.x - *it);
  for (long i = 0; i < kUniform; ++i)
    grid.push_back(p.x - span + 2.0 * span * static_cast<double>(i) / (kUniform - 1));
  for (double r : far) grid.push_back(p.x + r);
  std::vector<double> truth(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) truth[i] = act.f(grid[i]);

  for (long N = 64; N <= 1'000'000; N *= 2) {
    const double h = T / static_cast<double>(N);
    std::vector<double> right(N + 1), left(N + 1);
    for (long i = 0; i <= N; ++i) {
      right[i] = residual(p.x + h * static_cast<double>(i));
      left[i] = residual(p.x - h * static_cast<double>(i));
    }
    right[0] = left[0] = 0.0;
    ReluNet1D net;
    net.units = base;
    interpolate_half(right, T, asy.right.slope - p.slope_right, p.x, 1.0, net.units);
    interpolate_half(left, T, -(asy.left.slope - p.slope_left), p.x, -1.0, net.units);
    std::erase_if(net.units, [](const ReluUnit& u) {
      return std::abs(u.alpha) * (std::abs(u.beta) + std::abs(u.gamma)) < 1e-15;
    });

    const std::vector<double> approx = eval_relu1d_sorted(net, grid);
    double err = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) err = std::max(err, std::abs(approx[i] - truth[i]));
    ApproxCertificate cert;
    cert.epsilon_requested = eps;
    cert.sup_error_measured = err;
    cert.path_norm = path_norm_1d(net);
    cert.gamma_reference = gamma_ref;
    cert.grid_points = static_cast<long>(grid.size());
    cert.partition_N = N;
    cert.x_lo = p.x - T;
    cert.x_hi = p.x + T;
    cert.x_eps = p.x;
    if (cert.holds()) return {std::move(net), cert};
  }
  throw Error(ErrorKind::kNoConvergence, act.name + ": partition exceeded 10^6 knots");
}

}  // namespace pathnorm

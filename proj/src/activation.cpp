// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/activation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "pathnorm/error.hpp"

namespace pathnorm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kStartWindow = 8.0;
constexpr double kHardWindow = 1048576.0;  // 2^20
constexpr double kScanHalfWidth = 64.0;

int sign_of(double v) { return (v > 0) - (v < 0); }

// f'' keeps one sign on [lo, hi] up to values negligible against `scale`.
bool one_signed(const Activation::Fn& f2, double lo, double hi) {
  constexpr int kSamples = 64;
  int seen = 0;
  for (int i = 0; i <= kSamples; ++i) {
    const double x = lo + (hi - lo) * i / kSamples;
    const double v = f2(x);
    if (!std::isfinite(v)) return false;
    if (std::abs(v) < 1e-300) continue;
    const int s = sign_of(v);
    if (seen != 0 && s != seen) return false;
    seen = s;
  }
  return true;
}

// Right tail of the curvature integral beyond X, integrated by parts against
// the asymptote c*x + d. Exact when f'' is one-signed on [X, inf).
double right_tail(const Activation& act, const Asymptote& r, double X) {
  return std::abs((act.f(X) - (r.slope * X + r.intercept)) - (X + 1.0) * (act.f1(X) - r.slope));
}

double left_tail(const Activation& act, const Asymptote& l, double X) {
  return std::abs((act.f(-X) - (-l.slope * X + l.intercept)) +
                  (1.0 + X) * (act.f1(-X) - l.slope));
}

double bisect_root(const Activation::Fn& h, double lo, double hi) {
  double hlo = h(lo);
  for (int i = 0; i < 80 && hi - lo > 1e-15 * (1.0 + std::abs(lo)); ++i) {
    const double mid = 0.5 * (lo + hi);
    const double hm = h(mid);
    if (hm == 0.0) return mid;
    if (sign_of(hm) == sign_of(hlo)) {
      lo = mid;
      hlo = hm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

void scan_sign_changes(const Activation::Fn& h, double lo, double hi, int points,
                       std::vector<double>& out) {
  double prev_x = lo;
  double prev = h(lo);
  for (int i = 1; i <= points; ++i) {
    const double x = lo + (hi - lo) * i / points;
    const double v = h(x);
    if (std::isfinite(prev) && std::isfinite(v) && sign_of(prev) * sign_of(v) < 0)
      out.push_back(bisect_root(h, prev_x, x));
    prev_x = x;
    prev = v;
  }
}

double limit_g(const Asymptote& a) {
  return std::abs(a.slope) <= 1e-10 ? std::abs(a.intercept) : kInf;
}

}  // namespace

double g_value(const Activation& act, double x) {
  return std::abs(act.f(x)) + (std::abs(x) + 2.0) * std::abs(act.f1(x));
}

Asymptotes asymptotes(const Activation& act, const QuadConfig& cfg) {
  cfg.validate();
  struct Side {
    double slope = kInf;
    double intercept = kInf;
    bool settled = false;
  };
  Side left, right;
  for (double X = kStartWindow; X <= kHardWindow; X *= 2.0) {
    const double sr = act.f1(X);
    const double ir = act.f(X) - sr * X;
    const double sl = act.f1(-X);
    const double il = act.f(-X) + sl * X;
    right.settled = std::abs(sr - right.slope) < 1e-8 && std::abs(ir - right.intercept) < 1e-8;
    left.settled = std::abs(sl - left.slope) < 1e-8 && std::abs(il - left.intercept) < 1e-8;
    right.slope = sr;
    right.intercept = ir;
    left.slope = sl;
    left.intercept = il;
    if (left.settled && right.settled)
      return {{left.slope, left.intercept}, {right.slope, right.intercept}, X};
  }
  throw Error(ErrorKind::kNoAsymptote,
              act.name + ": slope/intercept sequences did not settle within |x| <= 2^20");
}

Asymptotes resolved_asymptotes(const Activation& act, const QuadConfig& cfg) {
  if (act.asymptote_left && act.asymptote_right)
    return {*act.asymptote_left, *act.asymptote_right, 0.0};
  return asymptotes(act, cfg);
}

InfG inf_g(const Activation& act, const QuadConfig& cfg) {
  constexpr int kGrid = 4096;
  const double h = 2.0 * kScanHalfWidth / (kGrid - 1);
  int best = 0;
  double best_g = kInf;
  for (int i = 0; i < kGrid; ++i) {
    const double v = g_value(act, -kScanHalfWidth + h * i);
    if (v < best_g) {
      best_g = v;
      best = i;
    }
  }
  double lo = -kScanHalfWidth + h * std::max(best - 1, 0);
  double hi = -kScanHalfWidth + h * std::min(best + 1, kGrid - 1);
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double g1 = g_value(act, x1);
  double g2 = g_value(act, x2);
  for (int it = 0; it < 100 && hi - lo > 1e-12; ++it) {
    if (g1 <= g2) {
      hi = x2;
      x2 = x1;
      g2 = g1;
      x1 = hi - inv_phi * (hi - lo);
      g1 = g_value(act, x1);
    } else {
      lo = x1;
      x1 = x2;
      g1 = g2;
      x2 = lo + inv_phi * (hi - lo);
      g2 = g_value(act, x2);
    }
  }
  InfG out{-kScanHalfWidth + h * best, best_g, InfLocation::kInterior};
  if (g1 < out.g_star) out = {x1, g1, InfLocation::kInterior};
  if (g2 < out.g_star) out = {x2, g2, InfLocation::kInterior};

  std::optional<Asymptotes> asy;
  try {
    asy = resolved_asymptotes(act, cfg);
  } catch (const Error&) {
    // no linear asymptote: g grows without bound at that end
  }
  if (asy) {
    const double gl = limit_g(asy->left);
    const double gr = limit_g(asy->right);
    if (gl <= out.g_star && gl <= gr) out = {-kInf, gl, InfLocation::kMinusInfinity};
    else if (gr <= out.g_star) out = {kInf, gr, InfLocation::kPlusInfinity};
  }
  return out;
}

double gamma0(const Activation& act, const QuadConfig& cfg) {
  cfg.validate();
  Asymptotes asy;
  try {
    asy = resolved_asymptotes(act, cfg);
  } catch (const Error& e) {
    throw Error(ErrorKind::kNonIntegrable, act.name + ": no linear asymptotes, curvature tail diverges");
  }

  double X = kStartWindow;
  double tail = kInf;
  for (; X <= kHardWindow; X *= 2.0) {
    if (!one_signed(act.f2, X, 4.0 * X) || !one_signed(act.f2, -4.0 * X, -X)) continue;
    tail = left_tail(act, asy.left, X) + right_tail(act, asy.right, X);
    if (std::isfinite(tail) && tail < cfg.tail_cutoff_tol) break;
  }
  if (!(tail < cfg.tail_cutoff_tol))
    throw Error(ErrorKind::kNonIntegrable,
                act.name + ": curvature tail does not decay within |x| <= 2^20");

  std::vector<double> cuts{-X, 0.0, X};
  for (const auto& sp : act.singular_points)
    if (sp.x > -X && sp.x < X) cuts.push_back(sp.x);
  scan_sign_changes(act.f2, -X, X, 4096, cuts);
  const double inner = std::min(X, kScanHalfWidth);
  scan_sign_changes(act.f2, -inner, inner, 8192, cuts);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](double a, double b) { return std::abs(a - b) <= 1e-12 * (1 + std::abs(a)); }),
             cuts.end());

  const auto integrand = [&act](double x) { return std::abs(act.f2(x)) * (std::abs(x) + 1.0); };
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
    total += integrate(integrand, cuts[i], cuts[i + 1], cfg).value;
  return total + tail;
}

GammaParts gamma_parts(const Activation& act, const QuadConfig& cfg) {
  if (act.singular_points.size() > 1)
    throw Error(ErrorKind::kMultiSingular,
                act.name + " has " + std::to_string(act.singular_points.size()) + " singular points");
  GammaParts parts;
  parts.curvature = gamma0(act, cfg);
  if (act.singular_points.size() == 1) {
    const auto& sp = act.singular_points.front();
    parts.singular = true;
    parts.linear_term = std::abs(act.f(sp.x)) +
                        (1.0 + std::abs(sp.x)) * (std::abs(sp.slope_right) + std::abs(sp.slope_left));
  } else {
    parts.linear_term = inf_g(act, cfg).g_star;
  }
  parts.total = parts.curvature + parts.linear_term;
  return parts;
}

double gamma(const Activation& act, const QuadConfig& cfg) { return gamma_parts(act, cfg).total; }

LipschitzEstimate lipschitz_bound(const Activation& act, const QuadConfig& cfg) {
  const Asymptotes asy = resolved_asymptotes(act, cfg);
  LipschitzEstimate out;
  out.bound = gamma(act, cfg) + std::min(std::abs(asy.left.slope), std::abs(asy.right.slope));
  constexpr int kGrid = 1 << 16;
  for (int i = 0; i <= kGrid; ++i) {
    const double x = -kScanHalfWidth + 2.0 * kScanHalfWidth * i / kGrid;
    out.empirical_sup = std::max(out.empirical_sup, std::abs(act.f1(x)));
  }
  for (const auto& sp : act.singular_points)
    out.empirical_sup =
        std::max({out.empirical_sup, std::abs(sp.slope_left), std::abs(sp.slope_right)});
  return out;
}

}  // namespace pathnorm

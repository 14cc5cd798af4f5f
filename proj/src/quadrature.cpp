// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/quadrature.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <algorithm>
#include <cmath>
#include <queue>
#include <vector>

#include "pathnorm/error.hpp"

namespace pathnorm {

void QuadConfig::validate() const {
  if (!(abs_tol > 0) || !(rel_tol > 0) || !(tail_cutoff_tol > 0))
    throw Error(ErrorKind::kInvalidArgument, "quadrature tolerances must be positive");
  if (max_subdivisions < 1)
    throw Error(ErrorKind::kInvalidArgument, "max_subdivisions must be >= 1");
}

namespace {

struct Panel {
  double a;
  double b;
  double value;
  double error;
  bool operator<(const Panel& other) const { return error < other.error; }
};

Panel evaluate_panel(const std::function<double(double)>& f, double a, double b) {
  using Rule = boost::math::quadrature::gauss_kronrod<double, 21>;
  double err = 0.0;
  const double v = Rule::integrate(f, a, b, 0, 0.0, &err);
  return {a, b, v, err};
}

}  // namespace

QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     const QuadConfig& cfg) {
  if (a == b) return {};
  std::priority_queue<Panel> heap;
  Panel first = evaluate_panel(f, a, b);
  double value = first.value;
  double error = first.error;
  heap.push(first);
  int subdivisions = 0;
  while (error > cfg.abs_tol + cfg.rel_tol * std::abs(value) &&
         subdivisions < cfg.max_subdivisions) {
    Panel worst = heap.top();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) break;  // cannot split further
    heap.pop();
    Panel left = evaluate_panel(f, worst.a, mid);
    Panel right = evaluate_panel(f, mid, worst.b);
    value += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }
  // Re-sum in a fixed order to shed the drift of the running updates.
  std::vector<Panel> panels;
  panels.reserve(heap.size());
  while (!heap.empty()) {
    panels.push_back(heap.top());
    heap.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& x, const Panel& y) { return x.a < y.a; });
  value = 0.0;
  error = 0.0;
  for (const auto& p : panels) {
    value += p.value;
    error += p.error;
  }
  return {value, error, subdivisions};
}

}  // namespace pathnorm

// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <charconv>
#include <cmath>
#include <sstream>

#include "pathnorm/activation.hpp"
#include "pathnorm/error.hpp"
#include "pathnorm/expr.hpp"

namespace pathnorm {

namespace {

double logistic(double x) {
  if (x >= 0) return 1.0 / (1.0 + std::exp(-x));
  const double e = std::exp(x);
  return e / (1.0 + e);
}

double logistic_d1(double x) { return logistic(x) * logistic(-x); }

double logistic_d2(double x) { return logistic_d1(x) * (logistic(-x) - logistic(x)); }

double std_normal_cdf(double x) { return 0.5 * std::erfc(-x / M_SQRT2); }

double std_normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); }

// Positive root of exp(-t) = (t-2)/(t+2), where the swish curvature changes sign.
double swish_inflection() {
  auto h = [](double t) { return std::exp(-t) - (t - 2.0) / (t + 2.0); };
  double lo = 2.0 + 1e-9;  // h(lo) > 0
  double hi = 10.0;        // h(hi) < 0
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (h(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::string format_param(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

std::string Activation::reference() const {
  std::string out = name;
  char sep = ':';
  for (const auto& [key, value] : hyperparams) {
    out += sep;
    out += key + "=" + format_param(value);
    sep = ',';
  }
  return out;
}

Activation leaky_relu(double lambda) {
  if (!(lambda >= 0.0 && lambda < 1.0))
    throw Error(ErrorKind::kInvalidArgument, "leaky-ReLU lambda must lie in [0, 1)");
  Activation a;
  a.name = lambda == 0.0 ? "relu" : "leaky_relu";
  a.f = [lambda](double x) { return x > 0 ? x : lambda * x; };
  a.f1 = [lambda](double x) { return x > 0 ? 1.0 : lambda; };
  a.f2 = [](double) { return 0.0; };
  a.singular_points = {{0.0, lambda, 1.0}};
  a.asymptote_left = Asymptote{lambda, 0.0};
  a.asymptote_right = Asymptote{1.0, 0.0};
  a.closed_form_gamma = lambda + 1.0;
  if (lambda != 0.0) a.hyperparams["lambda"] = lambda;
  return a;
}

Activation relu() { return leaky_relu(0.0); }

Activation sigmoid() {
  Activation a;
  a.name = "sigmoid";
  a.f = logistic;
  a.f1 = logistic_d1;
  a.f2 = logistic_d2;
  a.asymptote_left = Asymptote{0.0, 0.0};
  a.asymptote_right = Asymptote{0.0, 1.0};
  a.closed_form_gamma = 1.5;
  return a;
}

Activation tanh_activation() {
  Activation a;
  a.name = "tanh";
  a.f = [](double x) { return std::tanh(x); };
  a.f1 = [](double x) {
    const double c = std::cosh(x);
    return 1.0 / (c * c);
  };
  a.f2 = [](double x) {
    const double c = std::cosh(x);
    return -2.0 * std::tanh(x) / (c * c);
  };
  a.asymptote_left = Asymptote{0.0, -1.0};
  a.asymptote_right = Asymptote{0.0, 1.0};
  a.closed_form_gamma = 5.0;
  return a;
}

Activation elu(double alpha) {
  if (!(alpha > 0.0)) throw Error(ErrorKind::kInvalidArgument, "ELU alpha must be positive");
  Activation a;
  a.name = "elu";
  a.f = [alpha](double x) { return x >= 0 ? x : alpha * std::expm1(x); };
  a.f1 = [alpha](double x) { return x >= 0 ? 1.0 : alpha * std::exp(x); };
  a.f2 = [alpha](double x) { return x >= 0 ? 0.0 : alpha * std::exp(x); };
  // alpha = 1 is C^1 with a bounded jump in f'', hence twice weakly differentiable.
  if (alpha != 1.0) a.singular_points = {{0.0, alpha, 1.0}};
  a.asymptote_left = Asymptote{0.0, -alpha};
  a.asymptote_right = Asymptote{1.0, 0.0};
  a.closed_form_gamma = alpha == 1.0 ? 3.0 : 3.0 * std::abs(alpha) + 1.0;
  a.hyperparams["alpha"] = alpha;
  return a;
}

Activation gelu() {
  Activation a;
  a.name = "gelu";
  a.f = [](double x) { return x * std_normal_cdf(x); };
  a.f1 = [](double x) { return std_normal_cdf(x) + x * std_normal_pdf(x); };
  a.f2 = [](double x) { return std_normal_pdf(x) * (2.0 - x * x); };
  a.asymptote_left = Asymptote{0.0, 0.0};
  a.asymptote_right = Asymptote{1.0, 0.0};
  a.closed_form_gamma =
      4.0 * (std_normal_cdf(M_SQRT2) + (1.0 + M_SQRT2) / (M_E * std::sqrt(M_PI))) - 3.0;
  return a;
}

Activation softplus() {
  Activation a;
  a.name = "softplus";
  a.f = [](double x) { return x > 0 ? x + std::log1p(std::exp(-x)) : std::log1p(std::exp(x)); };
  a.f1 = logistic;
  a.f2 = logistic_d1;
  a.asymptote_left = Asymptote{0.0, 0.0};
  a.asymptote_right = Asymptote{1.0, 0.0};
  a.closed_form_gamma = 1.0 + 2.0 * std::log(2.0);
  return a;
}

Activation swish(double beta) {
  if (!(beta > 0.0)) throw Error(ErrorKind::kInvalidArgument, "swish beta must be positive");
  Activation a;
  a.name = "swish";
  a.f = [beta](double x) { return x * logistic(beta * x); };
  a.f1 = [beta](double x) { return logistic(beta * x) + beta * x * logistic_d1(beta * x); };
  a.f2 = [beta](double x) {
    return 2.0 * beta * logistic_d1(beta * x) + beta * beta * x * logistic_d2(beta * x);
  };
  a.asymptote_left = Asymptote{0.0, 0.0};
  a.asymptote_right = Asymptote{1.0, 0.0};
  // gamma = c1/beta + c2 - 1 with c1, c2 evaluated at the symmetric
  // inflection points +-t of the logistic-weighted identity.
  static const double t = swish_inflection();
  const double s = logistic(t);
  const double ds = logistic_d1(t);
  const double c1 = 4.0 * t * t * ds;
  const double c2 = 2.0 * (2.0 * t * ds + 2.0 * s - 1.0);
  a.closed_form_gamma = c1 / beta + c2 - 1.0;
  a.hyperparams["beta"] = beta;
  return a;
}

std::vector<Activation> catalog() {
  return {relu(), leaky_relu(0.1), sigmoid(), tanh_activation(),
          elu(1.0), gelu(),        softplus(), swish(1.0)};
}

Activation make_activation(std::string_view reference) {
  std::string name(reference.substr(0, reference.find(':')));
  std::map<std::string, double> params;
  if (const auto colon = reference.find(':'); colon != std::string_view::npos) {
    std::string_view rest = reference.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      std::string_view item = rest.substr(0, comma);
      const auto eq = item.find('=');
      if (eq == std::string_view::npos)
        throw Error(ErrorKind::kInvalidArgument, "expected key=value in '" + std::string(item) + "'");
      double value = 0.0;
      std::string_view text = item.substr(eq + 1);
      auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
      if (ec != std::errc() || ptr != text.data() + text.size())
        throw Error(ErrorKind::kInvalidArgument, "bad number '" + std::string(text) + "'");
      params[std::string(item.substr(0, eq))] = value;
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
  }
  return make_activation(name, params);
}

Activation make_activation(const std::string& name, std::map<std::string, double> params) {
  auto take = [&](const char* key, double fallback) {
    auto it = params.find(key);
    if (it == params.end()) return fallback;
    const double v = it->second;
    params.erase(it);
    return v;
  };
  Activation out;
  if (name == "relu") out = relu();
  else if (name == "leaky_relu" || name == "lrelu") out = leaky_relu(take("lambda", 0.1));
  else if (name == "sigmoid") out = sigmoid();
  else if (name == "tanh") out = tanh_activation();
  else if (name == "elu") out = elu(take("alpha", 1.0));
  else if (name == "gelu") out = gelu();
  else if (name == "softplus") out = softplus();
  else if (name == "swish") out = swish(take("beta", 1.0));
  else throw Error(ErrorKind::kInvalidArgument, "unknown activation '" + name + "'");
  if (!params.empty())
    throw Error(ErrorKind::kInvalidArgument,
                "unknown parameter '" + params.begin()->first + "' for " + name);
  return out;
}

Activation custom_activation(std::string name, std::string_view f, std::string_view f1,
                             std::string_view f2, std::vector<SingularPoint> singular_points) {
  const Expr ef = Expr::parse(f);
  const Expr ef1 = Expr::parse(f1);
  const Expr ef2 = Expr::parse(f2);
  Activation a;
  a.name = std::move(name);
  a.f = ef.as_function();
  a.f1 = ef1.as_function();
  a.f2 = ef2.as_function();
  a.singular_points = std::move(singular_points);
  a.expressions = std::map<std::string, std::string>{
      {"f", ef.source()}, {"f1", ef1.source()}, {"f2", ef2.source()}};
  return a;
}

}  // namespace pathnorm

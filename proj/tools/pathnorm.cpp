// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include <fmt/format.h>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pathnorm/activation.hpp"
#include "pathnorm/barron.hpp"
#include "pathnorm/bounds.hpp"
#include "pathnorm/error.hpp"
#include "pathnorm/model_io.hpp"
#include "pathnorm/relu1d.hpp"
#include "pathnorm/resnet.hpp"
#include "pathnorm/rng.hpp"
#include "pathnorm/train.hpp"
#include "pathnorm/two_layer.hpp"
#include "report.hpp"

namespace pathnorm::cli {
namespace {

enum Exit { kOk = 0, kVerificationFailed = 1, kUsage = 2, kNumeric = 3 };

struct Common {
  std::uint64_t seed = 0;
  std::string out;
  std::string format = "csv";
};

void add_common(CLI::App* cmd, Common& common) {
  cmd->add_option("--seed", common.seed, "Random seed");
  cmd->add_option("--out", common.out, "Write the report to this path instead of stdout");
  cmd->add_option("--format", common.format, "Report format")->check(CLI::IsMember({"csv", "json"}));
}

void emit(const Table& table, const Common& common) {
  if (common.out.empty()) {
    table.write(std::cout, common.format);
    return;
  }
  std::ostringstream ss;
  table.write(ss, common.format);
  write_text_file(common.out, ss.str());
}

/// "sigmoid", "elu:alpha=0.5" or "spec:path/to/activation.json".
Activation resolve_activation(const std::string& ref) {
  if (ref.rfind("spec:", 0) == 0) return read_activation_spec(ref.substr(5));
  return make_activation(ref);
}

QuadConfig quad_from(double abs_tol, double rel_tol, int max_sub, double tail) {
  QuadConfig cfg{abs_tol, rel_tol, max_sub, tail};
  cfg.validate();
  return cfg;
}

void add_quad_flags(CLI::App* cmd, QuadConfig& q) {
  cmd->add_option("--abs-tol", q.abs_tol, "Quadrature absolute tolerance");
  cmd->add_option("--rel-tol", q.rel_tol, "Quadrature relative tolerance");
  cmd->add_option("--max-subdivisions", q.max_subdivisions, "Quadrature subdivision budget");
  cmd->add_option("--tail-cutoff-tol", q.tail_cutoff_tol, "Tolerance for truncating the improper tails");
}

BarronRep default_target(int d) {
  BarronRep rep;
  rep.input_dim = d;
  std::vector<double> w(d + 1, 0.0);
  w[0] = 1.0;
  rep.atoms = {{1.0, w, 1.0}};
  return rep;
}

// ---- gamma-table -----------------------------------------------------------

int cmd_gamma_table(const Common& common, const QuadConfig& q, const std::vector<std::string>& only) {
  std::vector<Activation> acts;
  if (only.empty()) {
    acts = catalog();
  } else {
    for (const auto& ref : only) acts.push_back(resolve_activation(ref));
  }
  Table table({"activation", "gamma0", "linear_term", "term_kind", "gamma_quadrature", "gamma_closed_form",
               "abs_delta"});
  bool ok = true;
  for (const auto& act : acts) {
    const GammaParts parts = gamma_parts(act, q);
    Cell closed = std::string("n/a");
    Cell delta = std::string("n/a");
    if (act.closed_form_gamma) {
      const double d = std::abs(parts.total - *act.closed_form_gamma);
      closed = *act.closed_form_gamma;
      delta = d;
      ok = ok && d <= 1e-3;
    }
    table.add({act.reference(), parts.curvature, parts.linear_term,
               std::string(parts.singular ? "singular" : "inf_g"), parts.total, closed, delta});
  }
  emit(table, common);
  return ok ? kOk : kVerificationFailed;
}

// ---- approx-1d ---------------------------------------------------------------

int cmd_approx(const Common& common, const QuadConfig& q, const std::vector<std::string>& refs, double eps,
               const std::string& save) {
  Table table({"activation", "eps", "sup_error", "path_norm", "gamma", "width", "partition_N", "grid_points",
               "x_eps", "x_lo", "x_hi", "certified"});
  bool ok = true;
  std::vector<Activation> acts;
  if (refs.empty()) acts = catalog();
  for (const auto& r : refs) acts.push_back(resolve_activation(r));
  for (const auto& act : acts) {
    const Approximation a = approximate_activation(act, eps, q);
    const auto& c = a.certificate;
    ok = ok && c.holds();
    table.add({act.reference(), eps, c.sup_error_measured, c.path_norm, c.gamma_reference,
               static_cast<std::int64_t>(a.net.units.size()), static_cast<std::int64_t>(c.partition_N),
               static_cast<std::int64_t>(c.grid_points), c.x_eps, c.x_lo, c.x_hi, c.holds()});
    if (!save.empty() && acts.size() == 1) write_model(save, as_two_layer(a.net));
  }
  emit(table, common);
  return ok ? kOk : kVerificationFailed;
}

// ---- norm ----------------------------------------------------------------------

int cmd_norm(const Common& common, const std::string& path) {
  const Model model = read_model(path);
  Table table({"quantity", "value"});
  bool ok = true;
  if (const auto* net = std::get_if<TwoLayerNet>(&model)) {
    table.add({std::string("path_norm"), path_norm(*net)});
    table.add({std::string("modified_path_norm"), modified_path_norm(*net)});
  } else {
    const auto& res = std::get<ResNet>(model);
    const double closed = norm_closed(res);
    const RecursiveNorm rec = norm_recursive(res);
    const double d_rec = std::abs(closed - rec.total);
    ok = d_rec <= 1e-10 * (1.0 + closed);
    table.add({std::string("norm_closed"), closed});
    table.add({std::string("norm_recursive"), rec.total});
    table.add({std::string("weighted_path_norm"), rec.weighted_path_norm});
    table.add({std::string("r"), rec.r});
    table.add({std::string("delta_recursive"), d_rec});
    try {
      const double bf = norm_bruteforce(res);
      const double d_bf = std::abs(closed - bf);
      ok = ok && d_bf <= 1e-10 * (1.0 + closed);
      table.add({std::string("norm_bruteforce"), bf});
      table.add({std::string("delta_bruteforce"), d_bf});
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kTooLarge) throw;
      table.add({std::string("norm_bruteforce"), std::string("skipped")});
      table.add({std::string("delta_bruteforce"), std::string("skipped")});
    }
  }
  emit(table, common);
  return ok ? kOk : kVerificationFailed;
}

// ---- rewrite -------------------------------------------------------------------

int cmd_rewrite(const Common& common, const QuadConfig& q, const std::string& path, double eps, int samples,
                const std::string& save) {
  const Model model = read_model(path);
  const auto* net = std::get_if<TwoLayerNet>(&model);
  if (!net) throw Error(ErrorKind::kInvalidArgument, "rewrite needs a two_layer model");
  const Rewrite rw = rewrite_to_relu(*net, eps, q, samples, common.seed);
  const auto& r = rw.report;
  Table table({"eps", "gamma", "relu_width", "width_out", "path_norm_out", "norm_bound", "deviation_measured",
               "deviation_bound", "samples", "holds"});
  table.add({eps, r.gamma_reference, static_cast<std::int64_t>(r.relu_width),
             static_cast<std::int64_t>(rw.net.units.size()), r.path_norm_out, r.norm_bound, r.deviation_measured,
             r.deviation_bound, static_cast<std::int64_t>(r.deviation_samples), r.holds()});
  if (!save.empty()) write_model(save, rw.net);
  emit(table, common);
  return r.holds() ? kOk : kVerificationFailed;
}

// ---- embed ---------------------------------------------------------------------

int cmd_embed(const Common& common, const QuadConfig& q, const std::string& path, int L, int m,
              const std::string& c_flag, const std::string& save) {
  const Model model = read_model(path);
  const auto* net = std::get_if<TwoLayerNet>(&model);
  if (!net) throw Error(ErrorKind::kInvalidArgument, "embed needs a two_layer model");
  if (m <= 0) m = L > 0 ? net->width() / L : 0;
  const double c = c_flag == "default" ? default_c(net->activation, q) : std::stod(c_flag);
  const ResNet res = embed_two_layer(*net, L, m, c);
  double bound = 0.0;
  for (const auto& u : net->units) {
    double w = std::abs(u.c);
    for (double b : u.b) w += std::abs(b);
    bound += std::abs(u.a) * (w + 1.0);
  }
  bound *= std::max(c, 1.0);
  const double norm = norm_closed(res);
  const auto xs = uniform_cube_samples(net->input_dim, 1000, common.seed);
  double dev = 0.0;
  for (const auto& x : xs) dev = std::max(dev, std::abs(eval_resnet(res, x) - eval_two_layer(*net, x)));
  const bool ok = dev <= 1e-10 && norm <= bound * (1.0 + 1e-12);
  Table table({"L", "m", "D", "c", "norm_closed", "bound", "r", "max_eval_deviation", "holds"});
  table.add({static_cast<std::int64_t>(L), static_cast<std::int64_t>(m), static_cast<std::int64_t>(res.state_dim()), c,
             norm, bound, norm_recursive(res).r, dev, ok});
  if (!save.empty()) write_model(save, res);
  emit(table, common);
  return ok ? kOk : kVerificationFailed;
}

// ---- rad-check -------------------------------------------------------------------

struct RadFlags {
  std::string family = "all";
  std::string activation = "relu";
  std::string gamma = "from:activation";
  int d = 2;
  double n = 50;
  double Q = 1.0;
  int candidates = 512;
  int draws = 256;
  int configs = 20;
  int width = 8;
  int D = 4;
  int m = 4;
  int L = 2;
};

int cmd_rad_check(const Common& common, const QuadConfig& q, const RadFlags& f) {
  Activation act = resolve_activation(f.activation);
  double g = 0.0;
  if (f.gamma.rfind("from:", 0) == 0) {
    const std::string src = f.gamma.substr(5);
    if (src != "activation") act = resolve_activation(src);
    g = gamma(act, q);
  } else {
    g = std::stod(f.gamma);
  }
  if (f.n < 1) throw Error(ErrorKind::kInvalidArgument, "n must be >= 1");
  const long n = static_cast<long>(f.n);
  const bool estimate = n <= 100'000;
  std::vector<std::string> families;
  if (f.family == "all") families = {"relu", "two_layer", "resnet", "linear"};
  else families = {f.family};

  Table table({"family", "config", "seed", "d", "n", "Q", "gamma", "c", "bound", "estimate", "std_error", "margin",
               "ok"});
  bool ok = true;
  for (const auto& fam : families) {
    for (int k = 0; k < f.configs; ++k) {
      const std::uint64_t seed = common.seed + static_cast<std::uint64_t>(k);
      double bound = 0.0;
      double c = 0.0;
      double gam = fam == "relu" ? 1.0 : g;
      std::vector<Sample> xs;
      if (estimate) xs = uniform_cube_samples(f.d, static_cast<int>(n), seed);
      RadEstimate est;
      if (fam == "relu") {
        bound = rad_bound_relu(f.Q, f.d, n);
        if (estimate) {
          const auto nets = two_layer_candidates(relu(), f.d, f.width, f.candidates, f.Q, false, seed);
          est = empirical_rademacher(xs, as_candidates(nets, false), f.Q, f.draws, seed);
        }
      } else if (fam == "two_layer") {
        bound = rad_bound_two_layer(f.Q, f.d, n, g);
        if (estimate) {
          const auto nets = two_layer_candidates(act, f.d, f.width, f.candidates, f.Q, true, seed);
          est = empirical_rademacher(xs, as_candidates(nets, true), f.Q, f.draws, seed);
        }
      } else if (fam == "resnet") {
        c = 4.0 * g + 1.0;
        bound = rad_bound_resnet(f.Q, f.d, n, g);
        if (estimate) {
          const auto nets = resnet_candidates(act, f.d, f.D, f.m, f.L, c, f.candidates, f.Q, seed);
          est = empirical_rademacher(xs, as_candidates(nets), f.Q, f.draws, seed);
        }
      } else if (fam == "linear") {
        gam = 0.0;
        if (!estimate) throw Error(ErrorKind::kInvalidArgument, "the linear bound needs the samples; use n <= 1e5");
        bound = rad_bound_linear(xs);
        const auto dirs = linear_candidates(f.d, f.candidates, seed);
        est = empirical_rademacher(xs, as_linear_candidates(dirs), 1.0, f.draws, seed);
      } else {
        throw Error(ErrorKind::kInvalidArgument, "unknown family '" + fam + "'");
      }
      Cell est_cell = std::string("skipped");
      Cell se_cell = std::string("skipped");
      Cell margin_cell = std::string("skipped");
      bool row_ok = true;
      if (estimate) {
        est_cell = est.value;
        se_cell = est.std_error;
        margin_cell = bound - est.value;
        row_ok = est.value <= bound;
      }
      ok = ok && row_ok;
      table.add({fam, static_cast<std::int64_t>(k), static_cast<std::int64_t>(seed), static_cast<std::int64_t>(f.d),
                 static_cast<std::int64_t>(n), fam == "linear" ? 1.0 : f.Q, gam, c, bound, est_cell, se_cell,
                 margin_cell, row_ok});
    }
  }
  emit(table, common);
  return ok ? kOk : kVerificationFailed;
}

// ---- bounds ----------------------------------------------------------------------

struct BoundFlags {
  std::string activation = "relu";
  double Q = 1.0;
  int d = 1;
  double n = 100;
  double delta = 0.1;
  double norm = 0.0;
  double norm_f = 1.0;
  int m = 64;
  int L = 1;
  double lambda_mult = 1.0;
};

int cmd_bounds(const Common& common, const QuadConfig& q, const BoundFlags& f) {
  const Activation act = resolve_activation(f.activation);
  const double g = gamma(act, q);
  const long n = static_cast<long>(f.n);
  Table table({"quantity", "value"});
  const double ln2 = lambda_n_two_layer(f.d, n, g);
  const double lnr = lambda_n_resnet(f.d, n, g);
  table.add({std::string("gamma"), g});
  table.add({std::string("c_sigma"), c_sigma(act, q)});
  table.add({std::string("rad_bound_relu"), rad_bound_relu(f.Q, f.d, n)});
  table.add({std::string("rad_bound_two_layer"), rad_bound_two_layer(f.Q, f.d, n, g)});
  table.add({std::string("rad_bound_resnet"), rad_bound_resnet(f.Q, f.d, n, g)});
  table.add({std::string("posterior_gap_bound"), posterior_gap_bound(f.norm, f.d, n, f.delta, g)});
  table.add({std::string("lambda_n_two_layer"), ln2});
  table.add({std::string("lambda_n_resnet"), lnr});
  table.add({std::string("apriori_bound_two_layer"),
             apriori_bound_two_layer(f.norm_f, f.m, f.d, n, f.delta, f.lambda_mult * ln2, act, q)});
  table.add({std::string("apriori_bound_resnet"),
             apriori_bound_resnet(f.norm_f, f.L, f.m, f.d, n, f.delta, f.lambda_mult * lnr, act, q)});
  emit(table, common);
  return kOk;
}

// ---- train -----------------------------------------------------------------------

struct TrainFlags {
  std::string activation = "relu";
  std::string target;
  std::string data;
  int d = 2;
  int n = 256;
  double lambda = -1.0;
  double lambda_mult = 0.0;
  std::string save;
};

Dataset read_csv_dataset(const std::string& path) {
  std::istringstream in(read_text_file(path));
  Dataset data;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> vals;
    std::istringstream ls(line);
    std::string cell;
    bool numeric = true;
    while (std::getline(ls, cell, ',')) {
      try {
        std::size_t used = 0;
        vals.push_back(std::stod(cell, &used));
        if (used != cell.size()) numeric = false;
      } catch (const std::exception&) {
        numeric = false;
      }
    }
    if (!numeric) {
      if (data.size() == 0 && lineno == 1) continue;  // header
      throw Error(ErrorKind::kParseError, path + ": line " + std::to_string(lineno) + ": non-numeric cell");
    }
    if (vals.size() < 2) throw Error(ErrorKind::kParseError, path + ": line " + std::to_string(lineno) + ": need x..., y");
    data.targets.push_back(vals.back());
    vals.pop_back();
    data.inputs.push_back(std::move(vals));
  }
  data.validate();
  return data;
}

int cmd_train(const Common& common, const QuadConfig& q, const TrainFlags& f, TrainConfig cfg) {
  const Activation act = resolve_activation(f.activation);
  Dataset data;
  if (!f.data.empty()) {
    data = read_csv_dataset(f.data);
  } else {
    const BarronRep rep = f.target.empty() ? default_target(f.d) : read_barron(f.target);
    data = barron_dataset(rep, act, f.n, Rng(common.seed, 1)());
    data.validate();
  }
  const int d = static_cast<int>(data.inputs.front().size());
  cfg.seed = common.seed;
  cfg.lambda = f.lambda >= 0.0 ? f.lambda : f.lambda_mult * lambda_n_two_layer(d, static_cast<long>(data.size()), gamma(act, q));
  const FitResult r = fit(init_two_layer(act, d, cfg), data, cfg);
  Table table({"step", "objective", "risk", "modified_path_norm", "best"});
  for (std::size_t s = 0; s < r.trace.objective.size(); ++s)
    table.add({static_cast<std::int64_t>(s), r.trace.objective[s], r.trace.risk[s], r.trace.norm[s],
               static_cast<int>(s) == r.trace.best_step});
  if (!f.save.empty()) write_model(f.save, r.net);
  emit(table, common);
  return kOk;
}

// ---- apriori ---------------------------------------------------------------------

int cmd_apriori(const Common& common, const QuadConfig& q, const std::string& activation, const std::string& target,
                AprioriConfig cfg, int n_seeds) {
  const Activation act = resolve_activation(activation);
  const BarronRep rep = target.empty() ? default_target(cfg.d) : read_barron(target);
  for (int s = 0; s < n_seeds; ++s) cfg.seeds.push_back(common.seed + static_cast<std::uint64_t>(s));
  const AprioriReport rep_out = apriori_experiment(rep, act, cfg, q);
  Table table({"seed", "train_risk", "heldout_risk", "final_modified_norm", "bound", "lambda", "lambda_n",
               "barron_norm", "holds"});
  for (const auto& r : rep_out.runs)
    table.add({static_cast<std::int64_t>(r.seed), r.train_risk, r.heldout_risk, r.final_norm, r.bound, rep_out.lambda,
               rep_out.lambda_n, rep_out.barron_norm, r.holds});
  emit(table, common);
  const int allowed = static_cast<int>(std::floor(cfg.delta * n_seeds));
  const int failed = static_cast<int>(rep_out.runs.size()) - rep_out.passed();
  std::cerr << fmt::format("bound held in {}/{} seeds (budget allows {} violations)\n", rep_out.passed(),
                           rep_out.runs.size(), allowed);
  return failed <= allowed ? kOk : kVerificationFailed;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kDimMismatch:
    case ErrorKind::kIndexOutOfRange:
    case ErrorKind::kWidthMismatch:
    case ErrorKind::kParseError:
    case ErrorKind::kLambdaTooSmall:
    case ErrorKind::kEmptyDataset:
    case ErrorKind::kTooLarge:
    case ErrorKind::kNormBudgetViolated:
      return kUsage;
    default:
      return kNumeric;
  }
}

}  // namespace
}  // namespace pathnorm::cli

int main(int argc, char** argv) {
  using namespace pathnorm;
  using namespace pathnorm::cli;
  CLI::App app{"Path-norm complexity tools for networks with general activations"};
  app.require_subcommand(1);
  Common common;
  QuadConfig quad;

  auto* gt = app.add_subcommand("gamma-table", "Curvature norms of the activation catalog");
  std::vector<std::string> only;
  gt->add_option("--only", only, "Activation reference(s), e.g. relu or elu:alpha=0.5");
  add_quad_flags(gt, quad);
  add_common(gt, common);

  auto* ap = app.add_subcommand("approx-1d", "Certified ReLU approximant of an activation");
  std::vector<std::string> ap_acts;
  double ap_eps = 1e-2;
  std::string ap_save;
  ap->add_option("--activation", ap_acts, "Activation reference(s); default: the catalog");
  ap->add_option("--eps", ap_eps, "Target sup error")->check(CLI::PositiveNumber);
  ap->add_option("--save-model", ap_save, "Write the approximant as a two_layer model (single activation)");
  add_quad_flags(ap, quad);
  add_common(ap, common);

  auto* nm = app.add_subcommand("norm", "Norms of a model file");
  std::string nm_model;
  nm->add_option("--model", nm_model, "Model JSON")->required();
  add_common(nm, common);

  auto* rw = app.add_subcommand("rewrite", "Rewrite a two-layer net as a ReLU net");
  std::string rw_model, rw_save;
  double rw_eps = 1e-2;
  int rw_samples = 10'000;
  rw->add_option("--model", rw_model, "Two-layer model JSON")->required();
  rw->add_option("--eps", rw_eps, "Approximation tolerance")->check(CLI::PositiveNumber);
  rw->add_option("--samples", rw_samples, "Random inputs for the deviation check");
  rw->add_option("--save-model", rw_save, "Write the rewritten model");
  add_quad_flags(rw, quad);
  add_common(rw, common);

  auto* em = app.add_subcommand("embed", "Embed a two-layer net into a residual net");
  std::string em_model, em_save, em_c = "default";
  int em_L = 1, em_m = 0;
  em->add_option("--model", em_model, "Two-layer model JSON")->required();
  em->add_option("--L", em_L, "Number of blocks");
  em->add_option("--m", em_m, "Block width (default: width / L)");
  em->add_option("--c", em_c, "Weight constant, or 'default' for 4 gamma + 1");
  em->add_option("--save-model", em_save, "Write the residual model");
  add_quad_flags(em, quad);
  add_common(em, common);

  auto* rc = app.add_subcommand("rad-check", "Empirical Rademacher estimates against the bounds");
  RadFlags rf;
  rc->add_option("--family", rf.family)->check(CLI::IsMember({"all", "relu", "two_layer", "resnet", "linear"}));
  rc->add_option("--activation", rf.activation, "Candidate activation");
  rc->add_option("--gamma", rf.gamma, "gamma value, or from:<activation>");
  rc->add_option("--d", rf.d)->check(CLI::PositiveNumber);
  rc->add_option("--n", rf.n, "Sample size");
  rc->add_option("--Q", rf.Q, "Norm budget")->check(CLI::NonNegativeNumber);
  rc->add_option("--candidates", rf.candidates)->check(CLI::PositiveNumber);
  rc->add_option("--draws", rf.draws)->check(CLI::PositiveNumber);
  rc->add_option("--configs", rf.configs)->check(CLI::PositiveNumber);
  rc->add_option("--width", rf.width)->check(CLI::PositiveNumber);
  rc->add_option("--D", rf.D)->check(CLI::PositiveNumber);
  rc->add_option("--m", rf.m)->check(CLI::PositiveNumber);
  rc->add_option("--L", rf.L)->check(CLI::PositiveNumber);
  add_quad_flags(rc, quad);
  add_common(rc, common);

  auto* bd = app.add_subcommand("bounds", "Evaluate the bound formulas");
  BoundFlags bf;
  bd->add_option("--activation", bf.activation);
  bd->add_option("--Q", bf.Q);
  bd->add_option("--d", bf.d)->check(CLI::PositiveNumber);
  bd->add_option("--n", bf.n)->check(CLI::PositiveNumber);
  bd->add_option("--delta", bf.delta);
  bd->add_option("--norm", bf.norm, "Modified path norm for the posterior bound");
  bd->add_option("--norm-f", bf.norm_f, "Barron norm of the target");
  bd->add_option("--m", bf.m)->check(CLI::PositiveNumber);
  bd->add_option("--L", bf.L)->check(CLI::PositiveNumber);
  bd->add_option("--lambda-mult", bf.lambda_mult, "lambda as a multiple of lambda_n");
  add_quad_flags(bd, quad);
  add_common(bd, common);

  auto* tr = app.add_subcommand("train", "Path-norm regularized training of a two-layer net");
  TrainFlags tf;
  TrainConfig tcfg;
  tr->add_option("--activation", tf.activation);
  tr->add_option("--target", tf.target, "Barron representation JSON labelling the data");
  tr->add_option("--data", tf.data, "CSV with columns x1..xd,y");
  tr->add_option("--d", tf.d)->check(CLI::PositiveNumber);
  tr->add_option("--n", tf.n)->check(CLI::PositiveNumber);
  tr->add_option("--lambda", tf.lambda, "Regularization weight (overrides --lambda-mult)");
  tr->add_option("--lambda-mult", tf.lambda_mult, "lambda as a multiple of lambda_n");
  tr->add_option("--width", tcfg.width)->check(CLI::PositiveNumber);
  tr->add_option("--steps", tcfg.steps)->check(CLI::PositiveNumber);
  tr->add_option("--step-size", tcfg.step_size)->check(CLI::PositiveNumber);
  tr->add_option("--batch", tcfg.batch, "Mini-batch size, 0 for full batch");
  tr->add_option("--init-scale", tcfg.init_scale);
  tr->add_option("--save-model", tf.save, "Write the fitted model");
  add_quad_flags(tr, quad);
  add_common(tr, common);

  auto* pr = app.add_subcommand("apriori", "A-priori estimate experiment");
  std::string pr_act = "sigmoid", pr_target;
  AprioriConfig pcfg;
  int pr_seeds = 20;
  pr->add_option("--activation", pr_act);
  pr->add_option("--target", pr_target, "Barron representation JSON (default: single atom)");
  pr->add_option("--d", pcfg.d)->check(CLI::PositiveNumber);
  pr->add_option("--n", pcfg.n)->check(CLI::PositiveNumber);
  pr->add_option("--m", pcfg.m)->check(CLI::PositiveNumber);
  pr->add_option("--lambda-mult", pcfg.lambda_mult);
  pr->add_option("--delta", pcfg.delta);
  pr->add_option("--heldout", pcfg.heldout)->check(CLI::PositiveNumber);
  pr->add_option("--steps", pcfg.steps)->check(CLI::PositiveNumber);
  pr->add_option("--step-size", pcfg.step_size)->check(CLI::PositiveNumber);
  pr->add_option("--seeds", pr_seeds, "Number of seeds")->check(CLI::PositiveNumber);
  add_quad_flags(pr, quad);
  add_common(pr, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    const QuadConfig q = quad_from(quad.abs_tol, quad.rel_tol, quad.max_subdivisions, quad.tail_cutoff_tol);
    if (*gt) return cmd_gamma_table(common, q, only);
    if (*ap) return cmd_approx(common, q, ap_acts, ap_eps, ap_save);
    if (*nm) return cmd_norm(common, nm_model);
    if (*rw) return cmd_rewrite(common, q, rw_model, rw_eps, rw_samples, rw_save);
    if (*em) return cmd_embed(common, q, em_model, em_L, em_m, em_c, em_save);
    if (*rc) return cmd_rad_check(common, q, rf);
    if (*bd) return cmd_bounds(common, q, bf);
    if (*tr) return cmd_train(common, q, tf, tcfg);
    if (*pr) return cmd_apriori(common, q, pr_act, pr_target, pcfg, pr_seeds);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: invalid number: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

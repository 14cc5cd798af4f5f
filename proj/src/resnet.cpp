// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/resnet.hpp"

#include <cmath>
#include <string>

#include "pathnorm/error.hpp"
#include "pathnorm/rng.hpp"

namespace pathnorm {

namespace {

using Eigen::MatrixXd;
using Eigen::RowVectorXd;
using Eigen::VectorXd;

// |U_i| with U_0 = V.
MatrixXd abs_entry(const ResNet& net, int i) {
  return i == 0 ? MatrixXd(net.V.cwiseAbs()) : MatrixXd(net.blocks[i - 1].U.cwiseAbs());
}

// v <- v P_l for the row vector v.
void apply_block_row(const ResNet& net, int l, RowVectorXd& v) {
  const auto& b = net.blocks[l - 1];
  const RowVectorXd through = v * b.U.cwiseAbs();
  v += net.c * (through * b.W.cwiseAbs());
}

MatrixXd padded(const MatrixXd& a, Eigen::Index n) {
  MatrixXd out = MatrixXd::Zero(n, n);
  out.topLeftCorner(a.rows(), a.cols()) = a;
  return out;
}

}  // namespace

void ResNet::validate() const {
  if (!(c > 0.0)) throw Error(ErrorKind::kInvalidArgument, "weight constant c must be positive");
  if (V.cols() < 2) throw Error(ErrorKind::kDimMismatch, "V must have d+1 >= 2 columns");
  const auto D = V.rows();
  if (alpha.size() != D)
    throw Error(ErrorKind::kDimMismatch, "alpha has length " + std::to_string(alpha.size()) +
                                             ", expected " + std::to_string(D));
  const auto m = hidden_dim();
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    const auto& b = blocks[l];
    if (b.W.rows() != m || b.W.cols() != D || b.U.rows() != D || b.U.cols() != m)
      throw Error(ErrorKind::kDimMismatch, "block " + std::to_string(l + 1) + " has shapes W " +
                                               std::to_string(b.W.rows()) + "x" + std::to_string(b.W.cols()) +
                                               ", U " + std::to_string(b.U.rows()) + "x" +
                                               std::to_string(b.U.cols()));
  }
}

double default_c(const Activation& act, const QuadConfig& cfg) { return 4.0 * gamma(act, cfg) + 1.0; }

double eval_resnet(const ResNet& net, std::span<const double> x) {
  if (static_cast<int>(x.size()) != net.input_dim())
    throw Error(ErrorKind::kDimMismatch, "input has " + std::to_string(x.size()) +
                                             " coordinates, expected " + std::to_string(net.input_dim()));
  VectorXd xt(x.size() + 1);
  for (std::size_t j = 0; j < x.size(); ++j) xt[j] = x[j];
  xt[x.size()] = 1.0;
  VectorXd h = net.V * xt;
  for (const auto& b : net.blocks) {
    VectorXd z = b.W * h;
    for (auto& v : z) v = net.activation.f(v);
    h += b.U * z;
  }
  return net.alpha.dot(h);
}

double norm_closed(const ResNet& net) {
  net.validate();
  RowVectorXd v = net.alpha.cwiseAbs().transpose();
  double total = 0.0;
  for (int i = net.depth(); i >= 0; --i) {
    total += (v * abs_entry(net, i)).sum();
    if (i >= 1) apply_block_row(net, i, v);
  }
  return total;
}

RecursiveNorm norm_recursive(const ResNet& net) {
  net.validate();
  const int L = net.depth();
  const int m = net.hidden_dim();
  RecursiveNorm out;
  out.M.assign(L, VectorXd::Zero(m));
  // acc = sum_{k<=l} |U_k| (M_k + 1)
  VectorXd acc = VectorXd::Zero(net.state_dim());
  for (int l = 1; l <= L; ++l) {
    acc += net.blocks[l - 1].U.cwiseAbs() * (out.M[l - 1].array() + 1.0).matrix();
    if (l < L) out.M[l] = net.c * (net.blocks[l].W.cwiseAbs() * acc);
  }
  const VectorXd abs_alpha = net.alpha.cwiseAbs();
  out.r = abs_alpha.dot(acc);
  VectorXd y = net.V.cwiseAbs().rowwise().sum();
  for (const auto& b : net.blocks) y += net.c * (b.U.cwiseAbs() * (b.W.cwiseAbs() * y));
  out.weighted_path_norm = abs_alpha.dot(y);
  out.total = out.weighted_path_norm + out.r;
  return out;
}

double bruteforce_path_count(const ResNet& net) {
  const double D = net.state_dim();
  const double m = net.hidden_dim();
  const int L = net.depth();
  double count = 0.0;
  for (int i = 0; i <= L; ++i)
    count += D * std::pow(1.0 + m * D, L - i) * (i == 0 ? static_cast<double>(net.V.cols()) : m);
  return count;
}

double norm_bruteforce(const ResNet& net) {
  net.validate();
  if (net.depth() > 6 || net.state_dim() > 6 || net.hidden_dim() > 6)
    throw Error(ErrorKind::kTooLarge, "brute-force enumeration needs L, D, m <= 6");
  if (bruteforce_path_count(net) > 2e7)
    throw Error(ErrorKind::kTooLarge, "more than 2e7 paths to enumerate");
  const int D = net.state_dim();
  const int m = net.hidden_dim();
  double total = 0.0;
  // Walk backwards from the output: at block l either take the skip
  // connection or pass through hidden unit h (weight c |U_l[j,h]| |W_l[h,j']|);
  // stop at the entry matrix U_i and sum over its columns one path at a time.
  auto walk = [&](auto&& self, int entry, int l, int j, double weight) -> void {
    if (l == entry) {
      const MatrixXd& E = entry == 0 ? net.V : net.blocks[entry - 1].U;
      for (Eigen::Index k = 0; k < E.cols(); ++k) total += weight * std::abs(E(j, k));
      return;
    }
    self(self, entry, l - 1, j, weight);
    const auto& b = net.blocks[l - 1];
    for (int h = 0; h < m; ++h)
      for (int jp = 0; jp < D; ++jp)
        self(self, entry, l - 1, jp, weight * net.c * std::abs(b.U(j, h)) * std::abs(b.W(h, jp)));
  };
  for (int entry = 0; entry <= net.depth(); ++entry)
    for (int j = 0; j < D; ++j) walk(walk, entry, net.depth(), j, std::abs(net.alpha[j]));
  return total;
}

ModificationBounds modification_bounds(const ResNet& net) {
  net.validate();
  const int L = net.depth();
  const int m = net.hidden_dim();
  const Eigen::Index n = std::max<Eigen::Index>(net.state_dim(), m);
  const MatrixXd I = MatrixXd::Identity(n, n);
  std::vector<MatrixXd> PU(L), PW(L);
  for (int l = 0; l < L; ++l) {
    PU[l] = I + padded(net.blocks[l].U.cwiseAbs(), n);
    PW[l] = I + net.c * padded(net.blocks[l].W.cwiseAbs(), n);
  }
  ModificationBounds out;
  out.M_bounds.assign(L, VectorXd::Zero(m));
  for (int l = 1; l <= L; ++l) {
    for (int i = 0; i < m; ++i) {
      RowVectorXd v = RowVectorXd::Zero(n);
      v.head(net.state_dim()) = net.c * net.blocks[l - 1].W.row(i).cwiseAbs();
      // (I + |U_{l-1}|)(I + c|W_{l-1}|) ... (I + c|W_2|)(I + |U_1|)
      for (int k = l - 1; k >= 1; --k) {
        v = v * PU[k - 1];
        if (k > 1) v = v * PW[k - 1];
      }
      out.M_bounds[l - 1][i] = v.sum();
    }
  }
  RowVectorXd v = RowVectorXd::Zero(n);
  v.head(net.state_dim()) = net.alpha.cwiseAbs().transpose();
  for (int k = L; k >= 1; --k) {
    v = v * PU[k - 1];
    if (k > 1) v = v * PW[k - 1];
  }
  out.r_bound = v.sum();
  return out;
}

HiddenNormParts hidden_norm_parts(const ResNet& net, int l, int i) {
  net.validate();
  if (l < 1 || l > net.depth() || i < 1 || i > net.hidden_dim())
    throw Error(ErrorKind::kIndexOutOfRange, "hidden neuron (" + std::to_string(l) + ", " +
                                                 std::to_string(i) + ") outside " +
                                                 std::to_string(net.depth()) + " x " +
                                                 std::to_string(net.hidden_dim()));
  RowVectorXd v = net.blocks[l - 1].W.row(i - 1).cwiseAbs();
  double sum = 0.0;
  HiddenNormParts out;
  for (int k = l - 1; k >= 0; --k) {
    const double term = (v * abs_entry(net, k)).sum();
    sum += term;
    if (k == 0) out.path_norm = net.c * term;
    if (k >= 1) apply_block_row(net, k, v);
  }
  out.closed = net.c * sum;
  out.modification = norm_recursive(net).M[l - 1][i - 1];
  return out;
}

double hidden_norm(const ResNet& net, int l, int i) { return hidden_norm_parts(net, l, i).closed; }

ResNet embed_two_layer(const TwoLayerNet& src, int L, int m, double c) {
  src.validate();
  if (L < 1 || m < 1 || src.width() != L * m)
    throw Error(ErrorKind::kWidthMismatch, "width " + std::to_string(src.width()) + " != L*m = " +
                                               std::to_string(L) + "*" + std::to_string(m));
  const int d = src.input_dim;
  const int D = d + 2;
  ResNet net;
  net.activation = src.activation;
  net.c = c;
  net.V = MatrixXd::Zero(D, d + 1);
  net.V.topRows(d + 1) = MatrixXd::Identity(d + 1, d + 1);
  net.alpha = VectorXd::Zero(D);
  net.alpha[D - 1] = 1.0;
  for (int l = 0; l < L; ++l) {
    ResBlock b{MatrixXd::Zero(m, D), MatrixXd::Zero(D, m)};
    for (int k = 0; k < m; ++k) {
      const Unit& u = src.units[l * m + k];
      for (int j = 0; j < d; ++j) b.W(k, j) = u.b[j];
      b.W(k, d) = u.c;
      b.U(D - 1, k) = u.a;
    }
    net.blocks.push_back(std::move(b));
  }
  return net;
}

ResNet random_resnet(const Activation& act, int d, int D, int m, int L, double c, std::uint64_t seed) {
  Rng rng(seed, 0x5e5);
  auto fill = [&](Eigen::Index r, Eigen::Index k) {
    MatrixXd a(r, k);
    for (Eigen::Index j = 0; j < k; ++j)
      for (Eigen::Index i = 0; i < r; ++i) a(i, j) = rng.normal();
    return a;
  };
  ResNet net;
  net.activation = act;
  net.c = c;
  net.V = fill(D, d + 1);
  for (int l = 0; l < L; ++l) {
    MatrixXd W = fill(m, D);
    MatrixXd U = fill(D, m);
    net.blocks.push_back({std::move(W), std::move(U)});
  }
  net.alpha = fill(D, 1).col(0);
  return net;
}

}  // namespace pathnorm

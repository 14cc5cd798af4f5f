// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "pathnorm/barron.hpp"
#include "pathnorm/relu1d.hpp"
#include "pathnorm/resnet.hpp"
#include "pathnorm/two_layer.hpp"

namespace pathnorm {

using Model = std::variant<TwoLayerNet, ResNet>;

/// Parses {"type": "two_layer" | "resnet", ...}. Syntax and schema errors are
/// reported as kParseError with line and column.
Model parse_model(std::string_view text);
Model read_model(const std::string& path);

/// Numbers are written as shortest round-trip decimals.
std::string dump_model(const Model& model, int indent = 2);
void write_model(const std::string& path, const Model& model);

BarronRep parse_barron(std::string_view text);
BarronRep read_barron(const std::string& path);
std::string dump_barron(const BarronRep& rep, int indent = 2);

/// Custom activation spec: {"name", "f", "f1", "f2", "singular_points": [{"x",
/// "slope_left", "slope_right"}], optional "asymptote_left"/"asymptote_right":
/// [slope, intercept], optional "closed_form_gamma"}.
Activation parse_activation_spec(std::string_view text);
Activation read_activation_spec(const std::string& path);

/// A 1-D ReLU net as a d = 1 two-layer ReLU net.
TwoLayerNet as_two_layer(const ReluNet1D& net);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

}  // namespace pathnorm

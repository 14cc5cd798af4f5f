// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/model_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "pathnorm/error.hpp"

namespace pathnorm {

namespace {

using nlohmann::json;

std::string location(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is one past the offending character
    const std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string msg = e.what();
    if (const auto pos = msg.find("syntax error"); pos != std::string::npos) msg = msg.substr(pos);
    throw Error(ErrorKind::kParseError, location(text, at) + ": " + msg);
  }
}

// Schema errors carry the JSON pointer of the offending value.
[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorKind::kParseError, "at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

const json& field(const json& j, const std::string& where, const char* key) {
  if (!j.is_object()) schema_error(where, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

double number(const json& j, const std::string& where) {
  if (!j.is_number()) schema_error(where, "expected a number");
  return j.get<double>();
}

std::vector<double> vector_of(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of numbers");
  std::vector<double> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(number(j[i], where + "/" + std::to_string(i)));
  return out;
}

Eigen::MatrixXd matrix_of(const json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? vector_of(j[0], where + "/0").size() : 0;
  Eigen::MatrixXd m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const auto row = vector_of(j[r], where + "/" + std::to_string(r));
    if (row.size() != cols) schema_error(where + "/" + std::to_string(r), "ragged matrix row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
  }
  return m;
}

json matrix_json(const Eigen::MatrixXd& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<SingularPoint> singular_points_of(const json& j, const std::string& where) {
  std::vector<SingularPoint> out;
  if (!j.is_array()) schema_error(where, "expected an array");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string w = where + "/" + std::to_string(i);
    out.push_back({number(field(j[i], w, "x"), w + "/x"), number(field(j[i], w, "slope_left"), w + "/slope_left"),
                   number(field(j[i], w, "slope_right"), w + "/slope_right")});
  }
  return out;
}

Activation activation_from(const json& j, const std::string& where) {
  const json& name = field(j, where, "name");
  if (!name.is_string()) schema_error(where + "/name", "expected a string");
  try {
    if (j.contains("expressions")) {
      const json& e = j["expressions"];
      const std::string w = where + "/expressions";
      auto expr = [&](const char* key) {
        const json& v = field(e, w, key);
        if (!v.is_string()) schema_error(w + "/" + key, "expected a string");
        return v.get<std::string>();
      };
      std::vector<SingularPoint> sps;
      if (j.contains("singular_points")) sps = singular_points_of(j["singular_points"], where + "/singular_points");
      return custom_activation(name.get<std::string>(), expr("f"), expr("f1"), expr("f2"), std::move(sps));
    }
    std::map<std::string, double> params;
    if (j.contains("params")) {
      const json& p = j["params"];
      if (!p.is_object()) schema_error(where + "/params", "expected an object");
      for (const auto& [k, v] : p.items()) params[k] = number(v, where + "/params/" + k);
    }
    return make_activation(name.get<std::string>(), params);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kParseError) throw;
    schema_error(where, e.what());
  }
}

json activation_json(const Activation& act) {
  json out{{"name", act.name}};
  if (act.expressions) {
    out["expressions"] = *act.expressions;
    json sps = json::array();
    for (const auto& sp : act.singular_points)
      sps.push_back({{"x", sp.x}, {"slope_left", sp.slope_left}, {"slope_right", sp.slope_right}});
    out["singular_points"] = sps;
  } else {
    out["params"] = json::object();
    for (const auto& [k, v] : act.hyperparams) out["params"][k] = v;
  }
  return out;
}

TwoLayerNet two_layer_from(const json& j) {
  TwoLayerNet net;
  net.activation = activation_from(field(j, "", "activation"), "/activation");
  const json& units = field(j, "", "units");
  if (!units.is_array()) schema_error("/units", "expected an array");
  int d = -1;
  for (std::size_t k = 0; k < units.size(); ++k) {
    const std::string w = "/units/" + std::to_string(k);
    const json& u = units[k];
    if (!u.is_array() || u.size() != 3) schema_error(w, "expected [a, [b...], c]");
    Unit unit{number(u[0], w + "/0"), vector_of(u[1], w + "/1"), number(u[2], w + "/2")};
    if (d < 0) d = static_cast<int>(unit.b.size());
    if (static_cast<int>(unit.b.size()) != d) schema_error(w + "/1", "inner weight length differs from unit 0");
    net.units.push_back(std::move(unit));
  }
  if (j.contains("input_dim")) {
    net.input_dim = static_cast<int>(number(j["input_dim"], "/input_dim"));
    if (d >= 0 && d != net.input_dim) schema_error("/input_dim", "does not match the unit weights");
  } else {
    if (d < 0) schema_error("/units", "empty net needs an explicit input_dim");
    net.input_dim = d;
  }
  return net;
}

json two_layer_json(const TwoLayerNet& net) {
  json units = json::array();
  for (const auto& u : net.units) units.push_back(json::array({u.a, u.b, u.c}));
  return {{"type", "two_layer"}, {"input_dim", net.input_dim}, {"activation", activation_json(net.activation)},
          {"units", units}};
}

ResNet resnet_from(const json& j) {
  ResNet net;
  net.activation = activation_from(field(j, "", "activation"), "/activation");
  net.c = number(field(j, "", "c"), "/c");
  net.V = matrix_of(field(j, "", "V"), "/V");
  const auto alpha = vector_of(field(j, "", "alpha"), "/alpha");
  net.alpha = Eigen::Map<const Eigen::VectorXd>(alpha.data(), static_cast<Eigen::Index>(alpha.size()));
  const json& blocks = field(j, "", "blocks");
  if (!blocks.is_array()) schema_error("/blocks", "expected an array");
  for (std::size_t l = 0; l < blocks.size(); ++l) {
    const std::string w = "/blocks/" + std::to_string(l);
    net.blocks.push_back({matrix_of(field(blocks[l], w, "W"), w + "/W"), matrix_of(field(blocks[l], w, "U"), w + "/U")});
  }
  try {
    net.validate();
  } catch (const Error& e) {
    schema_error("", e.what());
  }
  return net;
}

json resnet_json(const ResNet& net) {
  json blocks = json::array();
  for (const auto& b : net.blocks) blocks.push_back({{"W", matrix_json(b.W)}, {"U", matrix_json(b.U)}});
  std::vector<double> alpha(net.alpha.data(), net.alpha.data() + net.alpha.size());
  return {{"type", "resnet"}, {"activation", activation_json(net.activation)}, {"c", net.c}, {"V", matrix_json(net.V)},
          {"blocks", blocks}, {"alpha", alpha}};
}

}  // namespace

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write '" + path + "'");
  out << text;
}

Model parse_model(std::string_view text) {
  const json j = parse_json(text);
  const json& type = field(j, "", "type");
  if (type == "two_layer") return two_layer_from(j);
  if (type == "resnet") return resnet_from(j);
  schema_error("/type", "unknown model type " + type.dump());
}

Model read_model(const std::string& path) { return parse_model(read_text_file(path)); }

std::string dump_model(const Model& model, int indent) {
  const json j = std::visit(
      [](const auto& net) {
        if constexpr (std::is_same_v<std::decay_t<decltype(net)>, TwoLayerNet>) return two_layer_json(net);
        else return resnet_json(net);
      },
      model);
  return j.dump(indent) + "\n";
}

void write_model(const std::string& path, const Model& model) { write_text_file(path, dump_model(model)); }

BarronRep parse_barron(std::string_view text) {
  const json j = parse_json(text);
  BarronRep rep;
  rep.input_dim = static_cast<int>(number(field(j, "", "input_dim"), "/input_dim"));
  if (j.contains("atoms")) {
    const json& atoms = j["atoms"];
    if (!atoms.is_array()) schema_error("/atoms", "expected an array");
    for (std::size_t i = 0; i < atoms.size(); ++i) {
      const std::string w = "/atoms/" + std::to_string(i);
      rep.atoms.push_back({number(field(atoms[i], w, "p"), w + "/p"), vector_of(field(atoms[i], w, "w"), w + "/w"),
                           number(field(atoms[i], w, "a"), w + "/a")});
    }
  }
  if (j.contains("sampler")) {
    const json& s = j["sampler"];
    BarronSampler sampler;
    const json& dist = field(s, "/sampler", "distribution");
    if (!dist.is_string()) schema_error("/sampler/distribution", "expected a string");
    sampler.distribution = dist.get<std::string>();
    sampler.scale = number(field(s, "/sampler", "scale"), "/sampler/scale");
    sampler.amplitude = number(field(s, "/sampler", "amplitude"), "/sampler/amplitude");
    rep.sampler = sampler;
  }
  try {
    rep.validate();
  } catch (const Error& e) {
    schema_error("", e.what());
  }
  return rep;
}

BarronRep read_barron(const std::string& path) { return parse_barron(read_text_file(path)); }

std::string dump_barron(const BarronRep& rep, int indent) {
  json j{{"type", "barron"}, {"input_dim", rep.input_dim}};
  if (rep.is_discrete()) {
    json atoms = json::array();
    for (const auto& a : rep.atoms) atoms.push_back({{"p", a.p}, {"w", a.w}, {"a", a.a}});
    j["atoms"] = atoms;
  }
  if (rep.sampler)
    j["sampler"] = {{"distribution", rep.sampler->distribution},
                    {"scale", rep.sampler->scale},
                    {"amplitude", rep.sampler->amplitude}};
  return j.dump(indent) + "\n";
}

Activation parse_activation_spec(std::string_view text) {
  json j = parse_json(text);
  if (!j.contains("expressions") && j.is_object()) {
    json e = json::object();
    for (const char* key : {"f", "f1", "f2"})
      if (j.contains(key)) e[key] = j[key];
    j["expressions"] = e;
  }
  Activation act = activation_from(j, "");
  auto asymptote = [&](const char* key) -> std::optional<Asymptote> {
    if (!j.contains(key)) return std::nullopt;
    const auto v = vector_of(j[key], std::string("/") + key);
    if (v.size() != 2) schema_error(std::string("/") + key, "expected [slope, intercept]");
    return Asymptote{v[0], v[1]};
  };
  act.asymptote_left = asymptote("asymptote_left");
  act.asymptote_right = asymptote("asymptote_right");
  if (j.contains("closed_form_gamma")) act.closed_form_gamma = number(j["closed_form_gamma"], "/closed_form_gamma");
  return act;
}

Activation read_activation_spec(const std::string& path) { return parse_activation_spec(read_text_file(path)); }

TwoLayerNet as_two_layer(const ReluNet1D& net) {
  TwoLayerNet out;
  out.input_dim = 1;
  out.activation = relu();
  for (const auto& u : net.units) out.units.push_back({u.alpha, {u.beta}, u.gamma});
  return out;
}

}  // namespace pathnorm

// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <fmt/format.h>

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

namespace pathnorm::cli {

using Cell = std::variant<std::string, double, std::int64_t, bool>;

/// Column-ordered table rendered as CSV (12 significant digits, '.' decimal)
/// or as a JSON array of objects (shortest round-trip numbers).
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add(std::vector<Cell> row) { rows_.push_back(std::move(row)); }
  std::size_t size() const { return rows_.size(); }

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& row : rows_) {
        nlohmann::json obj = nlohmann::json::object();
        for (std::size_t c = 0; c < columns_.size(); ++c)
          std::visit([&](const auto& v) { obj[columns_[c]] = v; }, row[c]);
        arr.push_back(std::move(obj));
      }
      os << arr.dump(2) << "\n";
      return;
    }
    for (std::size_t c = 0; c < columns_.size(); ++c) os << (c ? "," : "") << columns_[c];
    os << "\n";
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
      os << "\n";
    }
  }

 private:
  static std::string csv_cell(const Cell& cell) {
    if (const auto* s = std::get_if<std::string>(&cell)) {
      if (s->find_first_of(",\"\n") == std::string::npos) return *s;
      std::string q = "\"";
      for (char ch : *s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
    if (const auto* d = std::get_if<double>(&cell)) return fmt::format("{:.12g}", *d);
    if (const auto* i = std::get_if<std::int64_t>(&cell)) return fmt::format("{}", *i);
    return std::get<bool>(cell) ? "true" : "false";
  }

  std::vector<std::string> columns_;
  std::vector<std::vector<Cell>> rows_;
};

}  // namespace pathnorm::cli

// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>

namespace pathnorm {

/// A compiled scalar expression in the single variable `x`.
///
/// Grammar (usual precedence, `^` right-associative):
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := '-' unary | power
///   power   := primary ('^' unary)?
///   primary := number | 'x' | 'pi' | 'e' | func '(' args ')' | '(' expr ')'
/// Functions: exp, ln (alias log), abs, max(a,b), min(a,b), erf, sqrt.
class Expr {
 public:
  /// Throws Error(kParseError) with the 1-based column of the offending token.
  static Expr parse(std::string_view source);

  double operator()(double x) const;

  const std::string& source() const { return source_; }

  std::function<double(double)> as_function() const;

  struct Node;

 private:
  std::string source_;
  std::shared_ptr<const Node> root_;
};

}  // namespace pathnorm

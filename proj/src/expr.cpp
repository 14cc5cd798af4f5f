// Copyright 2026 The pathnorm Authors
// SPDX-License-Identifier: Apache-2.0

#include "pathnorm/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <vector>

#include "pathnorm/error.hpp"

namespace pathnorm {

struct Expr::Node {
  enum class Op { kConst, kVar, kNeg, kAdd, kSub, kMul, kDiv, kPow, kCall };
  Op op = Op::kConst;
  double value = 0.0;
  std::string func;
  std::vector<std::shared_ptr<const Node>> args;

  double eval(double x) const {
    switch (op) {
      case Op::kConst: return value;
      case Op::kVar: return x;
      case Op::kNeg: return -args[0]->eval(x);
      case Op::kAdd: return args[0]->eval(x) + args[1]->eval(x);
      case Op::kSub: return args[0]->eval(x) - args[1]->eval(x);
      case Op::kMul: return args[0]->eval(x) * args[1]->eval(x);
      case Op::kDiv: return args[0]->eval(x) / args[1]->eval(x);
      case Op::kPow: return std::pow(args[0]->eval(x), args[1]->eval(x));
      case Op::kCall: {
        const double a = args[0]->eval(x);
        if (func == "exp") return std::exp(a);
        if (func == "ln" || func == "log") return std::log(a);
        if (func == "abs") return std::abs(a);
        if (func == "erf") return std::erf(a);
        if (func == "sqrt") return std::sqrt(a);
        if (func == "max") return std::max(a, args[1]->eval(x));
        if (func == "min") return std::min(a, args[1]->eval(x));
        return std::nan("");
      }
    }
    return std::nan("");
  }
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;
using Op = Expr::Node::Op;

int arity(const std::string& name) {
  if (name == "max" || name == "min") return 2;
  if (name == "exp" || name == "ln" || name == "log" || name == "abs" || name == "erf" ||
      name == "sqrt")
    return 1;
  return -1;
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  NodePtr parse_all() {
    NodePtr root = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::kParseError,
                "column " + std::to_string(pos_ + 1) + ": " + msg + " in '" + std::string(s_) + "'");
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  static NodePtr make(Op op, std::vector<NodePtr> args, double value = 0.0, std::string func = {}) {
    auto n = std::make_shared<Expr::Node>();
    n->op = op;
    n->args = std::move(args);
    n->value = value;
    n->func = std::move(func);
    return n;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+')) lhs = make(Op::kAdd, {lhs, term()});
      else if (accept('-')) lhs = make(Op::kSub, {lhs, term()});
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*')) lhs = make(Op::kMul, {lhs, unary()});
      else if (accept('/')) lhs = make(Op::kDiv, {lhs, unary()});
      else return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make(Op::kNeg, {unary()});
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (accept('^')) return make(Op::kPow, {base, unary()});
    return base;
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
      if (ec != std::errc()) fail("malformed number");
      pos_ = static_cast<std::size_t>(ptr - s_.data());
      return make(Op::kConst, {}, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      if (name == "x") return make(Op::kVar, {});
      if (name == "pi") return make(Op::kConst, {}, M_PI);
      if (name == "e") return make(Op::kConst, {}, M_E);
      const int n = arity(name);
      if (n < 0) {
        pos_ = start;
        fail("unknown identifier '" + name + "'");
      }
      expect('(');
      std::vector<NodePtr> args{expr()};
      while (accept(',')) args.push_back(expr());
      expect(')');
      if (static_cast<int>(args.size()) != n) {
        pos_ = start;
        fail(name + " expects " + std::to_string(n) + " argument(s)");
      }
      return make(Op::kCall, std::move(args), 0.0, std::move(name));
    }
    if (accept('(')) {
      NodePtr inner = expr();
      expect(')');
      return inner;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Expr Expr::parse(std::string_view source) {
  Expr e;
  e.source_ = std::string(source);
  e.root_ = Parser(e.source_).parse_all();
  return e;
}

double Expr::operator()(double x) const { return root_->eval(x); }

std::function<double(double)> Expr::as_function() const {
  auto root = root_;
  return [root](double x) { return root->eval(x); };
}

}  // namespace pathnorm

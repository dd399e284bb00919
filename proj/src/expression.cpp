// Copyright 2026 The medopt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "medopt/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace medopt {

namespace {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

// Recursive-descent parser.
//
//   sum     := product (('+'|'-') product)*
//   product := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' pow_rhs)*          (left-associative chain)
//   pow_rhs := '-' pow_rhs | atom           (exponent may carry unary minus)
//   atom    := number | 'q' | '(' sum ')'
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : text_(text) {}

  Expression run() {
    Expression expr;
    parse_sum(expr.code_);
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError("unexpected character '" + std::string(1, text_[pos_]) + "'", pos_);
    }
    return expr;
  }

 private:
  using Node = Expression::Node;
  using Op = Expression::Op;

  void parse_sum(std::vector<Node>& out) {
    parse_product(out);
    while (true) {
      skip_ws();
      if (accept('+')) {
        parse_product(out);
        out.push_back({Op::kAdd, 0.0});
      } else if (accept('-')) {
        parse_product(out);
        out.push_back({Op::kSub, 0.0});
      } else {
        return;
      }
    }
  }

  void parse_product(std::vector<Node>& out) {
    parse_unary(out);
    while (true) {
      skip_ws();
      if (accept('*')) {
        parse_unary(out);
        out.push_back({Op::kMul, 0.0});
      } else if (accept('/')) {
        parse_unary(out);
        out.push_back({Op::kDiv, 0.0});
      } else {
        return;
      }
    }
  }

  void parse_unary(std::vector<Node>& out) {
    skip_ws();
    if (accept('-')) {
      parse_unary(out);
      out.push_back({Op::kNeg, 0.0});
    } else {
      parse_power(out);
    }
  }

  void parse_power(std::vector<Node>& out) {
    parse_atom(out);
    while (true) {
      skip_ws();
      if (!accept('^')) return;
      parse_pow_rhs(out);
      out.push_back({Op::kPow, 0.0});
    }
  }

  void parse_pow_rhs(std::vector<Node>& out) {
    skip_ws();
    if (accept('-')) {
      parse_pow_rhs(out);
      out.push_back({Op::kNeg, 0.0});
    } else {
      parse_atom(out);
    }
  }

  void parse_atom(std::vector<Node>& out) {
    skip_ws();
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of input, operand expected", pos_);
    }
    char c = text_[pos_];
    if (c == '(') {
      if (++depth_ > kMaxDepth) throw ParseError("expression nested too deeply", pos_);
      ++pos_;
      parse_sum(out);
      skip_ws();
      if (!accept(')')) {
        throw ParseError("missing ')'", pos_);
      }
      --depth_;
      return;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      parse_number(out);
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view ident = text_.substr(start, pos_ - start);
      if (ident != "q") {
        throw ParseError("unknown identifier '" + std::string(ident) + "'", start);
      }
      out.push_back({Op::kVar, 0.0});
      return;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
  }

  void parse_number(std::vector<Node>& out) {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // bare 'e' is not part of the literal
      }
    }
    std::string literal(text_.substr(start, pos_ - start));
    char* end = nullptr;
    double value = std::strtod(literal.c_str(), &end);
    if (end != literal.c_str() + literal.size() || literal.empty()) {
      throw ParseError("malformed numeric literal '" + literal + "'", start);
    }
    out.push_back({Op::kConst, value});
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  static constexpr int kMaxDepth = 60;

  std::string_view text_;
  std::size_t pos_ = 0;
  int depth_ = 0;
};

Expression Expression::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty expression", 0);
  return ExpressionParser(text).run();
}

double Expression::eval(double q) const {
  if (code_.empty()) throw EvalError("empty expression");
  double stack[256];  // parse depth is capped, so this cannot overflow
  int top = -1;
  for (const Node& node : code_) {
    switch (node.op) {
      case Op::kConst:
        stack[++top] = node.value;
        break;
      case Op::kVar:
        stack[++top] = q;
        break;
      case Op::kNeg:
        stack[top] = -stack[top];
        break;
      case Op::kAdd:
        --top;
        stack[top] = stack[top] + stack[top + 1];
        break;
      case Op::kSub:
        --top;
        stack[top] = stack[top] - stack[top + 1];
        break;
      case Op::kMul:
        --top;
        stack[top] = stack[top] * stack[top + 1];
        break;
      case Op::kDiv: {
        --top;
        double den = stack[top + 1];
        if (den == 0.0) throw EvalError("division by zero");
        stack[top] = stack[top] / den;
        break;
      }
      case Op::kPow: {
        --top;
        double base = stack[top];
        double exponent = stack[top + 1];
        if (base == 0.0 && exponent < 0.0) {
          throw EvalError("0 raised to a negative power");
        }
        double r = std::pow(base, exponent);
        if (!std::isfinite(r)) {
          throw EvalError("power produced a non-finite value");
        }
        stack[top] = r;
        break;
      }
    }
    if (!std::isfinite(stack[top])) {
      throw EvalError("expression produced a non-finite value");
    }
  }
  return stack[0];
}

std::string Expression::str() const {
  std::vector<std::string> stack;
  for (const Node& node : code_) {
    switch (node.op) {
      case Op::kConst:
        stack.push_back(format_double(node.value));
        break;
      case Op::kVar:
        stack.push_back("q");
        break;
      case Op::kNeg: {
        std::string a = std::move(stack.back());
        stack.pop_back();
        stack.push_back("(-" + a + ")");
        break;
      }
      default: {
        const char* sym = node.op == Op::kAdd   ? "+"
                          : node.op == Op::kSub ? "-"
                          : node.op == Op::kMul ? "*"
                          : node.op == Op::kDiv ? "/"
                                                : "^";
        std::string b = std::move(stack.back());
        stack.pop_back();
        std::string a = std::move(stack.back());
        stack.pop_back();
        stack.push_back("(" + a + sym + b + ")");
        break;
      }
    }
  }
  return stack.empty() ? std::string() : stack.back();
}

}  // namespace medopt

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

#ifndef MEDOPT_EXPRESSION_HPP
#define MEDOPT_EXPRESSION_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace medopt {

/// Syntax error raised by Expression::parse. `position()` is the 0-based
/// offset of the offending character (equal to the input length when the
/// input ends unexpectedly).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Runtime evaluation failure (division by zero, 0 raised to a negative
/// power, or any other non-finite result).
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic expression in the single variable `q`.
///
/// Supports numeric literals, `q`, binary + - * / ^, unary minus and
/// parentheses. Precedence is ^ over unary minus over * / over + -, and
/// operators of equal precedence associate to the left. The AST is stored
/// in postfix order and evaluated with a small value stack, so evaluation
/// is pure and re-entrant.
class Expression {
 public:
  /// Parses `text`; throws ParseError on malformed input or on any
  /// identifier other than `q`.
  static Expression parse(std::string_view text);

  /// Evaluates at the given q. Throws EvalError on division by zero and
  /// domain errors such as 0^negative.
  double eval(double q) const;
  double operator()(double q) const { return eval(q); }

  /// Fully parenthesised textual form; parsing it back yields an
  /// expression with identical evaluations.
  std::string str() const;

  bool empty() const noexcept { return code_.empty(); }

 private:
  enum class Op : unsigned char { kConst, kVar, kAdd, kSub, kMul, kDiv, kPow, kNeg };
  struct Node {
    Op op;
    double value;  // only used by kConst
  };

  std::vector<Node> code_;  // postfix order

  friend class ExpressionParser;
};

inline Expression parse_expression(std::string_view text) { return Expression::parse(text); }
inline double eval_expression(const Expression& expr, double q) { return expr.eval(q); }

}  // namespace medopt

#endif  // MEDOPT_EXPRESSION_HPP

#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace prescurv {

// Small arithmetic language for target curvatures K(x, y, z).
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' exponent)?          right associative
//   primary := number | x | y | z | func '(' expr ')' | '(' expr ')'
//   func    := exp | sin | cos | sqrt | abs | tanh
//
// The exponent of '^' must be free of variables; it is folded to a literal at
// parse time so evaluation never needs a complex power.
class Expression {
 public:
  enum class Kind { Literal, Variable, Negate, Add, Subtract, Multiply, Divide, Power, Function };
  enum class Func { Exp, Sin, Cos, Sqrt, Abs, Tanh };

  struct Node {
    Kind kind;
    double value = 0.0;  // Literal, or exponent of Power
    int variable = 0;    // 0, 1, 2 for x, y, z
    Func func = Func::Exp;
    std::shared_ptr<const Node> lhs, rhs;
  };

  /// Throws ParseError with the byte offset of the problem.
  static Expression parse(std::string_view text);

  /// Evaluates at a point. Non-finite results (sqrt of a negative number,
  /// division by zero, overflow) throw std::domain_error.
  double evaluate(double x, double y, double z) const;

  /// Canonical fully parenthesised form; parse(to_string()) reproduces it.
  std::string to_string() const;

  bool is_constant() const;
  const Node& root() const { return *root_; }

 private:
  explicit Expression(std::shared_ptr<const Node> root) : root_(std::move(root)) {}
  std::shared_ptr<const Node> root_;
};

}  // namespace prescurv

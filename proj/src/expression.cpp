#include "prescurv/expression.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "prescurv/errors.hpp"
#include "prescurv/obj_io.hpp"

namespace prescurv {

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;
using Kind = Expression::Kind;
using Func = Expression::Func;

NodePtr make(Node n) { return std::make_shared<const Node>(std::move(n)); }

double eval(const Node& n, double x, double y, double z) {
  switch (n.kind) {
    case Kind::Literal: return n.value;
    case Kind::Variable: return n.variable == 0 ? x : n.variable == 1 ? y : z;
    case Kind::Negate: return -eval(*n.lhs, x, y, z);
    case Kind::Add: return eval(*n.lhs, x, y, z) + eval(*n.rhs, x, y, z);
    case Kind::Subtract: return eval(*n.lhs, x, y, z) - eval(*n.rhs, x, y, z);
    case Kind::Multiply: return eval(*n.lhs, x, y, z) * eval(*n.rhs, x, y, z);
    case Kind::Divide: {
      const double d = eval(*n.rhs, x, y, z);
      if (d == 0.0) throw std::domain_error("division by zero");
      return eval(*n.lhs, x, y, z) / d;
    }
    case Kind::Power: {
      const double r = std::pow(eval(*n.lhs, x, y, z), n.value);
      if (!std::isfinite(r)) throw std::domain_error("power is not a finite real number");
      return r;
    }
    case Kind::Function: {
      const double a = eval(*n.lhs, x, y, z);
      switch (n.func) {
        case Func::Exp: return std::exp(a);
        case Func::Sin: return std::sin(a);
        case Func::Cos: return std::cos(a);
        case Func::Sqrt:
          if (a < 0.0) throw std::domain_error("sqrt of a negative number");
          return std::sqrt(a);
        case Func::Abs: return std::abs(a);
        case Func::Tanh: return std::tanh(a);
      }
    }
  }
  throw std::logic_error("corrupt expression node");
}

bool constant(const Node& n) {
  if (n.kind == Kind::Variable) return false;
  if (n.lhs && !constant(*n.lhs)) return false;
  if (n.rhs && !constant(*n.rhs)) return false;
  return true;
}

const char* func_name(Func f) {
  switch (f) {
    case Func::Exp: return "exp";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Sqrt: return "sqrt";
    case Func::Abs: return "abs";
    case Func::Tanh: return "tanh";
  }
  return "?";
}

void print(const Node& n, std::string& out) {
  auto binary = [&](const char* op) {
    out += '(';
    print(*n.lhs, out);
    out += op;
    print(*n.rhs, out);
    out += ')';
  };
  switch (n.kind) {
    case Kind::Literal: out += format_double(n.value); break;
    case Kind::Variable: out += "xyz"[n.variable]; break;
    case Kind::Negate:
      out += "(-";
      print(*n.lhs, out);
      out += ')';
      break;
    case Kind::Add: binary(" + "); break;
    case Kind::Subtract: binary(" - "); break;
    case Kind::Multiply: binary(" * "); break;
    case Kind::Divide: binary(" / "); break;
    case Kind::Power:
      out += '(';
      print(*n.lhs, out);
      out += " ^ " + format_double(n.value) + ")";
      break;
    case Kind::Function:
      out += func_name(n.func);
      out += '(';
      print(*n.lhs, out);
      out += ')';
      break;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parse_all() {
    NodePtr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("expression error at offset " + std::to_string(pos_) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  NodePtr expr() {
    NodePtr lhs = term();
    for (;;) {
      if (accept('+'))
        lhs = make({Kind::Add, 0, 0, Func::Exp, lhs, term()});
      else if (accept('-'))
        lhs = make({Kind::Subtract, 0, 0, Func::Exp, lhs, term()});
      else
        return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary();
    for (;;) {
      if (accept('*'))
        lhs = make({Kind::Multiply, 0, 0, Func::Exp, lhs, unary()});
      else if (accept('/'))
        lhs = make({Kind::Divide, 0, 0, Func::Exp, lhs, unary()});
      else
        return lhs;
    }
  }

  NodePtr unary() {
    if (accept('-')) return make({Kind::Negate, 0, 0, Func::Exp, unary(), nullptr});
    if (accept('+')) return unary();
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    NodePtr exponent = unary();
    if (!constant(*exponent)) {
      pos_ = at;
      fail("exponent must be a constant");
    }
    double value = 0.0;
    try {
      value = eval(*exponent, 0, 0, 0);
    } catch (const std::domain_error& e) {
      pos_ = at;
      fail(std::string("exponent: ") + e.what());
    }
    return make({Kind::Power, value, 0, Func::Exp, base, nullptr});
  }

  NodePtr primary() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      NodePtr inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(c))) return identifier();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  NodePtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      std::size_t n = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_, ++n;
      return n;
    };
    std::size_t n = digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      n += digits();
    }
    if (n == 0) fail("malformed number");
    if (pos_ < text_.size() && (text_[pos_] == 'e' || text_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < text_.size() && (text_[pos_] == '+' || text_[pos_] == '-')) ++pos_;
      if (digits() == 0) fail("malformed exponent in number");
    }
    const std::string token(text_.substr(start, pos_ - start));
    const double value = std::strtod(token.c_str(), nullptr);
    if (!std::isfinite(value)) {
      pos_ = start;
      fail("number out of range");
    }
    return make({Kind::Literal, value, 0, Func::Exp, nullptr, nullptr});
  }

  NodePtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string name(text_.substr(start, pos_ - start));
    if (name == "x" || name == "y" || name == "z")
      return make({Kind::Variable, 0, name[0] - 'x', Func::Exp, nullptr, nullptr});
    static const std::pair<const char*, Func> funcs[] = {{"exp", Func::Exp},   {"sin", Func::Sin},
                                                         {"cos", Func::Cos},   {"sqrt", Func::Sqrt},
                                                         {"abs", Func::Abs},   {"tanh", Func::Tanh}};
    for (const auto& [fname, f] : funcs) {
      if (name == fname) {
        if (!accept('(')) fail("expected '(' after " + name);
        NodePtr arg = expr();
        if (!accept(')')) fail("expected ')'");
        return make({Kind::Function, 0, 0, f, arg, nullptr});
      }
    }
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression Expression::parse(std::string_view text) {
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) throw ParseError("expression is empty");
  return Expression(Parser(text).parse_all());
}

double Expression::evaluate(double x, double y, double z) const {
  const double v = eval(*root_, x, y, z);
  if (!std::isfinite(v)) throw std::domain_error("expression value is not finite");
  return v;
}

std::string Expression::to_string() const {
  std::string out;
  print(*root_, out);
  return out;
}

bool Expression::is_constant() const { return constant(*root_); }

}  // namespace prescurv

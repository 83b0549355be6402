#include "kellerlab/parse.hpp"

#include <cctype>

#include "kellerlab/errors.hpp"

namespace kellerlab {
namespace {

struct Parser {
  const std::string& src;
  size_t pos = 0;

  explicit Parser(const std::string& s) : src(s) {}

  void skip_ws() {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < src.size() && src[pos] == c;
  }

  bool consume(char c) {
    if (!peek(c)) return false;
    ++pos;
    return true;
  }

  void expect(char c, const std::string& what) {
    if (!consume(c)) throw SyntaxError(pos, "expected " + what);
  }

  static ExprPtr node(ExprNode n) { return std::make_shared<ExprNode>(std::move(n)); }

  ExprPtr parse() {
    ExprPtr e = expr();
    skip_ws();
    if (pos != src.size()) throw SyntaxError(pos, "unexpected trailing input");
    return e;
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      if (consume('+')) {
        lhs = node({ExprNode::Op::Add, {}, 0, lhs, term()});
      } else if (consume('-')) {
        lhs = node({ExprNode::Op::Sub, {}, 0, lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = unary();
    for (;;) {
      if (consume('*')) {
        lhs = node({ExprNode::Op::Mul, {}, 0, lhs, unary()});
      } else if (consume('/')) {
        lhs = node({ExprNode::Op::Div, {}, 0, lhs, unary()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr unary() {
    if (consume('-')) return node({ExprNode::Op::Neg, {}, 0, unary(), nullptr});
    return power();
  }

  ExprPtr power() {
    ExprPtr base = atom();
    if (consume('^')) {
      skip_ws();
      size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      if (pos == start) throw SyntaxError(pos, "expected a natural-number exponent");
      unsigned e = static_cast<unsigned>(std::stoul(src.substr(start, pos - start)));
      return node({ExprNode::Op::Pow, {}, e, base, nullptr});
    }
    return base;
  }

  ExprPtr atom() {
    skip_ws();
    if (pos >= src.size()) throw SyntaxError(pos, "unexpected end of input");
    char c = src[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) ++pos;
      Rational v(src.substr(start, pos - start));
      return node({ExprNode::Op::Rat, v, 0, nullptr, nullptr});
    }
    if (c == 'x') {
      ++pos;
      return node({ExprNode::Op::VarX, {}, 0, nullptr, nullptr});
    }
    if (c == 'y') {
      ++pos;
      return node({ExprNode::Op::VarY, {}, 0, nullptr, nullptr});
    }
    if (c == 'i') {
      ++pos;
      return node({ExprNode::Op::ImaginaryUnit, {}, 0, nullptr, nullptr});
    }
    if (src.compare(pos, 5, "sqrt(") == 0) {
      pos += 5;
      ExprPtr inner = expr();
      expect(')', "')' closing sqrt");
      return node({ExprNode::Op::Sqrt, {}, 0, inner, nullptr});
    }
    if (c == '(') {
      ++pos;
      ExprPtr inner = expr();
      expect(')', "')'");
      return inner;
    }
    throw SyntaxError(pos, "expected a literal, variable, sqrt(...), or '('");
  }
};

bool is_constant_poly(const Poly& p) { return p.is_constant(); }

}  // namespace

ExprPtr parse_expression(const std::string& src) { return Parser(src).parse(); }

Poly lower(const ExprPtr& ast, LowerContext& ctx) {
  switch (ast->op) {
    case ExprNode::Op::Rat:
      return Poly::constant(FieldElement(ast->value));
    case ExprNode::Op::ImaginaryUnit:
      if (ctx.real_mode) throw RealModeViolation("i is unavailable in real mode");
      return Poly::constant(FieldElement::imaginary_unit());
    case ExprNode::Op::VarX:
      return Poly::variable_x();
    case ExprNode::Op::VarY:
      return Poly::variable_y();
    case ExprNode::Op::Neg:
      return -lower(ast->lhs, ctx);
    case ExprNode::Op::Add:
      return lower(ast->lhs, ctx) + lower(ast->rhs, ctx);
    case ExprNode::Op::Sub:
      return lower(ast->lhs, ctx) - lower(ast->rhs, ctx);
    case ExprNode::Op::Mul:
      return lower(ast->lhs, ctx) * lower(ast->rhs, ctx);
    case ExprNode::Op::Div: {
      Poly num = lower(ast->lhs, ctx);
      Poly den = lower(ast->rhs, ctx);
      if (!is_constant_poly(den)) throw SyntaxError(0, "division by a non-constant");
      FieldElement d = den.constant_term();
      if (d.is_zero()) throw DivisionByZero();
      return num * d.inverse();
    }
    case ExprNode::Op::Pow:
      return lower(ast->lhs, ctx).pow(ast->exponent);
    case ExprNode::Op::Sqrt: {
      Poly inner = lower(ast->lhs, ctx);
      if (!is_constant_poly(inner)) throw SqrtOfNonConstant();
      FieldElement v = inner.constant_term();
      if (!ctx.real_mode && v.tower() == FieldTower::rationals())
        v = coerce(v, FieldTower::gaussian());
      if (ctx.real_mode && v.sign_real() < 0)
        throw RealModeViolation("sqrt of a negative constant in real mode");
      return Poly::constant(field_sqrt(v));
    }
  }
  throw std::logic_error("unhandled AST node");
}

Poly parse_poly(const std::string& src, LowerContext& ctx) {
  return lower(parse_expression(src), ctx);
}

Poly parse_poly(const std::string& src) {
  LowerContext ctx;
  return parse_poly(src, ctx);
}

}  // namespace kellerlab

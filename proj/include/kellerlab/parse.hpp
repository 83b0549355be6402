#ifndef KELLERLAB_PARSE_HPP
#define KELLERLAB_PARSE_HPP

#include <memory>
#include <string>
#include <variant>

#include "kellerlab/poly.hpp"

namespace kellerlab {

/// Expression AST for the CLI grammar. Precedence: pow > neg > mul/div >
/// add/sub, binary operators left-associative, `*` mandatory (no implicit
/// multiplication). sqrt applies to constant subexpressions only.
struct ExprNode;
using ExprPtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  enum class Op { Rat, ImaginaryUnit, VarX, VarY, Neg, Add, Sub, Mul, Div, Pow, Sqrt };
  Op op;
  Rational value;       // Rat
  unsigned exponent{};  // Pow
  ExprPtr lhs, rhs;
};

ExprPtr parse_expression(const std::string& src);

/// Lowering context: one tower per CLI invocation so sqrt-created
/// generators are shared between expressions.
struct LowerContext {
  bool real_mode = false;
};

Poly lower(const ExprPtr& ast, LowerContext& ctx);

Poly parse_poly(const std::string& src, LowerContext& ctx);
Poly parse_poly(const std::string& src);

}  // namespace kellerlab

#endif

#ifndef KELLERLAB_ERRORS_HPP
#define KELLERLAB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace kellerlab {

struct DivisionByZero : std::runtime_error {
  DivisionByZero() : std::runtime_error("division by zero") {}
};

struct IncompatibleTowers : std::runtime_error {
  IncompatibleTowers() : std::runtime_error("neither field tower embeds in the other") {}
};

struct ZeroRadicand : std::runtime_error {
  ZeroRadicand() : std::runtime_error("sqrt of zero radicand") {}
};

struct TowerLimit : std::runtime_error {
  TowerLimit() : std::runtime_error("field tower exceeds the generator cap") {}
};

struct RealModeViolation : std::runtime_error {
  explicit RealModeViolation(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroPolynomial : std::runtime_error {
  ZeroPolynomial() : std::runtime_error("operation undefined for the zero polynomial") {}
};

struct NotInvolution : std::runtime_error {
  NotInvolution() : std::runtime_error("endomorphism is not an involution") {}
};

struct NonConstantJacobian : std::runtime_error {
  NonConstantJacobian() : std::runtime_error("Jacobian is not a nonzero constant") {}
};

struct NotInvertible : std::runtime_error {
  NotInvertible() : std::runtime_error("endomorphism is not invertible") {}
};

struct NotKeller : std::runtime_error {
  NotKeller() : std::runtime_error("Jacobian is not a nonzero constant") {}
};

struct DegreeMismatch : std::runtime_error {
  explicit DegreeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct CorruptCertificate : std::runtime_error {
  CorruptCertificate() : std::runtime_error("certificate does not recompose to its subject") {}
};

struct ResourceLimit : std::runtime_error {
  explicit ResourceLimit(const std::string& what) : std::runtime_error(what) {}
};

struct NonzeroJacobian : std::runtime_error {
  NonzeroJacobian() : std::runtime_error("Jac(A,R) != 0") {}
};

struct PreconditionSymmetry : std::runtime_error {
  PreconditionSymmetry() : std::runtime_error("image of x is neither symmetric nor skew under alpha") {}
};

struct JacobianNotZero : std::runtime_error {
  JacobianNotZero() : std::runtime_error("Jac(p, q +/- alpha(q)) is nonzero") {}
};

struct SyntaxError : std::runtime_error {
  size_t position;
  SyntaxError(size_t pos, const std::string& expectation)
      : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + expectation),
        position(pos) {}
};

struct SqrtOfNonConstant : std::runtime_error {
  SqrtOfNonConstant() : std::runtime_error("sqrt applies to constant subexpressions only") {}
};

}  // namespace kellerlab

#endif

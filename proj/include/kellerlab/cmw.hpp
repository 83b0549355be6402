#ifndef KELLERLAB_CMW_HPP
#define KELLERLAB_CMW_HPP

#include <optional>
#include <string>
#include <vector>

#include "kellerlab/endo.hpp"
#include "kellerlab/involution.hpp"

namespace kellerlab {

/// Univariate polynomial H(t) over field-tower coefficients, trailing zeros
/// trimmed; evaluation at a bivariate Poly is exact.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<FieldElement> coeffs);

  static UniPoly zero() { return UniPoly(); }

  const std::vector<FieldElement>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  FieldElement coeff(size_t k) const;
  void set_coeff(size_t k, FieldElement c);

  Poly evaluated_at(const Poly& A) const;

  bool operator==(const UniPoly& other) const { return coeffs_ == other.coeffs_; }
  bool operator!=(const UniPoly& other) const { return !(*this == other); }

  std::string to_string() const;  // c0 + c1*t + ...

 private:
  std::vector<FieldElement> coeffs_;  // index = power of t
};

/// Leading-coefficient recursion: given non-constant A and R with
/// Jac(A,R) = 0, peel c_t * A^t off R by matching leading monomials under
/// graded lex. Returns nullopt (NotInSubalgebra) when a divisibility or
/// monomial match fails. Throws NonzeroJacobian when Jac(A,R) != 0.
std::optional<UniPoly> express_in(const Poly& A, const Poly& R);

enum class AlphaRestrictionMode { SymmetricP, SkewP };

/// Formal expressions for the restricted exchange involution on k[p,q]:
/// images of the symbols P, Q, plus the 2x2 formal Jacobian (always -1).
struct SubalgebraExpr {
  Poly alpha_p;  // in symbols P (x-slot) and Q (y-slot)
  Poly alpha_q;
  UniPoly h;
  FieldElement restricted_jacobian;
};

/// SymmetricP: alpha(q) = -Q + H(P) via express_in(p, q + alpha(q)).
/// SkewP:      alpha(q) =  Q - H(P) via express_in(p, q - alpha(q)).
/// Throws NotKeller, PreconditionSymmetry, JacobianNotZero.
SubalgebraExpr alpha_restriction_check(const Endo& f, AlphaRestrictionMode mode);

}  // namespace kellerlab

#endif

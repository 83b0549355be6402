#include "kellerlab/cmw.hpp"

#include "kellerlab/errors.hpp"

namespace kellerlab {

UniPoly::UniPoly(std::vector<FieldElement> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement UniPoly::coeff(size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : FieldElement::zero();
}

void UniPoly::set_coeff(size_t k, FieldElement c) {
  if (k >= coeffs_.size()) {
    if (c.is_zero()) return;
    coeffs_.resize(k + 1, FieldElement::zero());
  }
  coeffs_[k] = std::move(c);
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Poly UniPoly::evaluated_at(const Poly& A) const {
  // Horner.
  Poly r;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    r = r * A + Poly::constant(*it);
  return r;
}

std::string UniPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    std::string cs = coeffs_[k].to_string();
    bool composite = cs.find(" + ") != std::string::npos || cs.find(" - ") != std::string::npos;
    if (composite) cs = "(" + cs + ")";
    std::string term = (k == 0) ? cs
                       : (cs == "1" ? "" : cs + "*") +
                             (k == 1 ? std::string("t") : "t^" + std::to_string(k));
    out += out.empty() ? term : " + " + term;
  }
  return out.empty() ? "0" : out;
}

std::optional<UniPoly> express_in(const Poly& A, const Poly& R) {
  if (A.is_constant()) throw std::invalid_argument("express_in requires non-constant A");
  if (!jacobian(A, R).is_zero()) throw NonzeroJacobian();

  const long degA = *A.total_degree();
  const Monomial lmA = A.leading_monomial();
  const FieldElement lcA = A.leading_coefficient();

  UniPoly h;
  Poly rem = R;
  long prev_t = -1;
  while (!rem.is_constant()) {
    const long degR = *rem.total_degree();
    if (degR % degA != 0) return std::nullopt;
    const long t = degR / degA;
    if (prev_t >= 0 && t >= prev_t) return std::nullopt;  // recursion must descend
    const Monomial lmR = rem.leading_monomial();
    if (lmR.x != lmA.x * t || lmR.y != lmA.y * t) return std::nullopt;
    FieldElement c = rem.leading_coefficient() / lcA.pow(static_cast<unsigned long>(t));
    rem = rem - A.pow(static_cast<unsigned>(t)) * c;
    h.set_coeff(static_cast<size_t>(t), std::move(c));
    prev_t = t;
  }
  h.set_coeff(0, rem.constant_term());
  return h;
}

SubalgebraExpr alpha_restriction_check(const Endo& f, AlphaRestrictionMode mode) {
  if (!is_keller(f)) throw NotKeller();
  const Endo alpha = Endo::exchange();
  const Poly alpha_p = apply(alpha, f.p);
  const bool symmetric = (mode == AlphaRestrictionMode::SymmetricP);
  if (symmetric ? (alpha_p != f.p) : (alpha_p != -f.p)) throw PreconditionSymmetry();

  const Poly alpha_q = apply(alpha, f.q);
  const Poly combo = symmetric ? f.q + alpha_q : f.q - alpha_q;
  if (!jacobian(f.p, combo).is_zero()) throw JacobianNotZero();

  UniPoly h;
  if (combo.is_constant()) {
    h.set_coeff(0, combo.constant_term());
  } else {
    auto found = express_in(f.p, combo);
    if (!found)
      throw std::logic_error("q +/- alpha(q) commutes with p but is not in k[p]");
    h = std::move(*found);
  }

  // Formal images over the symbols P (x-slot), Q (y-slot).
  const Poly P = Poly::variable_x();
  const Poly Q = Poly::variable_y();
  SubalgebraExpr out;
  out.h = h;
  Poly hp = h.evaluated_at(P);
  if (symmetric) {
    out.alpha_p = P;
    out.alpha_q = -Q + hp;
  } else {
    out.alpha_p = -P;
    out.alpha_q = Q - hp;
  }
  Poly fj = jacobian(out.alpha_p, out.alpha_q);
  if (!fj.is_constant())
    throw std::logic_error("restricted involution Jacobian is not constant");
  out.restricted_jacobian = fj.constant_term();
  return out;
}

}  // namespace kellerlab

#include "kellerlab/involution.hpp"

#include "kellerlab/errors.hpp"
#include "kellerlab/tame.hpp"

namespace kellerlab {

Involution builtin_involution(const std::string& name) {
  Poly x = Poly::variable_x(), y = Poly::variable_y();
  Endo e;
  if (name == "alpha")
    e = Endo{y, x};
  else if (name == "beta")
    e = Endo{x, -y};
  else if (name == "gamma")
    e = Endo{-x, y};
  else if (name == "epsilon")
    e = Endo{-x, -y};
  else if (name == "a")
    e = Endo{-x - y * y, y};
  else if (name == "b")
    e = Endo{-x - y * y, -y};
  else
    throw std::invalid_argument("unknown involution name: " + name);
  return Involution{e, classify_involution(e), name};
}

ConjClass classify_involution(const Endo& s) {
  if (!is_involution(s)) throw NotInvolution();
  Poly j = jacobian_of(s);
  if (!j.is_constant() || j.is_zero()) throw NonConstantJacobian();
  FieldElement c = j.constant_term();
  if (c == FieldElement(-1)) return ConjClass::Cminus1;
  if (c == FieldElement(1)) return ConjClass::Cplus1;
  throw NonConstantJacobian();
}

bool verify_conjugation(const Endo& g, const Endo& s, const Endo& t) {
  if (!decompose(g).ok()) throw NotInvertible();
  // g^-1 s g = t, as morphisms: s g = g t.
  return compose(s, g) == compose(g, t);
}

SymmetryType symmetry_type(const Poly& p, const Endo& s) {
  Poly image = apply(s, p);
  if (image == p) return SymmetryType::Symmetric;
  if (image == -p) return SymmetryType::Skew;
  return SymmetryType::Neither;
}

SymmetryType symmetry_type(const Poly& p, const Involution& s) {
  return symmetry_type(p, s.endo);
}

}  // namespace kellerlab

#ifndef KELLERLAB_INVOLUTION_HPP
#define KELLERLAB_INVOLUTION_HPP

#include <string>

#include "kellerlab/endo.hpp"

namespace kellerlab {

/// The two conjugacy classes of involutions, keyed by constant Jacobian sign.
enum class ConjClass { Cminus1, Cplus1 };

struct Involution {
  Endo endo;
  ConjClass cls;
  std::string name;  // builtin name when constructed from one, else empty
};

enum class SymmetryType { Symmetric, Skew, Neither };

/// Builtins: alpha (y,x), beta (x,-y), gamma (-x,y), epsilon (-x,-y),
/// a (-x-y^2, y), b (-x-y^2, -y).
Involution builtin_involution(const std::string& name);

/// Class by constant-Jacobian sign; by the two-conjugacy-classes proposition
/// this is the conjugacy class. Throws NotInvolution / NonConstantJacobian.
ConjClass classify_involution(const Endo& s);

/// True iff compose(g, s) == compose(t, g), i.e. g is a s,t-morphism.
/// g must be invertible (checked through tame decomposition).
bool verify_conjugation(const Endo& g, const Endo& s, const Endo& t);

SymmetryType symmetry_type(const Poly& p, const Involution& s);
SymmetryType symmetry_type(const Poly& p, const Endo& s);

}  // namespace kellerlab

#endif
